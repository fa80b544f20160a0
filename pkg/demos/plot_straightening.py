"""
Straightening Pluecker coordinates
==================================

The minors a(i,j) = x_i y_j - x_j y_i satisfy quadratic relations, and
every product of them has a unique expansion in standard monomials
(column indices weakly increasing).  Expanding both sides into
polynomials confirms each rewrite.
"""

from m2gamma import enumerate_basis, expand, reduce_odd, straighten
from m2gamma.grassmann import all_monomials
from m2gamma.poly import rank_of_span

s = straighten("a(1,4)a(2,3)")
print("a(1,4)a(2,3) =", s)
print("expansions agree:", s.expand() == expand("a(1,4)a(2,3)", 4))

s = straighten("a(1,5)a(2,4)a(3,4)")
print("a(1,5)a(2,4)a(3,4) =", s)

# dimension of each degree component: counted, then certified by rank
for n in (3, 4, 5):
    row = []
    for r in range(4):
        count = len(enumerate_basis(n, r))
        rank = rank_of_span(expand(m, n) for m in all_monomials(n, r))
        row.append(f"{count}" if count == rank else f"{count}!={rank}")
    print(f"n={n}:", " ".join(row))

# odd reduction: a(a,b) v_c = a(a,c) v_b - a(b,c) v_a
print("a(1,2) v3 =", reduce_odd("a(1,2)", 3, n=3))
print("a(1,2)^2 v3 =", reduce_odd("a(1,2)a(1,2)", 3, n=3))
