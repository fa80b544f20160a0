"""
Split octonions from a three-dimensional superalgebra
=====================================================

``B12`` is spanned by an even unit and odd x, y with xy = -yx = 1.  The
matrix-and-pair construction over it yields an eight-dimensional
alternative algebra, and an explicit basis map identifies it with the
split octonions.
"""

from m2gamma import GammaAlgebra, builtin, check_identity, gamma_to_m2, octonion_isomorphism, phi_iso
from m2gamma.algebra import is_isomorphism
from m2gamma.fields import FieldSpec

Q = FieldSpec(0)
g = GammaAlgebra(builtin("B12", Q))
A = gamma_to_m2(g)
print("basis:", " ".join(A.labels))
print("alternative:", check_identity(A, "alternative").passed)

# a few products: odd pairs multiply through the bracket
x0, y0, oy = A.basis("(x,0)"), A.basis("(y,0)"), A.basis("(0,y)")
print("(x,0)(0,y) =", x0 * oy)
print("(x,0)(y,0) =", x0 * y0)

# the same algebra as an envelope Gamma_0 (x) M2 + Gamma_1 (x) Cay
phi = phi_iso(g)
print("phi bijective:", phi.is_bijective(), "multiplicative:", phi.is_homomorphism())

# compare with the Cayley-Dickson double of 2x2 matrices
for v2 in (1, 2, -3):
    ok = is_isomorphism(octonion_isomorphism(Q, v2), A, builtin("octonion-split", Q, v2=v2))
    print(f"isomorphic to octonion-split(v2={v2}):", ok)
