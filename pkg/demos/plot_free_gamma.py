"""
Normal forms in a free Gamma-algebra
====================================

Even generators t1..tm multiply freely among themselves; odd generators
v1..vn multiply into Pluecker coordinates.  Every product expression
reduces to a unique normal form, which can then be evaluated in any
Gamma-algebra.
"""

from m2gamma import builtin, free_matrix_envelope, embedding_oracle, fg_dimensions, fg_evaluate, fg_normal_form

for expr in ("v1*v2", "v2*v1", "(v1*v2)*v3", "v1*(v2*v3)", "t1*t2 - t2*t1", "(t1*t2 - t2*t1)*v1", "t2*(v1*v2)*t1"):
    print(f"{expr:20s} -> {fg_normal_form(expr, 2, 3)}")

# the polynomial model v_k -> (x_k, y_k) used to certify normal forms
s, (p, q) = embedding_oracle(fg_normal_form("(v1*v2)*v3", 0, 3))
print("image of (v1*v2)*v3:", p, "|", q)

# evaluation: the homomorphism into B12 with v1 -> x, v2 -> y
B = builtin("B12")
print("v1*v2 at (x, y):", fg_evaluate(fg_normal_form("v1*v2", 0, 2), B, {"v1": "x", "v2": "y"}))

# graded dimensions, and the matrix envelope of a truncation
print("dims m=1 n=3:", [fg_dimensions(1, 3, w) for w in range(7)])
env = free_matrix_envelope(0, 2, 3)
print("envelope dims by weight:", env.graded_dims, "total", env.algebra.dim)
