"""
Super-alternativity depends on the characteristic
=================================================

The six-dimensional superalgebra ``B42`` is the 2x2 matrices plus a
two-dimensional odd part.  Its graded alternative laws hold exactly when
3 = 0 in the field.
"""

from m2gamma import builtin, check_identity, grassmann_envelope
from m2gamma.fields import FieldSpec

# sweep every basis triple with the Koszul sign rule
for name in ("q", "fp:3", "fp:5"):
    fld = FieldSpec.parse(name)
    rep = check_identity(builtin("B42", fld), "super-left-alternative")
    print(f"{name:5s} pass={rep.passed} witness={rep.witness} value={rep.value}")

# the ungraded shadow: tensor the odd part with a Grassmann algebra on three generators
for name in ("q", "fp:3"):
    fld = FieldSpec.parse(name)
    env = grassmann_envelope(builtin("grassmann(3)", fld), builtin("B42", fld))
    rep = check_identity(env, "alternative")
    print(f"envelope over {name}: dim {env.dim}, alternative={rep.passed}, value={rep.value}")
