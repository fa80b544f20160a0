"""Builtin algebras: M2, B(4,2), B(1,2), the split null extension, split octonions, Grassmann algebras."""

from __future__ import annotations

from itertools import combinations

from .algebra import M2_LABELS, StructureAlgebra, rebase
from .fields import FieldSpec


def _empty(d):
    return [[{} for _ in range(d)] for _ in range(d)]


def _m2_products(table, idx):
    """Fill e_ij * e_kl = delta_jk e_il into ``table`` at positions ``idx[(i, j)]``."""
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            if j == k:
                table[a][b] = {idx[(i, l)]: 1}


def _m2_index(offset=0):
    return {(i, j): offset + 2 * (i - 1) + (j - 1) for i in (1, 2) for j in (1, 2)}


def matrix_units(field: FieldSpec) -> StructureAlgebra:
    idx = _m2_index()
    table = _empty(4)
    _m2_products(table, idx)
    return StructureAlgebra(field, M2_LABELS, table, parity=(0,) * 4, unit=[1, 0, 0, 1], name="M2")


def _bar(i, j):
    """Symplectic involution on a matrix unit, as (sign, (i', j'))."""
    return {(1, 1): (1, (2, 2)), (2, 2): (1, (1, 1)), (1, 2): (-1, (1, 2)), (2, 1): (-1, (2, 1))}[(i, j)]


def _cay_action(table, idx, m):
    """e_ij . m_k = delta_ik m_j and m . a = abar . m, with m = {1: index, 2: index}."""
    for (i, j), a in idx.items():
        for k in (1, 2):
            if i == k:
                table[a][m[k]] = {m[j]: 1}
    for (i, j), a in idx.items():
        s, (bi, bj) = _bar(i, j)
        for k in (1, 2):
            if bi == k:
                table[m[k]][a] = {m[bj]: s}


def b42(field: FieldSpec) -> StructureAlgebra:
    """B(4,2) = M2 + Cay with m1^2 = e21, m2^2 = -e12, m1 m2 = -e11, m2 m1 = e22."""
    idx = _m2_index()
    m = {1: 4, 2: 5}
    table = _empty(6)
    _m2_products(table, idx)
    _cay_action(table, idx, m)
    table[4][4] = {idx[(2, 1)]: 1}
    table[5][5] = {idx[(1, 2)]: -1}
    table[4][5] = {idx[(1, 1)]: -1}
    table[5][4] = {idx[(2, 2)]: 1}
    return StructureAlgebra(
        field, M2_LABELS + ("m1", "m2"), table, parity=(0, 0, 0, 0, 1, 1), unit=[1, 0, 0, 1, 0, 0], name="B42"
    )


def b42_legacy(field: FieldSpec) -> StructureAlgebra:
    """B(4,2) with the opposite odd-product sign, via e21 -> -e21, e12 -> -e12, m2 -> -m2."""
    alg = b42(field)
    diag = [1, -1, -1, 1, 1, -1]
    matrix = [[diag[i] if i == j else 0 for j in range(6)] for i in range(6)]
    return rebase(alg, matrix, name="B42-legacy")


def legacy_basis_change():
    """The diagonal change of basis relating the two B(4,2) sign conventions (an involution)."""
    diag = [1, -1, -1, 1, 1, -1]
    return [[diag[i] if i == j else 0 for j in range(6)] for i in range(6)]


def split_null_extension(field: FieldSpec) -> StructureAlgebra:
    """S = M2 + Cay with Cay^2 = 0."""
    idx = _m2_index()
    m = {1: 4, 2: 5}
    table = _empty(6)
    _m2_products(table, idx)
    _cay_action(table, idx, m)
    return StructureAlgebra(
        field, M2_LABELS + ("m1", "m2"), table, parity=(0, 0, 0, 0, 1, 1), unit=[1, 0, 0, 1, 0, 0], name="Cay-split-null"
    )


def b12(field: FieldSpec) -> StructureAlgebra:
    """B(1,2): even 1, odd x, y with x^2 = y^2 = 0 and xy = -yx = 1."""
    table = _empty(3)
    for k in range(3):
        table[0][k] = {k: 1}
        table[k][0] = {k: 1}
    table[1][2] = {0: 1}
    table[2][1] = {0: -1}
    return StructureAlgebra(field, ("1", "x", "y"), table, parity=(0, 1, 1), unit=[1, 0, 0], name="B12")


def dual_odd(field: FieldSpec) -> StructureAlgebra:
    """F + Fx with x odd and x^2 = 0."""
    table = _empty(2)
    table[0][0] = {0: 1}
    table[0][1] = {1: 1}
    table[1][0] = {1: 1}
    return StructureAlgebra(field, ("1", "x"), table, parity=(0, 1), unit=[1, 0], name="F+Fx")


def split_octonions(field: FieldSpec, v2=1) -> StructureAlgebra:
    """M2 + v M2 with a.b = ab, a.vb = v(abar b), vb.a = v(ab), va.vb = (b abar) v^2."""
    v2 = field(v2)
    if not v2:
        raise ValueError("the doubling parameter v^2 must be nonzero")
    h = _m2_index()
    vh = _m2_index(4)
    units = list(h)
    table = _empty(8)

    def hmul(p, q):
        (i, j), (k, l) = p, q
        return (i, l) if j == k else None

    for a in units:
        sa, abar = _bar(*a)
        for b in units:
            ab = hmul(a, b)
            if ab:
                table[h[a]][h[b]] = {h[ab]: 1}
            # a . vb = v(abar b)
            prod = hmul(abar, b)
            if prod:
                table[h[a]][vh[b]] = {vh[prod]: sa}
            # vb . a = v(ab)
            prod = hmul(a, b)
            if prod:
                table[vh[b]][h[a]] = {vh[prod]: 1}
            # va . vb = (b abar) v^2
            prod = hmul(b, abar)
            if prod:
                table[vh[a]][vh[b]] = {h[prod]: sa * v2}
    labels = M2_LABELS + ("ve11", "ve12", "ve21", "ve22")
    return StructureAlgebra(field, labels, table, parity=(0,) * 4 + (1,) * 4, unit=[1, 0, 0, 1, 0, 0, 0, 0], name="octonion-split")


def grassmann(field: FieldSpec, k: int) -> StructureAlgebra:
    """Exterior algebra on k anticommuting generators, graded by word length mod 2."""
    if k < 0:
        raise ValueError("number of generators must be nonnegative")
    subsets = [s for r in range(k + 1) for s in combinations(range(1, k + 1), r)]
    index = {s: i for i, s in enumerate(subsets)}
    d = len(subsets)
    table = _empty(d)
    for a in subsets:
        for b in subsets:
            if set(a) & set(b):
                continue
            # sign of the shuffle sorting a + b
            inv = sum(1 for x in a for y in b if x > y)
            table[index[a]][index[b]] = {index[tuple(sorted(a + b))]: -1 if inv % 2 else 1}
    labels = ["1" if not s else "".join(f"g{i}" for i in s) for s in subsets]
    parity = [len(s) % 2 for s in subsets]
    unit = [1] + [0] * (d - 1)
    return StructureAlgebra(field, labels, table, parity=parity, unit=unit, name=f"grassmann({k})")


def truncated_polynomial(field: FieldSpec, k: int, var="s") -> StructureAlgebra:
    """F[s]/(s^k), commutative associative and unital, all even."""
    if k < 1:
        raise ValueError("need k >= 1")
    table = _empty(k)
    for i in range(k):
        for j in range(k):
            if i + j < k:
                table[i][j] = {i + j: 1}
    labels = ["1", var] + [f"{var}^{i}" for i in range(2, k)]
    return StructureAlgebra(field, labels[:k], table, parity=(0,) * k, unit=[1] + [0] * (k - 1), name=f"F[{var}]/({var}^{k})")


BUILTIN_NAMES = (
    "M2", "B42", "B42-legacy", "B12", "Cay-split-null", "octonion-split", "grassmann", "F+Fx", "truncpoly", "Gamma(...)"
)


def builtin(name: str, field: FieldSpec | str = "q", **params) -> StructureAlgebra:
    """Look up a catalog algebra.

    ``grassmann`` and ``truncpoly`` take ``k`` (or are written ``grassmann(3)``);
    ``octonion-split`` takes ``v2``; ``Gamma(X)`` builds Gamma of a commutative builtin X.
    """
    if isinstance(field, str):
        field = FieldSpec.parse(field)
    key = name.strip()
    if key.startswith("Gamma(") and key.endswith(")"):
        from .gamma import gamma_of_commutative

        return gamma_of_commutative(builtin(key[len("Gamma("):-1], field, **params)).carrier
    if key.startswith("grassmann(") and key.endswith(")"):
        params.setdefault("k", int(key[len("grassmann("):-1]))
        key = "grassmann"
    if key.startswith("truncpoly(") and key.endswith(")"):
        params.setdefault("k", int(key[len("truncpoly("):-1]))
        key = "truncpoly"
    if key == "M2":
        return matrix_units(field)
    if key in ("B42", "B(4,2)"):
        return b42(field)
    if key == "B42-legacy":
        return b42_legacy(field)
    if key in ("B12", "B(1,2)"):
        return b12(field)
    if key in ("Cay-split-null", "S"):
        return split_null_extension(field)
    if key in ("octonion-split", "O"):
        return split_octonions(field, params.get("v2", 1))
    if key == "grassmann":
        if "k" not in params:
            raise ValueError("grassmann needs k")
        return grassmann(field, int(params["k"]))
    if key in ("F+Fx", "dual-odd"):
        return dual_odd(field)
    if key == "truncpoly":
        if "k" not in params:
            raise ValueError("truncpoly needs k")
        return truncated_polynomial(field, int(params["k"]))
    raise ValueError(f"unknown builtin {name!r}; known: {', '.join(BUILTIN_NAMES)}")


def gamma_examples() -> list:
    """(name, algebra) pairs of small Gamma-algebras used throughout the tests and demos."""
    from .gamma import gamma_of_commutative

    q, f3, f5, f7 = (FieldSpec.parse(s) for s in ("q", "fp:3", "fp:5", "fp:7"))
    return [
        ("B12/q", b12(q)),
        ("B12/fp:3", b12(f3)),
        ("B12/fp:5", b12(f5)),
        ("F+Fx/q", dual_odd(q)),
        ("Gamma(F5[s]/s^2)", gamma_of_commutative(truncated_polynomial(f5, 2)).carrier),
        ("Gamma(F7[s]/s^3)", gamma_of_commutative(truncated_polynomial(f7, 3)).carrier),
    ]
