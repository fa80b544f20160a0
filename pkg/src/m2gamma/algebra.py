"""Finite-dimensional (super)algebras given by structure constants."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from . import linalg
from .fields import FieldMismatchError, FieldSpec

M2_LABELS = ("e11", "e12", "e21", "e22")


class AlgebraMismatchError(ValueError):
    pass


class HomogeneityError(ValueError):
    pass


class StructureAlgebra:
    """An algebra with basis ``labels`` and products ``table[i][j] = {k: c_ij^k}``.

    ``parity`` is a tuple of 0/1 bits or None for an ungraded algebra.
    ``unit`` is an optional coefficient vector.  Instances are immutable.
    """

    def __init__(self, field: FieldSpec, labels, table, parity=None, unit=None, name=None):
        self.field = field
        self.labels = tuple(labels)
        d = len(self.labels)
        if d == 0:
            raise ValueError("an algebra needs at least one basis vector")
        if len(set(self.labels)) != d:
            raise ValueError("duplicate basis labels")
        if len(table) != d or any(len(row) != d for row in table):
            raise ValueError(f"table must be {d}x{d}")
        self.table = tuple(tuple(self._sparse(entry) for entry in row) for row in table)
        if parity is not None:
            parity = tuple(int(p) for p in parity)
            if len(parity) != d or any(p not in (0, 1) for p in parity):
                raise ValueError("parity must be one bit per basis vector")
        self.parity = parity
        self.unit = None if unit is None else self._sparse(unit)
        self.name = name
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    def _sparse(self, entry) -> dict:
        if isinstance(entry, dict):
            out = {}
            for k, c in entry.items():
                c = self.field(c)
                if c:
                    out[int(k)] = c
            return out
        if len(entry) != len(self.labels):
            raise ValueError("coefficient vector has wrong length")
        return {k: self.field(c) for k, c in enumerate(entry) if self.field(c)}

    def __repr__(self):
        tag = self.name or "StructureAlgebra"
        return f"<{tag} over {self.field}, dim {self.dim}>"

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def graded(self) -> bool:
        return self.parity is not None

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no basis vector {label!r} in {self!r}") from None

    def even_indices(self):
        self._need_grading()
        return [i for i, p in enumerate(self.parity) if p == 0]

    def odd_indices(self):
        self._need_grading()
        return [i for i, p in enumerate(self.parity) if p == 1]

    def _need_grading(self):
        if self.parity is None:
            raise HomogeneityError(f"{self!r} has no declared grading")

    # sparse-vector arithmetic
    def mul_vec(self, u: dict, v: dict) -> dict:
        out: dict = {}
        table = self.table
        for i, a in u.items():
            row = table[i]
            for j, b in v.items():
                ab = a * b
                for k, c in row[j].items():
                    s = out.get(k, 0) + ab * c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def assoc_vec(self, a: dict, b: dict, c: dict) -> dict:
        out = self.mul_vec(self.mul_vec(a, b), c)
        linalg.axpy(out, -1, self.mul_vec(a, self.mul_vec(b, c)))
        return out

    def basis_assoc(self, i: int, j: int, k: int) -> dict:
        return self.assoc_vec({i: 1}, {j: 1}, {k: 1})

    # elements
    def element(self, coords=None) -> "AlgebraElement":
        """Build an element from a dense vector, a sparse dict, or a label expression like '2*e11 - m1'."""
        if coords is None:
            return AlgebraElement(self, {})
        if isinstance(coords, str):
            return AlgebraElement(self, self._parse_combination(coords))
        if isinstance(coords, dict):
            return AlgebraElement(self, {self.index(k) if isinstance(k, str) else k: v for k, v in coords.items()})
        return AlgebraElement(self, self._sparse(list(coords)))

    def basis(self, i) -> "AlgebraElement":
        if isinstance(i, str):
            i = self.index(i)
        return AlgebraElement(self, {i: self.field(1)})

    def basis_elements(self):
        return [self.basis(i) for i in range(self.dim)]

    def one(self) -> "AlgebraElement":
        if self.unit is None:
            raise ValueError(f"{self!r} has no declared unit")
        return AlgebraElement(self, self.unit)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def _parse_combination(self, text: str) -> dict:
        import re

        s = text.replace(" ", "")
        if not s or s == "0":
            return {}
        if s[0] not in "+-":
            s = "+" + s
        out: dict = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            if "*" in body:
                coeff, lab = body.split("*", 1)
                c = self.field(coeff)
            elif body in self._index:
                c, lab = self.field(1), body
            else:
                raise ValueError(f"cannot parse term {body!r}")
            if sign == "-":
                c = -c
            linalg.axpy(out, c, {self.index(lab): 1})
        return out

    # structural checks
    def grading_violation(self):
        """First basis pair whose product leaves the expected parity component, or None."""
        self._need_grading()
        for i in range(self.dim):
            for j in range(self.dim):
                want = self.parity[i] ^ self.parity[j]
                for k in self.table[i][j]:
                    if self.parity[k] != want:
                        return (i, j)
        return None

    def unit_violation(self):
        """First basis index on which the declared unit fails to act as identity, or None."""
        if self.unit is None:
            return None
        for b in range(self.dim):
            e = {b: self.field(1)}
            if self.mul_vec(self.unit, e) != e or self.mul_vec(e, self.unit) != e:
                return b
        return None

    def structure_equal(self, other: "StructureAlgebra") -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.table == other.table
        )

    # serialization
    def to_json(self) -> dict:
        fmt = self.field.format_scalar
        d = self.dim

        def dense(vec):
            return [fmt(vec.get(k, 0)) for k in range(d)]

        return {
            "field": str(self.field),
            "basis": [
                {"label": lab, "parity": None if self.parity is None else self.parity[i]}
                for i, lab in enumerate(self.labels)
            ],
            "unit": None if self.unit is None else dense(self.unit),
            "table": [[dense(self.table[i][j]) for j in range(d)] for i in range(d)],
        }

    def dumps(self) -> str:
        """Canonical text: one table row per line, so output is stable byte for byte."""
        data = self.to_json()
        lines = ["{"]
        lines.append(f'  "field": {json.dumps(data["field"])},')
        lines.append(f'  "basis": {json.dumps(data["basis"])},')
        lines.append(f'  "unit": {json.dumps(data["unit"])},')
        lines.append('  "table": [')
        rows = [f"    {json.dumps(row)}" for row in data["table"]]
        lines.append(",\n".join(rows))
        lines.append("  ]")
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json(cls, data, name=None) -> "StructureAlgebra":
        if isinstance(data, str):
            data = json.loads(data)
        for key in ("field", "basis", "table"):
            if key not in data:
                raise ValueError(f"structure-constant JSON is missing {key!r}")
        fld = FieldSpec.parse(data["field"])
        basis = data["basis"]
        labels = [b["label"] for b in basis]
        pars = [b.get("parity") for b in basis]
        if all(p is None for p in pars):
            parity = None
        elif any(p is None for p in pars):
            raise ValueError("either every basis vector has a parity or none does")
        else:
            parity = pars
        table = data["table"]
        d = len(labels)
        if len(table) != d:
            raise ValueError(f"table has {len(table)} rows, expected {d}")
        for i, row in enumerate(table):
            if len(row) != d:
                raise ValueError(f"table row {i} has {len(row)} entries, expected {d}")
            for j, vec in enumerate(row):
                if len(vec) != d:
                    raise ValueError(f"table[{i}][{j}] has length {len(vec)}, expected {d}")
        parsed = [[[fld(c) for c in vec] for vec in row] for row in table]
        unit = data.get("unit")
        if unit is not None:
            if len(unit) != d:
                raise ValueError(f"unit has length {len(unit)}, expected {d}")
            unit = [fld(c) for c in unit]
        return cls(fld, labels, parsed, parity=parity, unit=unit, name=name)

    @classmethod
    def loads(cls, text: str, name=None) -> "StructureAlgebra":
        return cls.from_json(json.loads(text), name=name)


class AlgebraElement:
    """A coefficient vector in a StructureAlgebra (stored sparsely)."""

    __slots__ = ("algebra", "vec")

    def __init__(self, algebra: StructureAlgebra, vec: dict):
        self.algebra = algebra
        self.vec = {k: algebra.field(c) for k, c in vec.items() if c}

    @property
    def coords(self) -> tuple:
        z = self.algebra.field(0)
        return tuple(self.vec.get(k, z) for k in range(self.algebra.dim))

    def _same(self, other):
        if not isinstance(other, AlgebraElement):
            return None
        if other.algebra is not self.algebra and not other.algebra.structure_equal(self.algebra):
            raise AlgebraMismatchError("elements of different algebras")
        return other

    def __add__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        out = dict(self.vec)
        linalg.axpy(out, 1, o.vec)
        return AlgebraElement(self.algebra, out)

    def __sub__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        out = dict(self.vec)
        linalg.axpy(out, -1, o.vec)
        return AlgebraElement(self.algebra, out)

    def __neg__(self):
        return AlgebraElement(self.algebra, {k: -c for k, c in self.vec.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            o = self._same(other)
            return AlgebraElement(self.algebra, self.algebra.mul_vec(self.vec, o.vec))
        c = self.algebra.field(other)
        return AlgebraElement(self.algebra, linalg.scaled(c, self.vec))

    def __rmul__(self, other):
        c = self.algebra.field(other)
        return AlgebraElement(self.algebra, linalg.scaled(c, self.vec))

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.vec == other.vec and self.algebra.labels == other.algebra.labels
        if other == 0:
            return not self.vec
        return NotImplemented

    def __hash__(self):
        return hash((self.algebra.labels, frozenset(self.vec.items())))

    def __bool__(self):
        return bool(self.vec)

    def parity(self):
        """0 or 1 for a homogeneous nonzero element, None otherwise."""
        par = self.algebra.parity
        if par is None:
            return None
        bits = {par[k] for k in self.vec}
        if len(bits) == 1:
            return bits.pop()
        return 0 if not bits else None

    def __str__(self):
        if not self.vec:
            return "0"
        parts = []
        for k in sorted(self.vec):
            c = str(self.vec[k])
            lab = self.algebra.labels[k]
            parts.append(lab if c == "1" else f"-{lab}" if c == "-1" else f"{c}*{lab}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"AlgebraElement({self})"

    def to_json(self) -> dict:
        alg = self.algebra
        return {
            "field": str(alg.field),
            "basis": list(alg.labels),
            "coords": [alg.field.format_scalar(c) for c in self.coords],
        }

    @classmethod
    def from_json(cls, data, algebra: StructureAlgebra) -> "AlgebraElement":
        if isinstance(data, str):
            data = json.loads(data)
        if list(data["basis"]) != list(algebra.labels):
            raise AlgebraMismatchError("element JSON basis does not match the algebra")
        if FieldSpec.parse(data["field"]) != algebra.field:
            raise FieldMismatchError("element JSON field does not match the algebra")
        return algebra.element([algebra.field(c) for c in data["coords"]])


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


def associator(a: AlgebraElement, b: AlgebraElement, c: AlgebraElement, super: bool = False) -> AlgebraElement:
    """(ab)c - a(bc).  In super mode all three inputs must be parity-homogeneous."""
    alg = a.algebra
    a._same(b)
    a._same(c)
    if super:
        alg._need_grading()
        for x in (a, b, c):
            if x.vec and x.parity() is None:
                raise HomogeneityError(f"{x} is not homogeneous")
    return AlgebraElement(alg, alg.assoc_vec(a.vec, b.vec, c.vec))


def koszul_sign(*pairs) -> int:
    """(-1) raised to sum of p*q over the given parity pairs."""
    return -1 if sum(p * q for p, q in pairs) % 2 else 1


# ---------------------------------------------------------------------------
# identity verification

@dataclass
class IdentityReport:
    kind: str
    passed: bool
    witness: tuple = ()
    value: "AlgebraElement | None" = None
    detail: str = ""

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "identity": self.kind,
            "result": "pass" if self.passed else "fail",
            "witness": list(self.witness),
            "value": None if self.value is None else str(self.value),
            "detail": self.detail,
        }


def _sweep_linearized(alg, slot_fn, graded):
    """Quadratic identities f(x, x, ...) = 0 checked through diagonal + polarization.

    ``slot_fn(i, j, k)`` returns the trilinear form T(b_i, b_j, b_k) whose
    diagonal in the first two slots is the identity.  In super mode the
    polarization carries the Koszul sign and the diagonal is only imposed on
    even basis vectors.
    """
    par = alg.parity
    d = alg.dim
    for i in range(d):
        for j in range(i, d):
            for k in range(d):
                if i == j:
                    if graded and par[i] == 1:
                        continue
                    val = slot_fn(i, i, k)
                else:
                    val = slot_fn(i, j, k)
                    s = koszul_sign((par[i], par[j])) if graded else 1
                    linalg.axpy(val, s, slot_fn(j, i, k))
                if val:
                    return (i, j, k), val
    return None


def _left_alt(alg, graded):
    return _sweep_linearized(alg, lambda i, j, k: alg.basis_assoc(i, j, k), graded)


def _right_alt(alg, graded):
    hit = _sweep_linearized(alg, lambda i, j, k: alg.basis_assoc(k, i, j), graded)
    if hit is None:
        return None
    (i, j, k), val = hit
    return (k, i, j), val


def _flexible(alg, graded):
    hit = _sweep_linearized(alg, lambda i, j, k: alg.basis_assoc(i, k, j), graded)
    if hit is None:
        return None
    (i, j, k), val = hit
    return (i, k, j), val


def _associative(alg, graded):
    d = alg.dim
    for t in product(range(d), repeat=3):
        val = alg.basis_assoc(*t)
        if val:
            return t, val
    return None


def _commutative(alg, graded):
    d = alg.dim
    par = alg.parity
    for i in range(d):
        for j in range(i, d):
            val = dict(alg.table[i][j])
            s = koszul_sign((par[i], par[j])) if graded else 1
            linalg.axpy(val, -s, alg.table[j][i])
            if val:
                return (i, j), val
    return None


def _jordan_super(alg, graded):
    """The multilinear super Jordan identity on homogeneous basis 4-tuples."""
    d = alg.dim
    par = alg.parity
    for x, y, z, t in product(range(d), repeat=4):
        px, py, pz, pt = par[x], par[y], par[z], par[t]
        ex, ey, ez, et = ({x: 1}, {y: 1}, {z: 1}, {t: 1})
        val = alg.assoc_vec(dict(alg.table[x][y]), ez, et)
        s2 = -1 if (py * pz + py * pt + pz * pt) % 2 else 1
        linalg.axpy(val, s2, alg.assoc_vec(dict(alg.table[x][t]), ez, ey))
        s3 = -1 if (px * (py + pz + pt) + pz * pt) % 2 else 1
        linalg.axpy(val, s3, alg.assoc_vec(dict(alg.table[y][t]), ez, ex))
        if val:
            return (x, y, z, t), val
    return None


def m2_block(alg: StructureAlgebra):
    """Indices of e11, e12, e21, e22 when the algebra names them, else None."""
    if all(lab in alg._index for lab in M2_LABELS):
        return tuple(alg._index[lab] for lab in M2_LABELS)
    return None


def _bar_vec(block, vec):
    """Symplectic involution on a vector supported in the M2 block."""
    i11, i12, i21, i22 = block
    out = {}
    if vec.get(i22):
        out[i11] = vec[i22]
    if vec.get(i12):
        out[i12] = -vec[i12]
    if vec.get(i21):
        out[i21] = -vec[i21]
    if vec.get(i11):
        out[i22] = vec[i11]
    return out


def _cayley_law(alg, graded):
    block = m2_block(alg)
    if block is None:
        raise ValueError("cayley-bimodule-law needs basis labels e11, e12, e21, e22")
    module = [k for k in range(alg.dim) if k not in block]
    for a in block:
        abar = _bar_vec(block, {a: alg.field(1)})
        for v in module:
            val = dict(alg.table[a][v])
            linalg.axpy(val, -1, alg.mul_vec({v: 1}, abar))
            if val:
                return (a, v), val
    return None


_KINDS = {
    "associative": (_associative, False),
    "left-alternative": (_left_alt, False),
    "right-alternative": (_right_alt, False),
    "flexible": (_flexible, False),
    "commutative": (_commutative, False),
    "super-left-alternative": (_left_alt, True),
    "super-right-alternative": (_right_alt, True),
    "super-commutative": (_commutative, True),
    "jordan-super": (_jordan_super, True),
    "cayley-bimodule-law": (_cayley_law, False),
}

IDENTITY_KINDS = tuple(sorted(list(_KINDS) + ["gamma-conditions", "alternative", "super-alternative"]))


def check_identity(alg: StructureAlgebra, kind: str) -> IdentityReport:
    """Exhaustive multilinear check of ``kind`` over basis tuples."""
    if kind == "gamma-conditions":
        from .gamma import verify_gamma_conditions

        rep = verify_gamma_conditions(alg)
        bad = rep.first_failure()
        if bad is None:
            return IdentityReport(kind, True)
        return IdentityReport(kind, False, bad.witness, bad.value, f"condition {bad.condition}: {bad.detail}")
    if kind in ("alternative", "super-alternative"):
        prefix = "super-" if kind.startswith("super") else ""
        for sub in (prefix + "left-alternative", prefix + "right-alternative"):
            rep = check_identity(alg, sub)
            if not rep:
                return IdentityReport(kind, False, rep.witness, rep.value, sub)
        return IdentityReport(kind, True)
    if kind not in _KINDS:
        raise ValueError(f"unknown identity kind {kind!r}")
    fn, graded = _KINDS[kind]
    if graded:
        alg._need_grading()
    hit = fn(alg, graded)
    if hit is None:
        return IdentityReport(kind, True)
    idx, val = hit
    return IdentityReport(kind, False, tuple(alg.labels[i] for i in idx), AlgebraElement(alg, val))


# ---------------------------------------------------------------------------
# M2 structure

def symplectic_involution(a: AlgebraElement) -> AlgebraElement:
    """(a b; c d) -> (d -b; -c a) on the e_ij block."""
    block = m2_block(a.algebra)
    if block is None:
        raise ValueError("algebra has no e11/e12/e21/e22 block")
    outside = [k for k in a.vec if k not in block]
    if outside:
        raise ValueError(f"element has components outside the M2 block: {[a.algebra.labels[k] for k in outside]}")
    return AlgebraElement(a.algebra, _bar_vec(block, a.vec))


@dataclass
class Decomposition:
    associative_part: list
    cayley_part: list
    complementary: bool

    @property
    def dims(self):
        return len(self.associative_part), len(self.cayley_part)


def _as_vec(alg, v):
    if isinstance(v, AlgebraElement):
        return dict(v.vec)
    if isinstance(v, str):
        return alg.element(v).vec
    return alg.element(v).vec


def decompose_m2_bimodule(alg: StructureAlgebra, m2_embedding=None) -> Decomposition:
    """Split ``alg`` as an M2-bimodule into the associative part and the Cayley part.

    The Cayley part is the solution space of a*v = v*abar for all matrix
    units a; the associative part is where (a, v, b) vanishes for all matrix
    units a, b.  Complementarity is checked, not assumed.
    """
    fld = alg.field
    if m2_embedding is None:
        block = m2_block(alg)
        if block is None:
            raise ValueError("no M2 embedding given and no e_ij labels present")
        units = [{k: fld(1)} for k in block]
    else:
        if len(m2_embedding) != 4:
            raise ValueError("embedding needs four vectors e11, e12, e21, e22")
        units = [_as_vec(alg, v) for v in m2_embedding]
    e = {(i, j): units[2 * (i - 1) + (j - 1)] for i in (1, 2) for j in (1, 2)}
    for (i, j), eij in e.items():
        for (k, l), ekl in e.items():
            want = e[(i, l)] if j == k else {}
            if alg.mul_vec(eij, ekl) != want:
                raise ValueError(f"matrix-unit relation fails for e{i}{j}*e{k}{l}")
    one = dict(e[(1, 1)])
    linalg.axpy(one, 1, e[(2, 2)])
    for b in range(alg.dim):
        bv = {b: fld(1)}
        if alg.mul_vec(one, bv) != bv or alg.mul_vec(bv, one) != bv:
            raise ValueError("e11 + e22 is not the unit")
    bar = {
        (1, 1): e[(2, 2)],
        (2, 2): e[(1, 1)],
        (1, 2): linalg.scaled(fld(-1), e[(1, 2)]),
        (2, 1): linalg.scaled(fld(-1), e[(2, 1)]),
    }
    d = alg.dim
    # rows of the linear conditions, one per (condition, output coordinate)
    cay_rows = []
    for key, a in e.items():
        cols = []
        for j in range(d):
            bj = {j: fld(1)}
            val = alg.mul_vec(a, bj)
            linalg.axpy(val, -1, alg.mul_vec(bj, bar[key]))
            cols.append(val)
        for k in range(d):
            cay_rows.append([cols[j].get(k, 0) for j in range(d)])
    assoc_rows = []
    for a in e.values():
        for b in e.values():
            cols = [alg.assoc_vec(a, {j: fld(1)}, b) for j in range(d)]
            for k in range(d):
                assoc_rows.append([cols[j].get(k, 0) for j in range(d)])
    vc = linalg.nullspace(cay_rows, d, fld)
    va = linalg.nullspace(assoc_rows, d, fld)
    comp = len(va) + len(vc) == d and linalg.dense_rank(va + vc, fld) == d
    return Decomposition(
        [alg.element(v) for v in va],
        [alg.element(v) for v in vc],
        comp,
    )


# ---------------------------------------------------------------------------
# linear maps between algebras

def apply_matrix(matrix, vec: dict) -> dict:
    """Image of a sparse vector under a dense matrix (rows index the target)."""
    out: dict = {}
    for r, row in enumerate(matrix):
        s = 0
        for j, c in vec.items():
            if row[j]:
                s = s + row[j] * c
        if s:
            out[r] = s
    return out


def homomorphism_violation(matrix, source: StructureAlgebra, target: StructureAlgebra):
    """First basis pair (i, j) with f(b_i b_j) != f(b_i) f(b_j), or None."""
    if source.field != target.field:
        raise FieldMismatchError(f"{source.field} vs {target.field}")
    if len(matrix) != target.dim or any(len(r) != source.dim for r in matrix):
        raise ValueError("matrix shape does not match the algebras")
    cols = [apply_matrix(matrix, {j: source.field(1)}) for j in range(source.dim)]
    for i in range(source.dim):
        for j in range(source.dim):
            lhs = apply_matrix(matrix, source.table[i][j])
            rhs = target.mul_vec(cols[i], cols[j])
            if lhs != rhs:
                return (i, j)
    return None


def is_isomorphism(matrix, source: StructureAlgebra, target: StructureAlgebra) -> bool:
    if source.dim != target.dim:
        return False
    if linalg.dense_rank(matrix, source.field) != source.dim:
        return False
    return homomorphism_violation(matrix, source, target) is None


def rebase(alg: StructureAlgebra, matrix, labels=None, name=None) -> StructureAlgebra:
    """Same algebra written in a new basis; column j of ``matrix`` is new basis vector j in old coordinates."""
    fld = alg.field
    inv = linalg.inverse(matrix, fld)
    if inv is None:
        raise ValueError("change-of-basis matrix is singular")
    d = alg.dim
    cols = [{r: fld(matrix[r][j]) for r in range(d) if matrix[r][j]} for j in range(d)]
    table = [[apply_matrix(inv, alg.mul_vec(cols[i], cols[j])) for j in range(d)] for i in range(d)]
    unit = None if alg.unit is None else apply_matrix(inv, alg.unit)
    parity = None
    if alg.parity is not None:
        parity = []
        for c in cols:
            bits = {alg.parity[k] for k in c}
            parity.append(bits.pop() if len(bits) == 1 else None)
        if None in parity:
            parity = None
    return StructureAlgebra(fld, labels or alg.labels, table, parity=parity, unit=unit, name=name or alg.name)
