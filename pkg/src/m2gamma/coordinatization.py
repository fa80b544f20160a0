"""M2(D) + V^2, the Gamma-envelope of B(4,2), the isomorphism between them, and morphism transport."""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import linalg
from .algebra import (
    AlgebraElement,
    StructureAlgebra,
    apply_matrix,
    homomorphism_violation,
)
from .catalog import b42
from .fields import FieldSpec
from .gamma import GammaAlgebra, as_gamma, graded_envelope

UNITS = ((1, 1), (1, 2), (2, 1), (2, 2))


class BracketModuleError(ValueError):
    pass


class EnvelopeMorphismError(ValueError):
    """Raised when a map of envelopes cannot come from a map of Gamma-algebras.

    ``reason`` is one of 'not-m2-fixing', 'beta', 'lambda', 'mu',
    'not-homomorphism', 'not-induced'.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class BracketModule:
    """An associative unital D, a D-module V killed by [D, D], and a skew bracket V x V -> Z(D).

    ``action[a][v]`` is the sparse V-vector b_a . v_v and ``bracket[u][v]``
    the sparse D-vector <v_u, v_v>.
    """

    def __init__(self, D: StructureAlgebra, v_dim: int, action, bracket, v_labels=None, check=True):
        self.D = D
        self.field = D.field
        self.v_dim = v_dim
        fld = self.field
        norm = lambda vec: {int(k): fld(c) for k, c in vec.items() if fld(c)}  # noqa: E731
        self.action = tuple(tuple(norm(action[a][v]) for v in range(v_dim)) for a in range(D.dim))
        self.bracket = tuple(tuple(norm(bracket[u][v]) for v in range(v_dim)) for u in range(v_dim))
        self.v_labels = tuple(v_labels or (f"v{i + 1}" for i in range(v_dim)))
        if check:
            problems = self.problems()
            if problems:
                raise BracketModuleError("; ".join(problems))

    def act(self, d: dict, v: dict) -> dict:
        out: dict = {}
        for a, ca in d.items():
            for j, cv in v.items():
                linalg.axpy(out, ca * cv, self.action[a][j])
        return out

    def pair(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, cu in u.items():
            for j, cv in v.items():
                linalg.axpy(out, cu * cv, self.bracket[i][j])
        return out

    def problems(self) -> list:
        D, fld = self.D, self.field
        out = []
        if D.unit is None:
            out.append("D has no unit")
        else:
            for v in range(self.v_dim):
                if self.act(D.unit, {v: 1}) != {v: fld(1)}:
                    out.append(f"unit of D does not fix {self.v_labels[v]}")
                    break
        for a in range(D.dim):
            for b in range(D.dim):
                comm = dict(D.table[a][b])
                linalg.axpy(comm, -1, D.table[b][a])
                for v in range(self.v_dim):
                    if self.act(comm, {v: 1}):
                        out.append(f"[{D.labels[a]}, {D.labels[b]}] does not annihilate {self.v_labels[v]}")
                        return out
                # module axiom (ab).v = a.(b.v)
                for v in range(self.v_dim):
                    if self.act(D.table[a][b], {v: 1}) != self.act({a: 1}, self.action[b][v]):
                        out.append(f"({D.labels[a]}{D.labels[b]}).v != {D.labels[a]}.({D.labels[b]}.v)")
                        return out
        for u in range(self.v_dim):
            for v in range(self.v_dim):
                s = dict(self.bracket[u][v])
                linalg.axpy(s, 1, self.bracket[v][u])
                if s:
                    out.append(f"bracket not skew on ({self.v_labels[u]}, {self.v_labels[v]})")
                    return out
                for a in range(D.dim):
                    c = D.mul_vec(self.bracket[u][v], {a: 1})
                    linalg.axpy(c, -1, D.mul_vec({a: 1}, self.bracket[u][v]))
                    if c:
                        out.append(f"<{self.v_labels[u]}, {self.v_labels[v]}> is not central")
                        return out
                    # D-bilinearity: <a.u, v> = a <u, v>
                    lhs = self.pair(self.action[a][u], {v: 1})
                    if lhs != D.mul_vec({a: 1}, self.bracket[u][v]):
                        out.append(f"bracket is not D-linear at ({D.labels[a]}, {self.v_labels[u]}, {self.v_labels[v]})")
                        return out
        for u in range(self.v_dim):
            for v in range(self.v_dim):
                for w in range(self.v_dim):
                    s = self.act(self.bracket[u][v], {w: 1})
                    linalg.axpy(s, 1, self.act(self.bracket[v][w], {u: 1}))
                    linalg.axpy(s, 1, self.act(self.bracket[w][u], {v: 1}))
                    if s:
                        out.append(
                            f"cyclic relation fails on ({self.v_labels[u]}, {self.v_labels[v]}, {self.v_labels[w]})"
                        )
                        return out
        return out

    @classmethod
    def from_gamma(cls, g) -> "BracketModule":
        g = as_gamma(g)
        C = g.carrier
        ev, od = list(g.even_basis), list(g.odd_basis)
        epos = {k: i for i, k in enumerate(ev)}
        opos = {k: i for i, k in enumerate(od)}
        dtable = [[{epos[k]: c for k, c in C.table[a][b].items()} for b in ev] for a in ev]
        unit = [g.unit_vec.get(k, 0) for k in ev]
        D = StructureAlgebra(C.field, [C.labels[k] for k in ev], dtable, unit=unit, name="Gamma0")
        action = [[{opos[k]: c for k, c in C.table[a][v].items()} for v in od] for a in ev]
        bracket = [[{epos[k]: c for k, c in C.table[u][v].items()} for v in od] for u in od]
        return cls(D, len(od), action, bracket, v_labels=[C.labels[k] for k in od])

    def to_json(self) -> dict:
        fmt = self.field.format_scalar

        def dense(vec, n):
            return [fmt(vec.get(k, 0)) for k in range(n)]

        return {
            "D": self.D.to_json(),
            "V": {
                "dim": self.v_dim,
                "labels": list(self.v_labels),
                "action": [[dense(self.action[a][v], self.v_dim) for v in range(self.v_dim)] for a in range(self.D.dim)],
            },
            "bracket": [[dense(self.bracket[u][v], self.D.dim) for v in range(self.v_dim)] for u in range(self.v_dim)],
        }

    @classmethod
    def from_json(cls, data) -> "BracketModule":
        if isinstance(data, str):
            data = json.loads(data)
        D = StructureAlgebra.from_json(data["D"])
        fld = D.field
        V = data["V"]
        n = V["dim"]
        action = [[{k: fld(c) for k, c in enumerate(vec)} for vec in row] for row in V["action"]]
        bracket = [[{k: fld(c) for k, c in enumerate(vec)} for vec in row] for row in data["bracket"]]
        return cls(D, n, action, bracket, v_labels=V.get("labels"))


@dataclass
class M2DElement:
    """A 2x2 matrix over D (sparse D-vectors keyed by (i, j)) plus a pair (x, y) in V^2."""

    module: BracketModule
    matrix: dict
    pair: tuple

    @classmethod
    def zero(cls, module):
        return cls(module, {u: {} for u in UNITS}, ({}, {}))

    @classmethod
    def identity(cls, module):
        u = dict(module.D.unit)
        return cls(module, {(1, 1): u, (1, 2): {}, (2, 1): {}, (2, 2): dict(u)}, ({}, {}))

    def __add__(self, other):
        m = {}
        for u in UNITS:
            m[u] = dict(self.matrix.get(u, {}))
            linalg.axpy(m[u], 1, other.matrix.get(u, {}))
        x = dict(self.pair[0])
        linalg.axpy(x, 1, other.pair[0])
        y = dict(self.pair[1])
        linalg.axpy(y, 1, other.pair[1])
        return M2DElement(self.module, m, (x, y))

    def __eq__(self, other):
        if not isinstance(other, M2DElement):
            return NotImplemented
        return all(self.matrix.get(u, {}) == other.matrix.get(u, {}) for u in UNITS) and self.pair == other.pair

    def __mul__(self, other):
        return m2d_multiply(self, other)

    def __bool__(self):
        return any(self.matrix.get(u) for u in UNITS) or any(self.pair)


def star(matrix: dict, fld) -> dict:
    """(a b; c d)* = (d -b; -c a)."""
    neg = lambda v: linalg.scaled(fld(-1), v)  # noqa: E731
    return {
        (1, 1): dict(matrix.get((2, 2), {})),
        (1, 2): neg(matrix.get((1, 2), {})),
        (2, 1): neg(matrix.get((2, 1), {})),
        (2, 2): dict(matrix.get((1, 1), {})),
    }


def _row_action(mod: BracketModule, z: dict, t: dict, M: dict) -> tuple:
    """(z, t) M = (d11 z + d21 t, d12 z + d22 t)."""
    first = mod.act(M.get((1, 1), {}), z)
    linalg.axpy(first, 1, mod.act(M.get((2, 1), {}), t))
    second = mod.act(M.get((1, 2), {}), z)
    linalg.axpy(second, 1, mod.act(M.get((2, 2), {}), t))
    return first, second


def m2d_multiply(X: M2DElement, Y: M2DElement) -> M2DElement:
    """XY = X_a Y_a + (-<x,t> -<y,t>; <x,z> <y,z>) + (z,t) X_a + (x,y) (Y_a)*."""
    mod = X.module
    if Y.module is not mod:
        raise BracketModuleError("elements over different bracket modules")
    D, fld = mod.D, mod.field
    A, B = X.matrix, Y.matrix
    (x, y), (z, t) = X.pair, Y.pair
    out = {}
    for i, l in UNITS:
        acc: dict = {}
        for j in (1, 2):
            linalg.axpy(acc, 1, D.mul_vec(A.get((i, j), {}), B.get((j, l), {})))
        out[(i, l)] = acc
    linalg.axpy(out[(1, 1)], -1, mod.pair(x, t))
    linalg.axpy(out[(1, 2)], -1, mod.pair(y, t))
    linalg.axpy(out[(2, 1)], 1, mod.pair(x, z))
    linalg.axpy(out[(2, 2)], 1, mod.pair(y, z))
    p1, p2 = _row_action(mod, z, t, A)
    q1, q2 = _row_action(mod, x, y, star(B, fld))
    linalg.axpy(p1, 1, q1)
    linalg.axpy(p2, 1, q2)
    return M2DElement(mod, out, (p1, p2))


def _unit_label(i, j):
    return f"e{i}{j}"


def m2d_algebra(mod: BracketModule) -> StructureAlgebra:
    """M2(D) + V^2 as a structure-constant algebra.

    Basis order: for each matrix unit e_ij, the D-basis in that slot; then
    (v, 0) for each v; then (0, v) for each v.
    """
    D = mod.D
    nd, nv = D.dim, mod.v_dim
    basis = [("m", u, a) for u in UNITS for a in range(nd)]
    basis += [("p", 0, v) for v in range(nv)] + [("p", 1, v) for v in range(nv)]
    index = {b: i for i, b in enumerate(basis)}

    def to_elem(b):
        kind, u, a = b
        e = M2DElement.zero(mod)
        if kind == "m":
            e.matrix[u] = {a: mod.field(1)}
        else:
            pair = [{}, {}]
            pair[u] = {a: mod.field(1)}
            e.pair = tuple(pair)
        return e

    def to_vec(e: M2DElement) -> dict:
        out: dict = {}
        for u in UNITS:
            for a, c in e.matrix.get(u, {}).items():
                out[index[("m", u, a)]] = c
        for s in (0, 1):
            for v, c in e.pair[s].items():
                out[index[("p", s, v)]] = c
        return out

    elems = [to_elem(b) for b in basis]
    table = [[to_vec(m2d_multiply(p, q)) for q in elems] for p in elems]
    labels = []
    for kind, u, a in basis:
        if kind == "m":
            labels.append(f"{_unit_label(*u)}[{D.labels[a]}]")
        elif u == 0:
            labels.append(f"({mod.v_labels[a]},0)")
        else:
            labels.append(f"(0,{mod.v_labels[a]})")
    unit = to_vec(M2DElement.identity(mod))
    return StructureAlgebra(
        mod.field, labels, table, unit=[unit.get(i, 0) for i in range(len(basis))], name="M2(D)+V^2"
    )


def gamma_to_m2(g) -> StructureAlgebra:
    """M2(Gamma_0) + Gamma_1^2 with <u, v> = uv."""
    return m2d_algebra(BracketModule.from_gamma(g))


def envelope_b42(g) -> StructureAlgebra:
    """Gamma_0 (x) M2 + Gamma_1 (x) Cay, with (a (x) s)(b (x) t) = ab (x) st."""
    g = as_gamma(g)
    return graded_envelope(g.carrier, b42(g.field), koszul=False, name="Gamma(B42)")


def envelope_index(g) -> dict:
    """(Gamma basis index, B(4,2) basis index) -> envelope basis index."""
    C = g.carrier
    S = b42(C.field)
    basis = [(a, s) for s in range(S.dim) for a in range(C.dim) if C.parity[a] == S.parity[s]]
    return {b: i for i, b in enumerate(basis)}


@dataclass
class AlgebraMap:
    """A linear map given by a dense matrix whose rows index the target basis."""

    matrix: list
    source: StructureAlgebra
    target: StructureAlgebra

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self.target, apply_matrix(self.matrix, x.vec))

    def image(self, i: int) -> dict:
        return apply_matrix(self.matrix, {i: self.source.field(1)})

    def __eq__(self, other):
        if not isinstance(other, AlgebraMap):
            return NotImplemented
        fld = self.source.field
        return [[fld(c) for c in r] for r in self.matrix] == [[fld(c) for c in r] for r in other.matrix]

    def is_homomorphism(self) -> bool:
        return homomorphism_violation(self.matrix, self.source, self.target) is None

    def is_bijective(self) -> bool:
        return self.source.dim == self.target.dim and linalg.dense_rank(self.matrix, self.source.field) == self.source.dim


def _matrix_from_images(images: list, target_dim: int, fld: FieldSpec) -> list:
    z = fld(0)
    return [[images[j].get(r, z) for j in range(len(images))] for r in range(target_dim)]


def phi_iso(g) -> AlgebraMap:
    """X + (x, y) -> X + x (x) m1 + y (x) m2, verified multiplicative and bijective on all basis pairs."""
    g = as_gamma(g)
    src = gamma_to_m2(g)
    tgt = envelope_b42(g)
    C = g.carrier
    ev, od = list(g.even_basis), list(g.odd_basis)
    idx = envelope_index(g)
    fld = g.field
    images = []
    for u in UNITS:
        s = UNITS.index(u)
        for a in ev:
            images.append({idx[(a, s)]: fld(1)})
    for k in (4, 5):
        for v in od:
            images.append({idx[(v, k)]: fld(1)})
    phi = AlgebraMap(_matrix_from_images(images, tgt.dim, fld), src, tgt)
    bad = homomorphism_violation(phi.matrix, src, tgt)
    if bad is not None:
        raise ArithmeticError(f"phi is not multiplicative on ({src.labels[bad[0]]}, {src.labels[bad[1]]})")
    if not phi.is_bijective():
        raise ArithmeticError("phi is not bijective")
    return phi


def _check_graded_homomorphism(psi: list, g: GammaAlgebra, h: GammaAlgebra):
    C, T = g.carrier, h.carrier
    if len(psi) != T.dim or any(len(r) != C.dim for r in psi):
        raise ValueError("psi has the wrong shape")
    for j in range(C.dim):
        img = apply_matrix(psi, {j: C.field(1)})
        if any(T.parity[k] != C.parity[j] for k in img):
            raise ValueError(f"psi does not preserve the grading at {C.labels[j]}")
    bad = homomorphism_violation(psi, C, T)
    if bad is not None:
        raise ValueError(f"psi is not a homomorphism on ({C.labels[bad[0]]}, {C.labels[bad[1]]})")
    if apply_matrix(psi, g.unit_vec) != {k: T.field(c) for k, c in h.unit_vec.items()}:
        raise ValueError("psi does not send the unit to the unit")


def transport_morphism(psi, g, h) -> AlgebraMap:
    """F(psi): gamma (x) b -> psi(gamma) (x) b between the envelopes; re-verified as a homomorphism."""
    g, h = as_gamma(g), as_gamma(h)
    fld = g.field
    psi = [[fld(c) for c in row] for row in psi]
    _check_graded_homomorphism(psi, g, h)
    src, tgt = envelope_b42(g), envelope_b42(h)
    isrc, itgt = envelope_index(g), envelope_index(h)
    images = [None] * src.dim
    for (a, s), i in isrc.items():
        img = apply_matrix(psi, {a: fld(1)})
        images[i] = {itgt[(k, s)]: c for k, c in img.items()}
    F = AlgebraMap(_matrix_from_images(images, tgt.dim, fld), src, tgt)
    bad = homomorphism_violation(F.matrix, src, tgt)
    if bad is not None:
        raise ArithmeticError(f"F(psi) fails multiplicativity on ({src.labels[bad[0]]}, {src.labels[bad[1]]})")
    return F


def recover_morphism(Phi, g, h) -> list:
    """Read psi: Gamma -> Gamma' off an envelope map that fixes M2; returns psi's matrix.

    The checks follow the forcing argument: Phi commutes with left
    multiplication by 1 (x) e11 and 1 (x) e12, which pins Phi(gamma (x) m1)
    to alpha (x) m1 and Phi(gamma (x) m2) to alpha (x) m2.
    """
    g, h = as_gamma(g), as_gamma(h)
    fld = g.field
    src, tgt = envelope_b42(g), envelope_b42(h)
    M = Phi.matrix if isinstance(Phi, AlgebraMap) else Phi
    M = [[fld(c) for c in row] for row in M]
    if len(M) != tgt.dim or any(len(r) != src.dim for r in M):
        raise ValueError("Phi has the wrong shape for these envelopes")
    isrc, itgt = envelope_index(g), envelope_index(h)
    rtgt = {i: b for b, i in itgt.items()}

    def one_tensor(idx, unit_vec, s):
        return {idx[(a, s)]: c for a, c in unit_vec.items()}

    for s in range(4):
        lhs = apply_matrix(M, one_tensor(isrc, g.unit_vec, s))
        want = {k: fld(c) for k, c in one_tensor(itgt, h.unit_vec, s).items()}
        if lhs != want:
            raise EnvelopeMorphismError("not-m2-fixing", f"Phi does not fix 1 (x) {b42(fld).labels[s]}")

    def split(vec):
        """Split a target vector into {gamma': coeff} per B(4,2) slot."""
        parts = {s: {} for s in range(6)}
        for k, c in vec.items():
            a, s = rtgt[k]
            parts[s][a] = c
        return parts

    T = h.carrier
    psi_cols = {}
    for a in g.even_basis:
        parts = split(apply_matrix(M, {isrc[(a, 0)]: fld(1)}))
        psi_cols[a] = parts[0]
    for gam in g.odd_basis:
        p1 = split(apply_matrix(M, {isrc[(gam, 4)]: fld(1)}))
        p2 = split(apply_matrix(M, {isrc[(gam, 5)]: fld(1)}))
        alpha, beta = p1[4], p1[5]
        lam, mu = p2[4], p2[5]
        if beta:
            raise EnvelopeMorphismError(
                "beta",
                f"Phi({g.carrier.labels[gam]} (x) m1) has an m2 component; "
                "commuting with 1 (x) e11 forces beta = 0",
            )
        if lam:
            raise EnvelopeMorphismError(
                "lambda",
                f"Phi({g.carrier.labels[gam]} (x) m2) has an m1 component; forces lambda = 0",
            )
        if mu != alpha:
            raise EnvelopeMorphismError(
                "mu", f"Phi({g.carrier.labels[gam]} (x) m2) != alpha (x) m2; commuting with 1 (x) e12 forces mu = alpha"
            )
        psi_cols[gam] = alpha
    C = g.carrier
    psi = _matrix_from_images([psi_cols[j] for j in range(C.dim)], T.dim, fld)
    try:
        _check_graded_homomorphism(psi, g, h)
    except ValueError as exc:
        raise EnvelopeMorphismError("not-homomorphism", f"recovered psi is invalid: {exc}") from None
    F = transport_morphism(psi, g, h)
    if F.matrix != M:
        raise EnvelopeMorphismError("not-induced", "F(psi) differs from Phi")
    return psi


def octonion_isomorphism(field: FieldSpec, v2=1) -> list:
    """Explicit basis map from M2(F) + B(1,2)_1^2 to the split octonions with parameter v^2.

    x (x) Cay goes to <v e22, -v e12> and y (x) Cay to <-v e21, v e11>,
    the second copy rescaled by -1/v^2 so that <x, y> = 1 matches.
    """
    from .catalog import split_octonions

    fld = field
    v2 = fld(v2)
    c = fld(-1) / v2
    O = split_octonions(fld, v2)
    src_labels = ["e11[1]", "e12[1]", "e21[1]", "e22[1]", "(x,0)", "(y,0)", "(0,x)", "(0,y)"]
    images = {
        "e11[1]": {"e11": 1},
        "e12[1]": {"e12": 1},
        "e21[1]": {"e21": 1},
        "e22[1]": {"e22": 1},
        "(x,0)": {"ve22": 1},
        "(0,x)": {"ve12": -1},
        "(y,0)": {"ve21": -c},
        "(0,y)": {"ve11": c},
    }
    cols = [{O.index(k): fld(v) for k, v in images[lab].items()} for lab in src_labels]
    return _matrix_from_images(cols, O.dim, fld)


def example_morphisms() -> list:
    """(name, psi matrix, source, target) for a handful of graded homomorphisms between small Gamma-algebras."""
    from .catalog import b12, dual_odd, truncated_polynomial
    from .gamma import gamma_of_commutative

    q, f5 = FieldSpec(0), FieldSpec(5)
    gf = gamma_of_commutative(truncated_polynomial(q, 1))
    lam = q(2)
    out = [
        ("F+Fx -> B12, x -> x", [[1, 0], [0, 1], [0, 0]], GammaAlgebra(dual_odd(q)), GammaAlgebra(b12(q))),
        ("Gamma(F): odd part negated", [[1, 0, 0], [0, -1, 0], [0, 0, -1]], gf, gf),
        ("Gamma(F): (lambda, 1/lambda) on the odd part", [[1, 0, 0], [0, lam, 0], [0, 0, 1 / lam]], gf, gf),
    ]
    # Gamma(A) -> Gamma(B) induced by an algebra map sigma: A -> B, acting on each copy of A
    g5 = gamma_of_commutative(truncated_polynomial(f5, 2))
    sigma = [[1, 0], [0, 2]]  # s -> 2s
    out.append(("Gamma(F5[s]/s^2): s -> 2s", _induced(sigma, 2, 2), g5, g5))
    gq = gamma_of_commutative(truncated_polynomial(q, 2))
    quot = [[1, 0]]  # s -> 0
    out.append(("Gamma(Q[s]/s^2) -> Gamma(Q): s -> 0", _induced(quot, 2, 1), gq, gf))
    return out


def _induced(sigma, dim_a, dim_b) -> list:
    """Block-diagonal matrix of sigma on A + A^2 -> B + B^2."""
    M = [[0] * (3 * dim_a) for _ in range(3 * dim_b)]
    for blk in range(3):
        for r in range(dim_b):
            for c in range(dim_a):
                M[blk * dim_b + r][blk * dim_a + c] = sigma[r][c]
    return M
