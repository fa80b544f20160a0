"""Normal forms in free Gamma-algebras on even generators t1..tm and odd generators v1..vn.

An element is stored in three parts:

* ``nc``:  a noncommutative polynomial in t1..tm (free associative words);
* ``ev``:  {(t-exponents, standard monomial of degree >= 1): coeff}, the part
  F[t] (x) S_n' where S_n' is spanned by nonconstant standard monomials;
* ``od``:  {(t-exponents, monomial, j): coeff} with the monomial in B_{n,j}.

Words multiply the other two parts through their abelianization.  Weights:
t and a(i,j) weigh 2, v weighs 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb

from . import linalg
from .algebra import AlgebraElement, StructureAlgebra
from .expr import fold, parse
from .fields import FieldSpec
from .gamma import GammaAlgebra, as_gamma
from .grassmann import (
    _reduce_odd_int,
    enumerate_basis,
    enumerate_basis_filtered,
    expand,
    format_monomial,
    odd_basis,
    ring_variables,
    straighten_int,
)
from .poly import NcPolynomial, Polynomial, abelianize

QQ = FieldSpec(0)


class SignatureError(ValueError):
    pass


def _add_exps(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _tmono_text(texps) -> str:
    return "*".join(f"t{k + 1}" if e == 1 else f"t{k + 1}^{e}" for k, e in enumerate(texps) if e)


class FreeGammaElement:
    def __init__(self, m: int, n: int, field: FieldSpec = QQ, nc=None, ev=None, od=None):
        self.m, self.n, self.field = m, n, field
        self.nc = nc if isinstance(nc, NcPolynomial) else NcPolynomial(field, nc or {})
        self.ev: dict = {}
        self.od: dict = {}
        for part, src in ((self.ev, ev), (self.od, od)):
            for k, c in (src or {}).items():
                linalg.axpy(part, field(c), {k: 1})

    # construction
    @classmethod
    def zero(cls, m, n, field=QQ):
        return cls(m, n, field)

    @classmethod
    def scalar(cls, m, n, field, c):
        return cls(m, n, field, nc={(): c})

    @classmethod
    def generator(cls, m, n, field, name: str):
        if len(name) >= 2 and name[0] in "tv" and name[1:].isdigit():
            k = int(name[1:])
            if name[0] == "t" and 1 <= k <= m:
                return cls(m, n, field, nc={(name,): 1})
            if name[0] == "v" and 1 <= k <= n:
                return cls(m, n, field, od={((0,) * m, (), k): 1})
        raise KeyError(f"unknown generator {name!r} (have t1..t{m}, v1..v{n})")

    @property
    def tvars(self):
        return tuple(f"t{k}" for k in range(1, self.m + 1))

    def _same(self, other):
        if not isinstance(other, FreeGammaElement):
            raise TypeError("expected a FreeGammaElement")
        if (self.m, self.n, self.field) != (other.m, other.n, other.field):
            raise SignatureError(
                f"signature mismatch: (m={self.m}, n={self.n}, {self.field}) vs (m={other.m}, n={other.n}, {other.field})"
            )

    # linear structure
    def __add__(self, other):
        self._same(other)
        ev = dict(self.ev)
        linalg.axpy(ev, 1, other.ev)
        od = dict(self.od)
        linalg.axpy(od, 1, other.od)
        return FreeGammaElement(self.m, self.n, self.field, self.nc + other.nc, ev, od)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        return FreeGammaElement(
            self.m, self.n, self.field, self.nc * c, linalg.scaled(c, self.ev), linalg.scaled(c, self.od)
        )

    def __mul__(self, other):
        if isinstance(other, FreeGammaElement):
            return fg_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, FreeGammaElement):
            return NotImplemented
        return (
            (self.m, self.n, self.field) == (other.m, other.n, other.field)
            and self.nc == other.nc
            and self.ev == other.ev
            and self.od == other.od
        )

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.ev.items()), frozenset(self.od.items()), self.nc))

    def __bool__(self):
        return bool(self.nc) or bool(self.ev) or bool(self.od)

    # parts
    def even_part(self):
        return FreeGammaElement(self.m, self.n, self.field, self.nc, self.ev)

    def odd_part(self):
        return FreeGammaElement(self.m, self.n, self.field, od=self.od)

    def keys(self) -> dict:
        """Flat {basis key: coeff} with keys ('nc', word), ('ev', t, mono), ('od', t, mono, j)."""
        out = {("nc", w): c for w, c in self.nc.terms.items()}
        out.update({("ev",) + k: c for k, c in self.ev.items()})
        out.update({("od",) + k: c for k, c in self.od.items()})
        return out

    @classmethod
    def from_keys(cls, m, n, field, keys: dict):
        nc, ev, od = {}, {}, {}
        for k, c in keys.items():
            {"nc": nc, "ev": ev, "od": od}[k[0]][k[1] if k[0] == "nc" else k[1:]] = c
        return cls(m, n, field, nc, ev, od)

    def __str__(self):
        items = sorted(self.keys().items(), key=lambda kv: _key_sort(kv[0]))
        if not items:
            return "0"
        parts = []
        for key, c in items:
            body = key_label(key)
            cs = self.field.format_scalar(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            if body == "1":
                text = mag
            else:
                text = body if mag == "1" else f"{mag}*{body}"
            parts.append(("-" if neg else "+", text))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {t}" for s, t in parts[1:])

    __repr__ = __str__

    def to_json(self) -> dict:
        fmt = self.field.format_scalar
        return {
            "m": self.m,
            "n": self.n,
            "field": str(self.field),
            "nc": [{"word": list(w), "coeff": fmt(c)} for w, c in sorted(self.nc.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))],
            "even": [
                {"t": list(t), "pairs": [list(p) for p in mono], "coeff": fmt(c)}
                for (t, mono), c in sorted(self.ev.items())
            ],
            "odd": [
                {"t": list(t), "pairs": [list(p) for p in mono], "v": j, "coeff": fmt(c)}
                for (t, mono, j), c in sorted(self.od.items())
            ],
        }

    @classmethod
    def from_json(cls, data) -> "FreeGammaElement":
        if isinstance(data, str):
            data = json.loads(data)
        fld = FieldSpec.parse(data["field"])
        tup = lambda ps: tuple(tuple(p) for p in ps)  # noqa: E731
        return cls(
            data["m"],
            data["n"],
            fld,
            {tuple(t["word"]): fld(t["coeff"]) for t in data["nc"]},
            {(tuple(t["t"]), tup(t["pairs"])): fld(t["coeff"]) for t in data["even"]},
            {(tuple(t["t"]), tup(t["pairs"]), t["v"]): fld(t["coeff"]) for t in data["odd"]},
        )


def key_weight(key) -> int:
    if key[0] == "nc":
        return 2 * len(key[1])
    w = 2 * sum(key[1]) + 2 * len(key[2])
    return w + 1 if key[0] == "od" else w


def key_label(key) -> str:
    if key[0] == "nc":
        return "*".join(key[1]) or "1"
    body = format_monomial(key[2]) + (f"v{key[3]}" if key[0] == "od" else "")
    prefix = _tmono_text(key[1])
    return f"{prefix}*{body}" if prefix else body


def _key_sort(key):
    return (key_weight(key), {"nc": 0, "ev": 1, "od": 2}[key[0]], key[1:])


def fg_multiply(a: FreeGammaElement, b: FreeGammaElement) -> FreeGammaElement:
    a._same(b)
    m, n, fld = a.m, a.n, a.field
    nc = a.nc * b.nc
    ev: dict = {}
    od: dict = {}
    tv = a.tvars
    abar = abelianize(a.nc, tv).terms if a.nc else {}
    bbar = abelianize(b.nc, tv).terms if b.nc else {}
    # words act on the ideal through their abelianization, from either side
    for bar, other in ((abar, b), (bbar, a)):
        for se, d in bar.items():
            for (te, mono), c in other.ev.items():
                linalg.axpy(ev, d * c, {(_add_exps(se, te), mono): 1})
            for (te, mono, j), c in other.od.items():
                linalg.axpy(od, d * c, {(_add_exps(se, te), mono, j): 1})
    for (t1, m1), c1 in a.ev.items():
        for (t2, m2), c2 in b.ev.items():
            t = _add_exps(t1, t2)
            for mono, c in straighten_int(m1 + m2).items():
                linalg.axpy(ev, c1 * c2 * c, {(t, mono): 1})
    for x, y in ((a, b), (b, a)):
        for (t1, m1), c1 in x.ev.items():
            for (t2, m2, j), c2 in y.od.items():
                t = _add_exps(t1, t2)
                for mono, c in straighten_int(m1 + m2).items():
                    for (m3, k), d in _reduce_odd_int(mono, j).items():
                        linalg.axpy(od, c1 * c2 * c * d, {(t, m3, k): 1})
    for (t1, m1, i), c1 in a.od.items():
        for (t2, m2, j), c2 in b.od.items():
            t = _add_exps(t1, t2)
            for mono, c in straighten_int(m1 + m2 + ((i, j),)).items():
                linalg.axpy(ev, c1 * c2 * c, {(t, mono): 1})
    return FreeGammaElement(m, n, fld, nc, ev, od)


def fg_normal_form(expr, m: int, n: int, field: FieldSpec = QQ) -> FreeGammaElement:
    """Normal form of an expression (text or parsed tree) in t1..tm, v1..vn."""
    tree = parse(expr) if isinstance(expr, str) else expr
    return fold(
        tree,
        gen=lambda name: FreeGammaElement.generator(m, n, field, name),
        num=lambda text: FreeGammaElement.scalar(m, n, field, field(text)),
        add=lambda x, y: x + y,
        neg=lambda x: -x,
        mul=fg_multiply,
    )


def _image_vec(target: StructureAlgebra, img):
    if isinstance(img, AlgebraElement):
        return dict(img.vec)
    if isinstance(img, str):
        return dict(target.element(img).vec)
    if isinstance(img, dict):
        return {k: target.field(c) for k, c in img.items() if target.field(c)}
    return dict(target.element(list(img)).vec)


def fg_evaluate(a: FreeGammaElement, target, images: dict) -> AlgebraElement:
    """Value of ``a`` under the homomorphism extending t_k -> images['tk'], v_k -> images['vk']."""
    g = as_gamma(target)
    C = g.carrier
    fld = C.field
    if fld != a.field:
        raise ValueError(f"field mismatch: element over {a.field}, target over {fld}")
    vecs = {}
    for name, img in images.items():
        vec = _image_vec(C, img)
        want = 1 if name.startswith("v") else 0
        bad = [C.labels[k] for k in vec if C.parity[k] != want]
        if bad:
            kind = "odd" if want else "even"
            raise ValueError(f"parity violation: {name} must map to an {kind} element, image has {', '.join(bad)}")
        vecs[name] = vec

    def img(name):
        if name not in vecs:
            raise KeyError(f"no image given for generator {name}")
        return vecs[name]

    unit = dict(g.unit_vec)
    mul = C.mul_vec

    def tpower(texps):
        out = dict(unit)
        for k, e in enumerate(texps):
            for _ in range(e):
                out = mul(out, img(f"t{k + 1}"))
        return out

    def amono(mono):
        out = dict(unit)
        for i, j in mono:
            out = mul(out, mul(img(f"v{i}"), img(f"v{j}")))
        return out

    total: dict = {}
    for w, c in a.nc.terms.items():
        val = dict(unit)
        for letter in w:
            val = mul(val, img(letter))
        linalg.axpy(total, c, val)
    for (t, mono), c in a.ev.items():
        linalg.axpy(total, c, mul(tpower(t), amono(mono)))
    for (t, mono, j), c in a.od.items():
        linalg.axpy(total, c, mul(mul(tpower(t), amono(mono)), img(f"v{j}")))
    return AlgebraElement(C, total)


def evaluate_tree(expr, target, images: dict) -> AlgebraElement:
    """Evaluate an expression directly in the target algebra (no normal forms)."""
    g = as_gamma(target)
    C = g.carrier
    tree = parse(expr) if isinstance(expr, str) else expr
    vecs = {name: _image_vec(C, v) for name, v in images.items()}
    unit = dict(g.unit_vec)
    res = fold(
        tree,
        gen=lambda name: vecs[name],
        num=lambda text: linalg.scaled(C.field(text), unit),
        add=lambda x, y: _vsum(x, y),
        neg=lambda x: linalg.scaled(C.field(-1), x),
        mul=C.mul_vec,
    )
    return AlgebraElement(C, res)


def _vsum(x, y):
    out = dict(x)
    linalg.axpy(out, 1, y)
    return out


class GammaAnElement:
    """Element (a; (p, q)) of Gamma(A_n) = A_n + A_n^2, A_n = F[x1..xn, y1..yn]."""

    __slots__ = ("a", "p", "q")

    def __init__(self, a: Polynomial, p: Polynomial, q: Polynomial):
        self.a, self.p, self.q = a, p, q

    @classmethod
    def scalar(cls, n, field, c):
        vs = ring_variables(n)
        z = Polynomial.constant(vs, field, 0)
        return cls(Polynomial.constant(vs, field, c), z, z)

    @classmethod
    def generator(cls, n, field, k):
        vs = ring_variables(n)
        z = Polynomial.constant(vs, field, 0)
        return cls(z, Polynomial.var(vs, field, f"x{k}"), Polynomial.var(vs, field, f"y{k}"))

    def __add__(self, o):
        return GammaAnElement(self.a + o.a, self.p + o.p, self.q + o.q)

    def __neg__(self):
        return GammaAnElement(-self.a, -self.p, -self.q)

    def __mul__(self, o):
        # a.(b, c) = (ab, ac) on either side, (b, c).(b', c') = bc' - cb'
        return GammaAnElement(
            self.a * o.a + self.p * o.q - self.q * o.p,
            self.a * o.p + o.a * self.p,
            self.a * o.q + o.a * self.q,
        )

    def __eq__(self, o):
        return (self.a, self.p, self.q) == (o.a, o.p, o.q)

    def as_tuple(self):
        return self.a, (self.p, self.q)


def evaluate_in_gamma_an(expr, n: int, field: FieldSpec = QQ) -> GammaAnElement:
    """Direct evaluation of an expression in v1..vn inside Gamma(A_n), v_k -> (x_k, y_k)."""
    tree = parse(expr) if isinstance(expr, str) else expr

    def gen(name):
        if name[0] != "v" or not name[1:].isdigit() or not 1 <= int(name[1:]) <= n:
            raise KeyError(f"unknown generator {name!r} for Gamma(A_{n})")
        return GammaAnElement.generator(n, field, int(name[1:]))

    return fold(
        tree,
        gen=gen,
        num=lambda text: GammaAnElement.scalar(n, field, field(text)),
        add=lambda x, y: x + y,
        neg=lambda x: -x,
        mul=lambda x, y: x * y,
    )


def embedding_oracle(a: FreeGammaElement) -> tuple:
    """Image of an element without even generators in Gamma(A_n): (scalar part, (first, second))."""
    if a.m != 0:
        raise ValueError("the polynomial embedding covers only the case without even generators")
    n, fld = a.n, a.field
    vs = ring_variables(n)
    s = Polynomial.constant(vs, fld, a.nc.terms.get((), 0))
    for (_, mono), c in a.ev.items():
        s = s + expand(mono, n, fld) * c
    z = Polynomial.constant(vs, fld, 0)
    p, q = z, z
    for (_, mono, j), c in a.od.items():
        e = expand(mono, n, fld) * c
        p = p + e * Polynomial.var(vs, fld, f"x{j}")
        q = q + e * Polynomial.var(vs, fld, f"y{j}")
    return s, (p, q)


def tmonomials(m: int, k: int) -> list:
    """Exponent vectors of degree k in m commuting variables, lexicographic."""
    out = []
    for combo in combinations_with_replacement(range(m), k):
        e = [0] * m
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def fg_basis(m: int, n: int, weight: int) -> list:
    """Normal-form basis keys of the given weight component."""
    if weight < 0:
        return []
    out = []
    tv = [f"t{k}" for k in range(1, m + 1)]
    if weight % 2 == 0:
        out += [("nc", w) for w in product(tv, repeat=weight // 2)]
        for k in range(weight // 2):
            r = weight // 2 - k
            for t in tmonomials(m, k):
                out += [("ev", t, mono) for mono in enumerate_basis(n, r)]
    else:
        for k in range((weight - 1) // 2 + 1):
            r = (weight - 1) // 2 - k
            for t in tmonomials(m, k):
                out += [("od", t, mono, j) for mono, j in odd_basis(n, r)]
    return out


def _tcount(m: int, k: int) -> int:
    """Number of commutative monomials of degree k in m variables."""
    if k == 0:
        return 1
    return comb(m + k - 1, k) if m else 0


def fg_dimensions(m: int, n: int, weight: int) -> int:
    """dim of a weight component, counted from the normal form (no enumeration of keys)."""
    if weight < 0:
        return 0
    half = weight // 2
    if weight % 2 == 0:
        words = m**half
        ideal = sum(_tcount(m, k) * len(enumerate_basis(n, half - k)) for k in range(half))
        return words + ideal
    return sum(
        _tcount(m, k) * sum(len(enumerate_basis_filtered(n, j, half - k)) for j in range(1, n + 1))
        for k in range(half + 1)
    )


def truncated_free_gamma(m: int, n: int, cap: int, field: FieldSpec = QQ) -> StructureAlgebra:
    """The free Gamma-algebra modulo everything of weight > cap, as a graded structure algebra."""
    keys = [k for w in range(cap + 1) for k in fg_basis(m, n, w)]
    index = {k: i for i, k in enumerate(keys)}
    elems = [FreeGammaElement.from_keys(m, n, field, {k: 1}) for k in keys]
    table = []
    for x, kx in zip(elems, keys):
        row = []
        for y, ky in zip(elems, keys):
            if key_weight(kx) + key_weight(ky) > cap:
                row.append({})
                continue
            row.append({index[k]: c for k, c in fg_multiply(x, y).keys().items()})
        table.append(row)
    labels = [key_label(k) for k in keys]
    parity = [1 if k[0] == "od" else 0 for k in keys]
    unit = [1 if k == ("nc", ()) else 0 for k in keys]
    return StructureAlgebra(field, labels, table, parity=parity, unit=unit, name=f"FreeGamma[{m};{n}]<={cap}")


@dataclass
class FreeMatrixEnvelope:
    algebra: StructureAlgebra
    gamma: GammaAlgebra
    graded_dims: dict

    def to_json(self) -> dict:
        return {
            "dim": self.algebra.dim,
            "graded_dims": {str(w): d for w, d in sorted(self.graded_dims.items())},
            "basis": list(self.algebra.labels),
        }


def free_matrix_envelope(m: int, n: int, weight_cap: int, field: FieldSpec = QQ) -> FreeMatrixEnvelope:
    """Gamma_0 (x) M2 + Gamma_1 (x) Cay for the truncated free Gamma-algebra, with graded dimensions."""
    from .coordinatization import envelope_b42

    g = GammaAlgebra(truncated_free_gamma(m, n, weight_cap, field))
    env = envelope_b42(g)
    dims = {w: (4 if w % 2 == 0 else 2) * fg_dimensions(m, n, w) for w in range(weight_cap + 1)}
    return FreeMatrixEnvelope(env, g, dims)
