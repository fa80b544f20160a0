"""Sparse exact polynomials: commutative (exponent vectors) and noncommutative (words)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from . import linalg
from .fields import FieldMismatchError, FieldSpec


class Polynomial:
    """A commutative polynomial over ``field`` in the declared ``variables``.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    coefficients.  Treat instances as immutable.
    """

    __slots__ = ("variables", "field", "terms", "_hash")

    def __init__(self, variables, field: FieldSpec, terms=None):
        self.variables = tuple(variables)
        self.field = field
        clean = {}
        nv = len(self.variables)
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nv:
                raise ValueError(f"exponent vector {exps} has wrong length for {nv} variables")
            c = field(c)
            if c:
                clean[exps] = clean.get(exps, field(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables, field, terms):
        p = cls.__new__(cls)
        p.variables = variables
        p.field = field
        p.terms = terms
        p._hash = None
        return p

    # constructors
    @classmethod
    def constant(cls, variables, field, c):
        variables = tuple(variables)
        return cls(variables, field, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables, field, name, power=1):
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = power
        return cls(variables, field, {tuple(e): 1})

    def _check(self, other: "Polynomial"):
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if other.variables != self.variables:
            raise ValueError("polynomials over different variable lists")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.variables, self.field, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        linalg.axpy(out, 1, other.terms)
        return Polynomial._raw(self.variables, self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.variables, self.field, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        linalg.axpy(out, -1, other.terms)
        return Polynomial._raw(self.variables, self.field, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.field(other)
            return Polynomial._raw(self.variables, self.field, linalg.scaled(c, self.terms))
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.variables, self.field, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.variables, self.field, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.field, self.variables, self.terms) == (other.field, other.variables, other.terms)
        if isinstance(other, (int,)) or self.field.contains(other):
            return self.terms == Polynomial.constant(self.variables, self.field, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def substitute(self, images: dict, target_vars, target_field=None) -> "Polynomial":
        """Apply the ring map sending each variable name to a polynomial over ``target_vars``.

        Variables missing from ``images`` map to the same-named target variable.
        """
        target_vars = tuple(target_vars)
        fld = target_field or self.field
        imgs = []
        for name in self.variables:
            if name in images:
                imgs.append(images[name])
            else:
                imgs.append(Polynomial.var(target_vars, fld, name))
        out = Polynomial(target_vars, fld)
        powers: dict = {}
        for exps, c in self.terms.items():
            term = Polynomial.constant(target_vars, fld, c)
            for i, e in enumerate(exps):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = imgs[i] ** e
                    term = term * powers[key]
            out = out + term
        return out

    def leading_term(self, order: "MonomialOrder"):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order.key_for(self.variables)
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def sorted_terms(self, order: "MonomialOrder | None" = None):
        order = order or MonomialOrder.deglex(self.variables)
        key = order.key_for(self.variables)
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=True)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e
            )
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        terms = [
            {"exps": list(e), "coeff": str(c)}
            for e, c in sorted(self.terms.items())
        ]
        return {"field": str(self.field), "variables": list(self.variables), "terms": terms}

    @classmethod
    def from_json(cls, data, field: FieldSpec | None = None) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        fld = FieldSpec.parse(data["field"]) if "field" in data else field
        if fld is None:
            raise ValueError("polynomial JSON carries no field and none was given")
        return cls(data["variables"], fld, {tuple(t["exps"]): fld(t["coeff"]) for t in data["terms"]})


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted degree, then lexicographic by ``ranking`` (highest variable first).

    ``weights`` defaults to 1 for every variable, which gives plain deg-lex.
    A weight of 0 lets a variable ride along without raising the degree.
    """

    ranking: tuple
    weights: tuple = dc_field(default=())

    @classmethod
    def deglex(cls, ranking, weights=None) -> "MonomialOrder":
        ranking = tuple(ranking)
        if weights is None:
            weights = (1,) * len(ranking)
        elif isinstance(weights, dict):
            weights = tuple(weights.get(v, 1) for v in ranking)
        return cls(ranking, tuple(weights))

    def key_for(self, variables):
        variables = tuple(variables)
        missing = set(variables) - set(self.ranking)
        if missing:
            raise ValueError(f"order does not rank {sorted(missing)}")
        perm = [variables.index(v) if v in variables else None for v in self.ranking]
        w = self.weights or (1,) * len(self.ranking)

        def key(exps):
            ordered = tuple(exps[i] if i is not None else 0 for i in perm)
            return (sum(a * b for a, b in zip(ordered, w)), ordered)

        return key

    def compare(self, variables, e1, e2) -> int:
        k = self.key_for(variables)
        a, b = k(e1), k(e2)
        return (a > b) - (a < b)


def substitution_order(n: int, m: int) -> MonomialOrder:
    """x_n > ... > x_m > y_1 > ... > y_n > t, with t carrying weight 0.

    This is the order on E = F[x_m..x_n; t; y_1..y_n] under which the image
    of a_ij (i < m <= j) has leading term -x_j*y_i.
    """
    ranking = [f"x{k}" for k in range(n, m - 1, -1)] + [f"y{k}" for k in range(1, n + 1)] + ["t"]
    return MonomialOrder.deglex(ranking, {"t": 0})


def x_before_y_order(n: int) -> MonomialOrder:
    """x_n > ... > x_1 > y_1 > ... > y_n, plain deg-lex."""
    ranking = [f"x{k}" for k in range(n, 0, -1)] + [f"y{k}" for k in range(1, n + 1)]
    return MonomialOrder.deglex(ranking)


def leading_term(p: Polynomial, order: MonomialOrder):
    return p.leading_term(order)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


class NcPolynomial:
    """Noncommutative polynomial: words (tuples of generator names) to coefficients."""

    __slots__ = ("field", "terms")

    def __init__(self, field: FieldSpec, terms=None):
        self.field = field
        out: dict = {}
        for w, c in (terms or {}).items():
            c = field(c)
            if c:
                linalg.axpy(out, 1, {tuple(w): c})
        self.terms = out

    @classmethod
    def word(cls, field, *letters, coeff=1):
        return cls(field, {tuple(letters): coeff})

    def _lift(self, other):
        if isinstance(other, NcPolynomial):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        return NcPolynomial(self.field, {(): other})

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        linalg.axpy(out, 1, other.terms)
        return NcPolynomial(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPolynomial(self.field, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                linalg.axpy(out, c1 * c2, {w1 + w2: 1})
        return NcPolynomial(self.field, out)

    def __rmul__(self, other):
        return self._lift(other) * self

    def __eq__(self, other):
        if isinstance(other, NcPolynomial):
            return self.field == other.field and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            mono = "*".join(w)
            cs = str(c)
            parts.append(cs if not mono else mono if cs == "1" else f"-{mono}" if cs == "-1" else f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def abelianize(f: NcPolynomial, target_vars) -> Polynomial:
    """Image of ``f`` under F<U> -> F[U]; letters are matched to ``target_vars`` by name."""
    target_vars = tuple(target_vars)
    index = {v: i for i, v in enumerate(target_vars)}
    out: dict = {}
    for w, c in f.terms.items():
        e = [0] * len(target_vars)
        for letter in w:
            if letter not in index:
                raise KeyError(f"unknown generator {letter!r}")
            e[index[letter]] += 1
        linalg.axpy(out, c, {tuple(e): 1})
    return Polynomial._raw(target_vars, f.field, out)


def rank_of_span(vectors) -> int:
    """Dimension of the span of polynomials (or of tuples of polynomials, componentwise)."""
    rows = []
    fld = None
    for v in vectors:
        parts = v if isinstance(v, (tuple, list)) else (v,)
        row = {}
        for idx, p in enumerate(parts):
            if fld is None:
                fld = p.field
            elif p.field != fld:
                raise FieldMismatchError(f"{fld} vs {p.field}")
            for e, c in p.terms.items():
                row[(idx, e)] = c
        rows.append(row)
    return linalg.rank(rows)
