"""Plücker coordinates a(i,j) = x_i y_j - x_j y_i, straightening to standard monomials, and odd reduction.

A monomial is a tuple of index pairs ((i1, j1), ..., (ir, jr)).  It is in
normal form when every pair has i < j and the pairs are sorted; it is
*standard* when additionally j1 <= j2 <= ... <= jr.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations_with_replacement

from . import linalg
from .fields import FieldSpec
from .poly import Polynomial, rank_of_span

QQ = FieldSpec(0)


def ring_variables(n: int) -> tuple:
    return tuple(f"x{k}" for k in range(1, n + 1)) + tuple(f"y{k}" for k in range(1, n + 1))


def _check_indices(mono, n):
    for i, j in mono:
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"index pair ({i},{j}) out of range 1..{n}")


def normalize_monomial(mono) -> tuple:
    """(sign, sorted monomial with i < j); sign 0 when some pair has i == j."""
    sign = 1
    pairs = []
    for i, j in mono:
        if i == j:
            return 0, ()
        if i > j:
            i, j = j, i
            sign = -sign
        pairs.append((i, j))
    return sign, tuple(sorted(pairs))


def first_violation(mono: tuple) -> int | None:
    """Index s such that pairs s, s+1 of a sorted monomial break column monotonicity."""
    for s in range(len(mono) - 1):
        if mono[s][1] > mono[s + 1][1]:
            return s
    return None


def is_standard(mono) -> bool:
    mono = tuple(mono)
    if any(i >= j for i, j in mono) or list(mono) != sorted(mono):
        return False
    return first_violation(mono) is None


@lru_cache(maxsize=None)
def _straighten_sorted(mono: tuple) -> tuple:
    """Integer combination of standard monomials equal to a sorted monomial with i < j pairs."""
    s = first_violation(mono)
    if s is None:
        return ((mono, 1),)
    (p, sq), (q, r) = mono[s], mono[s + 1]
    # here p < q < r < sq:  a(p,s) a(q,r) = a(p,r) a(q,s) - a(p,q) a(r,s)
    rest = mono[:s] + mono[s + 2:]
    out: dict = {}
    for coeff, new in ((1, ((p, r), (q, sq))), (-1, ((p, q), (r, sq)))):
        for m, c in _straighten_sorted(tuple(sorted(rest + new))):
            linalg.axpy(out, coeff * c, {m: 1})
    return tuple(sorted(out.items()))


def straighten_int(mono) -> dict:
    """Integer coefficients of the standard expansion; valid in every characteristic."""
    sign, norm = normalize_monomial(mono)
    if sign == 0:
        return {}
    return {m: sign * c for m, c in _straighten_sorted(norm)}


def format_monomial(mono) -> str:
    return "".join(f"a({i},{j})" for i, j in mono)


def _format_terms(items, fld, render) -> str:
    parts = []
    for key, c in items:
        body = render(key)
        cs = fld.format_scalar(c)
        neg = cs.startswith("-")
        mag = cs[1:] if neg else cs
        if body == "":
            text = mag
        elif mag == "1":
            text = body
        else:
            text = f"{mag}*{body}"
        parts.append(("-" if neg else "+", text))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {s} {t}" for s, t in parts[1:])


_MONO_RE = re.compile(r"a\((\d+),(\d+)\)")


def parse_monomial(text: str) -> tuple:
    """'a(1,4)a(2,3)' -> ((1, 4), (2, 3)); '1' or '' is the empty monomial."""
    s = text.replace(" ", "").replace("*", "")
    if s in ("", "1"):
        return ()
    pos = 0
    pairs = []
    for m in _MONO_RE.finditer(s):
        if m.start() != pos:
            break
        pairs.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
    if pos != len(s):
        raise ValueError(f"cannot parse monomial {text!r} at offset {pos}; expected a(i,j)a(k,l)...")
    return tuple(pairs)


class SElement:
    """An element of the Plücker coordinate ring S_n in the standard-monomial basis."""

    def __init__(self, n: int, field: FieldSpec = QQ, terms=None):
        self.n = n
        self.field = field
        self.terms: dict = {}
        for m, c in (terms or {}).items():
            c = field(c)
            if c:
                linalg.axpy(self.terms, c, {tuple(m): 1})

    @classmethod
    def monomial(cls, n, mono, field: FieldSpec = QQ) -> "SElement":
        _check_indices(mono, n)
        return cls(n, field, straighten_int(mono))

    def _same(self, other):
        if not isinstance(other, SElement) or other.n != self.n or other.field != self.field:
            raise ValueError("SElements over different rings")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        linalg.axpy(out, 1, other.terms)
        return SElement(self.n, self.field, out)

    def __sub__(self, other):
        self._same(other)
        out = dict(self.terms)
        linalg.axpy(out, -1, other.terms)
        return SElement(self.n, self.field, out)

    def __neg__(self):
        return SElement(self.n, self.field, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SElement):
            return SElement(self.n, self.field, linalg.scaled(self.field(other), self.terms))
        self._same(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                for m, c in straighten_int(m1 + m2).items():
                    linalg.axpy(out, c1 * c2 * c, {m: 1})
        return SElement(self.n, self.field, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SElement):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self):
        return _format_terms(self.sorted_terms(), self.field, format_monomial)

    __repr__ = __str__

    def expand(self) -> Polynomial:
        out = Polynomial.constant(ring_variables(self.n), self.field, 0)
        for m, c in self.terms.items():
            out = out + expand(m, self.n, self.field) * c
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "field": str(self.field),
            "terms": [{"pairs": [list(p) for p in m], "coeff": self.field.format_scalar(c)} for m, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data) -> "SElement":
        fld = FieldSpec.parse(data.get("field", "q"))
        out = cls(data["n"], fld)
        for t in data["terms"]:
            out = out + cls(data["n"], fld, straighten_int(tuple(tuple(p) for p in t["pairs"]))) * fld(t["coeff"])
        return out


def straighten(mono, n: int | None = None, field: FieldSpec = QQ) -> SElement:
    """Expand an arbitrary a-monomial (pairs in any order, either orientation) in the standard basis."""
    if isinstance(mono, str):
        mono = parse_monomial(mono)
    mono = tuple(tuple(p) for p in mono)
    if n is None:
        n = max((max(p) for p in mono), default=2)
    return SElement.monomial(n, mono, field)


class OddElement:
    """An element of S_n V written in the direct sum of B_{n,j} v_j: keys are (monomial, j)."""

    def __init__(self, n: int, field: FieldSpec = QQ, terms=None):
        self.n = n
        self.field = field
        self.terms: dict = {}
        for (m, j), c in (terms or {}).items():
            c = field(c)
            if c:
                linalg.axpy(self.terms, c, {(tuple(m), j): 1})

    def __add__(self, other):
        out = dict(self.terms)
        linalg.axpy(out, 1, other.terms)
        return OddElement(self.n, self.field, out)

    def __sub__(self, other):
        out = dict(self.terms)
        linalg.axpy(out, -1, other.terms)
        return OddElement(self.n, self.field, out)

    def __mul__(self, c):
        return OddElement(self.n, self.field, linalg.scaled(self.field(c), self.terms))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, OddElement):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]), reverse=True)

    def __str__(self):
        def render(key):
            m, j = key
            return f"{format_monomial(m)}v{j}"

        return _format_terms(self.sorted_terms(), self.field, render)

    __repr__ = __str__

    def embed(self) -> tuple:
        """Image in A_n^2 under v_k -> (x_k, y_k)."""
        vars_ = ring_variables(self.n)
        zero = Polynomial.constant(vars_, self.field, 0)
        px, py = zero, zero
        for (m, j), c in self.terms.items():
            e = expand(m, self.n, self.field) * c
            px = px + e * Polynomial.var(vars_, self.field, f"x{j}")
            py = py + e * Polynomial.var(vars_, self.field, f"y{j}")
        return px, py

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "field": str(self.field),
            "terms": [
                {"pairs": [list(p) for p in m], "v": j, "coeff": self.field.format_scalar(c)}
                for (m, j), c in self.sorted_terms()
            ],
        }


@lru_cache(maxsize=None)
def _minor(n: int, i: int, j: int, field: FieldSpec) -> Polynomial:
    vars_ = ring_variables(n)
    x = lambda k: Polynomial.var(vars_, field, f"x{k}")  # noqa: E731
    y = lambda k: Polynomial.var(vars_, field, f"y{k}")  # noqa: E731
    return x(i) * y(j) - x(j) * y(i)


def expand(mono, n: int, field: FieldSpec = QQ) -> Polynomial:
    """Product of the 2x2 minors a(i,j) = x_i y_j - x_j y_i in F[x1..xn, y1..yn]."""
    if isinstance(mono, str):
        mono = parse_monomial(mono)
    _check_indices(mono, n)
    out = Polynomial.constant(ring_variables(n), field, 1)
    for i, j in mono:
        out = out * _minor(n, i, j, field)
    return out


def all_pairs(n: int) -> list:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def all_monomials(n: int, r: int, min_col: int = 1) -> list:
    """Every degree-r multiset of pairs (i < j) with j >= min_col, sorted."""
    pairs = [p for p in all_pairs(n) if p[1] >= min_col]
    return list(combinations_with_replacement(pairs, r))


def enumerate_basis(n: int, r: int) -> list:
    """Degree-r standard monomials in lexicographic order."""
    return enumerate_basis_filtered(n, 1, r)


def enumerate_basis_filtered(n: int, m: int, r: int) -> list:
    """Degree-r standard monomials whose column indices are all >= m (the set B_{n,m})."""
    if n < 2 and r > 0:
        return []
    pairs = [p for p in all_pairs(n) if p[1] >= m]
    out = []

    def grow(prefix, start):
        if len(prefix) == r:
            out.append(tuple(prefix))
            return
        for k in range(start, len(pairs)):
            p = pairs[k]
            if prefix and p[1] < prefix[-1][1]:
                continue
            prefix.append(p)
            grow(prefix, k)
            prefix.pop()

    grow([], 0)
    return out


def substitution_rank(n: int, m: int, r: int, field: FieldSpec = QQ) -> int:
    """Rank of the degree-r part of S_{n,m} after x_k -> t*y_k (k < m), which kills I_m.

    The images live in F[x_m..x_n, t, y_1..y_n].
    """
    tgt = tuple(f"x{k}" for k in range(m, n + 1)) + ("t",) + tuple(f"y{k}" for k in range(1, n + 1))
    images = {}
    for k in range(1, n + 1):
        if k < m:
            images[f"x{k}"] = Polynomial.var(tgt, field, "t") * Polynomial.var(tgt, field, f"y{k}")
        else:
            images[f"x{k}"] = Polynomial.var(tgt, field, f"x{k}")
        images[f"y{k}"] = Polynomial.var(tgt, field, f"y{k}")
    return rank_of_span(expand(mono, n, field).substitute(images, tgt) for mono in all_monomials(n, r, m))


def split_indices(mono, m: int) -> tuple:
    """(l, p): the number of column indices below m and of row indices below m."""
    l = sum(1 for _, j in mono if j < m)
    p = sum(1 for i, _ in mono if i < m)
    return l, p


def enumerate_Im_basis(n: int, m: int, r: int) -> list:
    """Standard monomials of degree r with r - p >= l >= 1: a basis of I_m intersected with S_{n,m}."""
    out = []
    for mono in enumerate_basis(n, r):
        l, p = split_indices(mono, m)
        if r - p >= l >= 1:
            out.append(mono)
    return out


def s_nm_rank(n: int, m: int, r: int, field: FieldSpec = QQ) -> int:
    """dim of the degree-r part of S_{n,m} = F[a(i,j) | j >= m], by rank of expansions."""
    return rank_of_span(expand(mono, n, field) for mono in all_monomials(n, r, m))


def _in_filtered(mono, j) -> bool:
    return all(col >= j for _, col in mono)


def reduce_odd(u, j: int, n: int | None = None) -> OddElement:
    """u * v_j written in the sum of B_{n,i} v_i, via a(a,b) v_c = a(a,c) v_b - a(b,c) v_a."""
    if not isinstance(u, SElement):
        u = straighten(u, n)
    n = u.n
    if not 1 <= j <= n:
        raise IndexError(f"generator index {j} out of range 1..{n}")
    out: dict = {}
    for mono, c in u.terms.items():
        for key, d in _reduce_odd_int(mono, j).items():
            linalg.axpy(out, c * d, {key: 1})
    return OddElement(n, u.field, out)


@lru_cache(maxsize=None)
def _reduce_odd_cached(mono: tuple, j: int) -> tuple:
    if _in_filtered(mono, j):
        return (((mono, j), 1),)
    # standard monomials have weakly increasing columns, so the first pair has the smallest
    (a, b), rest = mono[0], mono[1:]
    out: dict = {}
    for coeff, extra, k in ((1, (a, j), b), (-1, (b, j), a)):
        for m2, c2 in straighten_int(rest + (extra,)).items():
            for key, d in _reduce_odd_cached(m2, k):
                linalg.axpy(out, coeff * c2 * d, {key: 1})
    return tuple(sorted(out.items()))


def _reduce_odd_int(mono: tuple, j: int) -> dict:
    return dict(_reduce_odd_cached(tuple(mono), j))


def odd_image(mono, k: int, n: int, field: FieldSpec = QQ) -> tuple:
    """Image of (monomial) * v_k in A_n^2."""
    vars_ = ring_variables(n)
    e = expand(mono, n, field)
    return e * Polynomial.var(vars_, field, f"x{k}"), e * Polynomial.var(vars_, field, f"y{k}")


def odd_basis(n: int, r: int) -> list:
    """Keys (monomial, j) of the odd basis in a-degree r, ordered by j then monomial."""
    return [(mono, j) for j in range(1, n + 1) for mono in enumerate_basis_filtered(n, j, r)]


def odd_dimension(n: int, weight: int) -> int:
    if weight % 2 == 0 or weight < 0:
        raise ValueError("odd components have odd weight")
    return len(odd_basis(n, (weight - 1) // 2))


def odd_rank_oracle(n: int, weight: int, field: FieldSpec = QQ) -> int:
    """Rank in A_n^2 of every a-monomial times every v_k of the given weight."""
    if weight % 2 == 0 or weight < 0:
        raise ValueError("odd components have odd weight")
    r = (weight - 1) // 2
    return rank_of_span(odd_image(mono, k, n, field) for mono in all_monomials(n, r) for k in range(1, n + 1))


__all__ = [
    "OddElement",
    "SElement",
    "all_monomials",
    "all_pairs",
    "enumerate_Im_basis",
    "enumerate_basis",
    "enumerate_basis_filtered",
    "expand",
    "format_monomial",
    "is_standard",
    "substitution_rank",
    "normalize_monomial",
    "odd_basis",
    "odd_dimension",
    "odd_image",
    "odd_rank_oracle",
    "parse_monomial",
    "reduce_odd",
    "s_nm_rank",
    "split_indices",
    "straighten",
    "straighten_int",
]
