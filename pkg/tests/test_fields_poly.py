from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from m2gamma.fields import GF, FieldMismatchError, FieldSpec
from m2gamma.linalg import Echelon, inverse, nullspace, rank, solve
from m2gamma.poly import (
    MonomialOrder,
    NcPolynomial,
    Polynomial,
    abelianize,
    leading_term,
    substitution_order,
    x_before_y_order,
    poly_mul,
    rank_of_span,
)

VARS = ("x1", "x2", "y1", "y2")
Q = FieldSpec(0)
F3 = FieldSpec(3)


def var(name, vs=VARS, fld=Q):
    return Polynomial.var(vs, fld, name)


def to_sympy(p: Polynomial):
    syms = sympy.symbols(p.variables)
    expr = 0
    for exps, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, exps):
            term *= s**e
        expr += term
    return sympy.Poly(expr, *syms)


coeffs = st.integers(-4, 4)
exps = st.tuples(*[st.integers(0, 2)] * len(VARS))
polys = st.dictionaries(exps, coeffs, max_size=4).map(lambda d: Polynomial(VARS, Q, d))


# scalars

def test_fieldspec_parse_roundtrip():
    for text in ("q", "fp:2", "fp:3", "fp:101"):
        assert str(FieldSpec.parse(text)) == text
    with pytest.raises(ValueError):
        FieldSpec.parse("fp:4")
    with pytest.raises(ValueError):
        FieldSpec.parse("reals")


def test_gf_residues_are_canonical():
    assert GF(-1, 5).value == 4
    assert GF(Fraction(1, 2), 5) == GF(3, 5)
    assert GF(2, 7) / GF(3, 7) * GF(3, 7) == GF(2, 7)
    with pytest.raises(ZeroDivisionError):
        GF(Fraction(1, 5), 5)
    with pytest.raises(FieldMismatchError):
        GF(1, 3) + GF(1, 5)


@given(st.integers(-50, 50), st.integers(-50, 50), st.sampled_from([2, 3, 5, 7, 11]))
def test_gf_matches_integer_arithmetic(a, b, p):
    assert (GF(a, p) * GF(b, p)).value == (a * b) % p
    assert (GF(a, p) - GF(b, p)).value == (a - b) % p
    if b % p:
        assert GF(a, p) / GF(b, p) * GF(b, p) == GF(a, p)


def test_field_coercion_and_formatting():
    assert Q("3/6") == Fraction(1, 2)
    assert F3.format_scalar(-1) == "2"
    assert Q.format_scalar(Fraction(-2, 4)) == "-1/2"
    with pytest.raises(FieldMismatchError):
        Q(GF(1, 3))


# polynomials

def test_poly_mul_examples():
    a12 = var("x1") * var("y2") - var("x2") * var("y1")
    assert poly_mul(a12, Polynomial.constant(VARS, Q, 1)) == a12
    vs = ("x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4")
    v = lambda n: var(n, vs)  # noqa: E731
    lhs = (v("x1") * v("y2") - v("x2") * v("y1")) * (v("x3") * v("y4") - v("x4") * v("y3"))
    rhs = v("x1") * v("x3") * v("y2") * v("y4") - v("x1") * v("x4") * v("y2") * v("y3")
    rhs = rhs - v("x2") * v("x3") * v("y1") * v("y4") + v("x2") * v("x4") * v("y1") * v("y3")
    assert lhs == rhs


def test_freshmans_dream_in_char_3():
    x, y = var("x1", fld=F3), var("y1", fld=F3)
    assert (x + y) ** 3 == x**3 + y**3


@given(polys, polys)
def test_product_matches_sympy(a, b):
    assert to_sympy(a * b) == to_sympy(a) * to_sympy(b)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a - a).is_zero()


def test_leading_term_examples():
    # x_n > ... > x_m > y_1 > ... > y_n > t with n = 3, m = 2
    vs = ("x2", "x3", "t", "y1", "y2", "y3")
    v = lambda n: Polynomial.var(vs, Q, n)  # noqa: E731
    p = v("t") * v("y1") * v("y3") - v("x3") * v("y1")
    e, c = leading_term(p, substitution_order(3, 2))
    assert c == -1 and e == (0, 1, 0, 1, 0, 0)
    order = MonomialOrder.deglex(["x2", "x1", "y1", "y2"])
    e, c = leading_term(var("x2") * var("y1") + var("x1") * var("y2"), order)
    assert e == (0, 1, 1, 0)
    assert leading_term(var("x1"), order) == ((1, 0, 0, 0), 1)
    with pytest.raises(ValueError):
        leading_term(Polynomial(VARS, Q), order)


@given(polys, polys)
def test_leading_term_is_multiplicative(a, b):
    if a.is_zero() or b.is_zero():
        return
    order = x_before_y_order(2)
    ea, ca = leading_term(a, order)
    eb, cb = leading_term(b, order)
    e, c = leading_term(a * b, order)
    assert e == tuple(x + y for x, y in zip(ea, eb)) and c == ca * cb


def test_polynomial_json_roundtrip():
    p = var("x1") * 3 - var("y2") * Fraction(1, 2)
    assert Polynomial.from_json(p.to_json()) == p


def test_substitute():
    p = var("x1") * var("y2")
    img = p.substitute({"x1": var("y1") * 2}, VARS)
    assert img == var("y1") * var("y2") * 2


# noncommutative

def test_abelianize_examples():
    t1 = NcPolynomial.word(Q, "t1")
    t2 = NcPolynomial.word(Q, "t2")
    tv = ("t1", "t2")
    assert not abelianize(t1 * t2 - t2 * t1, tv)
    assert abelianize(t1 * t2 * t1, tv) == Polynomial(tv, Q, {(2, 1): 1})
    assert abelianize(NcPolynomial(Q, {(): 1}), tv) == Polynomial.constant(tv, Q, 1)
    with pytest.raises(KeyError):
        abelianize(NcPolynomial.word(Q, "t3"), tv)


words = st.lists(st.sampled_from(["t1", "t2"]), max_size=3).map(tuple)
ncpolys = st.dictionaries(words, coeffs, max_size=3).map(lambda d: NcPolynomial(Q, d))


@given(ncpolys, ncpolys, ncpolys)
def test_nc_ring_axioms_and_abelianization(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    tv = ("t1", "t2")
    assert abelianize(f * g, tv) == abelianize(f, tv) * abelianize(g, tv)


def test_nc_is_not_commutative():
    t1, t2 = NcPolynomial.word(Q, "t1"), NcPolynomial.word(Q, "t2")
    assert t1 * t2 != t2 * t1


# linear algebra

def test_rank_of_span_examples():
    x1 = var("x1")
    assert rank_of_span([x1, x1, Polynomial(VARS, Q)]) == 1


@given(st.lists(st.lists(st.integers(-3, 3), min_size=6, max_size=6), min_size=1, max_size=6))
def test_rank_matches_sympy(rows):
    vs = tuple(f"z{i}" for i in range(6))
    polys_ = [sum((Polynomial.var(vs, Q, v) * c for v, c in zip(vs, row)), Polynomial(vs, Q)) for row in rows]
    assert rank_of_span(polys_) == sympy.Matrix(rows).rank()


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_nullspace_solve_inverse(rows):
    ns = nullspace(rows, 4, Q)
    assert len(ns) == 4 - sympy.Matrix(rows).rank()
    for v in ns:
        assert all(sum(Q(a) * b for a, b in zip(r, v)) == 0 for r in rows)
    x = [Q(1), Q(-2), Q(0), Q(3)]
    rhs = [sum(Q(a) * b for a, b in zip(r, x)) for r in rows]
    sol = solve(rows, rhs, 4, Q)
    assert [sum(Q(a) * b for a, b in zip(r, sol)) for r in rows] == rhs
    if len(rows) == 4:
        inv = inverse(rows, Q)
        assert (inv is None) == (sympy.Matrix(rows).det() == 0)


def test_echelon_membership():
    e = Echelon()
    assert e.add({0: Q(1), 1: Q(1)})
    assert e.add({1: Q(1)})
    assert not e.add({0: Q(2)})
    assert e.contains({0: Q(5), 1: Q(-3)})
    assert rank([{0: 1}, {0: 2}]) == 1
