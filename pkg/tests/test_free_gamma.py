import random

import pytest
from hypothesis import given, strategies as st

from m2gamma import catalog
from m2gamma.algebra import check_identity
from m2gamma.coordinatization import envelope_b42
from m2gamma.expr import parse
from m2gamma.fields import FieldSpec
from m2gamma.free_gamma import (
    FreeGammaElement,
    SignatureError,
    free_matrix_envelope,
    embedding_oracle,
    evaluate_in_gamma_an,
    evaluate_tree,
    fg_basis,
    fg_dimensions,
    fg_evaluate,
    fg_multiply,
    fg_normal_form,
    key_weight,
    truncated_free_gamma,
)
from m2gamma.gamma import GammaAlgebra, verify_gamma_conditions
from m2gamma.grassmann import enumerate_basis, odd_dimension
from m2gamma.linalg import Echelon
from oracles import flatten, word_spans

Q = FieldSpec(0)


def nf(text, m=0, n=3, field=Q):
    return fg_normal_form(text, m, n, field)


@st.composite
def trees(draw, n, max_weight):
    """Random product trees in v1..vn (plus scalar combinations) of weight <= max_weight."""
    def build(w):
        if w == 1:
            return ("gen", f"v{draw(st.integers(1, n))}")
        k = draw(st.integers(1, w - 1))
        node = ("mul", build(k), build(w - k))
        if draw(st.booleans()):
            node = ("add", node, ("mul", ("num", str(draw(st.integers(1, 4)))), build(w)))
        return node

    return build(draw(st.integers(1, max_weight)))


def test_words_do_not_commute():
    assert nf("t1*t2 - t2*t1", m=2, n=0)
    assert not nf("(t1*t2 - t2*t1)*v1", m=2, n=1)
    assert not nf("v1*(t1*t2 - t2*t1)", m=2, n=1)


def test_odd_products():
    assert str(nf("v1*v2")) == "a(1,2)"
    assert nf("v2*v1") == -nf("v1*v2")
    assert not nf("v1*v1")
    assert str(nf("(v1*v2)*v3")) == "a(1,3)v2 - a(2,3)v1"
    assert not nf("t1*(v1*v2) - (v1*v2)*t1", m=1)


def test_odd_square_vanishes_in_char_two():
    assert not nf("v1*v1", field=FieldSpec(2))


def test_unknown_generator():
    with pytest.raises(KeyError):
        nf("v4")
    with pytest.raises(KeyError):
        nf("t1", m=0)


def test_signature_mismatch():
    with pytest.raises(SignatureError):
        fg_multiply(nf("v1", n=2), nf("v1", n=3))


def test_embedding_examples():
    s, (p, q) = embedding_oracle(nf("v1", n=2))
    assert not s and str(p) == "x1" and str(q) == "y1"
    s, (p, q) = embedding_oracle(nf("v1*v2", n=2))
    assert s == evaluate_in_gamma_an("v1*v2", 2).a and not p and not q
    with pytest.raises(ValueError):
        embedding_oracle(nf("t1", m=1, n=1))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@given(data=st.data())
def test_normal_form_matches_polynomial_model(n, data):
    tree = data.draw(trees(n, 6))
    assert flatten(embedding_oracle(fg_normal_form(tree, 0, n))) == flatten(evaluate_in_gamma_an(tree, n))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_normal_form_basis_is_faithful(n):
    cap = 5
    spans = word_spans(n, cap)
    for w in range(1, cap + 1):
        keys = fg_basis(0, n, w)
        images = [flatten(embedding_oracle(FreeGammaElement.from_keys(0, n, Q, {k: 1}))) for k in keys]
        basis = Echelon()
        assert all(basis.add(v) for v in images), f"dependent normal forms at weight {w}"
        for z in spans[w]:
            assert not basis.reduce(flatten(z)), f"word image outside the span at weight {w}"
        assert len(spans[w]) == len(keys)


@st.composite
def elements(draw, m, n, field, max_weight=4):
    keys = [k for w in range(max_weight + 1) for k in fg_basis(m, n, w)]
    chosen = draw(st.lists(st.sampled_from(keys), max_size=4))
    coeffs = {k: field(draw(st.integers(-3, 3))) for k in chosen}
    return FreeGammaElement.from_keys(m, n, field, coeffs)


@given(st.data())
def test_gamma_conditions_hold_formally(data):
    m, n = 1, 3
    ev = lambda: data.draw(elements(m, n, Q)).even_part()  # noqa: E731
    od = lambda: data.draw(elements(m, n, Q)).odd_part()  # noqa: E731
    a, b, c = ev(), ev(), ev()
    x, y, z = od(), od(), od()
    assert (a * b) * c == a * (b * c)
    assert (a * b) * x == a * (b * x)
    assert (a * x) * y == a * (x * y) and (x * a) * b == x * (a * b)
    assert a * x == x * a
    assert (x * y) * a == a * (x * y)
    assert not (x * y + y * x)
    assert not ((x * y) * z + (y * z) * x + (z * x) * y)


def test_truncation_is_a_gamma_algebra():
    T = truncated_free_gamma(1, 3, 4)
    report = verify_gamma_conditions(T)
    assert report.ok, report
    assert T.dim == sum(fg_dimensions(1, 3, w) for w in range(5))


def _random_images(target, m, n, rng):
    g = GammaAlgebra(target)
    C = g.carrier
    pick = lambda idx: {k: C.field(rng.randint(-2, 2)) for k in idx}  # noqa: E731
    imgs = {f"v{k}": pick(g.odd_basis) for k in range(1, n + 1)}
    imgs.update({f"t{k}": pick(g.even_basis) for k in range(1, m + 1)})
    return imgs


@pytest.mark.parametrize("name,target", catalog.gamma_examples(), ids=[n for n, _ in catalog.gamma_examples()])
def test_evaluation_is_multiplicative(name, target):
    rng = random.Random(name)
    m, n = 1, 3
    fld = target.field
    keys = [k for w in range(5) for k in fg_basis(m, n, w)]
    for _ in range(40):
        imgs = _random_images(target, m, n, rng)
        a, b = (FreeGammaElement.from_keys(m, n, fld, {k: rng.randint(-2, 2) for k in rng.sample(keys, 3)}) for _ in "ab")
        assert fg_evaluate(a * b, target, imgs) == fg_evaluate(a, target, imgs) * fg_evaluate(b, target, imgs)


def test_evaluation_examples():
    B = catalog.b12(Q)
    assert fg_evaluate(nf("v1*v2", n=2), B, {"v1": "x", "v2": "y"}) == B.one()
    zero = {"v1": {}, "v2": "y", "v3": "x"}
    assert not fg_evaluate(nf("(v1*v2)*v3"), B, zero)
    name, G = catalog.gamma_examples()[4]
    rng = random.Random(7)
    imgs = _random_images(G, 0, 3, rng)
    assert fg_evaluate(fg_normal_form("(v1*v2)*v3", 0, 3, G.field), G, imgs) == evaluate_tree("(v1*v2)*v3", G, imgs)


def test_evaluation_rejects_parity_violation():
    with pytest.raises(ValueError, match="parity"):
        fg_evaluate(nf("v1", n=1), catalog.b12(Q), {"v1": "1"})


@given(elements(1, 3, Q))
def test_json_round_trip(a):
    assert FreeGammaElement.from_json(a.to_json()) == a


@given(elements(2, 2, Q))
def test_keys_round_trip(a):
    assert FreeGammaElement.from_keys(2, 2, Q, a.keys()) == a


def test_dimension_examples():
    assert fg_dimensions(0, 3, 3) == 8 == odd_dimension(3, 3)
    assert [fg_dimensions(1, 0, 2 * k) for k in range(6)] == [1] * 6
    assert fg_dimensions(0, 4, 4) == 20


@pytest.mark.parametrize("m,n,w", [(m, n, w) for m in range(3) for n in range(4) for w in range(7)])
def test_dimension_count_matches_basis(m, n, w):
    assert fg_dimensions(m, n, w) == len(fg_basis(m, n, w))
    assert all(key_weight(k) == w for k in fg_basis(m, n, w))


@pytest.mark.parametrize("n,r", [(n, r) for n in range(2, 5) for r in range(4)])
def test_even_dimension_without_even_generators(n, r):
    # the empty word is the scalar 1, which is also the degree-0 standard monomial
    assert fg_dimensions(0, n, 2 * r) == len(enumerate_basis(n, r))


def test_single_odd_generator_envelope_is_split_null_extension():
    env = free_matrix_envelope(0, 1, 2)
    assert env.algebra.dim == 6
    assert env.algebra.structure_equal(catalog.split_null_extension(Q))
    assert env.graded_dims == {0: 4, 1: 2, 2: 0}


def test_two_odd_generators_add_a_matrix_block():
    env = free_matrix_envelope(0, 2, 2)
    assert env.graded_dims[2] == 4
    assert check_identity(env.algebra, "alternative")


@pytest.mark.parametrize("cap", [2, 4, 6])
def test_even_generator_envelope_is_truncated_matrix_algebra(cap):
    env = free_matrix_envelope(1, 0, cap)
    expected = envelope_b42(GammaAlgebra(catalog.truncated_polynomial(Q, cap // 2 + 1)))
    assert env.algebra.structure_equal(expected)
    assert env.algebra.dim == 4 * (cap // 2 + 1)
    assert check_identity(env.algebra, "associative")


def test_parse_is_left_associative():
    assert parse("v1*v2*v3") == ("mul", ("mul", ("gen", "v1"), ("gen", "v2")), ("gen", "v3"))
