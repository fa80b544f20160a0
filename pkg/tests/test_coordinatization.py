import pytest
from hypothesis import given, strategies as st

from m2gamma import catalog
from m2gamma.algebra import StructureAlgebra, apply_matrix, check_identity, is_isomorphism
from m2gamma.coordinatization import (
    UNITS,
    AlgebraMap,
    BracketModule,
    BracketModuleError,
    EnvelopeMorphismError,
    M2DElement,
    envelope_b42,
    envelope_index,
    example_morphisms,
    gamma_to_m2,
    m2d_multiply,
    octonion_isomorphism,
    phi_iso,
    recover_morphism,
    transport_morphism,
)
from m2gamma.fields import FieldSpec
from m2gamma.gamma import GammaAlgebra, gamma_of_commutative

Q, F3, F5 = FieldSpec(0), FieldSpec(3), FieldSpec(5)
GAMMAS = catalog.gamma_examples()


def scalar_module(fld=Q):
    """D = F, V = F^2 with <(1,0),(0,1)> = 1."""
    D = catalog.truncated_polynomial(fld, 1)
    action = [[{0: 1}, {1: 1}]]
    bracket = [[{}, {0: 1}], [{0: -1}, {}]]
    return BracketModule(D, 2, action, bracket)


def test_m2d_odd_square_matches_b42():
    mod = scalar_module()
    X = M2DElement(mod, {u: {} for u in UNITS}, ({0: Q(1)}, {}))
    Y = M2DElement(mod, {u: {} for u in UNITS}, ({1: Q(1)}, {}))
    # x = (1,0), t = 0, z = (0,1): the only bracket term is <x, z> in slot (2,1)
    XY = m2d_multiply(X, Y)
    assert XY.matrix[(2, 1)] == {0: Q(1)}
    assert all(not XY.matrix[u] for u in UNITS if u != (2, 1))
    assert XY.pair == ({}, {})


def test_m2d_matrix_part_is_matrix_product():
    mod = scalar_module()
    E = lambda i, j: M2DElement(mod, {u: ({0: Q(1)} if u == (i, j) else {}) for u in UNITS}, ({}, {}))  # noqa: E731
    assert E(1, 2) * E(2, 1) == E(1, 1)
    assert not (E(1, 2) * E(1, 2))


@st.composite
def m2d_elements(draw):
    mod = scalar_module()
    c = lambda: Q(draw(st.integers(-3, 3)))  # noqa: E731
    matrix = {u: {0: c()} for u in UNITS}
    pair = ({0: c(), 1: c()}, {0: c(), 1: c()})
    clean = lambda v: {k: x for k, x in v.items() if x}  # noqa: E731
    return M2DElement(mod, {u: clean(v) for u, v in matrix.items()}, tuple(clean(p) for p in pair))


@given(m2d_elements())
def test_m2d_unit(Y):
    one = M2DElement.identity(Y.module)
    assert one * Y == Y == Y * one


def test_bracket_module_validation():
    D = catalog.truncated_polynomial(Q, 1)
    with pytest.raises(BracketModuleError, match="skew"):
        BracketModule(D, 2, [[{0: 1}, {1: 1}]], [[{}, {0: 1}], [{0: 1}, {}]])
    # V of dim 3 with a bracket that breaks the cyclic relation
    br = [[{}, {0: 1}, {}], [{0: -1}, {}, {}], [{}, {}, {}]]
    with pytest.raises(BracketModuleError, match="cyclic"):
        BracketModule(D, 3, [[{0: 1}, {1: 1}, {2: 1}]], br)


def test_bracket_module_json_roundtrip():
    mod = BracketModule.from_gamma(GammaAlgebra(catalog.b12(Q)))
    again = BracketModule.from_json(mod.to_json())
    assert again.to_json() == mod.to_json()


@pytest.mark.parametrize("name,alg", GAMMAS, ids=[n for n, _ in GAMMAS])
def test_coordinatized_algebra_is_alternative(name, alg):
    g = GammaAlgebra(alg)
    A = gamma_to_m2(g)
    assert A.dim == 4 * len(g.even_basis) + 2 * len(g.odd_basis) == envelope_b42(g).dim
    assert check_identity(A, "left-alternative")
    assert check_identity(A, "right-alternative")


@pytest.mark.parametrize("name,alg", GAMMAS, ids=[n for n, _ in GAMMAS])
def test_phi_is_isomorphism(name, alg):
    phi = phi_iso(GammaAlgebra(alg))
    assert phi.is_bijective() and phi.is_homomorphism()
    unit = phi(phi.source.one())
    assert unit == phi.target.one()


@pytest.mark.parametrize("fld", [Q, F3, F5])
def test_b12_gives_split_octonions(fld):
    src = gamma_to_m2(GammaAlgebra(catalog.b12(fld)))
    for v2 in (1, 2, 3):
        if not fld(v2):
            continue
        assert is_isomorphism(octonion_isomorphism(fld, v2), src, catalog.split_octonions(fld, v2))


def test_dual_odd_gives_split_null_extension():
    A = gamma_to_m2(GammaAlgebra(catalog.dual_odd(Q)))
    S = catalog.split_null_extension(Q)
    # same basis order: e_ij[1], then (x,0) -> m1 and (0,x) -> m2
    assert A.structure_equal(S)


def test_even_only_gamma_gives_associative_algebra():
    A = catalog.truncated_polynomial(Q, 2)
    graded = StructureAlgebra(Q, A.labels, A.table, parity=[0, 0], unit=[1, 0])
    M = gamma_to_m2(GammaAlgebra(graded))
    assert M.dim == 8 and check_identity(M, "associative")


def test_envelope_products():
    g = GammaAlgebra(catalog.b12(Q))
    E = envelope_b42(g)
    xm1, ym2 = E.basis("x⊗m1"), E.basis("y⊗m2")
    assert xm1 * ym2 == -E.basis("1⊗e11")
    assert E.basis("1⊗e11") * xm1 == xm1
    assert check_identity(envelope_b42(GammaAlgebra(catalog.b12(F3))), "alternative")


def test_phi_odd_products_reproduce_bracket_matrix():
    g = GammaAlgebra(catalog.b12(Q))
    phi = phi_iso(g)
    A = phi.source
    # (x,0)*(0,y) has matrix (-<x,y> 0; 0 0) = -e11
    assert A.basis("(x,0)") * A.basis("(0,y)") == -A.basis("e11[1]")
    assert phi(A.basis("(x,0)")) * phi(A.basis("(0,y)")) == phi(-A.basis("e11[1]"))


def test_identity_transport_is_identity():
    g = GammaAlgebra(catalog.b12(Q))
    I = [[int(i == j) for j in range(3)] for i in range(3)]
    F = transport_morphism(I, g, g)
    assert F.matrix == [[Q(int(i == j)) for j in range(8)] for i in range(8)]
    assert recover_morphism(F, g, g) == [[Q(c) for c in row] for row in I]


@pytest.mark.parametrize("case", example_morphisms(), ids=[c[0] for c in example_morphisms()])
def test_round_trip(case):
    name, psi, g, h = case
    F = transport_morphism(psi, g, h)
    assert F.is_homomorphism()
    assert recover_morphism(F, g, h) == [[g.field(c) for c in row] for row in psi]


def test_odd_scaling_scales_cay_components():
    name, psi, g, h = example_morphisms()[1]
    F = transport_morphism(psi, g, h)
    idx = envelope_index(g)
    for (a, s), i in idx.items():
        img = F.image(i)
        assert img == {i: Q(-1 if s >= 4 else 1)}


def test_non_homomorphism_rejected():
    g = GammaAlgebra(catalog.b12(Q))
    with pytest.raises(ValueError):
        transport_morphism([[1, 0, 0], [0, 2, 0], [0, 0, 1]], g, g)
    with pytest.raises(ValueError, match="grading"):
        transport_morphism([[1, 1, 0], [0, 1, 0], [0, 0, 1]], g, g)


def test_beta_component_is_rejected():
    name, psi, g, h = example_morphisms()[0]
    F = transport_morphism(psi, g, h)
    M = [row[:] for row in F.matrix]
    src, tgt = envelope_index(g), envelope_index(h)
    M[tgt[(1, 5)]][src[(1, 4)]] = Q(1)
    with pytest.raises(EnvelopeMorphismError, match="beta = 0") as err:
        recover_morphism(M, g, h)
    assert err.value.reason == "beta"


def test_non_m2_fixing_rejected():
    g = GammaAlgebra(catalog.b12(Q))
    E = envelope_b42(g)
    M = [[Q(int(i == j)) * (2 if i == 0 else 1) for j in range(E.dim)] for i in range(E.dim)]
    with pytest.raises(EnvelopeMorphismError) as err:
        recover_morphism(AlgebraMap(M, E, E), g, g)
    assert err.value.reason == "not-m2-fixing"


def test_apply_matrix_convention():
    g = gamma_of_commutative(catalog.truncated_polynomial(Q, 1))
    F = transport_morphism([[1, 0, 0], [0, -1, 0], [0, 0, -1]], g, g)
    assert apply_matrix(F.matrix, {4: Q(1)}) == {4: Q(-1)}
