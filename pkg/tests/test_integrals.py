import pytest

from braidint.gvcat import (
    CategoryParams,
    GradedObject,
    compose,
    dim8,
    from_blocks,
    from_columns,
    identity,
    invert,
    scalar_multiple,
    scale,
    tensor,
    trace8,
    unit_object,
)
from braidint.hopf import build_sweedler, trivial_hopf
from braidint.integrals import (
    KINDS,
    NotIdempotent,
    adjoint_actions,
    coequalizer_report,
    compute_integrals,
    hopf_automorphism_report,
    monodromy,
    projector,
    radford_sides,
    split_idempotent,
    verify_integral_relations,
    verify_radford,
)
from conftest import line, standard_fixtures, taft
import oracles
from test_oracles import SWEEDLER_A, SWEEDLER_AD_G, SWEEDLER_ALPHA, SWEEDLER_Q_TILDE

TAFT_NS = range(2, 7)


def top_projection(H):
    n = H.params.n
    return from_columns(H.object, H.object, lambda c: {n - 1: 1} if c == n - 1 else {})


def diagonal(H, values):
    return from_columns(H.object, H.object, lambda c: {c: values(c)})


@pytest.mark.parametrize("n", TAFT_NS)
def test_taft_projectors(n):
    H = taft(n)
    for kind in KINDS:
        assert projector(H, kind) == top_projection(H)


def test_trivial_projectors_are_identity():
    H = trivial_hopf(CategoryParams(4))
    for kind in KINDS:
        assert projector(H, kind) == H.id


def test_sweedler_projectors_square_by_matrix_oracle():
    H = build_sweedler()
    for kind in KINDS:
        P = projector(H, kind)
        M = [[P.entry(r, c).coeffs[0] for c in range(4)] for r in range(4)]
        assert oracles.matmul(M, M) == M


def test_split_idempotent_examples():
    params = CategoryParams(3)
    X = GradedObject(params, {1: 2})
    sp = split_idempotent(from_blocks(X, X, {1: [[1, 0], [0, 0]]}))
    assert sp.mid_object.dims_map() == {1: 1}
    M = sp.mid_object
    assert sp.inj == from_blocks(M, X, {1: [[1], [0]]})
    assert sp.proj == from_blocks(X, M, {1: [[1, 0]]})
    sp = split_idempotent(identity(X))
    assert sp.mid_object == X and sp.inj == identity(X) and sp.proj == identity(X)
    for n in TAFT_NS:
        assert split_idempotent(projector(taft(n), "ll")).mid_object.dims_map() == {n - 1: 1}
    with pytest.raises(NotIdempotent):
        split_idempotent(scale(2, identity(X)))


@pytest.mark.parametrize("n", TAFT_NS)
def test_taft_integrals(n):
    H = taft(n)
    D = compute_integrals(H)
    top = from_columns(H.object, D.int_object, lambda c: {0: 1} if c == n - 1 else {})
    assert D.int_l == D.int_r == top
    assert D.coint_l == D.coint_r == from_columns(D.int_object, H.object, lambda c: {n - 1: 1})
    assert D.a == H.unit and D.alpha == H.counit
    assert D.int_object.dims_map() == {n - 1: 1}
    assert (D.c_ll, D.c_rr, D.c_rl, D.c_lr) == (1, 1, 1, 1)
    assert D.psi_tilde == H.params.q


def test_trivial_integrals():
    H = trivial_hopf(CategoryParams(3))
    D = compute_integrals(H)
    assert D.int_object == unit_object(H.params)
    for m in (D.int_l, D.int_r, D.coint_l, D.coint_r):
        assert m == identity(H.object)
    assert (D.c_ll, D.c_lr, D.c_rl, D.c_rr, D.psi_tilde, D.q_tilde) == (1, 1, 1, 1, 1, 1)


def test_sweedler_integrals_match_brute_force():
    H = build_sweedler()
    D = compute_integrals(H)
    assert D.a == H.element(dict(enumerate(SWEEDLER_A)))
    assert D.alpha == H.functional(dict(enumerate(SWEEDLER_ALPHA)))
    assert D.q_tilde == SWEEDLER_Q_TILDE == D.c_lr


@pytest.mark.parametrize("n", TAFT_NS)
def test_monodromy_examples(n):
    H = taft(n)
    q = H.params.q
    assert monodromy(unit_object(H.params), H.object) == H.id
    D = compute_integrals(H)
    assert monodromy(D.int_object, H.object) == diagonal(H, lambda k: q ** (-2 * k))
    for d in range(n):
        for j in range(n):
            omega = monodromy(line(H.params, d), line(H.params, j))
            assert omega.entry(0, 0).coeffs == oracles.monodromy_factor(n, 1, d, j)


def test_adjoint_action_examples():
    for n in (2, 3, 5):
        H = taft(n)
        ad_a, ad_alpha, ad_a_inv, ad_alpha_inv = adjoint_actions(H, compute_integrals(H))
        assert ad_a == ad_alpha == ad_a_inv == ad_alpha_inv == H.id
    H = build_sweedler()
    ad_a, _, _, _ = adjoint_actions(H, compute_integrals(H))
    assert ad_a == from_columns(H.object, H.object, lambda c: {r: v for r, v in enumerate(
        row[c] for row in SWEEDLER_AD_G) if v})


@pytest.mark.parametrize("n", TAFT_NS)
def test_taft_radford_sides(n):
    H = taft(n)
    lhs, rhs = radford_sides(H, compute_integrals(H))
    expected = diagonal(H, lambda k: H.params.q ** (-2 * k))
    assert lhs == rhs == expected


def test_sweedler_radford_by_brute_force():
    H = build_sweedler()
    D = compute_integrals(H)
    S2 = [list(r) for r in SWEEDLER_AD_G]
    assert oracles.matmul(S2, S2) == [[int(i == j) for j in range(4)] for i in range(4)]
    assert H.antipode_power(4) == H.id
    assert monodromy(D.int_object, H.object) == H.id
    lhs, rhs = radford_sides(H, D)
    _, _, ad_a_inv, ad_alpha_inv = adjoint_actions(H, D)
    assert lhs == rhs == compose(ad_alpha_inv, ad_a_inv)
    assert verify_radford(H, D).passed


def test_trivial_radford():
    H = trivial_hopf(CategoryParams(2))
    lhs, rhs = radford_sides(H, compute_integrals(H))
    assert lhs == rhs == H.id


@pytest.mark.parametrize("n", TAFT_NS)
def test_taft_trace_claims(n):
    H = taft(n)
    D = compute_integrals(H)
    top = oracles.trace_of_diagonal(n, 1, {n - 1: 1}, list(range(n)))
    assert top == oracles.q_power(n, 1, -1)
    for kind in KINDS:
        assert trace8(projector(H, kind)).coeffs == top
    assert dim8(D.int_object).coeffs == top
    assert D.psi_tilde.inverse().coeffs == top


def test_trivial_relations_constants():
    H = trivial_hopf(CategoryParams(5))
    D = compute_integrals(H)
    assert verify_integral_relations(H, D).passed
    assert D.psi_tilde == 1 and D.q_tilde == 1


@pytest.mark.parametrize("H", standard_fixtures(), ids=lambda H: H.name)
def test_every_fixture_verifies(H):
    D = compute_integrals(H)
    rad = verify_radford(H, D)
    assert rad.passed, rad.failures()
    rel = verify_integral_relations(H, D)
    assert rel.passed, rel.failures()
    assert coequalizer_report(H, D).passed
    assert D.c_lr * D.c_rl == D.q_tilde * D.c_ll * D.c_rr


@pytest.mark.parametrize("H", standard_fixtures(), ids=lambda H: H.name)
def test_projectors_idempotent_and_split(H):
    for kind in KINDS:
        P = projector(H, kind)
        assert compose(P, P) == P
        sp = split_idempotent(P)
        assert compose(sp.inj, sp.proj) == P
        assert compose(sp.proj, sp.inj) == identity(sp.mid_object)


def _reversal_in_degrees(X):
    """The basis permutation reversing the order inside every degree."""
    cols = {}
    for d in range(X.n):
        idx = X.by_degree[d]
        for a, b in zip(idx, reversed(idx)):
            cols[a] = b
    return from_columns(X, X, lambda c: {cols[c]: 1})


@pytest.mark.parametrize("H", standard_fixtures(), ids=lambda H: H.name)
def test_splitting_unique_up_to_scalar(H):
    e = projector(H, "ll")
    sp = split_idempotent(e)
    P = _reversal_in_degrees(H.object)
    Pi = invert(P)
    other = split_idempotent(compose(P, e, Pi))
    inj, proj = compose(Pi, other.inj), compose(other.proj, P)
    assert compose(inj, proj) == e
    s = scalar_multiple(inj, sp.inj)
    assert s is not None and not s.is_zero()
    assert proj == scale(s.inverse(), sp.proj)


@pytest.mark.parametrize("H", standard_fixtures(), ids=lambda H: H.name)
def test_monodromy_hopf_automorphism_and_multiplicative(H):
    D = compute_integrals(H)
    K = D.int_object
    omega = monodromy(K, H.object, H.mirrored)
    assert hopf_automorphism_report(H, omega, "monodromy").passed
    X, Y = H.object, line(H.params, 1)
    assert monodromy(K, tensor(X, Y), H.mirrored) == tensor(omega, monodromy(K, Y, H.mirrored))

