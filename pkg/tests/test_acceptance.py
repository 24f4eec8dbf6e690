"""
End-to-end acceptance checks, one test per criterion. Each records a PASS or
FAIL line that the terminal summary prints; all comparisons are exact.
"""

import oracles
import test_properties
from conftest import ACCEPTANCE, fe, standard_fixtures, taft
from test_oracles import SWEEDLER_A, SWEEDLER_ALPHA, SWEEDLER_COINTEGRAL, SWEEDLER_INTEGRAL, SWEEDLER_Q_TILDE
from braidint.braidcomb import BraidedFamily, combinatorial_identities_report, exterior_integrals
from braidint.gvcat import (
    CategoryParams,
    GradedObject,
    compose,
    dim8,
    from_blocks,
    from_columns,
    identity,
    is_invertible,
    scalar_multiple,
    scale,
    tensor,
    trace8,
    u0_minus2,
)
from braidint.hopf import build_group_algebra, build_sweedler, check_hopf, dual_hopf, opposite
from braidint.hopfmod import (
    FOURIER,
    coinvariant_report,
    coinvariants,
    fourier,
    fourier_scalar,
    integral_copairing,
    module_projector,
    projector_dims,
    regular_module,
    standard_module,
    structure_iso,
)
from braidint.integrals import (
    KINDS,
    adjoint_actions,
    compute_integrals,
    monodromy,
    projector,
    verify_integral_relations,
    verify_radford,
)
from braidint.products import (
    algebra_map_report,
    cross_integrals,
    heisenberg_action,
    heisenberg_double,
    heisenberg_iso,
    heisenberg_module_report,
    matrix_algebra,
    nichols_crossed_module,
    vacuum_projectors,
)


class Criterion:
    """Collects named sub-checks and records one line for the criterion."""

    def __init__(self, number: int, summary: str):
        self.number = number
        self.summary = summary
        self.failed: list[str] = []
        self.count = 0

    def check(self, name: str, ok) -> None:
        self.count += 1
        if not ok:
            self.failed.append(name)

    def finish(self) -> None:
        ok = not self.failed
        detail = f"{self.count} checks" if ok else f"failed: {', '.join(self.failed[:5])}"
        ACCEPTANCE[self.number] = (ok, f"{self.summary} ({detail})")
        print(f"criterion {self.number}: {'PASS' if ok else 'FAIL'}  {self.summary} ({detail})")
        assert ok, self.failed


def diagonal(H, values):
    return from_blocks(H.object, H.object, {k: [[v]] for k, v in enumerate(values)})


def test_criterion_1_taft_integrals_and_radford():
    c = Criterion(1, "Taft n=2..6: axioms, projectors, Int H, moduli, Radford q^(-2k)")
    for n in range(2, 7):
        H = taft(n)
        c.check(f"n={n} check_hopf", check_hopf(H).passed)
        D = compute_integrals(H)
        top = from_columns(H.object, H.object, lambda col, n=n: {n - 1: 1} if col == n - 1 else {})
        for kind in KINDS:
            c.check(f"n={n} Pi_{kind} = top projection", projector(H, kind) == top)
        c.check(f"n={n} Int H = X^(n-1)", D.int_object == GradedObject(H.params, {n - 1: 1}))
        c.check(f"n={n} a = unit", D.a == H.unit)
        c.check(f"n={n} alpha = counit", D.alpha == H.counit)
        c.check(f"n={n} verify_radford", verify_radford(H, D).passed)
        expected = diagonal(H, [fe(n, oracles.q_power(n, 1, -2 * k)) for k in range(n)])
        lhs = compose(H.antipode_power(4), u0_minus2(H.object))
        omega = monodromy(D.int_object, H.object)
        _, _, ad_a_inv, ad_alpha_inv = adjoint_actions(H, D)
        c.check(f"n={n} S^4 u0_-2 = q^(-2k)", lhs == expected)
        c.check(f"n={n} monodromy side = q^(-2k)", compose(ad_alpha_inv, ad_a_inv, omega) == expected)
        c.check(f"n={n} monodromy oracle",
                omega == diagonal(H, [fe(n, oracles.monodromy_factor(n, 1, n - 1, k)) for k in range(n)]))
    c.finish()


def test_criterion_2_taft_trace():
    c = Criterion(2, "Taft: tr8(Pi) = dim8(Int H) = psi~^-1 = q^-1")
    for n in range(2, 7):
        H = taft(n)
        D = compute_integrals(H)
        q_inv = fe(n, oracles.q_power(n, 1, -1))
        c.check(f"n={n} line oracle gives q^-1", fe(n, oracles.line_dimension(n, 1, n - 1)) == q_inv)
        c.check(f"n={n} dim8 Int H", dim8(D.int_object) == q_inv)
        c.check(f"n={n} psi~^-1", D.psi_tilde.inverse() == q_inv)
        for kind in KINDS:
            c.check(f"n={n} tr8 Pi_{kind}", trace8(projector(H, kind)) == q_inv)
    c.finish()


def test_criterion_3_sweedler():
    c = Criterion(3, "Sweedler: a = g, alpha(g) = -1, Radford and integral relations")
    H = build_sweedler()
    D = compute_integrals(H)
    c.check("a = g", D.a == H.element(dict(enumerate(SWEEDLER_A))))
    c.check("alpha = (1, -1, 0, 0)", D.alpha == H.functional(dict(enumerate(SWEEDLER_ALPHA))))
    c.check("alpha(g) = -1", compose(D.alpha, H.element({1: 1})).entry(0, 0) == -1)
    for name, oracle in (("coint_l", H.element(dict(enumerate(SWEEDLER_COINTEGRAL)))),
                         ("int_l", H.functional(dict(enumerate(SWEEDLER_INTEGRAL))))):
        ratio = scalar_multiple(getattr(D, name), oracle)
        c.check(f"{name} spans the oracle line", ratio is not None and not ratio.is_zero())
    c.check("q~ = alpha(a) = -1", D.q_tilde == SWEEDLER_Q_TILDE)
    c.check("c_lr c_rl = q~ c_ll c_rr", D.c_lr * D.c_rl == D.q_tilde * D.c_ll * D.c_rr)
    c.check("verify_radford", verify_radford(H, D).passed)
    c.check("verify_integral_relations", verify_integral_relations(H, D).passed)
    c.finish()


def test_criterion_4_group_algebras():
    c = Criterion(4, "k[Z/m], m=2,3,5: two-sided integrals, trivial moduli, S^4 = id")
    for m in (2, 3, 5):
        H = build_group_algebra(m)
        D = compute_integrals(H)
        delta_e = from_columns(H.object, D.int_object, lambda col: {0: 1} if col == 0 else {})
        group_sum = from_columns(D.int_object, H.object, lambda col: {r: 1 for r in range(m)})
        c.check(f"m={m} int_l = int_r", D.int_l == D.int_r)
        c.check(f"m={m} coint_l = coint_r", D.coint_l == D.coint_r)
        for name, f, oracle in (("int_l", D.int_l, delta_e), ("coint_l", D.coint_l, group_sum)):
            ratio = scalar_multiple(f, oracle)
            c.check(f"m={m} {name} spans the expected line", ratio is not None and not ratio.is_zero())
        c.check(f"m={m} a = unit", D.a == H.unit)
        c.check(f"m={m} alpha = counit", D.alpha == H.counit)
        c.check(f"m={m} S^4 = id", H.antipode_power(4) == H.id)
        c.check(f"m={m} verify_radford", verify_radford(H, D).passed)
        c.check(f"m={m} oracle group axioms", oracles.group_algebra_axioms(m))
    c.finish()


def test_criterion_5_hopf_modules():
    c = Criterion(5, "Hopf modules: projectors, (co)equalizers, structure iso, equal splittings")
    for H in standard_fixtures():
        Y = GradedObject(H.params, {0: 1, 1 % H.params.n: 1} if H.params.n > 1 else {0: 2})
        for label, X in (("regular", regular_module(H)), ("standard", standard_module(H, Y))):
            name = f"{H.name} {label}"
            P = module_projector(X, "ll")
            c.check(f"{name} Pi_ll idempotent", compose(P, P) == P)
            sp = coinvariants(X)
            c.check(f"{name} (co)equalizer equations", coinvariant_report(X, sp).passed)
            try:
                structure_iso(X, sp)
                c.check(f"{name} structure iso", True)
            except ValueError:
                c.check(f"{name} structure iso", False)
        dims = projector_dims(regular_module(H))
        c.check(f"{H.name} four splittings", len(dims) == 4 and len({tuple(sorted(v.items())) for v in dims.values()}) == 1)
    c.finish()


def test_criterion_6_fourier():
    c = Criterion(6, "Fourier: four transforms with closed-form inverses, integral copairing invertible")
    for H in standard_fixtures():
        D = compute_integrals(H)
        for which in FOURIER:
            try:
                fwd, bwd = fourier(H, D, which)
                k = fourier_scalar(D, which)
                c.check(f"{H.name} {which}", not k.is_zero() and compose(bwd, fwd) == scale(k, identity(fwd.source))
                        and compose(fwd, bwd) == scale(k, identity(fwd.target)))
            except ValueError:
                c.check(f"{H.name} {which}", False)
        D_dual = compute_integrals(dual_hopf(H, "left"))
        D_opdual = compute_integrals(dual_hopf(opposite(H, "op_comul"), "left"))
        literal, closed = integral_copairing(H, D, D_dual, D_opdual)
        c.check(f"{H.name} copairing invertible", is_invertible(literal) and is_invertible(closed))
    c.finish()


def test_criterion_7_braided_combinatorics():
    c = Criterion(7, "multinomial identities for j <= 6; exterior algebras on a line for n = 2..6")
    for n, degrees, lam in ((3, [1], 0), (3, [0, 1], 0), (4, [1, 2], 1)):
        fam = BraidedFamily.from_exponent(GradedObject(CategoryParams(n), degrees=degrees), lam, 6)
        report = combinatorial_identities_report(fam, 6)
        c.check(f"n={n} degrees={degrees} identities", report.passed)
    for n in range(2, 7):
        fam = BraidedFamily.from_exponent(GradedObject(CategoryParams(n), {1: 1}), 0, 6)
        result = exterior_integrals(fam)
        c.check(f"n={n} checks", result.passed)
        c.check(f"n={n} [n]! = 0, [n-1]! != 0",
                result.factorial_ranks[n] == 0 and result.factorial_ranks[n - 1] > 0)
        c.check(f"n={n} exterior dims 1 below n",
                all(sum(result.exterior_dims[k].values()) == 1 for k in range(n)))
        c.check(f"n={n} top integral at degree n-1",
                result.top_degree == n - 1 and result.integral_object == GradedObject(CategoryParams(n), {(n - 1) % n: 1}))
        pairings = [k for k in result.checks.results if k.startswith("pairing")]
        c.check(f"n={n} all pairings side-invertible", len(pairings) == 2 * n)
    c.finish()


def test_criterion_8_products():
    c = Criterion(8, "Heisenberg iso on Taft 2, 3 and Sweedler; vacuum projectors; cross-product integrals")
    for H in (taft(2), taft(3), build_sweedler()):
        try:
            f, f_inv = heisenberg_iso(H)
            alg = heisenberg_double(H)
            c.check(f"{H.name} f invertible", is_invertible(f) and compose(f_inv, f) == identity(alg.object))
            c.check(f"{H.name} f algebra map", algebra_map_report(f, alg, matrix_algebra(H)).passed)
            c.check(f"{H.name} Heisenberg action", heisenberg_module_report(H, regular_module(H)).passed)
            E, E_bar = vacuum_projectors(H)
            act = heisenberg_action(H, regular_module(H))
            c.check(f"{H.name} Ebar acts as Pi_ll", compose(act, tensor(E_bar, H.id)) == projector(H, "ll"))
            c.check(f"{H.name} E acts as the coinvariant idempotent",
                    compose(act, tensor(E, H.id)) == module_projector(regular_module(H), "ll"))
        except ValueError as exc:
            c.check(f"{H.name}: {exc}", False)
    M = nichols_crossed_module(CategoryParams(3))
    report = cross_integrals(M)
    c.check("composite predicted integrals", report.passed)
    c.check("composite scalars invertible",
            set(report.scalars) == {"int_l", "int_r", "coint_l", "coint_r"}
            and all(not s.is_zero() for s in report.scalars.values()))
    c.finish()


PROPERTIES = [
    test_properties.test_zigzags,
    test_properties.test_hexagons_both_orientations,
    test_properties.test_trace_cyclic,
    test_properties.test_splitting_round_trip,
    test_properties.test_monodromy_natural,
    test_properties.test_integrals_equivariant_under_hopf_isomorphism,
    test_properties.test_taft_rescaling_is_hopf_automorphism,
]


def test_criterion_9_property_suites():
    c = Criterion(9, "property suites, 50 random instances each")
    c.check("at least 50 examples per property", test_properties.EXAMPLES.max_examples >= 50)
    for prop in PROPERTIES:
        try:
            prop()
            c.check(prop.__name__, True)
        except Exception as exc:  # a falsified property is a FAIL line, not an error
            c.check(f"{prop.__name__}: {type(exc).__name__}", False)
    c.finish()

