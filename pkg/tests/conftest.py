import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from braidint.gvcat import CategoryParams, GradedObject, chain, invert, tensor  # noqa: E402
from braidint.hopf import (  # noqa: E402
    build_group_algebra,
    build_sweedler,
    build_taft,
    dual_hopf,
    opposite,
    trivial_hopf,
)
from braidint.scalar import FieldElement  # noqa: E402

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def fe(n: int, coeffs) -> FieldElement:
    return FieldElement(n, [Fraction(c) for c in coeffs])


def taft(n: int, e: int = 1):
    return build_taft(CategoryParams(n, e))


def standard_fixtures():
    """Small Hopf algebras covering every construction: plain, mirrored, dual."""
    return [
        taft(2), taft(3), taft(4), taft(5, 2),
        build_sweedler(), build_group_algebra(3), trivial_hopf(CategoryParams(3)),
        opposite(taft(3), "op_mul"), opposite(taft(4), "op_comul"),
        dual_hopf(taft(3), "left"), dual_hopf(build_sweedler(), "right"),
    ]


def transport_hopf(H, g):
    """The Hopf algebra obtained by moving every structure map along g: H -> Y."""
    gi = invert(g)
    return H.replace(
        object=g.target,
        mul=chain(tensor(gi, gi), H.mul, g),
        unit=chain(H.unit, g),
        comul=chain(gi, H.comul, tensor(g, g)),
        counit=chain(gi, H.counit),
        antipode=chain(gi, H.antipode, g),
        antipode_inv=chain(gi, H.antipode_inv, g),
    )


def line(params: CategoryParams, degree: int, dim: int = 1) -> GradedObject:
    return GradedObject(params, {degree % params.n: dim})


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {text}")
