"""
Command-line verification harness: build or load a Hopf algebra, run the
selected check suites in a fixed order, and write a canonical JSON report.

Exit codes: 0 when every suite passes, 1 when a suite fails (a violated
relation or an unmet hypothesis), 2 on input or parse errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .braidcomb import (
    BraidedFamily,
    HypothesisFailed,
    combinatorial_identities_report,
    exterior_integrals,
    tensor_hopf_report,
)
from .gvcat import (
    CategoryParams,
    GradedObject,
    Morphism,
    ShapeMismatch,
    compose,
    dim8,
    is_invertible,
    scalar_multiple,
    trace8,
)
from .hopf import (
    AxiomReport,
    HopfAlgebra,
    RelationViolated,
    build_group_algebra,
    build_sweedler,
    build_taft,
    check_hopf,
    dual_hopf,
    opposite,
    trivial_hopf,
)
from .hopfmod import (
    FOURIER,
    check_hopf_module,
    coinvariant_report,
    coinvariants,
    fourier,
    fourier_scalar,
    integral_copairing,
    projector_dims,
    regular_module,
    standard_module,
    structure_iso,
)
from .integrals import (
    KINDS,
    IntegralData,
    compute_integrals,
    projector,
    verify_integral_relations,
    verify_radford,
)
from .products import (
    CrossedModule,
    cross_integrals,
    cross_product,
    heisenberg_iso,
    heisenberg_module_report,
    nichols_crossed_module,
    over_trivial,
    trivial_crossed_module,
    vacuum_projectors,
)

SUITES = ("axioms", "integrals", "radford", "relations", "hopfmod", "fourier", "exterior", "products")
FIXTURES = ("taft", "sweedler", "group", "trivial", "nichols")
MORPHISM_FIELDS = ("mul", "unit", "comul", "counit", "antipode", "antipode_inv")

EXIT_PASS, EXIT_VIOLATED, EXIT_PARSE = 0, 1, 2


class ParseError(ValueError):
    """Bad command-line input or a malformed Hopf algebra file."""


# configuration

@dataclasses.dataclass(frozen=True)
class JobConfig:
    suites: tuple[str, ...]
    fixture: str | None = None
    hopf_json: str | None = None
    n: int | None = None
    e: int = 1
    order: int = 2
    lambda_exp: int = 0
    degree_bound: int = 6
    out: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "suites", parse_suites(self.suites))
        if (self.fixture is None) == (self.hopf_json is None):
            raise ParseError("exactly one of --fixture and --hopf-json is required")
        if self.fixture is not None and self.fixture not in FIXTURES:
            raise ParseError(f"unknown fixture {self.fixture!r}; valid fixtures: {', '.join(FIXTURES)}")
        if self.hopf_json is not None and not Path(self.hopf_json).is_file():
            raise ParseError(f"--hopf-json: no such file {self.hopf_json!r}")
        if self.n is not None and self.n < 1:
            raise ParseError(f"--n must be positive, got {self.n}")
        if self.order < 1:
            raise ParseError(f"--order must be positive, got {self.order}")
        if self.degree_bound < 1:
            raise ParseError(f"--degree-bound must be positive, got {self.degree_bound}")

    def params(self) -> CategoryParams:
        default = 3 if self.fixture == "taft" else 1
        try:
            return CategoryParams(self.n if self.n is not None else default, self.e)
        except ValueError as exc:
            raise ParseError(f"--n/--e: {exc}") from exc

    def to_json(self) -> dict:
        return {"fixture": self.fixture, "hopf_json": self.hopf_json, "n": self.n, "e": self.e,
                "order": self.order, "lambda_exp": self.lambda_exp, "degree_bound": self.degree_bound,
                "suites": list(self.suites), "out": self.out}


def parse_suites(value: str | Sequence[str]) -> tuple[str, ...]:
    """Comma list or sequence of suite names, returned in the declared order."""
    names = value.split(",") if isinstance(value, str) else list(value)
    names = [s.strip() for s in names if s.strip()]
    if not names:
        raise ParseError(f"no suites selected; valid suites: {', '.join(SUITES)}")
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ParseError(f"unknown suite {unknown[0]!r}; valid suites: {', '.join(SUITES)}")
    return tuple(s for s in SUITES if s in names)


# JSON input

def _require(data, key: str, kind: type, where: str):
    if not isinstance(data, dict):
        raise ParseError(f"{where}: expected an object")
    if key not in data:
        raise ParseError(f"{where}.{key}: missing")
    value = data[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise ParseError(f"{where}.{key}: expected {kind.__name__}, got {type(value).__name__}")
    return value


def _check_number(value, where: str) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError(f"{where}: expected an integer or a fraction string, got {value!r}")
    try:
        Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: bad number {value!r}") from exc


def _check_object(data, where: str) -> None:
    for key in ("n", "dims"):
        _require(data, key, (int, dict)[key == "dims"], where)
    if "e" in data:
        _require(data, "e", int, where)
    for deg, dim in data["dims"].items():
        try:
            int(deg)
        except ValueError as exc:
            raise ParseError(f"{where}.dims: degree key {deg!r} is not an integer") from exc
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
            raise ParseError(f"{where}.dims.{deg}: expected a nonnegative integer, got {dim!r}")
    if "degrees" in data:
        degrees = _require(data, "degrees", list, where)
        if not all(isinstance(d, int) and not isinstance(d, bool) for d in degrees):
            raise ParseError(f"{where}.degrees: expected a list of integers")


def _check_morphism(data, where: str) -> None:
    _check_object(_require(data, "source", dict, where), f"{where}.source")
    _check_object(_require(data, "target", dict, where), f"{where}.target")
    blocks = _require(data, "blocks", dict, where)
    for deg, mat in blocks.items():
        at = f"{where}.blocks.{deg}"
        try:
            int(deg)
        except ValueError as exc:
            raise ParseError(f"{at}: degree key is not an integer") from exc
        if not isinstance(mat, list):
            raise ParseError(f"{at}: expected a matrix (list of rows)")
        for i, row in enumerate(mat):
            if not isinstance(row, list):
                raise ParseError(f"{at}[{i}]: expected a row (list of entries)")
            for j, coeffs in enumerate(row):
                if not isinstance(coeffs, list):
                    raise ParseError(f"{at}[{i}][{j}]: expected a coefficient list")
                for k, c in enumerate(coeffs):
                    _check_number(c, f"{at}[{i}][{j}][{k}]")


def hopf_from_dict(data) -> HopfAlgebra:
    """Validate the schema of a serialized Hopf algebra and build it."""
    _check_object(_require(data, "object", dict, "$"), "$.object")
    for field in MORPHISM_FIELDS:
        _check_morphism(_require(data, field, dict, "$"), f"$.{field}")
    if "mirrored" in data and not isinstance(data["mirrored"], bool):
        raise ParseError("$.mirrored: expected a boolean")
    try:
        obj = GradedObject.from_json(data["object"])
    except ValueError as exc:
        raise ParseError(f"$.object: {exc}") from exc
    fields = {}
    for field in MORPHISM_FIELDS:
        try:
            fields[field] = Morphism.from_json(data[field])
        except ValueError as exc:
            raise ParseError(f"$.{field}: {exc}") from exc
    try:
        return HopfAlgebra(obj, mirrored=data.get("mirrored", False), name=str(data.get("name", "")), **fields)
    except ShapeMismatch as exc:
        field = str(exc).split(" ", 1)[0]
        raise ParseError(f"$.{field}: {exc}") from exc


def parse_hopf_json(path: str | Path) -> HopfAlgebra:
    """Read a Hopf algebra file; errors name the line or field at fault."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    try:
        return hopf_from_dict(data)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def hopf_to_dict(H: HopfAlgebra) -> dict:
    return dict(H.to_json(), name=H.name)


# JSON output

def canonical_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_report(report: dict, path: str | Path | None = None) -> str:
    """Write the report as canonical JSON to path, or to stdout without one."""
    text = canonical_json(report)
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)
    return text


def without_timings(report: dict) -> dict:
    """A copy of the report with every elapsed-time field removed."""
    out = json.loads(json.dumps(report))
    for suite in out.get("suites", {}).values():
        suite.pop("elapsed_seconds", None)
    return out


# suites

@dataclasses.dataclass
class SuiteResult:
    checks: AxiomReport = dataclasses.field(default_factory=AxiomReport)
    artifacts: dict = dataclasses.field(default_factory=dict)
    error: str | None = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.error is None and self.checks.passed

    def to_json(self) -> dict:
        return {"passed": self.passed, "elapsed_seconds": round(self.elapsed, 6), "error": self.error,
                "artifacts": self.artifacts, "results": dict(sorted(self.checks.results.items())),
                "witnesses": [w.to_json() for w in self.checks.witnesses]}


class Job:
    """One Hopf algebra plus lazily computed integral data shared by the suites."""

    def __init__(self, config: JobConfig, H: HopfAlgebra, crossed: CrossedModule | None = None):
        self.config = config
        self.H = H
        self.crossed = crossed
        self._integrals: IntegralData | None = None

    @property
    def integrals(self) -> IntegralData:
        if self._integrals is None:
            self._integrals = compute_integrals(self.H)
        return self._integrals

    def suite_axioms(self, res: SuiteResult) -> None:
        res.artifacts["object"] = self.H.object.to_json()
        res.checks.merge(check_hopf(self.H))

    def suite_integrals(self, res: SuiteResult) -> None:
        H, D = self.H, self.integrals
        res.artifacts["integrals"] = D.to_json()
        res.artifacts["a_is_unit"] = D.a == H.unit
        res.artifacts["alpha_is_counit"] = D.alpha == H.counit
        res.artifacts["projectors"] = {k: projector(H, k).to_json() for k in KINDS}
        for k in KINDS:
            P = projector(H, k)
            res.checks.check(f"Pi_{k} idempotent", compose(P, P), P)
            res.checks.check_flag(f"tr8 Pi_{k} = dim8 Int H", trace8(P, H.mirrored) == dim8(D.int_object, H.mirrored),
                                  trace8(P, H.mirrored), dim8(D.int_object, H.mirrored))
        res.checks.check_flag("Int H invertible", D.int_object.total_dim == 1)

    def suite_radford(self, res: SuiteResult) -> None:
        rep = verify_radford(self.H, self.integrals)
        res.artifacts["S^4 u0_-2"] = self.H.antipode_power(4).to_json()
        res.checks.merge(rep)

    def suite_relations(self, res: SuiteResult) -> None:
        res.checks.merge(verify_integral_relations(self.H, self.integrals))

    def suite_hopfmod(self, res: SuiteResult) -> None:
        H = self.H
        params = H.params
        Y = GradedObject(params, {0: 1, 1 % params.n: 1} if params.n > 1 else {0: 2})
        dims = {}
        for name, X in (("regular", regular_module(H)), ("standard", standard_module(H, Y))):
            res.checks.merge(check_hopf_module(X), f"{name} ")
            sp = coinvariants(X)
            res.checks.merge(coinvariant_report(X, sp), f"{name} ")
            structure_iso(X, sp)
            res.checks.check_flag(f"{name} structure iso mutually inverse", True)
            dims[name] = {k: {str(d): m for d, m in v.items()} for k, v in projector_dims(X).items()}
        regular = dims["regular"]
        res.checks.check_flag("regular Pi splittings have equal dimension vectors",
                              len(regular) == 4 and len({json.dumps(v, sort_keys=True) for v in regular.values()}) == 1)
        res.artifacts["splitting_dims"] = dims

    def suite_fourier(self, res: SuiteResult) -> None:
        H, D = self.H, self.integrals
        scalars = {}
        for which in FOURIER:
            fourier(H, D, which)
            res.checks.check_flag(f"{which} invertible with closed-form inverse", True)
            scalars[which] = fourier_scalar(D, which).to_json()
        D_dual = compute_integrals(dual_hopf(H, "left"))
        D_opdual = compute_integrals(dual_hopf(opposite(H, "op_comul"), "left"))
        literal, closed = integral_copairing(H, D, D_dual, D_opdual)
        res.checks.check_flag("integral copairing invertible", is_invertible(literal))
        res.checks.check_flag("closed-form copairing invertible", is_invertible(closed))
        ratio = scalar_multiple(literal, closed) if literal.target == closed.target else None
        res.checks.check_flag("copairing routes agree up to an invertible scalar", ratio is not None and not ratio.is_zero())
        res.artifacts["fourier_scalars"] = scalars
        res.artifacts["copairing"] = literal.to_json()

    def suite_exterior(self, res: SuiteResult) -> None:
        params = self.H.params
        cfg = self.config
        X = GradedObject(params, {1 % params.n: 1})
        fam = BraidedFamily.from_exponent(X, cfg.lambda_exp, cfg.degree_bound)
        res.checks.merge(combinatorial_identities_report(fam, min(cfg.degree_bound, 5)), "multinomials: ")
        res.checks.merge(tensor_hopf_report(fam, min(cfg.degree_bound, 4)), "tensor algebra: ")
        report = exterior_integrals(fam)
        res.checks.merge(report.checks, "exterior algebra: ")
        res.artifacts["exterior"] = report.to_json()

    def suite_products(self, res: SuiteResult) -> None:
        H = self.H
        heisenberg_iso(H)
        res.checks.check_flag("Heisenberg f is an algebra isomorphism", True)
        res.checks.merge(heisenberg_module_report(H, regular_module(H)), "Heisenberg action ")
        vacuum_projectors(H)
        res.checks.check_flag("vacuum projectors act as the coinvariant and integral idempotents", True)
        crossed = [("B trivial", trivial_crossed_module(H)), ("A trivial", over_trivial(H))]
        if self.crossed is not None:
            crossed.append((self.crossed.name, self.crossed))
        scalars = {}
        for name, M in crossed:
            report = cross_integrals(M)
            res.checks.merge(report.checks, f"cross product ({name}): ")
            scalars[name] = {k: v.to_json() for k, v in sorted(report.scalars.items())}
        res.artifacts["cross_product_scalars"] = scalars


def build_job(config: JobConfig) -> Job:
    if config.hopf_json is not None:
        return Job(config, parse_hopf_json(config.hopf_json))
    params = config.params()
    if config.fixture == "taft":
        if params.n < 2:
            raise ParseError("--n: the taft fixture needs n >= 2")
        return Job(config, build_taft(params))
    if config.fixture == "sweedler":
        return Job(config, build_sweedler(params))
    if config.fixture == "group":
        return Job(config, build_group_algebra(config.order, params))
    if config.fixture == "trivial":
        return Job(config, trivial_hopf(params))
    M = nichols_crossed_module(params)
    return Job(config, cross_product(M), M)


SUITE_RUNNERS: dict[str, Callable[[Job, SuiteResult], None]] = {
    name: getattr(Job, f"suite_{name}") for name in SUITES
}


def run_suite(job: Job, name: str) -> SuiteResult:
    res = SuiteResult()
    start = time.perf_counter()
    try:
        SUITE_RUNNERS[name](job, res)
    except RelationViolated as exc:
        if exc.report is not None:
            res.checks.merge(exc.report)
        res.error = f"RelationViolated: {exc}"
    except (HypothesisFailed, ValueError, ArithmeticError) as exc:
        res.error = f"{type(exc).__name__}: {exc}"
    res.elapsed = time.perf_counter() - start
    return res


def run(config: JobConfig) -> tuple[dict, int]:
    """Execute the suites in declared order; return the report and the exit code."""
    job = build_job(config)
    results = {name: run_suite(job, name) for name in config.suites}
    passed = all(r.passed for r in results.values())
    report = {
        "tool": {"name": "braidint", "version": __version__},
        "config": config.to_json(),
        "hopf": {"name": job.H.name, "object": job.H.object.to_json(), "mirrored": job.H.mirrored},
        "suite_order": list(config.suites),
        "suites": {name: r.to_json() for name, r in results.items()},
        "passed": passed,
    }
    return report, EXIT_PASS if passed else EXIT_VIOLATED


# entry point

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="braidint", description=" ".join(__doc__.strip().split("\n\n")[0].split()),
                epilog=" ".join(__doc__.strip().split("\n\n")[1].split()))
    p.add_argument("--fixture", choices=FIXTURES, help="built-in Hopf algebra")
    p.add_argument("--hopf-json", help="Hopf algebra file (as written by --dump-hopf)")
    p.add_argument("--n", type=int, help="cyclotomic order of the grading (default 3 for taft, else 1)")
    p.add_argument("--e", type=int, default=1, help="q = zeta_n^e (default 1)")
    p.add_argument("--order", type=int, default=2, help="group order for the group fixture (default 2)")
    p.add_argument("--lambda-exp", type=int, default=0, help="lambda = zeta_n^k for the exterior suite")
    p.add_argument("--suites", default=",".join(SUITES), help=f"comma list from {','.join(SUITES)}")
    p.add_argument("--degree-bound", type=int, default=6, help="largest tensor degree in the exterior suite")
    p.add_argument("--out", help="report path (default stdout)")
    p.add_argument("--dump-hopf", help="write the selected fixture as a Hopf algebra file and exit")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = JobConfig(suites=args.suites, fixture=args.fixture, hopf_json=args.hopf_json, n=args.n,
                           e=args.e, order=args.order, lambda_exp=args.lambda_exp,
                           degree_bound=args.degree_bound, out=args.out)
        if args.dump_hopf:
            Path(args.dump_hopf).write_text(canonical_json(hopf_to_dict(build_job(config).H)))
            return EXIT_PASS
        report, code = run(config)
    except ParseError as exc:
        print(f"braidint: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    emit_report(report, config.out)
    if code != EXIT_PASS:
        failed = [name for name, s in report["suites"].items() if not s["passed"]]
        print(f"braidint: failed suite(s): {', '.join(failed)}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
