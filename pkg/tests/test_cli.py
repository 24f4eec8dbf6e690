import json
import shutil
import subprocess

import pytest

from braidint.cli import (
    EXIT_PARSE,
    EXIT_PASS,
    EXIT_VIOLATED,
    SUITES,
    JobConfig,
    ParseError,
    canonical_json,
    emit_report,
    hopf_from_dict,
    hopf_to_dict,
    main,
    parse_hopf_json,
    parse_suites,
    run,
    without_timings,
)
from conftest import taft


def run_main(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


@pytest.fixture
def taft3_file(tmp_path):
    path = tmp_path / "taft3.json"
    assert main(["--fixture", "taft", "--n", "3", "--dump-hopf", str(path)]) == EXIT_PASS
    return path


def corrupt_antipode(src, dst, factor="-2"):
    data = json.loads(src.read_text())
    data["antipode"]["blocks"]["1"] = [[[factor, "0"]]]
    dst.write_text(json.dumps(data))
    return dst


def test_taft_integrals_and_radford(capsys):
    code, report, _ = run_main(capsys, "--fixture", "taft", "--n", "3", "--suites", "axioms,integrals,radford")
    assert code == EXIT_PASS
    assert report["passed"] is True
    assert report["suite_order"] == ["axioms", "integrals", "radford"]
    integrals = report["suites"]["integrals"]["artifacts"]
    assert integrals["a_is_unit"] is True
    assert integrals["alpha_is_counit"] is True
    assert all(report["suites"][s]["results"] for s in report["suite_order"])


def test_sweedler_radford_and_relations(capsys):
    code, report, _ = run_main(capsys, "--fixture", "sweedler", "--suites", "relations,radford")
    assert code == EXIT_PASS
    assert report["suite_order"] == ["radford", "relations"]
    assert report["suites"]["radford"]["passed"] and report["suites"]["relations"]["passed"]


def test_corrupted_antipode_violates_radford(capsys, taft3_file, tmp_path):
    bad = corrupt_antipode(taft3_file, tmp_path / "bad.json")
    code, report, err = run_main(capsys, "--hopf-json", str(bad), "--suites", "axioms,radford")
    assert code == EXIT_VIOLATED
    assert report["passed"] is False
    assert not report["suites"]["radford"]["passed"]
    assert report["suites"]["radford"]["witnesses"]
    assert "radford" in err


def test_wrong_block_shape_is_parse_error(capsys, taft3_file, tmp_path):
    data = json.loads(taft3_file.read_text())
    data["antipode"]["blocks"]["1"] = [[["1"], ["0"]]]
    path = tmp_path / "shape.json"
    path.write_text(json.dumps(data))
    code, report, err = run_main(capsys, "--hopf-json", str(path), "--suites", "axioms")
    assert code == EXIT_PARSE
    assert report is None
    assert "$.antipode" in err and "block 1" in err


def test_invalid_json_reports_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"object": {\n  "n": 3,,\n}}')
    with pytest.raises(ParseError, match="line 2 column"):
        parse_hopf_json(path)


@pytest.mark.parametrize("mutate,where", [
    (lambda d: d.pop("comul"), "$.comul: missing"),
    (lambda d: d["object"].update(n="three"), "$.object.n: expected int"),
    (lambda d: d["object"]["dims"].update({"1": -1}), "$.object.dims.1"),
    (lambda d: d["unit"]["blocks"].update({"0": [[["1/0"]]]}), "$.unit.blocks.0[0][0][0]"),
    (lambda d: d["unit"]["blocks"].update({"0": [[True]]}), "$.unit.blocks.0[0][0]"),
    (lambda d: d["mul"].update(blocks=[]), "$.mul.blocks: expected dict"),
    (lambda d: d.update(mirrored="no"), "$.mirrored"),
])
def test_schema_errors_name_the_field(mutate, where):
    data = hopf_to_dict(taft(3))
    mutate(data)
    with pytest.raises(ParseError) as info:
        hopf_from_dict(data)
    assert where in str(info.value)


def test_unknown_suite(capsys):
    code, report, err = run_main(capsys, "--fixture", "taft", "--suites", "axioms,bogus")
    assert code == EXIT_PARSE
    assert "bogus" in err
    for name in SUITES:
        assert name in err


@pytest.mark.parametrize("argv", [
    ["--suites", "axioms"],
    ["--fixture", "taft", "--hopf-json", "x.json"],
    ["--fixture", "nonesuch"],
    ["--fixture", "taft", "--n", "0"],
    ["--fixture", "taft", "--n", "1"],
    ["--fixture", "taft", "--n", "3", "--e", "3"],
    ["--fixture", "group", "--order", "0"],
    ["--hopf-json", "/nonexistent/file.json"],
    ["--fixture", "taft", "--n", "three"],
])
def test_bad_arguments_exit_two(capsys, argv):
    code, report, err = run_main(capsys, *argv)
    assert code == EXIT_PARSE
    assert report is None
    assert err.startswith("braidint: error:")


def test_parse_suites_keeps_declared_order():
    assert parse_suites("radford, axioms") == ("axioms", "radford")
    assert parse_suites(["products", "axioms", "axioms"]) == ("axioms", "products")
    with pytest.raises(ParseError):
        parse_suites(" , ")


def test_dump_and_load_round_trip(taft3_file):
    H = parse_hopf_json(taft3_file)
    ref = taft(3)
    for field in ("object", "mul", "unit", "comul", "counit", "antipode", "antipode_inv"):
        assert getattr(H, field) == getattr(ref, field)
    assert canonical_json(hopf_to_dict(H)) == taft3_file.read_text()


def test_file_and_fixture_give_same_results(taft3_file):
    suites = "axioms,integrals,radford,relations"
    from_fixture, _ = run(JobConfig(suites, fixture="taft", n=3))
    from_file, _ = run(JobConfig(suites, hopf_json=str(taft3_file)))
    a, b = without_timings(from_fixture), without_timings(from_file)
    assert a["suites"] == b["suites"]


def test_reports_are_deterministic():
    config = JobConfig("axioms,integrals,hopfmod,fourier", fixture="sweedler")
    first, _ = run(config)
    second, _ = run(config)
    assert canonical_json(without_timings(first)) == canonical_json(without_timings(second))
    assert "elapsed_seconds" in first["suites"]["axioms"]


def test_out_file_matches_stdout(capsys, tmp_path):
    out = tmp_path / "report.json"
    assert main(["--fixture", "trivial", "--suites", "axioms", "--out", str(out)]) == EXIT_PASS
    assert capsys.readouterr().out == ""
    report = json.loads(out.read_text())
    assert out.read_text() == canonical_json(report)
    assert emit_report(report, str(tmp_path / "copy.json")) == out.read_text()


def test_config_echo(capsys):
    code, report, _ = run_main(capsys, "--fixture", "group", "--order", "3", "--suites", "axioms")
    assert code == EXIT_PASS
    assert report["config"]["order"] == 3
    assert report["config"]["n"] is None
    assert report["hopf"]["object"]["dims"] == {"0": 3}
    assert report["tool"]["name"] == "braidint"


@pytest.mark.parametrize("argv", [
    ["--fixture", "taft", "--n", "2"],
    ["--fixture", "taft", "--n", "4", "--lambda-exp", "2", "--degree-bound", "5"],
    ["--fixture", "trivial", "--n", "3"],
])
def test_all_suites_pass(capsys, argv):
    code, report, _ = run_main(capsys, *argv)
    assert code == EXIT_PASS, [s for s, r in report["suites"].items() if not r["passed"]]
    assert report["suite_order"] == list(SUITES)


def test_exterior_needs_nilpotent_factorial(capsys):
    code, report, _ = run_main(capsys, "--fixture", "sweedler", "--suites", "exterior")
    assert code == EXIT_VIOLATED
    assert report["suites"]["exterior"]["error"].startswith("HypothesisFailed")


def test_nichols_products(capsys):
    code, report, _ = run_main(capsys, "--fixture", "nichols", "--suites", "axioms,products")
    assert code == EXIT_PASS
    assert report["hopf"]["object"]["dims"] == {"0": 4}
    assert "nichols(N=2)" in report["suites"]["products"]["artifacts"]["cross_product_scalars"]


@pytest.mark.skipif(shutil.which("braidint") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["braidint", "--fixture", "taft", "--n", "2", "--suites", "axioms"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == EXIT_PASS
    assert json.loads(proc.stdout)["passed"] is True
