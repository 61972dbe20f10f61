import json
from pathlib import Path

import pytest

from cyquot import checks
from cyquot.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("golden,argv", [
    ("cli_repthy_table_n4.json", ["repthy", "table", "--n", "4"]),
    ("cli_ledger_plus.json", ["resolver", "ledger", "--sign", "plus"]),
])
def test_golden_reports(capsys, golden, argv):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert out == (GOLDEN / golden).read_text()


def test_ledger_plus_is_expected_fail(capsys):
    code, out, _ = run(capsys, "resolver", "ledger", "--sign", "plus")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert [c["status"] for c in rep["checks"]] == ["expected-fail"]


def test_report_schema_and_echo(capsys):
    code, out, _ = run(capsys, "repthy", "table", "--n", "3", "--seed", "4")
    rep = json.loads(out)
    assert rep["schema"] == "cyquot-report/1"
    assert rep["config"]["seed"] == 4 and rep["config"]["n"] == [3]
    assert "out" not in rep["config"] and "timings" not in rep["config"]
    assert all("elapsed_s" not in c for c in rep["checks"])
    assert rep["ok"] is True


def test_timings_flag(capsys):
    _, out, _ = run(capsys, "repthy", "table", "--n", "3", "--timings")
    assert all("elapsed_s" in c for c in json.loads(out)["checks"])


def test_same_seed_same_bytes(capsys):
    argv = ["dualgeom", "n2", "--prime", "101", "--seed", "3", "--trials", "4"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == EXIT_OK
    assert first[1] == second[1]


def test_out_file_and_text(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "resolver", "ledger", "--sign", "minus", "--out", str(path))
    assert code == EXIT_OK
    assert json.loads(path.read_text())["ok"] is True
    assert "1 checks: 1 pass" in out


@pytest.mark.parametrize("argv", [
    ["ellkummer", "census", "--prime", "4"],
    ["ellkummer", "census", "--prime", "3"],
    ["ellkummer", "census", "--prime", "0"],
    ["dualgeom", "n2", "--prime", "101", "--curve", "0,0"],
    ["repthy", "table", "--n", "9"],
    ["resolver", "n3", "--h", "x0^^2"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == EXIT_USAGE


def test_model_gap_fails(capsys):
    code, out, _ = run(capsys, "resolver", "n3", "--hprime", "x1^2")
    assert code == EXIT_FAIL
    assert json.loads(out)["ok"] is False


def test_census_small(capsys):
    code, out, _ = run(capsys, "ellkummer", "census", "--prime", "7", "--n", "3")
    assert code == EXIT_OK


def test_scenarios_command(capsys):
    code, out, _ = run(capsys, "resolver", "n3", "--scenarios", str(checks.MANIFEST.parent / "resolver_scenarios.ini"))
    assert code == EXIT_OK


def test_manifest_covers_registry():
    ids = [e["id"] for e in checks.load_manifest()["checks"]]
    assert len(ids) == 18 and len(set(ids)) == 18
    assert set(ids) == set(checks.REGISTRY)
    assert all(e["anchor"] for e in checks.load_manifest()["checks"])
