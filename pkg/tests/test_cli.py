"""End-to-end CLI behaviour: golden output, formats, and exit codes."""

import pathlib
import subprocess
import sys

import pytest

import schreier.core as core
from schreier import cli

GOLDEN = pathlib.Path(__file__).parent / "data" / "table1.csv"


def run_cli(args):
    return subprocess.run(
        [sys.executable, "-m", "schreier", *args],
        capture_output=True,
        timeout=120,
    )


def main_out(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- table ---------------------------------------------------------------


@pytest.mark.parametrize("source", ["closed", "recurrence", "oracle"])
def test_table_csv_matches_golden_file(capsys, source):
    code, out, err = main_out(
        capsys,
        ["table", "--k-max", "7", "--n-max", "16", "--source", source, "--format", "csv"],
    )
    assert code == 0
    assert err == ""
    assert out == GOLDEN.read_text()


def test_table_subprocess_is_byte_stable():
    args = ["table", "--k-max", "7", "--n-max", "16", "--source", "closed", "--format", "csv"]
    first = run_cli(args)
    second = run_cli(args)
    assert first.returncode == 0
    assert first.stdout == second.stdout == GOLDEN.read_bytes()
    assert first.stdout.endswith(b"\n")
    assert b"\r" not in first.stdout


def test_table_json_layout(capsys):
    code, out, _ = main_out(
        capsys,
        ["table", "--k-max", "7", "--n-max", "16", "--format", "json"],
    )
    assert code == 0
    assert out.startswith('{"k_max":7,"n_max":16,"source":"closed","cells":[[')
    assert out.endswith("]]}\n")
    assert out.count("\n") == 1


def test_table_text_single_cell(capsys):
    code, out, _ = main_out(
        capsys,
        ["table", "--k-max", "1", "--n-max", "1", "--source", "oracle", "--format", "text"],
    )
    assert code == 0
    assert out == "k\\n  1\n  1  2\n"


# -- enumerate -----------------------------------------------------------


def test_enumerate_family_a_formats(capsys):
    base = ["enumerate", "--family", "A", "--k", "2", "--n", "3"]
    code, out, _ = main_out(capsys, base)
    assert code == 0
    assert out == "{}\n{2}\n{3}\n{2,3}\n"

    code, out, _ = main_out(capsys, base + ["--format", "csv"])
    assert code == 0
    assert out == "\n2\n3\n2,3\n"

    code, out, _ = main_out(capsys, base + ["--format", "json"])
    assert code == 0
    assert out == '{"family":"A","k":2,"n":3,"count":4,"sets":[[],[2],[3],[2,3]]}\n'


def test_enumerate_family_k(capsys):
    code, out, _ = main_out(capsys, ["enumerate", "--family", "K", "--n", "5"])
    assert code == 0
    assert out == "{5}\n{2,3,5}\n{3,4,5}\n"

    code, out, _ = main_out(
        capsys, ["enumerate", "--family", "K", "--n", "6", "--format", "json"]
    )
    assert code == 0
    assert out == (
        '{"family":"K","n":6,"count":5,'
        '"sets":[[6],[2,3,6],[3,4,6],[3,5,6],[4,5,6]]}\n'
    )


def test_enumerate_ratio_family(capsys):
    code, out, _ = main_out(
        capsys, ["enumerate", "--family", "mpq", "--p", "1", "--q", "1", "--n", "4"]
    )
    assert code == 0
    assert out == "{4}\n{2,4}\n{3,4}\n"


# -- sequence ------------------------------------------------------------


def test_sequence_fib_text(capsys):
    code, out, _ = main_out(capsys, ["sequence", "--name", "fib", "--n-max", "5"])
    assert code == 0
    assert out == "0 0\n1 1\n2 1\n3 2\n4 3\n5 5\n"


def test_sequence_k_count_starts_at_two(capsys):
    code, out, _ = main_out(capsys, ["sequence", "--name", "k-count", "--n-max", "6"])
    assert code == 0
    assert out == "2 1\n3 1\n4 2\n5 3\n6 5\n"


def test_sequence_a_diag_csv(capsys):
    code, out, _ = main_out(
        capsys, ["sequence", "--name", "a-diag", "--n-max", "5", "--format", "csv"]
    )
    assert code == 0
    assert out == "n,value\n1,2\n2,2\n3,4\n4,6\n5,10\n"


def test_sequence_json(capsys):
    code, out, _ = main_out(
        capsys, ["sequence", "--name", "fib", "--n-max", "3", "--format", "json"]
    )
    assert code == 0
    assert out == '{"name":"fib","start":0,"values":[0,1,1,2]}\n'


# -- verify --------------------------------------------------------------


def test_verify_suite_passes(capsys):
    code, out, _ = main_out(
        capsys, ["verify", "--suite", "eq3_9", "--n-max", "10", "--k-max", "3"]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("PASS fib-transform-closed-vs-operator")
    assert lines[-1] == "suite eq3_9: 1/1 checks passed (44 instances) OK"


def test_verify_failure_sets_exit_code(capsys):
    core.fib(30)
    saved = core._FIB[10]
    core._FIB[10] = saved + 1
    try:
        code, out, _ = main_out(
            capsys, ["verify", "--suite", "identities", "--n-max", "20"]
        )
    finally:
        core._FIB[10] = saved
    assert code == 1
    assert "FAIL" in out
    assert "first counterexample" in out
    assert out.rstrip().endswith("FAILED")


# -- exit codes ----------------------------------------------------------


def test_usage_errors_exit_two(capsys):
    code, _, err = main_out(capsys, ["enumerate", "--family", "A", "--n", "5"])
    assert code == 2
    assert err.startswith("schreier: ")

    code, _, err = main_out(
        capsys, ["enumerate", "--family", "K", "--n", "5", "--k", "2"]
    )
    assert code == 2
    assert "only --n" in err


def test_argparse_rejects_unknown_suite():
    result = run_cli(["verify", "--suite", "nope"])
    assert result.returncode == 2
    assert b"invalid choice" in result.stderr


def test_size_limit_exits_three(capsys, monkeypatch):
    monkeypatch.setenv("SCHREIER_MAX_ORACLE_N", "6")
    code, _, err = main_out(
        capsys, ["table", "--k-max", "1", "--n-max", "8", "--source", "oracle"]
    )
    assert code == 3
    assert err.startswith("schreier: ")
