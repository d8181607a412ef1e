import re

import pytest

from maxwelter.cli import main
from maxwelter.verify import SuiteReport


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_grundy_prints_bare_integer(capsys):
    code, out, _ = run(capsys, "grundy", "1,2,5")
    assert code == 0
    assert out == "3\n"


def test_grundy_flags(capsys):
    code, out, _ = run(capsys, "grundy", "1,2", "--ruleset", "welter")
    assert (code, out) == (0, "2\n")
    code, out, _ = run(capsys, "grundy", "2,3", "--convention", "misere")
    assert (code, out) == (0, "1\n")


def test_unsorted_squares_warn_and_sort(capsys):
    code, out, err = run(capsys, "grundy", "5,1,2")
    assert code == 0
    assert out == "3\n"
    assert "unsorted" in err


def test_duplicate_squares_are_a_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["grundy", "3,3"])
    assert excinfo.value.code == 2


@pytest.mark.parametrize(
    "squares,expected",
    [
        ("2,3", "grundy=0 outcome=P rule=thm2.1"),
        ("0,2", "grundy=1 outcome=N rule=thm3.1a"),
        ("3,4", "grundy=1 outcome=N rule=thm3.1b"),
        ("1,2,5", "grundy=3 outcome=N rule=none"),
        ("7", "grundy=7 outcome=N rule=none"),
    ],
)
def test_classify(capsys, squares, expected):
    code, out, _ = run(capsys, "classify", squares)
    assert code == 0
    assert out.strip() == expected


def test_strategy(capsys):
    code, out, _ = run(capsys, "strategy", "1,2,5")
    assert (code, out.strip()) == (0, "from=5 to=0")
    code, out, _ = run(capsys, "strategy", "2,3")
    assert (code, out.strip()) == (0, "p-position (every move loses)")
    code, out, _ = run(capsys, "strategy", "0,1,2")
    assert (code, out.strip()) == (0, "terminal")
    code, out, _ = run(capsys, "strategy", "9")
    assert (code, out.strip()) == (0, "from=9 to=0")


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "0,1,5")
    assert (code, out.strip()) == (0, "0,4")


def test_welter(capsys):
    code, out, _ = run(capsys, "welter", "2,5,6,8,10")
    assert (code, out.strip()) == (0, "15")


def test_verify_suite_passes(capsys, tmp_path):
    out_file = tmp_path / "report.txt"
    code, out, _ = run(
        capsys,
        "verify", "--suite", "thm3.1", "--k", "2..4", "--max-square", "12",
        "--out", str(out_file), "--jobs", "1",
    )
    assert code == 0
    assert "suite=thm3.1" in out
    assert "counterexamples=0" in out
    assert out_file.read_text().startswith("suite=thm3.1")


def test_verify_exit_one_iff_counterexamples(capsys, monkeypatch):
    from maxwelter import cli
    from maxwelter.core import Position

    def fake_run_suite(suite_id, space, **kwargs):
        report = SuiteReport(suite_id=suite_id)
        report.counterexamples.append((Position([1, 2]), 0, 1))
        return report

    monkeypatch.setattr(cli, "run_suite", fake_run_suite)
    code, out, _ = run(capsys, "verify", "--suite", "thm2.1", "--k", "2..2", "--max-square", "4")
    assert code == 1
    assert "counterexamples=1" in out


def test_verify_unknown_suite_is_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "--suite", "thm9.7", "--k", "2..3", "--max-square", "5"])
    assert excinfo.value.code == 2


def test_scan_62_record(capsys):
    code, out, _ = run(
        capsys,
        "scan", "--conjecture", "6.2", "--a", "0", "--m", "1", "--k", "1",
        "--horizon", "100",
    )
    assert code == 0
    assert out.strip() == "kind=conj6.2 a=0 m=1 k=1 horizon=100 n0=0 period=2 verified=true"


def test_scan_61_record(capsys):
    code, out, _ = run(capsys, "scan", "--conjecture", "6.1", "--squares", "0,2,5", "--horizon", "100")
    assert code == 0
    assert re.fullmatch(
        r"kind=conj6\.1 squares=0,2,5 horizon=100 n0=\d+ period=\d+ verified=(true|false)",
        out.strip(),
    )


def test_scan_validates_parameters():
    with pytest.raises(SystemExit) as excinfo:
        main(["scan", "--conjecture", "6.2", "--a", "0", "--m", "1"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["scan", "--conjecture", "6.1", "--squares", "1,2,3"])
    assert excinfo.value.code == 2
