import json

import pytest

from vincular.cli import main

EX25_IN = "215562213422116535443543654211"
EX25_OUT = "215562212234111125635443453456"
EX33_IN = "3656264116356143254163423"
EX33_OUT = "3566246113566134245136423"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.mark.parametrize("argv,expected", [
    (["--pattern", "11-12", "--n", "4", "--k", "2"], "15"),
    (["--pattern", "1-34-2", "--n", "3", "--k", "9"], "729"),
    (["--pattern", "132-1", "--n", "0", "--k", "4"], "1"),
])
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, "count", *argv)
    assert code == 0 and out == expected


def test_count_refinements(capsys):
    code, out, _ = run(capsys, "count", "--pattern", "12-1", "--n", "3", "--k", "2", "--prefix", "2")
    assert code == 0 and out == "4"
    code, out, _ = run(capsys, "count", "--pattern", "11", "--n", "3", "--k", "3", "--content", "112")
    assert code == 0 and out == "1"


def test_count_json(capsys):
    code, out, _ = run(capsys, "--output", "json", "count", "--pattern", "11-12", "--n", "4", "--k", "2")
    assert code == 0 and json.loads(out)["count"] == 15


def test_parse_error_and_guardrail(capsys):
    code, _, err = run(capsys, "count", "--pattern", "1--2", "--n", "2", "--k", "2")
    assert code == 2 and "position 2" in err
    code, _, err = run(capsys, "--guardrail", "10", "count", "--pattern", "12", "--n", "5", "--k", "3")
    assert code == 3
    code, _, _ = run(capsys, "count", "--pattern", "12")
    assert code == 2


def test_biject_run_migration(capsys):
    code, out, _ = run(capsys, "biject", "--theorem", "2.5", "--sigma", "11", "--k", "6", "--word", EX25_IN)
    assert code == 0 and out == EX25_OUT
    code, out, _ = run(capsys, "biject", "--theorem", "2.5", "--sigma", "11", "--k", "6",
                       "--word", EX25_OUT, "--inverse")
    assert code == 0 and out == EX25_IN


def test_biject_trace(capsys):
    code, out, _ = run(capsys, "biject", "--theorem", "2.5", "--sigma", "11", "--k", "6",
                       "--word", EX25_IN, "--trace")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("pi_1 = ") and lines[-1] == EX25_OUT


def test_biject_interchange(capsys):
    # the worked input contains 134-2, so only the unchecked run reproduces it
    code, _, err = run(capsys, "biject", "--theorem", "3.3a", "--k", "6", "--word", EX33_IN)
    assert code == 4 and "134-2" in err
    code, out, _ = run(capsys, "biject", "--theorem", "3.3a", "--k", "6", "--word", EX33_IN, "--no-check")
    assert code == 0 and out == EX33_OUT


def test_gf(capsys):
    code, out, _ = run(capsys, "gf", "--theorem", "4.1", "--subword", "111", "--k", "1", "--order", "6")
    assert code == 0 and out.splitlines()[-1] == "1 1 1 1 1 1 1"
    code, out, _ = run(capsys, "gf", "--theorem", "4.5", "--k", "4", "--order", "10", "--verify")
    assert code == 0 and "matches enumeration" in out
    code, _, _ = run(capsys, "gf", "--theorem", "4.10", "--k", "2")
    assert code == 2
    code, _, _ = run(capsys, "gf", "--theorem", "4.10", "--k", "3")
    assert code == 5
    code, out, _ = run(capsys, "gf", "--theorem", "4.10", "--k", "3", "--order", "6",
                       "--route", "first-letter", "--verify")
    assert code == 0
    code, _, _ = run(capsys, "gf", "--theorem", "4.2", "--k", "2", "--route", "nope")
    assert code == 2


def test_gf_json(capsys):
    code, out, _ = run(capsys, "--output", "json", "gf", "--theorem", "4.5", "--k", "4", "--order", "4")
    rec = json.loads(out)
    assert rec["pattern"] == "113-2" and rec["coeffs"][:3] == ["1", "4", "16"]


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--type", "4", "--n-max", "6", "--k-max", "3")
    assert code == 0 and out
    code, out, _ = run(capsys, "--output", "json", "classify", "--type", "2,1", "--n-max", "5", "--k-max", "3")
    assert code == 0
    for line in out.splitlines():
        json.loads(line)
    code, _, _ = run(capsys, "classify", "--type", "0,3")
    assert code == 2


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bijections", "--n-max", "4", "--k-max", "3")
    assert code == 0
    assert out.splitlines()[-1].endswith("checks passed")
