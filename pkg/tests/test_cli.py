import json

import pytest

from ddcrit.cli import main, parse_laurent
from ddcrit.gf import make_field

F3 = make_field(3, 1)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_laurent_grammar():
    lp = parse_laurent(F3, "2*t^-5+t^-1")
    assert {e: c.coeffs[0] for e, c in lp.terms()} == {-5: 2, -1: 1}
    lp = parse_laurent(F3, "t^-1-1+t")
    assert {e: c.coeffs[0] for e, c in lp.terms()} == {-1: 1, 0: 2, 1: 1}
    lp = parse_laurent(F3, "2")
    assert lp.term_dict() == {0: F3.from_int(2)}
    with pytest.raises(ValueError):
        parse_laurent(F3, "2*^-1")
    with pytest.raises(ValueError):
        parse_laurent(F3, "")


def test_reduce_jumps_cli(capsys):
    code, out, _ = run(
        capsys, "--compact", "reduce-jumps", "--p", "5", "--m", "2",
        "--jumps", "11,79,433,2165",
    )
    assert code == 0
    assert json.loads(out) == [1, 9, 53, 265]


def test_check_cli_pass(capsys):
    code, out, _ = run(
        capsys, "check", "--p", "3", "--m", "2", "--u", "5", "--n1", "8",
        "--f", "1,0,0,0,0,0,1,0,1",
    )
    assert code == 0
    data = json.loads(out)
    assert data["flags"] == {"ddc": True, "power_sum": True, "isolated": True}


def test_check_cli_fail_exit_code(capsys):
    code, out, _ = run(
        capsys, "check", "--p", "3", "--m", "2", "--u", "5", "--n1", "8",
        "--f", "1,0,0,0,0,0,0,0,1",
    )
    assert code == 1
    assert json.loads(out)["flags"]["ddc"] is False


def test_invalid_input_exit_code(capsys):
    code, _, err = run(
        capsys, "check", "--p", "4", "--m", "2", "--u", "1", "--n1", "2",
        "--f", "2,0,1",
    )
    assert code == 2
    assert "error" in err


def test_search_cli(capsys):
    code, out, _ = run(
        capsys, "--compact", "search", "--p", "3", "--m", "2", "--u", "1",
        "--n1", "2", "--isolated",
    )
    assert code == 0
    assert json.loads(out)["f"] == [[2], [0], [1]]


def test_search_cli_not_found(capsys):
    code, out, _ = run(
        capsys, "search", "--p", "3", "--m", "2", "--u", "1", "--n1", "4",
    )
    assert code == 1
    assert json.loads(out)["found"] is False


def test_plan_cli(capsys):
    code, out, _ = run(capsys, "plan", "--p", "3", "--m", "2", "--n", "2")
    assert code == 0
    data = json.loads(out)
    assert len(data["quadruples"]) == 4
    assert data["profiles"] == [[1, 3], [1, 5], [1, 7], [5, 15], [5, 17], [5, 19]]
    assert len(data["radii"]) == 6


def test_construct_cli(capsys):
    code, out, _ = run(capsys, "construct", "d9")
    assert code == 0
    assert len(json.loads(out)) == 4

    code, out, _ = run(capsys, "construct", "small", "--p", "5", "--n1", "4")
    assert code == 0
    assert json.loads(out)["flags"]["isolated"] is True

    code, out, _ = run(capsys, "construct", "trace", "--p", "3", "--m", "2", "--u", "5")
    assert code == 0
    data = json.loads(out)
    assert data["flags"]["power_sum"] is True
    assert data["flags"]["isolated"] is False


def test_witt_breaks_cli(capsys):
    code, out, _ = run(
        capsys, "witt", "breaks", "--p", "3", "--entries", "t^-9;2*t^-5+t^-1"
    )
    assert code == 0
    data = json.loads(out)
    assert data["breaks"] == [1, 5]
    assert data["extension_degree"] == 1


def test_byte_stable_output(capsys):
    args = ("--compact", "plan", "--p", "3", "--m", "2", "--n", "2")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
