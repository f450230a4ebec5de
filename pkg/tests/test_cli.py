"""
Tests for the weilgroups command-line interface.
"""

import json

import pytest

from weilgroups.cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, build_parser, main
from weilgroups.groups import group_label, parse_group_label


def run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_classify_json(capsys):
    code, record = run_json(capsys, "classify", "--poly", "9,-2,1", "--q", "9")
    assert code == EXIT_OK
    assert record["total_count"] == 2
    assert record["groups"] == ["Z/8", "Z/2 + Z/4"]
    assert record["truncated"] is False
    assert record["per_prime"]["2"]["exponent"] == 3
    assert record["per_prime"]["2"]["newton_polygon"]["vertices"] == [[0, "3/1"], [2, "0/1"]]
    for label in record["groups"]:
        assert group_label(parse_group_label(label)) == label


def test_classify_limit(capsys):
    """--limit truncates the listing but not the total count."""
    code, record = run_json(capsys, "classify", "--poly", "t^2 - 2t + 9", "--q", "9", "--limit", "1")
    assert code == EXIT_OK
    assert record["groups"] == ["Z/8"]
    assert record["truncated"] is True
    assert record["total_count"] == 2


def test_classify_is_deterministic(capsys):
    main(["classify", "--poly", "8,-1,1", "--q", "8", "--format", "json"])
    first = capsys.readouterr().out
    main(["classify", "--poly", "8,-1,1", "--q", "8", "--format", "json"])
    assert capsys.readouterr().out == first


def test_classify_text(capsys):
    """Text output lists each group with its invariant factors."""
    assert main(["classify", "--poly", "9,-2,1", "--q", "9"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Total: 2" in out
    assert "Z/8  [8]" in out
    assert "Z/2 + Z/4  [2 | 4]" in out


def test_elliptic_text(capsys):
    assert main(["elliptic", "--q", "9", "--b", "6"]) == EXIT_OK
    assert "Z/2 + Z/2  [2 | 2]" in capsys.readouterr().out


def test_classify_multiple_roots(capsys):
    assert main(["classify", "--poly", "9,-6,1", "--q", "9"]) == EXIT_ERROR
    assert "main theorem requires no multiple roots" in capsys.readouterr().err


def test_classify_multiple_roots_json(capsys):
    code, record = run_json(capsys, "classify", "--poly", "9,-6,1", "--q", "9")
    assert code == EXIT_ERROR
    assert record["error"]["code"] == "multiple_roots"


@pytest.mark.parametrize(
    "argv, code",
    [
        (["classify", "--poly", "9,-2,1", "--q", "9", "--limit", "0"], "invalid_argument"),
        (["classify", "--poly", "t^2 + y", "--q", "9"], "polynomial_format"),
        (["classify", "--poly", "(", "--q", "9"], "polynomial_format"),
        (["classify", "--poly", "t^2-2*t+9)", "--q", "9"], "polynomial_format"),
        (["classify", "--poly", "9^9^9^9", "--q", "9"], "polynomial_format"),
        (["classify", "--poly", "t^100000000", "--q", "9"], "polynomial_format"),
        (["check", "--poly", "9,-2,1", "--group", "Z/4"], "wrong_order"),
        (["check", "--poly", "9,-2,1", "--group", "Z/"], "group_label"),
        (["witness", "--poly", "9,-2,1", "--group", "Z/8", "--prime", "4"], "not_prime"),
        (["witness", "--poly", "8,-1,1", "--group", "Z/8 + Z/3", "--prime", "2"], "invalid_argument"),
        (["elliptic", "--q", "9", "--b", "7"], "not_weil_polynomial"),
        (["conjecture", "--factors", "9,-2,1", "3,1", "--prime", "2", "--q", "81"], "factors_not_nested"),
    ],
)
def test_error_codes(capsys, argv, code):
    exit_code, record = run_json(capsys, *argv)
    assert exit_code == EXIT_ERROR
    assert record["error"]["code"] == code


def test_validate(capsys):
    code, record = run_json(capsys, "validate", "--poly", "5,-3,1", "--q", "5")
    assert code == EXIT_OK
    assert record["verdict"] == "accepted"
    assert record["order_n"] == "3"

    assert main(["validate", "--poly", "5,-5,1", "--q", "5"]) == EXIT_NEGATIVE
    assert "rejected" in capsys.readouterr().out


def test_check(capsys):
    code, record = run_json(capsys, "check", "--poly", "9,-2,1", "--q", "9", "--group", "Z/8")
    assert code == EXIT_OK
    assert record["realizable"] is True

    code, record = run_json(capsys, "check", "--poly", "8,-1,1", "--group", "Z/2 + Z/4")
    assert code == EXIT_NEGATIVE
    assert record["diagnostics"][0]["status"] == "polygon_failure"
    assert record["diagnostics"][0]["first_failing_abscissa"] == 1


def test_witness(capsys):
    code, record = run_json(
        capsys, "witness", "--poly", "9,-2,1", "--group", "Z/2 + Z/4", "--prime", "2"
    )
    assert code == EXIT_OK
    assert record["verified"] is True
    assert record["group"] == "Z/2 + Z/4"
    assert record["matrix"]["rows"] == [["0/1", "-4/1"], ["2/1", "0/1"]]
    assert record["basis"]["corrections"] == ["0/1", "1/1"]


def test_witness_polygon_condition(capsys):
    """The first failing abscissa travels in the error details."""
    code, record = run_json(
        capsys, "witness", "--poly", "8,-1,1", "--group", "Z/2 + Z/4", "--prime", "2"
    )
    assert code == EXIT_ERROR
    assert record["error"]["code"] == "polygon_condition_violated"
    assert record["error"]["details"]["s"] == "1"


def test_elliptic(capsys):
    code, record = run_json(capsys, "elliptic", "--q", "9", "--b", "6")
    assert code == EXIT_OK
    assert record["groups"] == ["Z/2 + Z/2"]
    assert record["supersingular_double_root"] is True


def test_conjecture(capsys):
    code, record = run_json(capsys, "conjecture", "--factors", "27,3,1,1", "3,1", "--prime", "2")
    assert code == EXIT_OK
    assert record["conjectural"] is True
    assert record["groups"][0] == "Z/4 + Z/32"
    assert "Z/8 + Z/16" not in record["groups"]
    assert len(record["groups"]) == 5


def test_oracle(capsys):
    code, record = run_json(capsys, "oracle", "--poly", "9,-2,1", "--prime", "2")
    assert code == EXIT_OK
    assert record["agrees"] is True
    assert record["bound"] == 5
    assert record["achievable"] == ["Z/8", "Z/2 + Z/4"]


def test_oracle_budget_from_environment(capsys, monkeypatch):
    """WEILGROUPS_ORACLE_BUDGET caps the enumeration."""
    monkeypatch.setenv("WEILGROUPS_ORACLE_BUDGET", "16")
    code, record = run_json(capsys, "oracle", "--poly", "9,-2,1", "--prime", "2")
    assert code == EXIT_ERROR
    assert record["error"]["code"] == "budget_exceeded"


def test_fixtures(capsys):
    code, record = run_json(capsys, "fixtures")
    assert code == EXIT_OK
    assert all(outcome["passed"] for outcome in record), record


def test_fixtures_hidden_from_help():
    assert "fixtures" not in build_parser().format_help()


def test_no_command(capsys):
    """Without a subcommand the usage text is printed and the exit status is 2."""
    assert main([]) == EXIT_ERROR
    assert "usage" in capsys.readouterr().out


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
