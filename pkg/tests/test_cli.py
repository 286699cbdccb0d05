import json
import re
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from arctanderiv import arctan_derivative_closed, identities
from arctanderiv.cli import main


def run_cli(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_qpoly_text(capsys):
    code, out, _ = run_cli(capsys, "qpoly", "2")
    assert code == 0
    assert out == "3*x^2 - 1\n"
    code, out, _ = run_cli(capsys, "qpoly", "0")
    assert code == 0
    assert out == "1\n"


def test_qpoly_csv(capsys):
    code, out, _ = run_cli(capsys, "qpoly", "3", "--format=csv")
    assert code == 0
    assert out == "power,numerator,denominator\n1,4,1\n3,-4,1\n"


def test_qpoly_json_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "qpoly", "3", "--format=json")
    assert code == 0
    document = json.loads(out)
    assert document == {
        "n": 3,
        "terms": [
            {"power": 1, "numerator": 4, "denominator": 1},
            {"power": 3, "numerator": -4, "denominator": 1},
        ],
    }
    assert json.dumps(document, indent=2) == out.rstrip("\n")


def test_derive_symbolic_text(capsys):
    code, out, _ = run_cli(capsys, "derive", "2", "--method=closed")
    assert code == 0
    assert out == "(-2*x) / (1+x^2)^2\n"
    code, out, _ = run_cli(capsys, "derive", "1", "--method=oracle")
    assert code == 0
    assert out == "(1) / (1+x^2)^1\n"


def test_derive_pointwise_text(capsys):
    code, out, _ = run_cli(capsys, "derive", "3", "--method=fdb", "--x=0")
    assert code == 0
    assert out == "-2\n"


def test_derive_symbolic_with_evaluation(capsys):
    code, out, _ = run_cli(capsys, "derive", "4", "--method=prop12", "--x=1/2")
    assert code == 0
    expected = arctan_derivative_closed(4).evaluate(Fraction(1, 2))
    assert out == f"{expected}\n"


def test_derive_json(capsys):
    code, out, _ = run_cli(capsys, "derive", "2", "--method=closed", "--format=json")
    assert code == 0
    document = json.loads(out)
    assert document == {
        "n": 2,
        "method": "closed",
        "numerator": [{"power": 1, "numerator": -2, "denominator": 1}],
        "denominator_exponent": 2,
    }
    assert json.dumps(document, indent=2) == out.rstrip("\n")


def test_derive_csv(capsys):
    code, out, _ = run_cli(capsys, "derive", "3", "--method=closed", "--format=csv")
    assert code == 0
    assert out == (
        "power,numerator,denominator,denominator_exponent\n"
        "0,-2,1,3\n"
        "2,6,1,3\n"
    )


def test_derive_usage_errors(capsys):
    code, _, err = run_cli(capsys, "derive", "3", "--method=fdb")
    assert code == 2
    assert "fdb" in err
    code, _, _ = run_cli(capsys, "derive", "0", "--method=closed")
    assert code == 2
    code, _, _ = run_cli(capsys, "derive", "2", "--method=nope")
    assert code == 2
    code, _, _ = run_cli(capsys, "derive", "2", "--x=2/-3")
    assert code == 2
    code, _, _ = run_cli(capsys, "derive", "2", "--x=1/0")
    assert code == 2


def test_check_identity_pass(capsys):
    code, out, _ = run_cli(capsys, "check-identity", "50")
    assert code == 0
    assert "PASS" in out


def test_check_identity_json(capsys):
    code, out, _ = run_cli(capsys, "check-identity", "30", "--format=json")
    assert code == 0
    document = json.loads(out)
    assert document["n_max"] == 30
    assert document["failures"] == []
    assert document["passed"] is True
    assert document["cases"] == sum(n // 2 + 1 for n in range(31))
    assert json.dumps(document, indent=2) == out.rstrip("\n")


def test_check_identity_csv(capsys):
    code, out, _ = run_cli(capsys, "check-identity", "10", "--format=csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "check,n_max,cases,failures,passed"
    assert lines[1] == "check-identity,10,36,0,True"


def test_check_commands_pass(capsys):
    assert run_cli(capsys, "check-corollary", "60")[0] == 0
    assert run_cli(capsys, "check-2f1", "25")[0] == 0
    assert run_cli(capsys, "crosscheck", "8", "--points=0,1,-1,1/2")[0] == 0


def test_mutated_check_exits_one(capsys, monkeypatch):
    # Force a mathematical mismatch to prove failures surface as exit code 1.
    monkeypatch.setattr(
        identities,
        "alternating_binomial_closed_form",
        lambda n, m: Fraction(1, 3),
    )
    code, out, _ = run_cli(capsys, "check-identity", "6")
    assert code == 1
    assert "FAIL" in out
    code, out, _ = run_cli(capsys, "check-identity", "6", "--format=json")
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_malformed_arguments_exit_two(capsys):
    assert run_cli(capsys, "qpoly", "not-a-number")[0] == 2
    assert run_cli(capsys, "qpoly", "-3")[0] == 2
    assert run_cli(capsys, "crosscheck", "0")[0] == 2
    assert run_cli(capsys, "crosscheck", "5", "--points=1,,")[0] == 2
    assert run_cli(capsys, "no-such-command")[0] == 2


def test_bench_empty_table(capsys):
    code, out, _ = run_cli(capsys, "bench", "0")
    assert code == 0
    assert out == "method,n,micros\n"


def test_bench_rows(capsys):
    code, out, _ = run_cli(capsys, "bench", "10")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "method,n,micros"
    rows = [line.split(",") for line in lines[1:]]
    assert [r[0] for r in rows] == ["closed"] * 4 + ["prop12"] * 4 + ["oracle"] * 4 + ["fdb"] * 4
    assert [r[1] for r in rows] == ["1", "2", "5", "10"] * 4
    assert all(int(r[2]) >= 0 for r in rows)


@given(st.fractions(max_denominator=10**6))
def test_rational_rendering_is_bijective(value):
    text = str(value)
    assert re.fullmatch(r"-?\d+(/[1-9]\d*)?", text)
    assert Fraction(text) == value
