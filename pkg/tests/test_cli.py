# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

import json

import pytest

from pystirling.cli.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run
from pystirling.cli.utils.families import FAMILIES
from pystirling.polyring import X, to_text
from pystirling.verification.values import BELL_EXT_MINUS_3_MINUS_5, LAMBDA_2
from tests.fixtures.families import config_file, series_file


def run_cli(capsys, *argv: str):
    code = run(list(argv))
    return code, capsys.readouterr().out


def test_family_bell(capsys):
    code, out = run_cli(capsys, "family", "bell", "--n", "4", "--k", "2")

    assert code == EXIT_OK
    assert out.strip() == "3*X2^2 + 4*X1*X3"


def test_family_bell_out_of_range(capsys):
    code, out = run_cli(capsys, "family", "bell", "--n", "3", "--k", "5")

    assert code == EXIT_OK
    assert out.strip() == "0"


def test_family_negative_indices_use_the_extension(capsys):
    code, out = run_cli(capsys, "family", "bell", "--n", "-3", "--k", "-5")

    assert code == EXIT_OK
    assert out.strip() == to_text(BELL_EXT_MINUS_3_MINUS_5)


@pytest.mark.parametrize("name", ["bell", "stirling-a", "cycle", "forest", "idempotency", "lah", "comtet"])
def test_family_routes_check(capsys, name):
    code, _ = run_cli(capsys, "family", name, "--n", "5", "--k", "2", "--check")

    assert code == EXIT_OK


def test_family_extended_routes_check(capsys):
    code, _ = run_cli(capsys, "family", "ext-stirling-a", "--n", "-2", "--k", "-4", "--check")

    assert code == EXIT_OK


def test_family_unify(capsys):
    code, out = run_cli(capsys, "family", "bell", "--n", "4", "--k", "2", "--unify")
    assert code == EXIT_OK
    assert out.strip() == "7"

    code, out = run_cli(capsys, "family", "bell", "--n", "4", "--k", "2", "--unify", "1/2", "--format", "latex")
    assert code == EXIT_OK
    assert out.strip() == "\\frac{7}{4}"


def test_family_json_from_config(capsys, config_file):
    code, out = run_cli(capsys, "family", "bell", "--n", "4", "--k", "2", "--config", config_file)

    assert code == EXIT_OK
    assert len(json.loads(out)) == 2


def test_family_latex(capsys):
    code, out = run_cli(capsys, "family", "bell", "--n", "4", "--k", "2", "--format", "latex")

    assert code == EXIT_OK
    assert out.strip() == "3X_{2}^{2}+4X_{1}X_{3}"


def test_unknown_family(capsys):
    code, _ = run_cli(capsys, "family", "fibonacci", "--n", "4", "--k", "2")

    assert code == EXIT_USAGE


def test_table(capsys):
    code, out = run_cli(capsys, "table", "stirling2", "--max-n", "3", "--format", "json")
    assert code == EXIT_OK

    documents = json.loads(out)
    assert len(documents) == 10
    assert documents[-2] == {"n": 3, "k": 2, "value": [{"coeff": {"num": "3", "den": "1"}, "exps": {}}]}


def test_table_text_and_latex(capsys):
    code, out = run_cli(capsys, "table", "bell", "--max-n", "2")
    assert code == EXIT_OK
    assert out.startswith("┌")
    assert "X1^2" in out

    code, out = run_cli(capsys, "table", "bell", "--max-n", "2", "--format", "latex", "--unify")
    assert code == EXIT_OK
    assert out.splitlines() == [
        "0 & 0 & 1 \\\\",
        "1 & 0 & 0 \\\\",
        "1 & 1 & 1 \\\\",
        "2 & 0 & 0 \\\\",
        "2 & 1 & 1 \\\\",
        "2 & 2 & 1 \\\\",
    ]


def test_table_with_config(capsys, config_file):
    code, out = run_cli(capsys, "table", "lah", "--config", config_file, "--check")

    assert code == EXIT_OK
    assert len(json.loads(out)) == 10


def test_missing_config_is_a_usage_error(capsys, tmp_path):
    code, out = run_cli(capsys, "family", "bell", "--n", "2", "--k", "1", "--config", str(tmp_path / "missing.json"))

    assert code == EXIT_USAGE
    assert out == ""


def test_invert_series_file(capsys, series_file):
    code, out = run_cli(capsys, "invert", "--series", series_file, "--check")

    assert code == EXIT_OK
    assert out.strip() == "1*x + 1/2*x^2 + 1/6*x^3 + 1/24*x^4 + O(x^5)"


def test_invert_named_series(capsys):
    code, out = run_cli(capsys, "invert", "--generator", "expm", "--order", "3", "--format", "json")

    assert code == EXIT_OK
    assert json.loads(out) == {"order": 3, "taylor": ["0", "1", "-1", "2"]}


def test_invert_random_series(capsys):
    code, out = run_cli(capsys, "invert", "--generator", "random", "--order", "5", "--seed", "3", "--check")

    assert code == EXIT_OK
    assert out.strip().endswith("O(x^6)")


def test_invert_non_invertible_series(capsys):
    code, _ = run_cli(capsys, "invert", "--generator", "one", "--order", "3")

    assert code == EXIT_USAGE


def test_lagrange(capsys):
    code, out = run_cli(capsys, "lagrange", "--n", "2", "--check")
    assert code == EXIT_OK
    assert out.strip() == to_text(LAMBDA_2)

    code, _ = run_cli(capsys, "lagrange", "--n", "2", "--a", "identity", "--phi", "expm", "--psi", "logm", "--check")
    assert code == EXIT_OK


def test_binomial(capsys):
    code, out = run_cli(capsys, "binomial", "--phi", "identity", "--max-n", "3", "--format", "json")

    assert code == EXIT_OK
    assert len(json.loads(out)) == 4


def test_binomial_check(capsys):
    code, out = run_cli(capsys, "binomial", "--phi", "random", "--max-n", "3", "--seed", "5", "--check")

    assert code == EXIT_OK
    assert "PASSED" in out


def test_knuth_pittel(capsys):
    code, out = run_cli(capsys, "knuth-pittel", "--n", "3", "--check", "--format", "json")

    assert code == EXIT_OK
    coefficients = sorted(int(term["coeff"]["num"]) for term in json.loads(out))
    assert coefficients == [1, 9, 17]


def test_ext_bell(capsys):
    code, out = run_cli(capsys, "ext-bell", "--radius", "1", "--format", "json")
    assert code == EXIT_OK
    assert len(json.loads(out)) == 3

    code, out = run_cli(capsys, "ext-bell", "--n", "-3", "--k", "-5", "--check")
    assert code == EXIT_OK
    assert out.strip() == to_text(BELL_EXT_MINUS_3_MINUS_5)


def test_ext_bell_needs_both_indices(capsys):
    code, _ = run_cli(capsys, "ext-bell", "--n", "2")

    assert code == EXIT_USAGE


def test_verify(capsys):
    code, out = run_cli(capsys, "verify", "matrix")
    assert code == EXIT_OK
    assert "PASSED" in out

    code, out = run_cli(capsys, "verify", "reciprocity", "--range", "2", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["suite"] == "reciprocity"


def test_verify_melzak_instance(capsys):
    code, out = run_cli(capsys, "verify", "melzak", "--deg", "2", "--m", "3", "--k", "1", "--format", "json")

    assert code == EXIT_OK
    assert json.loads(out)["checks"] == 1


def test_version(capsys):
    code, out = run_cli(capsys, "version")

    assert code == EXIT_OK
    assert out.startswith("pystirling ")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["family", "bell", "--n", "x", "--k", "1"],
        ["family", "bell", "--n", "1"],
        ["verify", "does-not-exist"],
        ["table", "bell", "--max-n", "-1"],
        ["lagrange", "--n", "0"],
        ["family", "bell", "--n", "1", "--k", "1", "--format", "html"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(argv) == EXIT_USAGE


def test_help(capsys):
    assert run(["--help"]) == EXIT_OK
    assert "family" in capsys.readouterr().out


def test_route_mismatch_fails(capsys, monkeypatch):
    monkeypatch.setitem(FAMILIES["bell"]["routes"], "broken", lambda n, k: X(1))

    code, _ = run_cli(capsys, "family", "bell", "--n", "4", "--k", "2", "--check")
    assert code == EXIT_FAILED

    code, _ = run_cli(capsys, "family", "bell", "--n", "4", "--k", "2")
    assert code == EXIT_OK
