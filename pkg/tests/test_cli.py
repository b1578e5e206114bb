"""
Tests for the command-line interface.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import json

import pytest

from cobordism_mcp import cli
from cobordism_mcp.checks import CheckReport

CLOSED_TERM = (
    "coev ; (a^2 * id(-)) ; swap(+,-) ; ev ; "
    "coev ; (a^1 * id(-)) ; swap(+,-) ; ev"
)


@pytest.fixture
def matrix_file(tmp_path):
    path = tmp_path / "matrix.json"
    path.write_text(json.dumps({"dim": 2, "entries": [[1, 0], [0, "3/2"]]}))
    return str(path)


class TestNormalize:
    """Tests for the normalize command."""

    def test_text(self, capsys):
        """Test printing the normal form."""
        assert cli.main(["normalize", "--term", "a^2 ; a^3"]) == 0
        out = capsys.readouterr().out
        assert out.strip() == "src=+; tgt=+; arcs=[(s0,t0,5)]; circles=[]"

    def test_structured(self, capsys):
        """Test the structured output format."""
        code = cli.main(
            ["normalize", "--term", "coev", "--format", "structured"]
        )
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["tgt"] == "+-"
        assert data["arcs"] == [["t0", "t1", 0]]

    def test_syntax_error(self, capsys):
        """Test that syntax errors exit with 1 and report the position."""
        assert cli.main(["normalize", "--term", "ev ;; id(1)"]) == 1
        assert "position 4" in capsys.readouterr().err

    def test_type_error(self, capsys):
        """Test that type errors exit with 1."""
        assert cli.main(["normalize", "--term", "ev ; ev"]) == 1
        assert "error:" in capsys.readouterr().err


class TestTrace:
    """Tests for the trace command."""

    @pytest.mark.parametrize(
        "term,theta,expected",
        [
            ("a^1", "theta[3,0,-2]", "{-2,0,3}"),
            ("id(+)", "theta[1]", "{0}"),
            ("a^2 * a^5", "theta[1]", "{2,5}"),
            ("swap(+,+) ; (a^1 * a^2)", "theta[2]", "{3,3}"),
        ],
    )
    def test_trace(self, capsys, term, theta, expected):
        """Test Theta values at terms."""
        assert cli.main(["trace", "--term", term, "--theta", theta]) == 0
        assert capsys.readouterr().out.strip() == expected

    def test_not_endomorphism(self, capsys):
        """Test that non-endomorphisms exit with 1."""
        code = cli.main(
            ["trace", "--term", "ev ; coev", "--theta", "theta[1]"]
        )
        assert code == 1
        assert "endomorphism" in capsys.readouterr().err


class TestEval:
    """Tests for the eval command."""

    def test_closed_term(self, capsys, matrix_file):
        """Test evaluating a product of traces."""
        code = cli.main(
            ["eval", "--term", CLOSED_TERM, "--matrix", matrix_file]
        )
        assert code == 0
        assert capsys.readouterr().out.strip() == "[[65/8]]"

    def test_generator(self, capsys, matrix_file):
        """Test evaluating the generator."""
        code = cli.main(["eval", "--term", "a^1", "--matrix", matrix_file])
        assert code == 0
        assert capsys.readouterr().out.strip() == "[[1,0],[0,3/2]]"

    def test_bad_matrix(self, capsys, tmp_path):
        """Test that malformed matrix files exit with 1."""
        path = tmp_path / "bad.json"
        path.write_text('{"dim": 1, "entries": [["1/0"]]}')
        code = cli.main(["eval", "--term", "a^1", "--matrix", str(path)])
        assert code == 1
        assert "line 1" in capsys.readouterr().err


class TestCheck:
    """Tests for the check command."""

    def test_passes(self, capsys):
        """Test a passing suite."""
        assert cli.main(["check", "laws", "--cases", "3"]) == 0
        assert capsys.readouterr().out.startswith("laws: ok")

    def test_structured(self, capsys):
        """Test the structured report."""
        code = cli.main(
            ["check", "roundtrip", "--cases", "2", "--format", "structured"]
        )
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["suite"] == "roundtrip"
        assert data["passed"] is True

    def test_failure_exit_code(self, capsys, monkeypatch):
        """Test that property failures exit with 2."""

        def _failing(suite, seed, cases, bound):
            report = CheckReport(suite, seed, cases)
            report.record(0, False, "broken", "reproducer")
            return report

        monkeypatch.setattr(cli, "run_check", _failing)
        assert cli.main(["check", "laws"]) == 2
        assert "FAILED" in capsys.readouterr().out

    def test_unknown_suite(self):
        """Test that argument errors exit with 1."""
        with pytest.raises(SystemExit) as exc:
            cli.main(["check", "nope"])

        assert exc.value.code == 1

    def test_non_positive_cases(self):
        """Test that ``--cases`` must be positive."""
        with pytest.raises(SystemExit) as exc:
            cli.main(["check", "laws", "--cases", "0"])

        assert exc.value.code == 1


class TestClassify:
    """Tests for the classify command."""

    def test_generating(self, capsys):
        """Test a generating spec with a target."""
        code = cli.main(
            ["classify", "--theta", "theta[1]", "--target", "{2,-5,0}"]
        )
        assert code == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "theta[1] classifies to {1}"
        assert out[1] == "generating: yes"
        assert out[2].startswith("{-5,0,2}: witness (+++, ")

    def test_not_generating(self, capsys):
        """Test a spec obstructed by divisibility."""
        assert cli.main(["classify", "--theta", "theta[2]"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[1] == "generating: no ({1} is unreachable: divisibility)"

    def test_obstructed_target(self, capsys):
        """Test a target obstructed by the component count."""
        code = cli.main(
            ["classify", "--theta", "theta[1,1]", "--target", "{3}"]
        )
        assert code == 0
        out = capsys.readouterr().out.splitlines()
        assert out[2] == "{3}: no witness up to bound 4 (component-count)"

    def test_structured_witness(self, capsys):
        """Test the structured witness."""
        code = cli.main(
            [
                "classify",
                "--theta",
                "theta[2]",
                "--target",
                "{1,1}",
                "--format",
                "structured",
            ]
        )
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["generating"] is False
        assert data["witness"]["object"] == "++"

    def test_malformed_theta(self, capsys):
        """Test that malformed specs exit with 1."""
        assert cli.main(["classify", "--theta", "theta(2)"]) == 1
        assert "Malformed theta spec" in capsys.readouterr().err
