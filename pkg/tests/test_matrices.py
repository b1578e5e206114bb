"""
Tests for the exact rational matrix backend.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import json

import pytest
import sympy

from cobordism_mcp.errors import (
    BoundaryMismatch,
    CobordismError,
    MatrixFileError,
    NotInvertible,
    NotSquare,
)
from cobordism_mcp.matrices import (
    MatrixMorphism,
    dualizable_from_matrix,
    load_matrix_file,
    matrix_backend,
    parse_matrix_document,
    parse_rational,
)
from cobordism_mcp.traces import generic_trace


@pytest.fixture
def backend():
    return matrix_backend()


@pytest.fixture
def shear():
    return MatrixMorphism.from_rows([[1, 1], [0, 1]])


class TestParseRational:
    """Tests for parse_rational."""

    @pytest.mark.parametrize(
        "value,expected",
        [
            ("3/4", sympy.Rational(3, 4)),
            (" -2 ", sympy.Integer(-2)),
            ("6/4", sympy.Rational(3, 2)),
            (7, sympy.Integer(7)),
        ],
    )
    def test_valid(self, value, expected):
        """Test exact rationals in their accepted forms."""
        assert parse_rational(value) == expected

    @pytest.mark.parametrize("value", ["1/0", "1.5", "x", 1.5, True, None])
    def test_invalid(self, value):
        """Test that inexact or malformed values are rejected."""
        with pytest.raises(CobordismError):
            parse_rational(value)


class TestMatrixMorphism:
    """Tests for MatrixMorphism."""

    def test_str(self):
        """Test the printed form."""
        m = MatrixMorphism.diagonal(1, "3/2")
        assert str(m) == "[[1,0],[0,3/2]]"

    def test_to_dict(self):
        """Test the dict form with string entries."""
        assert MatrixMorphism.from_rows([["1/2", -1]]).to_dict() == {
            "rows": 1,
            "cols": 2,
            "entries": [["1/2", "-1"]],
        }

    def test_equality(self):
        """Test that equal entries give equal morphisms."""
        assert MatrixMorphism.identity(2) == MatrixMorphism.diagonal(1, 1)
        assert MatrixMorphism.identity(2) != MatrixMorphism.identity(3)

    def test_immutable(self):
        """Test that attributes cannot be set."""
        with pytest.raises(AttributeError):
            MatrixMorphism.identity(1)._matrix = None


class TestMatrixBackend:
    """Tests for the symmetric monoidal structure on matrices."""

    def test_compose_is_diagrammatic(self, backend):
        """Test that ``compose(f, g)`` applies ``f`` first."""
        f = MatrixMorphism.from_rows([[1], [2]])
        g = MatrixMorphism.from_rows([[3, 4]])
        assert backend.compose(f, g) == MatrixMorphism.from_rows([[11]])

    def test_compose_mismatch(self, backend):
        """Test that dimensions must agree."""
        with pytest.raises(BoundaryMismatch):
            backend.compose(
                MatrixMorphism.identity(2), MatrixMorphism.identity(3)
            )

    def test_tensor_is_kronecker(self, backend, shear):
        """Test the Kronecker product with the left factor major."""
        result = backend.tensor(MatrixMorphism.diagonal(1, 2), shear)
        assert result == MatrixMorphism.from_rows(
            [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 2], [0, 0, 0, 2]]
        )

    def test_braiding_involution(self, backend):
        """Test that braiding twice is the identity."""
        twice = backend.compose(backend.braiding(2, 3), backend.braiding(3, 2))
        assert twice == MatrixMorphism.identity(6)

    def test_braiding_naturality(self, backend, shear):
        """Test that the braiding commutes with tensor products."""
        d = MatrixMorphism.diagonal(2, 3, 5)
        lhs = backend.compose(backend.tensor(shear, d), backend.braiding(2, 3))
        rhs = backend.compose(backend.braiding(2, 3), backend.tensor(d, shear))
        assert lhs == rhs

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_zig_zags(self, backend, n):
        """Test the snake identities of the standard duality."""
        assert backend.zigzags_hold(backend.duality(n))

    def test_evaluation(self, backend):
        """Test the standard pairing."""
        assert backend.evaluation(2) == MatrixMorphism.from_rows(
            [[1, 0, 0, 1]]
        )

    def test_trace(self, backend):
        """Test that the categorical trace is the matrix trace."""
        m = MatrixMorphism.from_rows([["1/2", 3], [4, "-5/3"]])
        trace = generic_trace(backend.duality(2), backend, m)
        assert trace == MatrixMorphism.from_rows([["-7/6"]])

    def test_mate_is_transpose(self, backend, shear):
        """Test transposing through the duality."""
        mate = backend.mate(backend.duality(2), shear)
        assert mate == MatrixMorphism.from_rows([[1, 0], [1, 1]])

    def test_negative_power(self, backend, shear):
        """Test powers through the inverse."""
        pair = dualizable_from_matrix(shear)
        assert backend.power(pair, -2) == MatrixMorphism.from_rows(
            [[1, -2], [0, 1]]
        )


class TestDualizableFromMatrix:
    """Tests for dualizable_from_matrix."""

    def test_not_square(self):
        """Test that rectangular matrices are rejected."""
        with pytest.raises(NotSquare):
            dualizable_from_matrix(MatrixMorphism.from_rows([[1, 2]]))

    def test_singular(self):
        """Test that singular matrices are rejected."""
        with pytest.raises(NotInvertible):
            dualizable_from_matrix(MatrixMorphism.from_rows([[1, 2], [2, 4]]))

    def test_pair(self, shear):
        """Test the pair's inverse."""
        pair = dualizable_from_matrix(shear)
        assert pair.x == pair.y == 2
        assert pair.a_inv == MatrixMorphism.from_rows([[1, -1], [0, 1]])


class TestMatrixDocument:
    """Tests for reading JSON matrix documents."""

    def test_parse(self):
        """Test a well-formed document."""
        text = json.dumps({"dim": 2, "entries": [["1", 0], [0, "3/2"]]})
        assert parse_matrix_document(text) == MatrixMorphism.diagonal(
            1, "3/2"
        )

    def test_json_error_location(self):
        """Test that JSON syntax errors carry their line."""
        text = '{"dim": 2,\n "entries": [[1, 0] [0, 1]]}'
        with pytest.raises(MatrixFileError) as exc:
            parse_matrix_document(text)

        assert exc.value.line == 2
        assert exc.value.column > 1

    def test_bad_entry_location(self):
        """Test that a bad entry is located in the text."""
        text = '{"dim": 1,\n "entries": [["1/0"]]}'
        with pytest.raises(MatrixFileError) as exc:
            parse_matrix_document(text)

        assert (exc.value.line, exc.value.column) == (2, 15)
        assert "line 2 column 15" in str(exc.value)

    def test_float_entry(self):
        """Test that floats are rejected."""
        with pytest.raises(MatrixFileError) as exc:
            parse_matrix_document('{"dim": 1, "entries": [[0.5]]}')

        assert exc.value.line == 1

    @pytest.mark.parametrize(
        "doc",
        [
            {"entries": [[1]]},
            {"dim": 0, "entries": []},
            {"dim": 2, "entries": [[1, 0]]},
            {"dim": 2, "entries": [[1, 0], [1]]},
        ],
    )
    def test_shape_errors(self, doc):
        """Test documents with the wrong shape."""
        with pytest.raises(MatrixFileError):
            parse_matrix_document(json.dumps(doc))

    def test_load_file(self, tmp_path):
        """Test loading a document from disk."""
        path = tmp_path / "m.json"
        path.write_text(json.dumps({"dim": 1, "entries": [["-2/3"]]}))
        assert load_matrix_file(str(path)) == MatrixMorphism.diagonal("-2/3")

    def test_missing_file(self, tmp_path):
        """Test that unreadable files raise a user error."""
        with pytest.raises(MatrixFileError):
            load_matrix_file(str(tmp_path / "missing.json"))
