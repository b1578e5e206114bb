"""
Tests for evaluating bordisms and terms in a backend.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cobordism_mcp import bordism as bd
from cobordism_mcp import terms
from cobordism_mcp.evaluation import evaluate, evaluate_term
from cobordism_mcp.matrices import (
    MatrixMorphism,
    dualizable_from_matrix,
    matrix_backend,
)
from cobordism_mcp.parser import parse
from cobordism_mcp.smc import BordismBackend, bordism_generator

from .strategies import bordisms, composable

CLOSED_TERM = (
    "coev ; (a^2 * id(-)) ; swap(+,-) ; ev ; "
    "coev ; (a^1 * id(-)) ; swap(+,-) ; ev"
)

# Invertible matrices by dimension, and the longest word evaluated at each
MATRICES = {
    1: [["3/2"]],
    2: [[1, 1], [0, 1]],
    3: [[1, 2, 0], [0, 1, 0], [1, 0, -1]],
    4: [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2], [1, 0, 0, 0]],
}
WORD_LEN = {1: 3, 2: 2, 3: 1, 4: 1}


@pytest.fixture
def backend():
    return matrix_backend()


@pytest.fixture
def diagonal_pair():
    return dualizable_from_matrix(MatrixMorphism.diagonal(1, 2))


@pytest.fixture
def shear_pair():
    return dualizable_from_matrix(
        MatrixMorphism.from_rows([[1, 1], [0, 1]])
    )


class TestEvaluate:
    """Tests for evaluating bordisms at a matrix."""

    def test_generator(self, backend, diagonal_pair):
        """Test that the generator maps to the matrix."""
        image = evaluate(bd.alpha(1), diagonal_pair, backend)
        assert image == MatrixMorphism.diagonal(1, 2)

    def test_identity(self, backend):
        """Test that identities map to identities."""
        pair = dualizable_from_matrix(MatrixMorphism.diagonal(1, 2, 3))
        assert evaluate(bd.identity("+"), pair, backend) == (
            MatrixMorphism.identity(3)
        )
        assert evaluate(bd.identity("+-"), pair, backend) == (
            MatrixMorphism.identity(9)
        )

    def test_circles_are_traces(self, backend, diagonal_pair):
        """Test that a circle labelled ``k`` maps to ``tr(A^k)``."""
        assert evaluate(bd.circle(2), diagonal_pair, backend) == (
            MatrixMorphism.from_rows([[5]])
        )
        assert evaluate(bd.circle(-1), diagonal_pair, backend) == (
            MatrixMorphism.from_rows([["3/2"]])
        )

    def test_negative_strand_is_transpose(self, backend, shear_pair):
        """Test that a ``-`` strand maps to the transposed power."""
        b = bd.Bordism("-", "-", [bd.arc("s0", "t0", 2)])
        assert evaluate(b, shear_pair, backend) == MatrixMorphism.from_rows(
            [[1, 0], [2, 1]]
        )

    def test_closed_term(self, backend):
        """Test a product of two traces."""
        pair = dualizable_from_matrix(MatrixMorphism.diagonal(1, "3/2"))
        image = evaluate(terms.denote(parse(CLOSED_TERM)), pair, backend)
        assert str(image) == "[[65/8]]"

    def test_empty(self, backend, diagonal_pair):
        """Test that the empty bordism maps to the unit scalar."""
        assert evaluate(bd.empty(), diagonal_pair, backend) == (
            MatrixMorphism.identity(1)
        )

    @given(bordisms(max_len=3))
    @settings(max_examples=25, deadline=None)
    def test_generator_point_is_identity(self, b):
        """Test that evaluating at the generating point in bordisms gives
        the bordism back."""
        assert evaluate(b, bordism_generator(), BordismBackend()) == b


class TestEvaluateTerm:
    """Tests for evaluating terms by structural recursion."""

    @pytest.mark.parametrize(
        "text",
        [
            "a^1",
            "a^-2 * id(-)",
            "swap(+,-) ; swap(-,+)",
            "(coev * id(+)) ; (id(+) * ev)",
            "(id(-) * coev) ; (id(-) * a^3 * id(-)) ; (ev * id(-))",
            CLOSED_TERM,
        ],
    )
    def test_paths_agree(self, backend, shear_pair, text):
        """Test that both evaluation paths give the same matrix."""
        term = parse(text)
        assert evaluate_term(term, shear_pair, backend) == evaluate(
            terms.denote(term), shear_pair, backend
        )

    def test_quoted_term(self, backend, shear_pair):
        """Test evaluating the quotation of a bordism with a cap."""
        b = bd.Bordism.parse(
            "src=+-+; tgt=+; arcs=[(s0,s1,1),(s2,t0,-1)]; circles=[2]"
        )
        assert evaluate_term(terms.quote(b), shear_pair, backend) == (
            evaluate(b, shear_pair, backend)
        )


class TestFunctoriality:
    """Tests that evaluation preserves composition, tensor and identities."""

    def _draw_pair(self, data):
        dim = data.draw(st.sampled_from(sorted(MATRICES)))
        matrix = MatrixMorphism.from_rows(MATRICES[dim])
        return dim, dualizable_from_matrix(matrix)

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_compose(self, data):
        """Test that the image of ``f ; g`` is the product of images."""
        backend = matrix_backend()
        dim, pair = self._draw_pair(data)
        f, g = data.draw(composable(count=2, max_len=WORD_LEN[dim]))
        assert evaluate(bd.compose(f, g), pair, backend) == backend.compose(
            evaluate(f, pair, backend), evaluate(g, pair, backend)
        )

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_tensor(self, data):
        """Test that the image of ``f * g`` is the Kronecker product."""
        backend = matrix_backend()
        dim, pair = self._draw_pair(data)
        f = data.draw(bordisms(max_len=WORD_LEN[dim]))
        g = data.draw(bordisms(max_len=1))
        assert evaluate(bd.tensor(f, g), pair, backend) == backend.tensor(
            evaluate(f, pair, backend), evaluate(g, pair, backend)
        )

    @pytest.mark.parametrize("dim", sorted(MATRICES))
    @pytest.mark.parametrize("word", ["", "+", "-", "+-"])
    def test_identity(self, dim, word):
        """Test that identities map to identity matrices."""
        pair = dualizable_from_matrix(
            MatrixMorphism.from_rows(MATRICES[dim])
        )
        assert evaluate(bd.identity(word), pair, matrix_backend()) == (
            MatrixMorphism.identity(dim ** len(word))
        )
