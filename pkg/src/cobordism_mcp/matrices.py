"""
Exact rational matrices as a symmetric monoidal backend.

Objects are dimensions. A morphism ``m -> n`` is an ``n x m`` matrix
acting on column vectors, so ``compose(f, g)`` is the product ``g * f``.
The tensor product is the Kronecker product with the left factor major
and the braiding is the perfect-shuffle permutation. The dual of ``n``
is ``n``, with ``ev`` and ``coev`` the standard pairing and copairing.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import json
import logging
import re

import sympy
from sympy.physics.quantum import TensorProduct

from .errors import (
    BoundaryMismatch,
    CobordismError,
    MatrixFileError,
    NotInvertible,
    NotSquare,
)
from .smc import DualityData, DualizablePair, SmcBackend


logger = logging.getLogger(__name__)

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


class MatrixMorphism(object):
    """An immutable exact matrix.

    Args:
        matrix: anything accepted by :class:`sympy.ImmutableMatrix`
    """

    __slots__ = ("_matrix",)

    def __init__(self, matrix):
        object.__setattr__(self, "_matrix", sympy.ImmutableMatrix(matrix))

    def __setattr__(self, name, value):
        raise AttributeError("MatrixMorphism is immutable")

    @classmethod
    def identity(cls, n):
        return cls(sympy.eye(n))

    @classmethod
    def diagonal(cls, *entries):
        return cls(sympy.diag(*[parse_rational(e) for e in entries]))

    @classmethod
    def from_rows(cls, rows):
        """Builds a matrix from rows of rationals, ints or ``"p/q"``
        strings."""
        return cls([[parse_rational(e) for e in row] for row in rows])

    @property
    def matrix(self):
        return self._matrix

    @property
    def rows(self):
        return self._matrix.rows

    @property
    def cols(self):
        return self._matrix.cols

    @property
    def is_square(self):
        return self.rows == self.cols

    def entry(self, i, j):
        return self._matrix[i, j]

    def trace(self):
        return self._matrix.trace()

    def tolist(self):
        return self._matrix.tolist()

    def to_dict(self):
        """Returns a JSON-serializable dict with string entries."""
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(e) for e in row] for row in self.tolist()],
        }

    def __eq__(self, other):
        if not isinstance(other, MatrixMorphism):
            return NotImplemented

        return self._matrix == other._matrix

    def __hash__(self):
        return hash(self._matrix)

    def __str__(self):
        return "[%s]" % ",".join(
            "[%s]" % ",".join(str(e) for e in row) for row in self.tolist()
        )

    def __repr__(self):
        return "MatrixMorphism(%s)" % self


def parse_rational(value):
    """Parses an exact rational.

    Args:
        value: an int, a :class:`sympy.Rational`, or a ``"p/q"`` / ``"n"``
            string

    Returns:
        a :class:`sympy.Rational`

    Raises:
        CobordismError: for floats, malformed strings or ``q = 0``
    """
    if isinstance(value, bool):
        raise CobordismError("Not a rational: %r" % (value,))

    if isinstance(value, int):
        return sympy.Integer(value)

    if isinstance(value, sympy.Rational):
        return value

    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if match is None:
            raise CobordismError("Not an exact rational: %r" % value)

        p = int(match.group(1))
        q = int(match.group(2) or 1)
        if q == 0:
            raise CobordismError("Zero denominator in %r" % value)

        return sympy.Rational(p, q)

    if isinstance(value, sympy.Expr):
        return value

    raise CobordismError("Not an exact rational: %r" % (value,))


class MatrixBackend(SmcBackend):
    """Finite-dimensional vector spaces over the rationals."""

    name = "matrix"

    def unit(self):
        return 1

    def tensor_objects(self, a, b):
        return a * b

    def identity(self, obj):
        return MatrixMorphism.identity(obj)

    def compose(self, f, g):
        if f.rows != g.cols:
            raise BoundaryMismatch(f.rows, g.cols)

        return MatrixMorphism(g.matrix * f.matrix)

    def tensor(self, f, g):
        return MatrixMorphism(TensorProduct(f.matrix, g.matrix))

    def braiding(self, a, b):
        size = a * b
        perm = sympy.zeros(size, size)
        for i in range(a):
            for j in range(b):
                perm[j * a + i, i * b + j] = 1

        return MatrixMorphism(perm)

    def power(self, pair, k):
        if k >= 0:
            return MatrixMorphism(pair.a.matrix**k)

        if pair.a_inv is None:
            raise NotInvertible(
                "Negative power %d of a non-invertible matrix" % k
            )

        return MatrixMorphism(pair.a_inv.matrix ** (-k))

    def evaluation(self, n):
        """Returns the pairing ``n ⊗ n -> 1``."""
        return MatrixMorphism(
            sympy.Matrix(n * n, 1, lambda r, c: int(r % (n + 1) == 0)).T
        )

    def coevaluation(self, n):
        """Returns the copairing ``1 -> n ⊗ n``."""
        return MatrixMorphism(
            sympy.Matrix(n * n, 1, lambda r, c: int(r % (n + 1) == 0))
        )

    def duality(self, n):
        """Returns the standard :class:`DualityData` of dimension ``n``."""
        return DualityData(n, n, self.evaluation(n), self.coevaluation(n))


def matrix_backend():
    """Returns the exact rational matrix backend."""
    return MatrixBackend()


def dualizable_from_matrix(f):
    """Builds the dualizable pair ``(dim f, f)``.

    Args:
        f: a square invertible :class:`MatrixMorphism`

    Returns:
        a :class:`cobordism_mcp.smc.DualizablePair`

    Raises:
        NotSquare: if ``f`` is not square
        NotInvertible: if ``det f = 0``
    """
    if not f.is_square:
        raise NotSquare(
            "Expected a square matrix, got %dx%d" % (f.rows, f.cols)
        )

    if f.matrix.det() == 0:
        raise NotInvertible("Matrix is singular: %s" % f)

    n = f.rows
    backend = matrix_backend()
    return DualizablePair(
        x=n,
        y=n,
        ev=backend.evaluation(n),
        coev=backend.coevaluation(n),
        a=f,
        a_inv=MatrixMorphism(f.matrix.inv()),
    )


def parse_matrix_document(text):
    """Parses a JSON matrix document.

    The document has the form ``{"dim": n, "entries": [[...], ...]}``
    where each entry is an integer or a ``"p/q"`` / ``"n"`` string.

    Args:
        text: the document text

    Returns:
        a square :class:`MatrixMorphism`

    Raises:
        MatrixFileError: on malformed input, with line and column when
            they can be located
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixFileError(e.msg, e.lineno, e.colno)

    if not isinstance(doc, dict) or "dim" not in doc or "entries" not in doc:
        raise MatrixFileError("Expected an object with 'dim' and 'entries'")

    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise MatrixFileError("'dim' must be a positive integer")

    rows = doc["entries"]
    if not isinstance(rows, list) or len(rows) != dim:
        raise MatrixFileError("'entries' must have %d rows" % dim)

    parsed = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise MatrixFileError("Row %d must have %d entries" % (i, dim))

        values = []
        for j, value in enumerate(row):
            if not isinstance(value, (str, int)):
                raise MatrixFileError(
                    "Entry [%d][%d] must be a string or integer" % (i, j),
                    *_locate(text, value)
                )

            try:
                values.append(parse_rational(value))
            except CobordismError as e:
                raise MatrixFileError(
                    "Entry [%d][%d]: %s" % (i, j, e), *_locate(text, value)
                )

        parsed.append(values)

    return MatrixMorphism(parsed)


def _locate(text, value):
    needle = json.dumps(value)
    offset = text.find(needle)
    if offset < 0:
        return None, None

    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def load_matrix_file(path):
    """Reads a matrix document from disk.

    Args:
        path: the file path

    Returns:
        a :class:`MatrixMorphism`

    Raises:
        MatrixFileError: if the file cannot be read or parsed
    """
    try:
        with open(path, "r") as f:
            text = f.read()
    except OSError as e:
        raise MatrixFileError("Could not read %s: %s" % (path, e))

    logger.debug("Loaded matrix document %s (%d chars)", path, len(text))
    return parse_matrix_document(text)
