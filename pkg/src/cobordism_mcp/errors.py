"""
Exceptions raised by the cobordism library.

Every user-facing failure derives from :class:`CobordismError`, so the
CLI and the MCP tools can tell user errors apart from bugs.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""


class CobordismError(ValueError):
    """Base class for all library errors."""


class InvalidBordism(CobordismError):
    """Raised when arcs do not form a sign-compatible perfect matching."""


class BoundaryMismatch(CobordismError):
    """Raised when two morphisms are not composable."""

    def __init__(self, left, right, what="composition"):
        self.left = left
        self.right = right
        super().__init__(
            "Boundary mismatch in %s: %s vs %s" % (what, left, right)
        )


class NotEndomorphism(CobordismError):
    """Raised when an operation needs equal source and target."""

    def __init__(self, src, tgt):
        self.src = src
        self.tgt = tgt
        super().__init__(
            "Expected an endomorphism, got %s -> %s" % (src, tgt)
        )


class NotInvertible(CobordismError):
    """Raised when an inverse is needed but does not exist."""


class NotSquare(CobordismError):
    """Raised when a matrix is expected to be square."""


class NotClosed(CobordismError):
    """Raised when a closed bordism is expected."""


class TermSyntaxError(CobordismError):
    """Raised by the term parser.

    Args:
        position: the 0-based character offset of the offending token
        expected: an iterable of token descriptions that would have been
            accepted there
        found: the text found at ``position``
    """

    def __init__(self, position, expected, found):
        self.position = position
        self.expected = frozenset(expected)
        self.found = found
        super().__init__(
            "Syntax error at position %d: found %s, expected one of: %s"
            % (position, found, ", ".join(sorted(self.expected)))
        )


class TermTypeError(CobordismError):
    """Raised when a term does not typecheck.

    Args:
        expected: the boundary word required by the context
        actual: the boundary word that was inferred
        subterm: the printed subterm where the mismatch occurs
    """

    def __init__(self, expected, actual, subterm):
        self.expected = expected
        self.actual = actual
        self.subterm = subterm
        super().__init__(
            "Type error in '%s': codomain %s does not match domain %s"
            % (subterm, expected, actual)
        )


class MatrixFileError(CobordismError):
    """Raised when a matrix document cannot be read.

    Args:
        message: the error message
        line (None): the 1-based line of the error, if known
        column (None): the 1-based column of the error, if known
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "line %d column %d: %s" % (line, column or 0, message)

        super().__init__(message)
