"""
Morphism terms of the free symmetric monoidal category with duals on
one generating object with an automorphism.

Terms are immutable trees. :func:`typecheck` infers boundary words,
:func:`denote` sends a term to its bordism normal form (two terms are
equal in the free category iff their denotations are equal), and
:func:`quote` turns a bordism back into a term.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import logging
from dataclasses import dataclass

from . import bordism as bd
from .errors import TermTypeError


logger = logging.getLogger(__name__)


class ObjExpr(object):
    """Base class of object expressions."""

    def flatten(self):
        """Returns the :class:`cobordism_mcp.bordism.BoundaryObject`."""
        raise NotImplementedError("subclass must implement flatten()")


@dataclass(frozen=True)
class Unit(ObjExpr):
    def flatten(self):
        return bd.UNIT


@dataclass(frozen=True)
class PlusPt(ObjExpr):
    def flatten(self):
        return bd.BoundaryObject((bd.PLUS,))


@dataclass(frozen=True)
class MinusPt(ObjExpr):
    def flatten(self):
        return bd.BoundaryObject((bd.MINUS,))


@dataclass(frozen=True)
class ObjTensor(ObjExpr):
    left: ObjExpr
    right: ObjExpr

    def flatten(self):
        return self.left.flatten() + self.right.flatten()


class Term(object):
    """Base class of morphism terms."""


@dataclass(frozen=True)
class Id(Term):
    obj: ObjExpr


@dataclass(frozen=True)
class Swap(Term):
    left: ObjExpr
    right: ObjExpr


@dataclass(frozen=True)
class Ev(Term):
    """Evaluation ``(-,+) -> 1``."""


@dataclass(frozen=True)
class Coev(Term):
    """Coevaluation ``1 -> (+,-)``."""


@dataclass(frozen=True)
class Alpha(Term):
    """The ``k``-th power of the generating automorphism of ``+``."""

    k: int


@dataclass(frozen=True)
class Seq(Term):
    """``first`` then ``second``."""

    first: Term
    second: Term


@dataclass(frozen=True)
class Par(Term):
    """``left ⊗ right``."""

    left: Term
    right: Term


def obj_expr(word):
    """Builds a left-nested object expression for a boundary word.

    Args:
        word: a :class:`cobordism_mcp.bordism.BoundaryObject` or string

    Returns:
        an :class:`ObjExpr`
    """
    result = None
    for sign in bd.as_object(word):
        point = PlusPt() if sign == bd.PLUS else MinusPt()
        result = point if result is None else ObjTensor(result, point)

    return Unit() if result is None else result


def obj_equal(a, b):
    """Whether two object expressions flatten to the same word."""
    return a.flatten() == b.flatten()


###############################################################################
# Printing
###############################################################################


def print_obj(obj):
    """Prints an object expression with minimal parentheses."""
    if isinstance(obj, Unit):
        return "1"

    if isinstance(obj, PlusPt):
        return "+"

    if isinstance(obj, MinusPt):
        return "-"

    right = print_obj(obj.right)
    if isinstance(obj.right, ObjTensor):
        right = "(%s)" % right

    return "%s * %s" % (print_obj(obj.left), right)


def print_term(term):
    """Prints a term in the concrete grammar.

    ``*`` binds tighter than ``;`` and both associate to the left, so
    parentheses appear only where the tree differs from that reading.

    Args:
        term: a :class:`Term`

    Returns:
        a string ``s`` with ``parse(s) == term``
    """
    if isinstance(term, Id):
        return "id(%s)" % print_obj(term.obj)

    if isinstance(term, Swap):
        return "swap(%s,%s)" % (print_obj(term.left), print_obj(term.right))

    if isinstance(term, Ev):
        return "ev"

    if isinstance(term, Coev):
        return "coev"

    if isinstance(term, Alpha):
        return "a^%d" % term.k

    if isinstance(term, Seq):
        second = print_term(term.second)
        if isinstance(term.second, Seq):
            second = "(%s)" % second

        return "%s ; %s" % (print_term(term.first), second)

    if isinstance(term, Par):
        left = print_term(term.left)
        if isinstance(term.left, Seq):
            left = "(%s)" % left

        right = print_term(term.right)
        if isinstance(term.right, (Seq, Par)):
            right = "(%s)" % right

        return "%s * %s" % (left, right)

    raise TypeError("Not a term: %r" % (term,))


###############################################################################
# Typing and denotation
###############################################################################


_EV_DOM = bd.BoundaryObject((bd.MINUS, bd.PLUS))
_COEV_COD = bd.BoundaryObject((bd.PLUS, bd.MINUS))
_PLUS_WORD = bd.BoundaryObject((bd.PLUS,))


def typecheck(term):
    """Infers the boundary words of a term.

    Args:
        term: a :class:`Term`

    Returns:
        a ``(dom, cod)`` tuple of
        :class:`cobordism_mcp.bordism.BoundaryObject`

    Raises:
        TermTypeError: if a sequential composite has mismatched boundaries
    """
    if isinstance(term, Id):
        word = term.obj.flatten()
        return word, word

    if isinstance(term, Swap):
        left = term.left.flatten()
        right = term.right.flatten()
        return left + right, right + left

    if isinstance(term, Ev):
        return _EV_DOM, bd.UNIT

    if isinstance(term, Coev):
        return bd.UNIT, _COEV_COD

    if isinstance(term, Alpha):
        return _PLUS_WORD, _PLUS_WORD

    if isinstance(term, Seq):
        dom, mid = typecheck(term.first)
        mid2, cod = typecheck(term.second)
        if mid != mid2:
            raise TermTypeError(mid, mid2, print_term(term))

        return dom, cod

    if isinstance(term, Par):
        dom1, cod1 = typecheck(term.left)
        dom2, cod2 = typecheck(term.right)
        return dom1 + dom2, cod1 + cod2

    raise TypeError("Not a term: %r" % (term,))


def denote(term):
    """Returns the bordism normal form of a term.

    Args:
        term: a :class:`Term`

    Returns:
        a :class:`cobordism_mcp.bordism.Bordism`

    Raises:
        TermTypeError: if the term does not typecheck
    """
    typecheck(term)
    return _denote(term)


def _denote(term):
    if isinstance(term, Id):
        return bd.identity(term.obj.flatten())

    if isinstance(term, Swap):
        return bd.swap(term.left.flatten(), term.right.flatten())

    if isinstance(term, Ev):
        return bd.cap(bd.MINUS_PLUS)

    if isinstance(term, Coev):
        return bd.cup(bd.PLUS_MINUS)

    if isinstance(term, Alpha):
        return bd.alpha(term.k)

    if isinstance(term, Seq):
        return bd.compose(_denote(term.first), _denote(term.second))

    if isinstance(term, Par):
        return bd.tensor(_denote(term.left), _denote(term.right))

    raise TypeError("Not a term: %r" % (term,))


def terms_equal(a, b):
    """Decides equality of two terms in the free category."""
    return denote(a) == denote(b)


###############################################################################
# Derived terms
###############################################################################


def minus_alpha(k):
    """Returns a term for the ``-`` strand labelled ``k``.

    The ``+`` strand ``a^k`` is bent through ``coev`` and ``ev``::

        (id(-) * coev) ; (id(-) * a^k * id(-)) ; (ev * id(-))
    """
    minus = MinusPt()
    return Seq(
        Seq(
            Par(Id(minus), Coev()),
            Par(Par(Id(minus), Alpha(k)), Id(minus)),
        ),
        Par(Ev(), Id(minus)),
    )


def circle_term(k):
    """Returns the closed term ``coev ; (a^k * id(-)) ; swap(+,-) ; ev``,
    whose denotation is one circle labelled ``k``."""
    return Seq(
        Seq(
            Seq(Coev(), Par(Alpha(k), Id(MinusPt()))),
            Swap(PlusPt(), MinusPt()),
        ),
        Ev(),
    )


def quote(b):
    """Returns a term denoting the given bordism.

    The term has a fixed serial shape: cups, one labelled permutation
    block, caps, and the circles tensored on as closed loops.

    Args:
        b: a :class:`cobordism_mcp.bordism.Bordism`

    Returns:
        a :class:`Term` with ``denote(quote(b)) == b``
    """
    # Imported here to avoid a cycle; evaluation depends on this module
    from .evaluation import assemble
    from .smc import GENERATOR, TermBackend

    return assemble(bd.decompose(b), GENERATOR, TermBackend())
