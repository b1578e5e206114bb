"""
Evaluation of bordisms and terms in a symmetric monoidal backend.

A symmetric monoidal functor out of the labelled cobordism category is
determined by where it sends ``(+, alpha)``: a dualizable object ``x``
with an automorphism ``a``. :func:`evaluate` computes that functor on a
bordism through its serial decomposition; :func:`evaluate_term`
computes it on a term by structural recursion.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import logging

from . import bordism as bd
from . import terms
from .traces import generic_trace


logger = logging.getLogger(__name__)


def word_object(word, pair, backend):
    """Returns the backend object of a boundary word.

    ``+`` maps to ``pair.x`` and ``-`` to ``pair.y``.
    """
    return backend.tensor_all_objects(
        pair.x if sign == bd.PLUS else pair.y for sign in bd.as_object(word)
    )


def strand(sign, label, pair, backend):
    """Returns the image of a single labelled strand.

    A ``+`` strand labelled ``k`` maps to ``a^k``; a ``-`` strand maps to
    the mate of ``a^k``.
    """
    if sign == bd.PLUS:
        return backend.power(pair, label)

    if label == 0:
        return backend.identity(pair.y)

    return backend.mate(pair, backend.power(pair, label))


def assemble(shape, pair, backend):
    """Builds the image of a :class:`cobordism_mcp.bordism.NormalShape`.

    Args:
        shape: a :class:`cobordism_mcp.bordism.NormalShape`
        pair: a :class:`cobordism_mcp.smc.DualizablePair`
        backend: a :class:`cobordism_mcp.smc.SmcBackend`

    Returns:
        a backend morphism
    """

    def _identity(word):
        return backend.identity(word_object(word, pair, backend))

    stages = []

    opening = [_identity(shape.src)] if shape.src else []
    opening += [pair.coev] * shape.cups
    stages.append(
        backend.tensor_all(opening) if opening else _identity(bd.UNIT)
    )

    labels = [label for _, _, label in shape.strands]
    if any(labels):
        stages.append(
            backend.tensor_all(
                strand(sign, label, pair, backend)
                for sign, label in zip(shape.upper, labels)
            )
        )

    mapping = [lower for _, lower, _ in shape.strands]
    word = list(shape.upper)
    for p in bd.adjacent_transpositions(mapping):
        pieces = []
        if p > 0:
            pieces.append(_identity(word[:p]))

        pieces.append(
            backend.braiding(
                word_object(word[p], pair, backend),
                word_object(word[p + 1], pair, backend),
            )
        )
        if p + 2 < len(word):
            pieces.append(_identity(word[p + 2 :]))

        stages.append(backend.tensor_all(pieces))
        word[p], word[p + 1] = word[p + 1], word[p]

    if shape.caps:
        closing = [_identity(shape.tgt)] if shape.tgt else []
        closing += [pair.ev] * shape.caps
        stages.append(backend.tensor_all(closing))

    result = backend.compose_all(stages)

    loops = [
        generic_trace(pair, backend, backend.power(pair, label))
        for label in shape.circles
    ]
    if loops:
        if len(stages) == 1 and not shape.src and not shape.cups:
            result = backend.tensor_all(loops)
        else:
            result = backend.tensor_all([result] + loops)

    return result


def evaluate(b, pair, backend):
    """Evaluates a bordism under the functor classified by ``pair``.

    Args:
        b: a :class:`cobordism_mcp.bordism.Bordism`
        pair: a :class:`cobordism_mcp.smc.DualizablePair` whose zig-zag
            identities hold in ``backend``
        backend: a :class:`cobordism_mcp.smc.SmcBackend`

    Returns:
        a backend morphism
    """
    return assemble(bd.decompose(b), pair, backend)


def evaluate_term(term, pair, backend):
    """Evaluates a term by structural recursion.

    Agrees with ``evaluate(denote(term), pair, backend)``.

    Args:
        term: a :class:`cobordism_mcp.terms.Term`
        pair: a :class:`cobordism_mcp.smc.DualizablePair`
        backend: a :class:`cobordism_mcp.smc.SmcBackend`

    Returns:
        a backend morphism

    Raises:
        TermTypeError: if the term does not typecheck
    """
    terms.typecheck(term)
    return _evaluate_term(term, pair, backend)


def _evaluate_term(term, pair, backend):
    if isinstance(term, terms.Id):
        return backend.identity(_object(term.obj, pair, backend))

    if isinstance(term, terms.Swap):
        return backend.braiding(
            _object(term.left, pair, backend),
            _object(term.right, pair, backend),
        )

    if isinstance(term, terms.Ev):
        return pair.ev

    if isinstance(term, terms.Coev):
        return pair.coev

    if isinstance(term, terms.Alpha):
        return backend.power(pair, term.k)

    if isinstance(term, terms.Seq):
        return backend.compose(
            _evaluate_term(term.first, pair, backend),
            _evaluate_term(term.second, pair, backend),
        )

    if isinstance(term, terms.Par):
        return backend.tensor(
            _evaluate_term(term.left, pair, backend),
            _evaluate_term(term.right, pair, backend),
        )

    raise TypeError("Not a term: %r" % (term,))


def _object(obj, pair, backend):
    if isinstance(obj, terms.Unit):
        return backend.unit()

    if isinstance(obj, terms.PlusPt):
        return pair.x

    if isinstance(obj, terms.MinusPt):
        return pair.y

    return backend.tensor_objects(
        _object(obj.left, pair, backend), _object(obj.right, pair, backend)
    )
