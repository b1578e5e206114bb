"""
Traces, the Theta family of tracelike transformations, and their
classification.

For a dualizable object ``x`` with an automorphism ``a``,
``Theta^{k1,...,kn}(a)`` is the product of the traces of the powers
``a^{ki}``. Evaluated at the generating point ``(+, alpha)`` it is a
disjoint union of circles labelled ``k1, ..., kn``, so Theta specs and
scalars of the labelled cobordism category are both finite multisets of
integers.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import itertools
import logging
import math
import re
from dataclasses import dataclass

import sympy

from . import bordism as bd
from .errors import CobordismError, NotClosed, NotEndomorphism, NotInvertible
from .scalars import ScalarMultiset
from .smc import BordismBackend, DualizablePair


logger = logging.getLogger(__name__)

_THETA_RE = re.compile(r"^\s*theta\s*\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]\s*$")

COMPONENT_COUNT = "component-count"
DIVISIBILITY = "divisibility"

LAMBDA = sympy.Symbol("lambda")


def generic_trace(duality, backend, endomorphism=None):
    """Returns the trace of an endomorphism of a dualizable object.

    Computed as ``coev ; (f ⊗ id_y) ; swap(x, y) ; ev``.

    Args:
        duality: a :class:`cobordism_mcp.smc.DualityData`
        backend: a :class:`cobordism_mcp.smc.SmcBackend`
        endomorphism (None): the morphism ``f: x -> x`` to trace. By
            default the automorphism ``a`` of a
            :class:`cobordism_mcp.smc.DualizablePair`

    Returns:
        a backend scalar
    """
    f = endomorphism
    if f is None:
        f = duality.a

    return backend.compose_all(
        [
            duality.coev,
            backend.tensor(f, backend.identity(duality.y)),
            backend.braiding(duality.x, duality.y),
            duality.ev,
        ]
    )


class ThetaSpec(object):
    """An unordered sequence of exponents ``k1, ..., kn``.

    Args:
        exponents (()): an iterable of integers or a
            :class:`cobordism_mcp.scalars.ScalarMultiset`
    """

    __slots__ = ("_exponents",)

    def __init__(self, exponents=()):
        if not isinstance(exponents, ScalarMultiset):
            exponents = ScalarMultiset(exponents)

        object.__setattr__(self, "_exponents", exponents)

    def __setattr__(self, name, value):
        raise AttributeError("ThetaSpec is immutable")

    @classmethod
    def parse(cls, text):
        """Parses ``theta[k1,k2,...]``.

        Raises:
            CobordismError: if the text is malformed
        """
        match = _THETA_RE.match(text)
        if match is None:
            raise CobordismError("Malformed theta spec '%s'" % text.strip())

        body = match.group(1)
        if not body:
            return cls()

        return cls(int(part) for part in body.split(","))

    @property
    def exponents(self):
        """The exponents as a :class:`cobordism_mcp.scalars.ScalarMultiset`."""
        return self._exponents

    def __iter__(self):
        return iter(self._exponents)

    def __len__(self):
        return len(self._exponents)

    def __eq__(self, other):
        if not isinstance(other, ThetaSpec):
            return NotImplemented

        return self._exponents == other._exponents

    def __hash__(self):
        return hash(self._exponents)

    def __str__(self):
        return "theta[%s]" % ",".join(str(k) for k in self._exponents)

    def __repr__(self):
        return "ThetaSpec(%s)" % list(self._exponents)


def as_theta_spec(spec):
    """Coerces text, iterables and multisets to a :class:`ThetaSpec`."""
    if isinstance(spec, ThetaSpec):
        return spec

    if isinstance(spec, str):
        return ThetaSpec.parse(spec)

    return ThetaSpec(spec)


def theta(spec, pair, backend):
    """Evaluates ``Theta^{spec}`` at a dualizable pair.

    Args:
        spec: a :class:`ThetaSpec`
        pair: a :class:`cobordism_mcp.smc.DualizablePair`
        backend: a :class:`cobordism_mcp.smc.SmcBackend`

    Returns:
        a backend scalar; the unit scalar for the empty spec
    """
    result = backend.scalar_unit()
    for k in as_theta_spec(spec):
        trace = generic_trace(pair, backend, backend.power(pair, k))
        result = backend.compose(result, trace)

    return result


def theta_of_endomorphism(f, spec):
    """Classifies ``Theta^{spec}`` at an endomorphism bordism.

    Args:
        f: a :class:`cobordism_mcp.bordism.Bordism` with equal source and
            target
        spec: a :class:`ThetaSpec`

    Returns:
        a :class:`cobordism_mcp.scalars.ScalarMultiset`

    Raises:
        NotEndomorphism: if ``f.src != f.tgt``
        NotInvertible: if ``spec`` has a negative exponent and ``f`` is
            not invertible
    """
    if f.src != f.tgt:
        raise NotEndomorphism(f.src, f.tgt)

    dual, ev, coev = bd.duality_data(f.src)
    pair = DualizablePair(
        x=f.src,
        y=dual,
        ev=ev,
        coev=coev,
        a=f,
        a_inv=bd.inverse(f) if bd.is_invertible(f) else None,
    )
    return classify_scalar(theta(spec, pair, BordismBackend()))


def classify_scalar(b):
    """Returns the circle labels of a closed bordism.

    Raises:
        NotClosed: if ``b`` has boundary
    """
    if not b.is_closed:
        raise NotClosed("Expected a closed bordism, got %s" % b)

    return ScalarMultiset(b.circles)


@dataclass(frozen=True)
class AutomorphismPoint(object):
    """A boundary word with an invertible endomorphism bordism."""

    obj: bd.BoundaryObject
    auto: bd.Bordism

    def __post_init__(self):
        object.__setattr__(self, "obj", bd.as_object(self.obj))
        if self.auto.src != self.obj or self.auto.tgt != self.obj:
            raise NotEndomorphism(self.auto.src, self.auto.tgt)

        if not bd.is_invertible(self.auto):
            raise NotInvertible("Not an automorphism: %s" % self.auto)

    @classmethod
    def from_cycles(cls, cycles):
        """Builds a point on ``+ ... +`` from a cycle type.

        Args:
            cycles: ``(length, label_sum)`` tuples; each cycle rotates a
                block of consecutive points and carries its label sum on
                the first strand

        Returns:
            an :class:`AutomorphismPoint`
        """
        mapping = []
        labels = []
        for length, total in cycles:
            start = len(mapping)
            for i in range(length):
                mapping.append(start + (i + 1) % length)
                labels.append(total if i == 0 else 0)

        obj = bd.BoundaryObject((bd.PLUS,) * len(mapping))
        return cls(obj, bd.permutation(obj, mapping, labels))

    def pair(self):
        """Returns the point as a
        :class:`cobordism_mcp.smc.DualizablePair` of bordisms."""
        dual, ev, coev = bd.duality_data(self.obj)
        return DualizablePair(
            x=self.obj,
            y=dual,
            ev=ev,
            coev=coev,
            a=self.auto,
            a_inv=bd.inverse(self.auto),
        )

    def conjugate(self, u):
        """Conjugates by an invertible bordism ``u: obj -> obj'``.

        Returns:
            the point ``(obj', u^-1 ; auto ; u)``
        """
        if u.src != self.obj:
            raise NotEndomorphism(u.src, self.obj)

        auto = bd.compose_all(bd.inverse(u), self.auto, u)
        return AutomorphismPoint(u.tgt, auto)

    def to_dict(self):
        return {"object": str(self.obj), "automorphism": self.auto.serialize()}

    def __str__(self):
        return "(%s, %s)" % (self.obj, self.auto.serialize())


def act_on_theta(point, spec):
    """Returns the multiset of circle labels of ``Theta^{spec}`` at a
    point of the labelled cobordism category."""
    scalar = theta(spec, point.pair(), BordismBackend())
    return classify_scalar(scalar)


def predicted_labels(cycles, spec):
    """Returns ``Theta^{spec}`` at a cycle type in closed form.

    Closing the ``k``-th power of one cycle of length ``L`` and label sum
    ``S`` gives ``gcd(L, |k|)`` circles, each labelled ``S * k / gcd``.

    Args:
        cycles: ``(length, label_sum)`` tuples
        spec: a :class:`ThetaSpec`

    Returns:
        a :class:`cobordism_mcp.scalars.ScalarMultiset`
    """
    labels = []
    for k in as_theta_spec(spec):
        for length, total in cycles:
            g = math.gcd(length, abs(k))
            labels.extend([total * k // g] * g)

    return ScalarMultiset(labels)


def _circle_count(lengths, spec):
    return sum(math.gcd(length, abs(k)) for k in spec for length in lengths)


def generation_obstruction(spec, target):
    """Names a reason why no point sends ``spec`` to ``target``.

    Two obstructions are recognised. ``component-count``: every trace
    has at least one circle, so ``Theta^{k1,...,kn}`` of a nonempty
    point has at least ``n`` circles, and the empty spec only gives the
    empty scalar. ``divisibility``: for a single exponent ``k``, a
    cycle contributes either one circle whose label is a multiple of
    ``k`` or at least two circles with equal labels, so a label that is
    not a multiple of ``k`` and occurs once cannot be reached.

    Args:
        spec: a :class:`ThetaSpec`
        target: a :class:`cobordism_mcp.scalars.ScalarMultiset`

    Returns:
        ``"component-count"``, ``"divisibility"`` or None
    """
    spec = as_theta_spec(spec)
    n = len(spec)
    if target and (n == 0 or len(target) < n):
        return COMPONENT_COUNT

    if n == 1:
        (k,) = tuple(spec)
        for label, count in target.counts().items():
            if k == 0:
                if label != 0:
                    return DIVISIBILITY
            elif label % k != 0 and count == 1:
                return DIVISIBILITY

    return None


def _partitions(m, largest=None):
    if m == 0:
        yield ()
        return

    largest = m if largest is None else largest
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def _cycle_types(lengths, bound):
    groups = [
        (length, len(list(run)))
        for length, run in itertools.groupby(lengths)
    ]
    choices = []
    for length, count in groups:
        sums = range(-length * bound, length * bound + 1)
        choices.append(
            [
                [(length, s) for s in combo]
                for combo in itertools.combinations_with_replacement(
                    sums, count
                )
            ]
        )

    for parts in itertools.product(*choices):
        yield [cycle for part in parts for cycle in part]


def search_witness(spec, target, search_bound):
    """Searches cycle types for a point sending ``spec`` to ``target``.

    Points have at most ``search_bound`` positive points and strand
    labels in ``[-search_bound, search_bound]``. Every sign-preserving
    automorphism is conjugate to a rotation of blocks with the label sum
    on one strand, so cycle types cover the search space. Enumeration is
    by number of points, then partitions in decreasing order, then
    label sums in increasing order.

    Returns:
        the first :class:`AutomorphismPoint` found, or None
    """
    spec = as_theta_spec(spec)
    visited = 0
    for m in range(search_bound + 1):
        for lengths in _partitions(m):
            if _circle_count(lengths, spec) != len(target):
                continue

            for cycles in _cycle_types(lengths, search_bound):
                visited += 1
                if predicted_labels(cycles, spec) != target:
                    continue

                point = AutomorphismPoint.from_cycles(cycles)
                if act_on_theta(point, spec) == target:
                    logger.debug(
                        "Found witness %s after %d candidates", point, visited
                    )
                    return point

    logger.debug("No witness among %d candidates", visited)
    return None


def explicit_witness(spec, target):
    """Returns the witness ``(+^n, ⊔ alpha^{±ki})`` for ``theta[±1]``."""
    (sign,) = tuple(as_theta_spec(spec))
    return AutomorphismPoint.from_cycles([(1, sign * k) for k in target])


def is_generating_witness(spec, target, search_bound):
    """Finds a point at which ``Theta^{spec}`` equals ``target``.

    Args:
        spec: a :class:`ThetaSpec`
        target: a :class:`cobordism_mcp.scalars.ScalarMultiset`
        search_bound: the bound on points and labels searched

    Returns:
        an :class:`AutomorphismPoint` or None
    """
    spec = as_theta_spec(spec)
    if spec in (ThetaSpec([1]), ThetaSpec([-1])):
        point = explicit_witness(spec, target)
        if act_on_theta(point, spec) != target:
            raise CobordismError("Witness %s failed to validate" % point)

        return point

    obstruction = generation_obstruction(spec, target)
    if obstruction is not None:
        logger.debug("%s -> %s obstructed: %s", spec, target, obstruction)
        return None

    return search_witness(spec, target, search_bound)


def generating_counterexample(spec):
    """Returns a ``(target, obstruction)`` that ``spec`` cannot reach, or
    None when ``spec`` is generating."""
    spec = as_theta_spec(spec)
    if spec in (ThetaSpec([1]), ThetaSpec([-1])):
        return None

    if len(spec) != 1:
        target = ScalarMultiset([0])
    else:
        target = ScalarMultiset([1])

    return target, generation_obstruction(spec, target)


def is_generating(spec):
    """Whether every other Theta is reachable from ``spec``."""
    return generating_counterexample(spec) is None


def theta_at_diagonal(spec, value):
    """Evaluates ``Theta^{spec}`` at ``diag(1, value)`` on a plane.

    Args:
        spec: a :class:`ThetaSpec`
        value: a nonzero rational or sympy expression

    Returns:
        a 1x1 :class:`cobordism_mcp.matrices.MatrixMorphism`
    """
    from .matrices import (
        MatrixMorphism,
        dualizable_from_matrix,
        matrix_backend,
    )

    pair = dualizable_from_matrix(MatrixMorphism(sympy.diag(1, value)))
    return theta(spec, pair, matrix_backend())


def theta_agrees_with_trace(spec, modulus=None):
    """Compares ``Theta^{spec}`` with the plain trace at ``diag(1, λ)``.

    ``Theta^{spec}`` there is the Laurent polynomial ``∏(1 + λ^ki)``; it
    agrees with the trace ``1 + λ`` only for ``theta[1]`` over the
    rationals, and for more specs modulo a prime.

    Args:
        spec: a :class:`ThetaSpec`
        modulus (None): an optional prime

    Returns:
        True if the two polynomials coincide
    """
    value = theta_at_diagonal(spec, LAMBDA).entry(0, 0)
    numerator, _ = sympy.fraction(sympy.cancel(value - (1 + LAMBDA)))
    numerator = sympy.expand(numerator)
    if modulus is None:
        return numerator == 0

    return sympy.Poly(numerator, LAMBDA, modulus=modulus).is_zero
