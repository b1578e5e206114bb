"""
Symmetric monoidal backends with duality data.

A backend supplies objects, morphisms and the symmetric monoidal
operations. Composition is diagrammatic: ``compose(f, g)`` is "``f``
then ``g``". Scalars are endomorphisms of ``unit()``.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import abc
import logging
from dataclasses import dataclass
from typing import Any

from . import bordism as bd
from . import terms
from .errors import NotInvertible


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualityData(object):
    """An object ``x`` with dual ``y``, ``ev: y ⊗ x -> 1`` and
    ``coev: 1 -> x ⊗ y``."""

    x: Any
    y: Any
    ev: Any
    coev: Any


@dataclass(frozen=True)
class DualizablePair(DualityData):
    """Duality data together with an endomorphism ``a`` of ``x``.

    ``a_inv`` is ``None`` when ``a`` is not known to be invertible; only
    negative powers need it.
    """

    a: Any = None
    a_inv: Any = None


class SmcBackend(abc.ABC):
    """Abstract symmetric monoidal category."""

    name = None

    @abc.abstractmethod
    def unit(self):
        """Returns the monoidal unit object."""

    @abc.abstractmethod
    def tensor_objects(self, a, b):
        """Returns the object ``a ⊗ b``."""

    @abc.abstractmethod
    def identity(self, obj):
        """Returns the identity morphism of ``obj``."""

    @abc.abstractmethod
    def compose(self, f, g):
        """Returns ``f`` then ``g``."""

    @abc.abstractmethod
    def tensor(self, f, g):
        """Returns ``f ⊗ g``."""

    @abc.abstractmethod
    def braiding(self, a, b):
        """Returns the symmetry ``a ⊗ b -> b ⊗ a``."""

    def equal(self, f, g):
        """Whether two morphisms are equal."""
        return f == g

    def scalar_unit(self):
        """Returns the identity of the unit object."""
        return self.identity(self.unit())

    def compose_all(self, morphisms):
        """Composes a non-empty sequence of morphisms left to right."""
        morphisms = list(morphisms)
        result = morphisms[0]
        for m in morphisms[1:]:
            result = self.compose(result, m)

        return result

    def tensor_all(self, morphisms):
        """Tensors a sequence of morphisms; empty gives ``scalar_unit()``."""
        morphisms = list(morphisms)
        if not morphisms:
            return self.scalar_unit()

        result = morphisms[0]
        for m in morphisms[1:]:
            result = self.tensor(result, m)

        return result

    def tensor_all_objects(self, objects):
        """Tensors a sequence of objects; empty gives ``unit()``."""
        result = self.unit()
        for obj in objects:
            result = self.tensor_objects(result, obj)

        return result

    def power(self, pair, k):
        """Returns ``a^k`` for the endomorphism of ``pair``.

        Args:
            pair: a :class:`DualizablePair`
            k: an integer; negative powers use ``pair.a_inv``

        Returns:
            a morphism ``x -> x``

        Raises:
            NotInvertible: if ``k < 0`` and ``pair.a_inv`` is None
        """
        if k == 0:
            return self.identity(pair.x)

        base = pair.a
        if k < 0:
            if pair.a_inv is None:
                raise NotInvertible(
                    "Negative power %d of a non-invertible morphism" % k
                )

            base = pair.a_inv
            k = -k

        result = None
        while k:
            if k & 1:
                result = base if result is None else self.compose(result, base)

            k >>= 1
            if k:
                base = self.compose(base, base)

        return result

    def mate(self, duality, f):
        """Transposes ``f: x -> x`` to ``y -> y`` through the duality data.

        Computed as ``(id_y ⊗ coev) ; (id_y ⊗ f ⊗ id_y) ; (ev ⊗ id_y)``.
        """
        id_y = self.identity(duality.y)
        return self.compose_all(
            [
                self.tensor(id_y, duality.coev),
                self.tensor_all([id_y, f, id_y]),
                self.tensor(duality.ev, id_y),
            ]
        )

    def zigzags_hold(self, duality):
        """Whether both zig-zag identities hold for ``duality``."""
        id_x = self.identity(duality.x)
        id_y = self.identity(duality.y)
        snake_x = self.compose(
            self.tensor(duality.coev, id_x), self.tensor(id_x, duality.ev)
        )
        snake_y = self.compose(
            self.tensor(id_y, duality.coev), self.tensor(duality.ev, id_y)
        )
        return self.equal(snake_x, id_x) and self.equal(snake_y, id_y)


class BordismBackend(SmcBackend):
    """The labelled cobordism category itself."""

    name = "bordism"

    def unit(self):
        return bd.UNIT

    def tensor_objects(self, a, b):
        return bd.as_object(a) + bd.as_object(b)

    def identity(self, obj):
        return bd.identity(obj)

    def compose(self, f, g):
        return bd.compose(f, g)

    def tensor(self, f, g):
        return bd.tensor(f, g)

    def braiding(self, a, b):
        return bd.swap(a, b)

    def duality(self, obj):
        """Returns the nested :class:`DualityData` of a boundary word."""
        obj = bd.as_object(obj)
        dual, ev, coev = bd.duality_data(obj)
        return DualityData(obj, dual, ev, coev)


class TermBackend(SmcBackend):
    """The free category, with morphisms represented as terms.

    Equality of morphisms is decided by denotation.
    """

    name = "term"

    def unit(self):
        return terms.Unit()

    def tensor_objects(self, a, b):
        if isinstance(a, terms.Unit):
            return b

        if isinstance(b, terms.Unit):
            return a

        return terms.ObjTensor(a, b)

    def identity(self, obj):
        return terms.Id(obj)

    def compose(self, f, g):
        return terms.Seq(f, g)

    def tensor(self, f, g):
        return terms.Par(f, g)

    def braiding(self, a, b):
        return terms.Swap(a, b)

    def equal(self, f, g):
        return terms.terms_equal(f, g)

    def power(self, pair, k):
        if pair.a == terms.Alpha(1):
            return terms.Alpha(k)

        return super().power(pair, k)


# The generating object with its automorphism, in the free category
GENERATOR = DualizablePair(
    x=terms.PlusPt(),
    y=terms.MinusPt(),
    ev=terms.Ev(),
    coev=terms.Coev(),
    a=terms.Alpha(1),
    a_inv=terms.Alpha(-1),
)


def bordism_generator():
    """Returns ``(+, alpha)`` as a :class:`DualizablePair` of bordisms."""
    plus = bd.BoundaryObject((bd.PLUS,))
    return DualizablePair(
        x=plus,
        y=plus.dual(),
        ev=bd.cap(bd.MINUS_PLUS),
        coev=bd.cup(bd.PLUS_MINUS),
        a=bd.alpha(1),
        a_inv=bd.alpha(-1),
    )
