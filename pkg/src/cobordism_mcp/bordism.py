"""
The labelled 1-dimensional cobordism category.

Objects are words over ``+``/``-`` (oriented finite point sets). A
morphism is a bordism: a perfect matching of its boundary ports by
integer-labelled arcs, plus a multiset of integer-labelled circles.

Conventions used throughout the package:

*   ``compose(f, g)`` means "``f`` then ``g``" (diagrammatic order). The
    categorical ``g ∘ f`` is written ``compose(f, g)``.
*   Each strand is oriented. Flow leaves source ``+`` ports and target
    ``-`` ports and enters source ``-`` ports and target ``+`` ports. A
    label is measured along that flow, so gluing only ever adds labels.
*   Target port ``i`` of ``f`` is glued to source port ``i`` of ``g``.
    Reordering is always an explicit :func:`swap`.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import logging
import re
from collections import defaultdict, namedtuple
from dataclasses import dataclass

from .errors import (
    BoundaryMismatch,
    CobordismError,
    InvalidBordism,
    NotEndomorphism,
    NotInvertible,
)
from .scalars import EMPTY, ScalarMultiset


logger = logging.getLogger(__name__)

PLUS = "+"
MINUS = "-"

SOURCE = "s"
TARGET = "t"

# Orientation orders accepted by cap() and cup()
MINUS_PLUS = "-+"
PLUS_MINUS = "+-"

_GLUED = "m"

_FLIP = {PLUS: MINUS, MINUS: PLUS}

_BORDISM_RE = re.compile(
    r"^src=(?P<src>[+\-1]*); tgt=(?P<tgt>[+\-1]*); "
    r"arcs=\[(?P<arcs>[^\]]*)\]; circles=\[(?P<circles>[^\]]*)\]$"
)
_ARC = r"\((s|t)(\d+),(s|t)(\d+),(-?\d+)\)"
_ARC_RE = re.compile(_ARC)
_ARC_LIST_RE = re.compile(
    r"^(?:%s(?:,%s)*)?$" % (_ARC, _ARC)
)
_CIRCLE_LIST_RE = re.compile(r"^(?:\s*-?\d+\s*(?:,\s*-?\d+\s*)*)?$")


@dataclass(frozen=True)
class BoundaryObject(object):
    """A finite word over ``+``/``-``.

    The empty word is the monoidal unit and prints as ``1``.

    Args:
        signs (()): a sequence of ``"+"``/``"-"`` characters
    """

    signs: tuple = ()

    def __post_init__(self):
        signs = tuple(self.signs)
        for sign in signs:
            if sign not in _FLIP:
                raise CobordismError("Invalid boundary sign %r" % (sign,))

        object.__setattr__(self, "signs", signs)

    @classmethod
    def parse(cls, text):
        """Parses a word such as ``"+-+"``; ``"1"`` or ``""`` is empty."""
        text = text.strip()
        if text in ("", "1"):
            return cls()

        return cls(tuple(text))

    def tensor(self, other):
        """Returns the concatenation of this word and ``other``."""
        return BoundaryObject(self.signs + as_object(other).signs)

    def dual(self):
        """Returns the reversed word with every sign flipped."""
        return BoundaryObject(tuple(_FLIP[s] for s in reversed(self.signs)))

    def charge(self):
        """Returns the number of ``+`` minus the number of ``-`` signs."""
        return self.signs.count(PLUS) - self.signs.count(MINUS)

    def __add__(self, other):
        return self.tensor(other)

    def __len__(self):
        return len(self.signs)

    def __iter__(self):
        return iter(self.signs)

    def __getitem__(self, index):
        return self.signs[index]

    def __str__(self):
        return "".join(self.signs) or "1"


UNIT = BoundaryObject()


def as_object(obj):
    """Coerces a string or :class:`BoundaryObject` to a BoundaryObject."""
    if isinstance(obj, BoundaryObject):
        return obj

    if isinstance(obj, str):
        return BoundaryObject.parse(obj)

    return BoundaryObject(tuple(obj))


@dataclass(frozen=True, order=True)
class Port(object):
    """A boundary point of a bordism.

    Ports order source-first, then by index.
    """

    side: str
    index: int

    def __str__(self):
        return "%s%d" % (self.side, self.index)


@dataclass(frozen=True)
class Arc(object):
    """An interval component joining two distinct ports.

    The endpoints are unordered; they are stored with ``first < second``.
    """

    first: Port
    second: Port
    label: int = 0

    def __post_init__(self):
        if self.first == self.second:
            raise InvalidBordism("Arc endpoints must differ: %s" % self.first)

        if isinstance(self.label, bool) or not isinstance(self.label, int):
            raise InvalidBordism(
                "Arc labels must be integers, got %r" % (self.label,)
            )

        if self.second < self.first:
            first, second = self.second, self.first
            object.__setattr__(self, "first", first)
            object.__setattr__(self, "second", second)

    @property
    def is_through(self):
        return self.first.side != self.second.side

    @property
    def is_cap(self):
        return self.first.side == self.second.side == SOURCE

    @property
    def is_cup(self):
        return self.first.side == self.second.side == TARGET

    def __str__(self):
        return "(%s,%s,%d)" % (self.first, self.second, self.label)


def arc(p, q, label=0):
    """Builds an :class:`Arc` from port strings such as ``"s0"``."""
    return Arc(_port(p), _port(q), label)


def _port(port):
    if isinstance(port, Port):
        return port

    return Port(port[0], int(port[1:]))


@dataclass(frozen=True)
class Bordism(object):
    """A morphism ``src -> tgt`` of the labelled cobordism category.

    Construction validates the matching and brings the arcs into
    canonical order, so two bordisms are equal iff their serializations
    are equal.

    Args:
        src: the source :class:`BoundaryObject` (or word string)
        tgt: the target :class:`BoundaryObject` (or word string)
        arcs (()): an iterable of :class:`Arc`
        circles (EMPTY): a :class:`ScalarMultiset` or iterable of labels
    """

    src: BoundaryObject
    tgt: BoundaryObject
    arcs: tuple = ()
    circles: ScalarMultiset = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "src", as_object(self.src))
        object.__setattr__(self, "tgt", as_object(self.tgt))
        object.__setattr__(
            self, "arcs", tuple(sorted(self.arcs, key=lambda a: a.first))
        )
        if not isinstance(self.circles, ScalarMultiset):
            object.__setattr__(
                self, "circles", ScalarMultiset(self.circles)
            )

        self._validate()

    def _validate(self):
        seen = set()
        for a in self.arcs:
            for port in (a.first, a.second):
                if port in seen:
                    raise InvalidBordism("Port %s is used twice" % port)

                if port.index < 0 or port.index >= len(self._word(port)):
                    raise InvalidBordism("Port %s is out of range" % port)

                seen.add(port)

            s1 = self.sign(a.first)
            s2 = self.sign(a.second)
            if a.is_through and s1 != s2:
                raise InvalidBordism(
                    "Through arc %s joins opposite signs" % a
                )

            if not a.is_through and s1 == s2:
                raise InvalidBordism(
                    "Cap/cup arc %s joins equal signs" % a
                )

        expected = len(self.src) + len(self.tgt)
        if len(seen) != expected:
            raise InvalidBordism(
                "Arcs cover %d of %d ports" % (len(seen), expected)
            )

    def _word(self, port):
        return self.src if port.side == SOURCE else self.tgt

    def sign(self, port):
        """Returns the sign of the given port."""
        return self._word(port)[port.index]

    @property
    def is_closed(self):
        """Whether this is a scalar, i.e. ``1 -> 1``."""
        return not self.src and not self.tgt

    def serialize(self):
        """Returns the canonical text serialization."""
        return "src=%s; tgt=%s; arcs=[%s]; circles=[%s]" % (
            self.src,
            self.tgt,
            ",".join(str(a) for a in self.arcs),
            ",".join(str(c) for c in self.circles),
        )

    def to_dict(self):
        """Returns a JSON-serializable dict mirroring :meth:`serialize`."""
        return {
            "src": str(self.src),
            "tgt": str(self.tgt),
            "arcs": [
                [str(a.first), str(a.second), a.label] for a in self.arcs
            ],
            "circles": list(self.circles.labels()),
        }

    @classmethod
    def parse(cls, text):
        """Parses the canonical text serialization.

        Args:
            text: a string produced by :meth:`serialize`

        Returns:
            a :class:`Bordism`

        Raises:
            CobordismError: if the text is malformed
        """
        match = _BORDISM_RE.match(text.strip())
        if match is None:
            raise CobordismError("Malformed bordism '%s'" % text)

        arcs_text = match.group("arcs")
        if not _ARC_LIST_RE.match(arcs_text):
            raise CobordismError("Malformed arc list '%s'" % arcs_text)

        arcs = [
            Arc(
                Port(m.group(1), int(m.group(2))),
                Port(m.group(3), int(m.group(4))),
                int(m.group(5)),
            )
            for m in _ARC_RE.finditer(arcs_text)
        ]

        circles_text = match.group("circles").strip()
        if not _CIRCLE_LIST_RE.match(circles_text):
            raise CobordismError("Malformed circle list '%s'" % circles_text)

        circles = []
        if circles_text:
            circles = [int(c) for c in circles_text.split(",")]

        return cls(
            BoundaryObject.parse(match.group("src")),
            BoundaryObject.parse(match.group("tgt")),
            arcs,
            circles,
        )

    def __str__(self):
        return self.serialize()


def identity(obj):
    """Returns the identity bordism of ``obj``.

    Args:
        obj: a :class:`BoundaryObject` or word string

    Returns:
        a :class:`Bordism`
    """
    obj = as_object(obj)
    arcs = [Arc(Port(SOURCE, i), Port(TARGET, i)) for i in range(len(obj))]
    return Bordism(obj, obj, arcs)


def empty():
    """Returns the empty bordism ``1 -> 1``, the unit scalar."""
    return Bordism(UNIT, UNIT)


def circle(label):
    """Returns the closed bordism consisting of one labelled circle."""
    return Bordism(UNIT, UNIT, (), [label])


def compose(f, g):
    """Glues ``f: M -> N`` and ``g: N -> L`` into ``M -> L``.

    Target port ``i`` of ``f`` is glued to source port ``i`` of ``g``.
    Maximal open chains of arcs become arcs and closed chains become
    circles; labels along a chain add up.

    Args:
        f: a :class:`Bordism`
        g: a :class:`Bordism` with ``g.src == f.tgt``

    Returns:
        a :class:`Bordism`

    Raises:
        BoundaryMismatch: if ``f.tgt != g.src``
    """
    if f.tgt != g.src:
        raise BoundaryMismatch(f.tgt, g.src)

    edges = [_glued_edge(a, TARGET) for a in f.arcs]
    edges += [_glued_edge(a, SOURCE) for a in g.arcs]

    adjacency = defaultdict(list)
    for eid, (u, v, _) in enumerate(edges):
        adjacency[u].append(eid)
        adjacency[v].append(eid)

    used = set()
    arcs = []
    for node in sorted(n for n in adjacency if n[0] != _GLUED):
        if all(eid in used for eid in adjacency[node]):
            continue

        end, total = _follow(node, adjacency, edges, used)
        arcs.append(Arc(Port(*node), Port(*end), total))

    loops = []
    for eid, (u, _, _) in enumerate(edges):
        if eid in used:
            continue

        _, total = _follow(u, adjacency, edges, used)
        loops.append(total)

    return Bordism(
        f.src, g.tgt, arcs, f.circles + g.circles + ScalarMultiset(loops)
    )


def _glued_edge(a, glued_side):
    return (
        _glued_node(a.first, glued_side),
        _glued_node(a.second, glued_side),
        a.label,
    )


def _glued_node(port, glued_side):
    if port.side == glued_side:
        return (_GLUED, port.index)

    return (port.side, port.index)


def _follow(node, adjacency, edges, used):
    # Walks unused edges from node until an outer node is reached or the
    # walk returns to its (glued) starting node.
    total = 0
    while True:
        free = [eid for eid in adjacency[node] if eid not in used]
        if not free:
            return node, total

        eid = free[0]
        used.add(eid)
        u, v, label = edges[eid]
        total += label
        node = v if node == u else u
        if node[0] != _GLUED:
            return node, total


def compose_all(*morphisms):
    """Composes a non-empty sequence of bordisms left to right."""
    result = morphisms[0]
    for m in morphisms[1:]:
        result = compose(result, m)

    return result


def tensor(f, g):
    """Returns the disjoint union ``f ⊗ g``.

    Ports of ``g`` are shifted past those of ``f``.
    """
    shift = {SOURCE: len(f.src), TARGET: len(f.tgt)}

    def _shift(port):
        return Port(port.side, port.index + shift[port.side])

    arcs = list(f.arcs) + [
        Arc(_shift(a.first), _shift(a.second), a.label) for a in g.arcs
    ]
    return Bordism(f.src + g.src, f.tgt + g.tgt, arcs, f.circles + g.circles)


def tensor_all(*morphisms):
    """Tensors a sequence of bordisms; the empty sequence gives the unit."""
    result = empty()
    for m in morphisms:
        result = tensor(result, m)

    return result


def swap(a, b):
    """Returns the symmetry ``a ⊗ b -> b ⊗ a``."""
    a = as_object(a)
    b = as_object(b)
    arcs = [
        Arc(Port(SOURCE, i), Port(TARGET, len(b) + i)) for i in range(len(a))
    ]
    arcs += [
        Arc(Port(SOURCE, len(a) + j), Port(TARGET, j)) for j in range(len(b))
    ]
    return Bordism(a + b, b + a, arcs)


def cap(order=MINUS_PLUS):
    """Returns the evaluation strand ``(-,+) -> 1`` or ``(+,-) -> 1``.

    Args:
        order (MINUS_PLUS): ``MINUS_PLUS`` or ``PLUS_MINUS``
    """
    _check_order(order)
    return Bordism(order, UNIT, [Arc(Port(SOURCE, 0), Port(SOURCE, 1))])


def cup(order=PLUS_MINUS):
    """Returns the coevaluation strand ``1 -> (+,-)`` or ``1 -> (-,+)``.

    Args:
        order (PLUS_MINUS): ``PLUS_MINUS`` or ``MINUS_PLUS``
    """
    _check_order(order)
    return Bordism(UNIT, order, [Arc(Port(TARGET, 0), Port(TARGET, 1))])


def _check_order(order):
    if order not in (MINUS_PLUS, PLUS_MINUS):
        raise CobordismError(
            "Orientation order must be '-+' or '+-', got %r" % (order,)
        )


def alpha(k):
    """Returns the ``+`` strand labelled ``k``, i.e. the ``k``-th power of
    the generating automorphism."""
    return Bordism(PLUS, PLUS, [Arc(Port(SOURCE, 0), Port(TARGET, 0), k)])


def dual_object(obj):
    """Returns the dual word: reversed, with every sign flipped."""
    return as_object(obj).dual()


def duality_data(obj):
    """Returns nested evaluation/coevaluation bordisms for ``obj``.

    Port ``i`` of ``obj`` is matched with port ``len - 1 - i`` of the
    dual, which makes both zig-zag identities hold.

    Args:
        obj: a :class:`BoundaryObject` or word string

    Returns:
        a ``(dual, ev, coev)`` tuple with ``ev: dual ⊗ obj -> 1`` and
        ``coev: 1 -> obj ⊗ dual``
    """
    obj = as_object(obj)
    dual = obj.dual()
    n = len(obj)
    ev = Bordism(
        dual + obj,
        UNIT,
        [Arc(Port(SOURCE, n + i), Port(SOURCE, n - 1 - i)) for i in range(n)],
    )
    coev = Bordism(
        UNIT,
        obj + dual,
        [Arc(Port(TARGET, i), Port(TARGET, 2 * n - 1 - i)) for i in range(n)],
    )
    return dual, ev, coev


def trace_close(f):
    """Closes an endomorphism into a scalar.

    Computed as ``coev ; (f ⊗ id_y) ; swap(x, y) ; ev`` from
    :func:`duality_data`.

    Args:
        f: a :class:`Bordism` with ``f.src == f.tgt``

    Returns:
        a closed :class:`Bordism`

    Raises:
        NotEndomorphism: if ``f.src != f.tgt``
    """
    if f.src != f.tgt:
        raise NotEndomorphism(f.src, f.tgt)

    x = f.src
    y, ev, coev = duality_data(x)
    return compose_all(coev, tensor(f, identity(y)), swap(x, y), ev)


def is_invertible(f):
    """Whether ``f`` is a sign-preserving labelled permutation."""
    return not f.circles and all(a.is_through for a in f.arcs)


def inverse(f):
    """Returns the inverse of an invertible bordism.

    Raises:
        NotInvertible: if ``f`` has circles, caps or cups
    """
    if not is_invertible(f):
        raise NotInvertible("Bordism is not invertible: %s" % f)

    arcs = []
    for a in f.arcs:
        src, tgt = a.second.index, a.first.index
        arcs.append(Arc(Port(SOURCE, src), Port(TARGET, tgt), -a.label))

    return Bordism(f.tgt, f.src, arcs)


def permutation(obj, mapping, labels=None):
    """Builds a labelled permutation bordism ``obj -> obj'``.

    Args:
        obj: the source word
        mapping: a sequence sending source position ``i`` to target
            position ``mapping[i]``
        labels (None): an optional sequence of per-strand labels

    Returns:
        a :class:`Bordism`
    """
    obj = as_object(obj)
    labels = labels or [0] * len(obj)
    target = [None] * len(obj)
    for i, j in enumerate(mapping):
        target[j] = obj[i]

    arcs = [
        Arc(Port(SOURCE, i), Port(TARGET, j), labels[i])
        for i, j in enumerate(mapping)
    ]
    return Bordism(obj, BoundaryObject(tuple(target)), arcs)


NormalShape = namedtuple(
    "NormalShape",
    ["src", "tgt", "cups", "caps", "upper", "lower", "strands", "circles"],
)
NormalShape.__doc__ = """The serial decomposition of a bordism.

A bordism ``src -> tgt`` factors as

1.  ``id_src ⊗ coev^{⊗c}: src -> upper`` with ``upper = src (+-)^c``,
2.  a sign-preserving labelled permutation ``upper -> lower`` whose
    strands are ``(upper position, lower position, label)``,
3.  ``id_tgt ⊗ ev^{⊗d}: lower -> tgt`` with ``lower = tgt (-+)^d``,

tensored with one closed circle per entry of ``circles``.
"""


def decompose(b):
    """Returns the :class:`NormalShape` of a bordism."""
    m = len(b.src)
    n = len(b.tgt)
    cups = [a for a in b.arcs if a.is_cup]
    caps = [a for a in b.arcs if a.is_cap]

    strands = []
    for a in b.arcs:
        if a.is_through:
            strands.append((a.first.index, a.second.index, a.label))

    for r, a in enumerate(caps):
        minus, plus = _by_sign(b, a, MINUS)
        strands.append((minus.index, n + 2 * r, 0))
        strands.append((plus.index, n + 2 * r + 1, a.label))

    for q, a in enumerate(cups):
        plus, minus = _by_sign(b, a, PLUS)
        strands.append((m + 2 * q, plus.index, a.label))
        strands.append((m + 2 * q + 1, minus.index, 0))

    upper = b.src + BoundaryObject((PLUS, MINUS) * len(cups))
    lower = b.tgt + BoundaryObject((MINUS, PLUS) * len(caps))
    return NormalShape(
        src=b.src,
        tgt=b.tgt,
        cups=len(cups),
        caps=len(caps),
        upper=upper,
        lower=lower,
        strands=tuple(sorted(strands)),
        circles=b.circles,
    )


def _by_sign(b, a, first_sign):
    if b.sign(a.first) == first_sign:
        return a.first, a.second

    return a.second, a.first


def adjacent_transpositions(mapping):
    """Factors a permutation into adjacent transpositions.

    Args:
        mapping: a sequence sending position ``i`` to ``mapping[i]``

    Returns:
        a list of positions ``p``; applying the swaps of ``p`` and
        ``p + 1`` in order realises the permutation
    """
    current = list(mapping)
    steps = []
    changed = True
    while changed:
        changed = False
        for p in range(len(current) - 1):
            if current[p] > current[p + 1]:
                current[p], current[p + 1] = current[p + 1], current[p]
                steps.append(p)
                changed = True

    return steps
