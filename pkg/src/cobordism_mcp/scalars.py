"""
Finite multisets of integers, the free commutative monoid ℕ[ℤ].

Scalars of the labelled cobordism category are closed labelled
1-manifolds; a closed manifold is determined by the unordered list of
its circle labels, so scalars are stored as multisets.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import re

from pyrsistent import pbag

from .errors import CobordismError


_MULTISET_RE = re.compile(r"^\{\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\}$")


class ScalarMultiset(object):
    """An immutable finite multiset of integers.

    Union (``+``) is the monoid operation and the empty multiset is the
    unit. Iteration yields the labels in ascending order, with
    repetition.

    Args:
        labels (()): an iterable of integers
    """

    __slots__ = ("_bag",)

    def __init__(self, labels=()):
        labels = list(labels)
        for label in labels:
            if isinstance(label, bool) or not isinstance(label, int):
                raise CobordismError(
                    "Circle labels must be integers, got %r" % (label,)
                )

        object.__setattr__(self, "_bag", pbag(labels))

    def __setattr__(self, name, value):
        raise AttributeError("ScalarMultiset is immutable")

    @classmethod
    def parse(cls, text):
        """Parses the ``{k1,k2,...}`` text form.

        Args:
            text: the text form

        Returns:
            a :class:`ScalarMultiset`

        Raises:
            CobordismError: if the text is malformed
        """
        text = text.strip()
        if not _MULTISET_RE.match(text):
            raise CobordismError("Malformed multiset '%s'" % text)

        body = text[1:-1].strip()
        if not body:
            return cls()

        return cls(int(part) for part in body.split(","))

    def labels(self):
        """Returns the labels as a sorted tuple."""
        return tuple(sorted(self._bag))

    def counts(self):
        """Returns a dict mapping each label to its multiplicity."""
        return {label: self._bag.count(label) for label in set(self._bag)}

    def count(self, label):
        return self._bag.count(label)

    def union(self, other):
        """Returns the multiset union of this multiset and ``other``."""
        result = ScalarMultiset()
        object.__setattr__(result, "_bag", self._bag + other._bag)
        return result

    def __add__(self, other):
        if not isinstance(other, ScalarMultiset):
            return NotImplemented

        return self.union(other)

    def __iter__(self):
        return iter(self.labels())

    def __len__(self):
        return len(self._bag)

    def __bool__(self):
        return len(self._bag) > 0

    def __eq__(self, other):
        if not isinstance(other, ScalarMultiset):
            return NotImplemented

        return self._bag == other._bag

    def __hash__(self):
        return hash(self._bag)

    def __str__(self):
        return "{%s}" % ",".join(str(label) for label in self.labels())

    def __repr__(self):
        return "ScalarMultiset(%s)" % list(self.labels())


EMPTY = ScalarMultiset()
