"""
Tests for labelled bordisms and their gluing.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import pytest
from hypothesis import given, settings

from cobordism_mcp import bordism as bd
from cobordism_mcp import oracles
from cobordism_mcp.errors import (
    BoundaryMismatch,
    CobordismError,
    InvalidBordism,
    NotEndomorphism,
    NotInvertible,
)
from cobordism_mcp.scalars import ScalarMultiset
from cobordism_mcp.traces import classify_scalar

from .strategies import (
    bordisms,
    bordisms_between,
    composable,
    endomorphisms,
    invertibles,
    round_trips,
)


class TestBoundaryObject:
    """Tests for boundary words."""

    def test_parse_and_print(self):
        """Test that words print back as parsed."""
        assert str(bd.BoundaryObject.parse("++-")) == "++-"
        assert str(bd.BoundaryObject.parse("1")) == "1"
        assert bd.BoundaryObject.parse("") == bd.UNIT

    def test_invalid_sign(self):
        """Test that characters other than + and - are rejected."""
        with pytest.raises(CobordismError):
            bd.BoundaryObject(("+", "x"))

    def test_dual_reverses_and_flips(self):
        """Test the dual word."""
        assert str(bd.dual_object("++-")) == "+--"
        assert bd.dual_object(bd.UNIT) == bd.UNIT

    def test_charge(self):
        """Test counting signs."""
        assert bd.as_object("++-").charge() == 1
        assert bd.as_object("-+-").charge() == -1


class TestBordism:
    """Tests for constructing and serializing bordisms."""

    def test_identity(self):
        """Test the identity bordism of a word."""
        b = bd.identity("+-")
        assert b.serialize() == (
            "src=+-; tgt=+-; arcs=[(s0,t0,0),(s1,t1,0)]; circles=[]"
        )

    def test_empty_is_closed(self):
        """Test the empty bordism."""
        assert bd.empty().is_closed
        assert bd.empty().serialize() == "src=1; tgt=1; arcs=[]; circles=[]"

    def test_arc_endpoints_are_unordered(self):
        """Test that arcs store their endpoints in port order."""
        assert bd.arc("t0", "s0", 4) == bd.arc("s0", "t0", 4)

    def test_uncovered_port(self):
        """Test that every port must be matched."""
        with pytest.raises(InvalidBordism):
            bd.Bordism("+", "+", [], [])

    def test_port_used_twice(self):
        """Test that a port cannot be the end of two arcs."""
        with pytest.raises(InvalidBordism):
            bd.Bordism(
                "++",
                "++",
                [bd.arc("s0", "t0"), bd.arc("s0", "t1"), bd.arc("s1", "t1")],
            )

    def test_through_arc_sign_mismatch(self):
        """Test that a through arc must join equal signs."""
        with pytest.raises(InvalidBordism):
            bd.Bordism("+", "-", [bd.arc("s0", "t0")])

    def test_cap_sign_mismatch(self):
        """Test that a cap must join opposite signs."""
        with pytest.raises(InvalidBordism):
            bd.Bordism("++", bd.UNIT, [bd.arc("s0", "s1")])

    def test_parse_serialize(self):
        """Test parsing the canonical text form."""
        text = "src=+; tgt=++-; arcs=[(s0,t0,2),(t1,t2,-1)]; circles=[3,3]"
        b = bd.Bordism.parse(text)
        assert b.serialize() == text
        assert b.circles == ScalarMultiset([3, 3])

    def test_parse_malformed(self):
        """Test that garbage does not parse."""
        with pytest.raises(CobordismError):
            bd.Bordism.parse("src=+; tgt=+; arcs=[(s0,t0)]; circles=[]")

        with pytest.raises(CobordismError):
            bd.Bordism.parse("not a bordism")

    def test_parse_malformed_circles(self):
        """Test that a bad circle list is a parse error."""
        with pytest.raises(CobordismError, match="Malformed circle list"):
            bd.Bordism.parse("src=; tgt=; arcs=[]; circles=[x]")

        with pytest.raises(CobordismError, match="Malformed circle list"):
            bd.Bordism.parse("src=+; tgt=+; arcs=[(s0,t0,0)]; circles=[1,,2]")

    @pytest.mark.parametrize("label", [1.5, True, "2"])
    def test_arc_label_must_be_an_integer(self, label):
        """Test that strand labels are integers."""
        with pytest.raises(InvalidBordism):
            bd.Arc(bd.Port("s", 0), bd.Port("t", 0), label)

        with pytest.raises(InvalidBordism):
            bd.alpha(label)

    def test_to_dict(self):
        """Test the dict form."""
        assert bd.alpha(2).to_dict() == {
            "src": "+",
            "tgt": "+",
            "arcs": [["s0", "t0", 2]],
            "circles": [],
        }

    @given(bordisms())
    def test_serialize_parse(self, b):
        """Test that parsing a serialization gives the same bordism."""
        assert bd.Bordism.parse(b.serialize()) == b


class TestGenerators:
    """Tests for the basic bordisms."""

    def test_swap(self):
        """Test the symmetry of two points."""
        assert bd.swap("+", "-").serialize() == (
            "src=+-; tgt=-+; arcs=[(s0,t1,0),(s1,t0,0)]; circles=[]"
        )

    def test_cap_and_cup(self):
        """Test the evaluation and coevaluation strands."""
        assert bd.cap().serialize() == (
            "src=-+; tgt=1; arcs=[(s0,s1,0)]; circles=[]"
        )
        assert bd.cup().serialize() == (
            "src=1; tgt=+-; arcs=[(t0,t1,0)]; circles=[]"
        )
        assert str(bd.cap(bd.PLUS_MINUS).src) == "+-"
        assert str(bd.cup(bd.MINUS_PLUS).tgt) == "-+"

    def test_bad_orientation_order(self):
        """Test that caps need a two-point order."""
        with pytest.raises(CobordismError):
            bd.cap("++")

    def test_alpha_powers_add(self):
        """Test that composing strands adds their labels."""
        assert bd.compose(bd.alpha(2), bd.alpha(3)) == bd.alpha(5)
        assert bd.compose(bd.alpha(4), bd.alpha(-4)) == bd.identity("+")
        assert bd.alpha(0) == bd.identity("+")

    def test_tensor_of_alphas(self):
        """Test placing two strands side by side."""
        assert bd.tensor(bd.alpha(2), bd.alpha(3)).serialize() == (
            "src=++; tgt=++; arcs=[(s0,t0,2),(s1,t1,3)]; circles=[]"
        )

    def test_zig_zags(self):
        """Test both snake identities."""
        plus = bd.identity("+")
        minus = bd.identity("-")
        snake_plus = bd.compose(
            bd.tensor(bd.cup(), plus), bd.tensor(plus, bd.cap())
        )
        snake_minus = bd.compose(
            bd.tensor(minus, bd.cup()), bd.tensor(bd.cap(), minus)
        )
        assert snake_plus == plus
        assert snake_minus == minus

    def test_duality_data_zig_zag(self):
        """Test that nested duality data satisfies the snake identity."""
        x = bd.as_object("+-+")
        y, ev, coev = bd.duality_data(x)
        snake = bd.compose(
            bd.tensor(coev, bd.identity(x)), bd.tensor(bd.identity(x), ev)
        )
        assert str(y) == "-+-"
        assert snake == bd.identity(x)


class TestCompose:
    """Tests for gluing bordisms."""

    def test_labels_sum_and_circles_form(self):
        """Test that a cup glued to a cap closes a circle."""
        f = bd.Bordism.parse(
            "src=+; tgt=++-; arcs=[(s0,t0,2),(t1,t2,-1)]; circles=[]"
        )
        g = bd.Bordism.parse(
            "src=++-; tgt=++-; arcs=[(s0,t0,0),(s1,s2,0),(t1,t2,1)]; "
            "circles=[]"
        )
        assert bd.compose(f, g).serialize() == (
            "src=+; tgt=++-; arcs=[(s0,t0,2),(t1,t2,1)]; circles=[-1]"
        )

    def test_cup_then_cap_is_a_circle(self):
        """Test closing the unknot."""
        assert bd.compose(bd.cup(), bd.cap(bd.PLUS_MINUS)) == bd.circle(0)

    def test_boundary_mismatch(self):
        """Test that composition requires matching boundaries."""
        with pytest.raises(BoundaryMismatch):
            bd.compose(bd.alpha(1), bd.identity("-"))

    @given(composable(count=3, max_len=8))
    @settings(max_examples=200, deadline=None)
    def test_associativity(self, fs):
        """Test that gluing is associative."""
        f, g, h = fs
        assert bd.compose(bd.compose(f, g), h) == bd.compose(
            f, bd.compose(g, h)
        )

    @given(bordisms())
    def test_identities(self, f):
        """Test that identities are units for gluing."""
        assert bd.compose(bd.identity(f.src), f) == f
        assert bd.compose(f, bd.identity(f.tgt)) == f

    @given(composable(count=2))
    def test_agrees_with_oracle(self, fs):
        """Test gluing against the port-graph traversal."""
        f, g = fs
        assert bd.compose(f, g) == oracles.glue_compose(f, g)

    @given(composable(count=2), composable(count=2))
    def test_interchange(self, fs, gs):
        """Test that tensor and composition interchange."""
        f1, f2 = fs
        g1, g2 = gs
        assert bd.compose(bd.tensor(f1, g1), bd.tensor(f2, g2)) == bd.tensor(
            bd.compose(f1, f2), bd.compose(g1, g2)
        )

    @given(bordisms(max_len=3), bordisms(max_len=3))
    def test_symmetry_naturality(self, f, g):
        """Test that the swap is natural."""
        lhs = bd.compose(bd.tensor(f, g), bd.swap(f.tgt, g.tgt))
        rhs = bd.compose(bd.swap(f.src, g.src), bd.tensor(g, f))
        assert lhs == rhs

    def test_compose_all(self):
        """Test composing a chain."""
        assert bd.compose_all(bd.alpha(1), bd.alpha(2), bd.alpha(3)) == (
            bd.alpha(6)
        )
        assert bd.tensor_all() == bd.empty()


class TestClosedBordisms:
    """Tests for the monoid of closed bordisms."""

    @given(
        bordisms_between(bd.UNIT, bd.UNIT, max_circles=4),
        bordisms_between(bd.UNIT, bd.UNIT, max_circles=4),
    )
    def test_gluing_is_multiset_union(self, a, b):
        """Test that gluing and tensoring closed bordisms add labels."""
        glued = bd.compose(a, b)
        assert glued == bd.tensor(a, b) == bd.tensor(b, a)
        assert classify_scalar(glued) == (
            classify_scalar(a) + classify_scalar(b)
        )

    @given(bordisms_between(bd.UNIT, bd.UNIT, max_circles=4))
    def test_empty_is_the_unit(self, a):
        """Test that the empty bordism is the unit scalar."""
        assert bd.compose(a, bd.empty()) == a
        assert bd.tensor(bd.empty(), a) == a
        assert classify_scalar(bd.empty()) == ScalarMultiset()


class TestTraceClose:
    """Tests for closing endomorphisms."""

    def test_alpha_closes_to_labelled_circle(self):
        """Test that the closed generator is one circle."""
        assert bd.trace_close(bd.alpha(3)) == bd.circle(3)

    def test_identity_closes_to_unlabelled_circles(self):
        """Test one circle per point."""
        closed = bd.trace_close(bd.identity("+-+"))
        assert closed.circles == ScalarMultiset([0, 0, 0])

    def test_cycle_sums_labels(self):
        """Test that a cycle closes to one circle with the label sum."""
        f = bd.permutation("++", [1, 0], [2, 3])
        assert bd.trace_close(f).circles == ScalarMultiset([5])

    def test_existing_circles_are_kept(self):
        """Test that the closure keeps the circles of ``f``."""
        f = bd.Bordism("+", "+", [bd.arc("s0", "t0", 1)], [7])
        assert bd.trace_close(f).circles == ScalarMultiset([1, 7])

    def test_not_endomorphism(self):
        """Test that only endomorphisms close."""
        with pytest.raises(NotEndomorphism):
            bd.trace_close(bd.cup())

    @given(endomorphisms())
    def test_agrees_with_oracle(self, f):
        """Test closing against direct gluing."""
        assert bd.trace_close(f) == oracles.glue_closure(f)

    @given(round_trips(max_len=6))
    @settings(max_examples=200, deadline=None)
    def test_cyclicity(self, fg):
        """Test that the closure of ``f ; g`` equals that of ``g ; f``."""
        f, g = fg
        assert bd.trace_close(bd.compose(f, g)) == bd.trace_close(
            bd.compose(g, f)
        )


class TestInvertible:
    """Tests for labelled permutations and their inverses."""

    def test_cap_is_not_invertible(self):
        """Test that caps have no inverse."""
        assert not bd.is_invertible(bd.tensor(bd.cup(), bd.identity("+")))
        with pytest.raises(NotInvertible):
            bd.inverse(bd.cup())

    def test_circles_are_not_invertible(self):
        """Test that circles have no inverse."""
        assert not bd.is_invertible(bd.circle(0))

    def test_permutation(self):
        """Test building a labelled permutation."""
        f = bd.permutation("+-", [1, 0], [2, -1])
        assert str(f.tgt) == "-+"
        assert bd.is_invertible(f)

    @given(invertibles())
    def test_inverse(self, f):
        """Test that the inverse composes to identities."""
        g = bd.inverse(f)
        assert bd.compose(f, g) == bd.identity(f.src)
        assert bd.compose(g, f) == bd.identity(f.tgt)


class TestDecompose:
    """Tests for the serial normal shape."""

    def test_figure_bordism(self):
        """Test decomposing a bordism with a cup and a circle."""
        b = bd.Bordism.parse(
            "src=+; tgt=++-; arcs=[(s0,t0,2),(t1,t2,1)]; circles=[-1]"
        )
        shape = bd.decompose(b)
        assert shape.cups == 1
        assert shape.caps == 0
        assert str(shape.upper) == "++-"
        assert str(shape.lower) == "++-"
        assert shape.strands == ((0, 0, 2), (1, 1, 1), (2, 2, 0))
        assert shape.circles == ScalarMultiset([-1])

    def test_adjacent_transpositions(self):
        """Test that the swaps move item ``i`` to ``mapping[i]``."""
        mapping = [2, 0, 3, 1]
        word = ["a", "b", "c", "d"]
        for p in bd.adjacent_transpositions(mapping):
            word[p], word[p + 1] = word[p + 1], word[p]

        assert word == ["b", "d", "a", "c"]
