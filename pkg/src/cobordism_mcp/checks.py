"""
Seeded property suites.

Each suite draws random instances from a :class:`random.Random` seeded by
the caller, so a run is reproducible from ``(suite, seed, cases)``.
Failures carry a reproducer string naming the inputs.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import logging
import random
from collections import namedtuple

import sympy

from . import bordism as bd
from . import oracles
from . import terms
from .evaluation import evaluate, evaluate_term
from .matrices import MatrixMorphism, dualizable_from_matrix, matrix_backend
from .parser import parse
from .scalars import ScalarMultiset
from .traces import (
    COMPONENT_COUNT,
    DIVISIBILITY,
    AutomorphismPoint,
    ThetaSpec,
    act_on_theta,
    generation_obstruction,
    generic_trace,
    is_generating_witness,
)


logger = logging.getLogger(__name__)

MAX_LABEL = 10

# Longest boundary word drawn by each suite
LAWS_WORD_LEN = 8
CYCLICITY_WORD_LEN = 6
ROUNDTRIP_WORD_LEN = 8
TERM_WORD_LEN = 2

MAX_DIM = 4

# Longest boundary word used for each matrix dimension in naturality runs
_NATURALITY_WORDS = {1: 4, 2: 3, 3: 1, 4: 1}


CheckFailure = namedtuple("CheckFailure", ["case", "message", "reproducer"])


class CheckReport(object):
    """The outcome of a property suite.

    Args:
        suite: the suite name
        seed: the seed the suite ran with
        cases: the number of cases drawn
    """

    def __init__(self, suite, seed, cases):
        self.suite = suite
        self.seed = seed
        self.cases = cases
        self.checked = 0
        self.failures = []

    @property
    def ok(self):
        return not self.failures

    def record(self, case, passed, message, reproducer):
        self.checked += 1
        if not passed:
            logger.debug("%s case %d failed: %s", self.suite, case, message)
            self.failures.append(CheckFailure(case, message, reproducer))

    def to_dict(self):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": self.cases,
            "checked": self.checked,
            "passed": self.ok,
            "failures": [f._asdict() for f in self.failures],
        }

    def lines(self):
        """Returns the report as text lines."""
        status = "ok" if self.ok else "FAILED"
        lines = [
            "%s: %s (%d checks, seed %d, %d failures)"
            % (
                self.suite,
                status,
                self.checked,
                self.seed,
                len(self.failures),
            )
        ]
        for f in self.failures:
            lines.append("  case %d: %s" % (f.case, f.message))
            lines.append("    reproduce: %s" % f.reproducer)

        return lines


###############################################################################
# Generators
###############################################################################


def random_word(rng, max_len=3, charge=None):
    """Draws a boundary word.

    Args:
        rng: a :class:`random.Random`
        max_len (3): the maximum length
        charge (None): if given, the required ``#+ - #-``
    """
    if charge is None:
        n = rng.randint(0, max_len)
        return bd.BoundaryObject(
            tuple(rng.choice((bd.PLUS, bd.MINUS)) for _ in range(n))
        )

    lengths = [
        n
        for n in range(abs(charge), max(max_len, abs(charge)) + 1)
        if (n - charge) % 2 == 0
    ]
    n = rng.choice(lengths)
    plus = (n + charge) // 2
    signs = [bd.PLUS] * plus + [bd.MINUS] * (n - plus)
    rng.shuffle(signs)
    return bd.BoundaryObject(tuple(signs))


def random_bordism(rng, src, tgt, max_label=MAX_LABEL, max_circles=1):
    """Draws a bordism ``src -> tgt`` with a uniformly shuffled matching.

    Ports are split by flow direction: outgoing ports (source ``+``,
    target ``-``) are matched with incoming ones (source ``-``,
    target ``+``).

    Raises:
        ValueError: if ``src`` and ``tgt`` have different charges
    """
    src = bd.as_object(src)
    tgt = bd.as_object(tgt)
    outgoing = []
    incoming = []
    for side, word in ((bd.SOURCE, src), (bd.TARGET, tgt)):
        for i, sign in enumerate(word):
            port = bd.Port(side, i)
            if (sign == bd.PLUS) == (side == bd.SOURCE):
                outgoing.append(port)
            else:
                incoming.append(port)

    if len(outgoing) != len(incoming):
        raise ValueError("No bordism %s -> %s" % (src, tgt))

    rng.shuffle(incoming)
    arcs = [
        bd.Arc(p, q, rng.randint(-max_label, max_label))
        for p, q in zip(outgoing, incoming)
    ]
    circles = [
        rng.randint(-max_label, max_label)
        for _ in range(rng.randint(0, max_circles))
    ]
    return bd.Bordism(src, tgt, arcs, circles)


def random_invertible(rng, word, max_label=MAX_LABEL):
    """Draws a sign-preserving labelled permutation of ``word``."""
    word = bd.as_object(word)
    mapping = [None] * len(word)
    for sign in (bd.PLUS, bd.MINUS):
        positions = [i for i, s in enumerate(word) if s == sign]
        shuffled = list(positions)
        rng.shuffle(shuffled)
        for i, j in zip(positions, shuffled):
            mapping[i] = j

    labels = [rng.randint(-max_label, max_label) for _ in word]
    return bd.permutation(word, mapping, labels)


def random_matrix(rng, rows, cols):
    """Draws a matrix with small rational entries."""
    return MatrixMorphism(
        sympy.Matrix(
            rows,
            cols,
            lambda i, j: sympy.Rational(rng.randint(-4, 4), rng.randint(1, 3)),
        )
    )


def random_invertible_matrix(rng, n):
    """Draws an invertible ``n x n`` rational matrix."""
    while True:
        m = random_matrix(rng, n, n)
        if m.matrix.det() != 0:
            return m


def random_term(rng, max_len=TERM_WORD_LEN):
    """Draws a well-typed term by quoting a random bordism."""
    x = random_word(rng, max_len)
    y = random_word(rng, max_len, charge=x.charge())
    return terms.quote(random_bordism(rng, x, y, max_circles=0))


def _endo_term(rng, word):
    return terms.quote(random_bordism(rng, word, word, max_circles=0))


def law_instances(rng):
    """Draws ``(name, lhs, rhs)`` term pairs that are equal by a law."""
    f = random_term(rng)
    g = random_term(rng)
    f_dom, f_cod = terms.typecheck(f)
    g_dom, g_cod = terms.typecheck(g)
    u = _endo_term(rng, f_cod)
    v = _endo_term(rng, f_cod)
    f2 = _endo_term(rng, f_cod)
    g2 = _endo_term(rng, g_cod)
    obj = terms.obj_expr
    plus = terms.PlusPt()
    minus = terms.MinusPt()
    return [
        ("left unit", terms.Seq(terms.Id(obj(f_dom)), f), f),
        ("right unit", terms.Seq(f, terms.Id(obj(f_cod))), f),
        (
            "associativity",
            terms.Seq(terms.Seq(f, u), v),
            terms.Seq(f, terms.Seq(u, v)),
        ),
        ("tensor unit", terms.Par(f, terms.Id(terms.Unit())), f),
        (
            "tensor associativity",
            terms.Par(terms.Par(f, g), u),
            terms.Par(f, terms.Par(g, u)),
        ),
        (
            "interchange",
            terms.Seq(terms.Par(f, g), terms.Par(f2, g2)),
            terms.Par(terms.Seq(f, f2), terms.Seq(g, g2)),
        ),
        (
            "symmetry naturality",
            terms.Seq(terms.Par(f, g), terms.Swap(obj(f_cod), obj(g_cod))),
            terms.Seq(terms.Swap(obj(f_dom), obj(g_dom)), terms.Par(g, f)),
        ),
        (
            "symmetry involution",
            terms.Seq(
                terms.Swap(obj(f_dom), obj(g_dom)),
                terms.Swap(obj(g_dom), obj(f_dom)),
            ),
            terms.Id(obj(f_dom + g_dom)),
        ),
        (
            "zig-zag +",
            terms.Seq(
                terms.Par(terms.Coev(), terms.Id(plus)),
                terms.Par(terms.Id(plus), terms.Ev()),
            ),
            terms.Id(plus),
        ),
        (
            "zig-zag -",
            terms.Seq(
                terms.Par(terms.Id(minus), terms.Coev()),
                terms.Par(terms.Ev(), terms.Id(minus)),
            ),
            terms.Id(minus),
        ),
    ]


###############################################################################
# Suites
###############################################################################


def check_laws(seed, cases, bound=None):
    """Terms equal by a free-category law denote the same bordism, and
    distinct labels are told apart."""
    rng = random.Random(seed)
    report = CheckReport("laws", seed, cases)
    for case in range(cases):
        for name, lhs, rhs in law_instances(rng):
            report.record(
                case,
                terms.terms_equal(lhs, rhs),
                "%s law not respected" % name,
                "lhs=%s rhs=%s"
                % (terms.print_term(lhs), terms.print_term(rhs)),
            )

        k = rng.randint(-MAX_LABEL, MAX_LABEL)
        j = k + rng.randint(1, MAX_LABEL)
        report.record(
            case,
            not terms.terms_equal(terms.Alpha(k), terms.Alpha(j)),
            "distinct labels identified",
            "a^%d vs a^%d" % (k, j),
        )

        x = random_word(rng, LAWS_WORD_LEN)
        y = random_word(rng, LAWS_WORD_LEN, charge=x.charge())
        z = random_word(rng, LAWS_WORD_LEN, charge=x.charge())
        w = random_word(rng, LAWS_WORD_LEN, charge=x.charge())
        f = random_bordism(rng, x, y)
        g = random_bordism(rng, y, z)
        h = random_bordism(rng, z, w)
        report.record(
            case,
            bd.compose(bd.compose(f, g), h) == bd.compose(f, bd.compose(g, h)),
            "bordism composition is not associative",
            "f=%s g=%s h=%s" % (f, g, h),
        )

        a = random_bordism(rng, bd.UNIT, bd.UNIT, max_circles=3)
        b = random_bordism(rng, bd.UNIT, bd.UNIT, max_circles=3)
        union = a.circles + b.circles
        report.record(
            case,
            bd.compose(a, b) == bd.tensor(a, b) == bd.tensor(b, a)
            and bd.compose(a, b).circles == union
            and bd.compose(a, bd.empty()) == a,
            "closed bordisms do not form the monoid of label multisets",
            "a=%s b=%s" % (a, b),
        )

    return report


def check_cyclicity(seed, cases, bound=None):
    """The trace of ``f ; g`` equals the trace of ``g ; f``, for bordisms
    and for rational matrices."""
    rng = random.Random(seed)
    report = CheckReport("cyclicity", seed, cases)
    backend = matrix_backend()
    for case in range(cases):
        x = random_word(rng, CYCLICITY_WORD_LEN)
        z = random_word(rng, CYCLICITY_WORD_LEN, charge=x.charge())
        f = random_bordism(rng, x, z)
        g = random_bordism(rng, z, x)
        fg = bd.trace_close(bd.compose(f, g))
        gf = bd.trace_close(bd.compose(g, f))
        report.record(
            case,
            fg == gf and fg == oracles.glue_closure(bd.compose(f, g)),
            "bordism traces differ: %s vs %s" % (fg, gf),
            "f=%s g=%s" % (f, g),
        )

        m = rng.randint(1, MAX_DIM)
        n = rng.randint(1, MAX_DIM)
        a = random_matrix(rng, m, n)
        b = random_matrix(rng, n, m)
        ab = generic_trace(backend.duality(n), backend, backend.compose(a, b))
        ba = generic_trace(backend.duality(m), backend, backend.compose(b, a))
        report.record(
            case,
            ab == ba and ab.entry(0, 0) == backend.compose(a, b).trace(),
            "matrix traces differ: %s vs %s" % (ab, ba),
            "a=%s b=%s" % (a, b),
        )

    return report


def check_naturality(seed, cases, bound=None):
    """Evaluating a closure equals the trace of the evaluated
    endomorphism, evaluation preserves composition, tensor and identities,
    and both evaluation paths agree."""
    rng = random.Random(seed)
    report = CheckReport("naturality", seed, cases)
    backend = matrix_backend()
    for case in range(cases):
        dim = rng.choice(sorted(_NATURALITY_WORDS))
        a = random_invertible_matrix(rng, dim)
        pair = dualizable_from_matrix(a)
        x = random_word(rng, _NATURALITY_WORDS[dim])
        f = random_bordism(rng, x, x)
        image = evaluate(f, pair, backend)
        closed = evaluate(bd.trace_close(f), pair, backend)
        trace = generic_trace(backend.duality(image.rows), backend, image)
        via_term = evaluate_term(terms.quote(f), pair, backend)
        report.record(
            case,
            closed == trace and via_term == image,
            "trace %s does not match %s" % (closed, trace),
            "a=%s f=%s" % (a, f),
        )

        g = random_bordism(rng, x, x)
        h = random_bordism(rng, bd.PLUS, bd.PLUS)
        g_image = evaluate(g, pair, backend)
        report.record(
            case,
            evaluate(bd.compose(f, g), pair, backend)
            == backend.compose(image, g_image)
            and evaluate(bd.tensor(f, h), pair, backend)
            == backend.tensor(image, evaluate(h, pair, backend))
            and evaluate(bd.identity(x), pair, backend)
            == backend.identity(image.rows),
            "evaluation is not functorial",
            "a=%s f=%s g=%s h=%s" % (a, f, g, h),
        )

    return report


def check_roundtrip(seed, cases, bound=None):
    """Quotation inverts denotation, printing inverts parsing, and gluing
    agrees with the port-graph oracle."""
    rng = random.Random(seed)
    report = CheckReport("roundtrip", seed, cases)
    for case in range(cases):
        x = random_word(rng, ROUNDTRIP_WORD_LEN)
        y = random_word(rng, ROUNDTRIP_WORD_LEN, charge=x.charge())
        z = random_word(rng, ROUNDTRIP_WORD_LEN, charge=x.charge())
        b = random_bordism(rng, x, y)
        c = random_bordism(rng, y, z)
        term = terms.quote(b)
        text = terms.print_term(term)
        report.record(
            case,
            terms.denote(term) == b and parse(text) == term,
            "quote/print round trip failed",
            "b=%s term=%s" % (b, text),
        )
        report.record(
            case,
            bd.compose(b, c) == oracles.glue_compose(b, c),
            "composition disagrees with the port-graph oracle",
            "f=%s g=%s" % (b, c),
        )

    return report


def _targets(bound):
    labels = range(-bound, bound + 1)
    targets = [ScalarMultiset()]
    frontier = [()]
    for _ in range(bound):
        frontier = [
            t + (k,) for t in frontier for k in labels if not t or k >= t[-1]
        ]
        targets.extend(ScalarMultiset(t) for t in frontier)

    return targets


def check_classify(seed, cases, bound=4):
    """Theta specs classify to their exponents, theta[1] and theta[-1]
    reach every target, and the obstructed specs report a reason."""
    rng = random.Random(seed)
    bound = bound or 4
    report = CheckReport("classify", seed, cases)
    generator = AutomorphismPoint(bd.BoundaryObject((bd.PLUS,)), bd.alpha(1))
    for case in range(cases):
        n = rng.randint(0, 8)
        spec = ThetaSpec(rng.randint(-10, 10) for _ in range(n))
        report.record(
            case,
            act_on_theta(generator, spec) == spec.exponents,
            "%s misclassified" % spec,
            "spec=%s" % spec,
        )

    for sign in (1, -1):
        spec = ThetaSpec([sign])
        for index, target in enumerate(_targets(bound)):
            point = is_generating_witness(spec, target, bound)
            report.record(
                index,
                point is not None and act_on_theta(point, spec) == target,
                "%s does not reach %s" % (spec, target),
                "spec=%s target=%s" % (spec, target),
            )

    expected = [
        (ThetaSpec([2]), ScalarMultiset([1]), DIVISIBILITY),
        (ThetaSpec([1, 1]), ScalarMultiset([3]), COMPONENT_COUNT),
    ]
    for spec, target, obstruction in expected:
        found = generation_obstruction(spec, target)
        point = is_generating_witness(spec, target, bound)
        report.record(
            cases,
            point is None and found == obstruction,
            "%s -> %s: expected %s, got %s"
            % (spec, target, obstruction, found),
            "spec=%s target=%s" % (spec, target),
        )

    return report


SUITES = {
    "laws": check_laws,
    "cyclicity": check_cyclicity,
    "naturality": check_naturality,
    "roundtrip": check_roundtrip,
    "classify": check_classify,
}


def run_check(suite, seed=0, cases=100, bound=4):
    """Runs a named suite.

    Args:
        suite: one of :data:`SUITES`
        seed (0): the random seed
        cases (100): the number of random cases
        bound (4): the generation search bound, for ``classify``

    Returns:
        a :class:`CheckReport`
    """
    try:
        fn = SUITES[suite]
    except KeyError:
        raise ValueError(
            "Unknown suite '%s'; expected one of %s"
            % (suite, ", ".join(sorted(SUITES)))
        )

    logger.info("Running %s with seed %d and %d cases", suite, seed, cases)
    return fn(seed, cases, bound)
