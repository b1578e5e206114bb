"""
Parser for the concrete term syntax.

::

    obj  := "1" | "+" | "-" | obj "*" obj | "(" obj ")"
    term := "id(" obj ")" | "swap(" obj "," obj ")" | "ev" | "coev"
          | "a^" int | term "*" term | term ";" term | "(" term ")"
    int  := ["-"] digit+

Whitespace is ignored. ``*`` binds tighter than ``;`` and both associate
to the left.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import logging
import re
from collections import namedtuple

from . import terms
from .errors import TermSyntaxError


logger = logging.getLogger(__name__)

Token = namedtuple("Token", ["kind", "text", "position"])

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<word>[A-Za-z]+)|(?P<int>\d+)|(?P<punct>[\^(),;*+\-]))"
)
_KEYWORDS = ("id", "swap", "ev", "coev", "a")
_END = "end of input"

_TERM_START = ("'id'", "'swap'", "'ev'", "'coev'", "'a'", "'('")
_OBJ_START = ("'1'", "'+'", "'-'", "'('")


def tokenize(text):
    """Splits term text into :class:`Token` tuples.

    Raises:
        TermSyntaxError: on a character that starts no token
    """
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            if text[pos:].strip():
                start = len(text) - len(text[pos:].lstrip())
                raise TermSyntaxError(start, ["a token"], repr(text[start]))

            break

        kind = match.lastgroup
        value = match.group(kind)
        start = match.start(kind)
        if kind == "word" and value not in _KEYWORDS:
            raise TermSyntaxError(start, _TERM_START, repr(value))

        if kind != "int":
            kind = value

        tokens.append(Token(kind, value, start))
        pos = match.end()

    tokens.append(Token(_END, "", len(text)))
    return tokens


class _Parser(object):
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def _fail(self, expected):
        token = self.current
        found = _END if token.kind == _END else repr(token.text)
        raise TermSyntaxError(token.position, expected, found)

    def _accept(self, kind):
        if self.current.kind == kind:
            token = self.current
            self.index += 1
            return token

        return None

    def _expect(self, kind):
        token = self._accept(kind)
        if token is None:
            self._fail(["'%s'" % kind])

        return token

    def parse(self):
        term = self.seq()
        if self.current.kind != _END:
            self._fail(["';'", "'*'", _END])

        return term

    def seq(self):
        term = self.par()
        while self._accept(";"):
            term = terms.Seq(term, self.par())

        return term

    def par(self):
        term = self.atom()
        while self._accept("*"):
            term = terms.Par(term, self.atom())

        return term

    def atom(self):
        if self._accept("ev"):
            return terms.Ev()

        if self._accept("coev"):
            return terms.Coev()

        if self._accept("a"):
            self._expect("^")
            return terms.Alpha(self.integer())

        if self._accept("id"):
            self._expect("(")
            obj = self.obj()
            self._expect(")")
            return terms.Id(obj)

        if self._accept("swap"):
            self._expect("(")
            left = self.obj()
            self._expect(",")
            right = self.obj()
            self._expect(")")
            return terms.Swap(left, right)

        if self._accept("("):
            term = self.seq()
            self._expect(")")
            return term

        self._fail(_TERM_START)

    def integer(self):
        negative = self._accept("-") is not None
        token = self._accept("int")
        if token is None:
            self._fail(["an integer"] if negative else ["'-'", "an integer"])

        value = int(token.text)
        return -value if negative else value

    def obj(self):
        obj = self.obj_atom()
        while self._accept("*"):
            obj = terms.ObjTensor(obj, self.obj_atom())

        return obj

    def obj_atom(self):
        if self._accept("+"):
            return terms.PlusPt()

        if self._accept("-"):
            return terms.MinusPt()

        if self.current.kind == "int" and self.current.text == "1":
            self.index += 1
            return terms.Unit()

        if self._accept("("):
            obj = self.obj()
            self._expect(")")
            return obj

        self._fail(_OBJ_START)


def parse(text):
    """Parses a term.

    Args:
        text: the term text

    Returns:
        a :class:`cobordism_mcp.terms.Term`

    Raises:
        TermSyntaxError: with the 0-based position of the offending token
            and the set of tokens that would have been accepted
    """
    term = _Parser(text).parse()
    logger.debug("Parsed %r", text)
    return term


def parse_obj(text):
    """Parses a standalone object expression such as ``+ * -``."""
    parser = _Parser(text)
    obj = parser.obj()
    if parser.current.kind != _END:
        parser._fail(["'*'", _END])

    return obj
