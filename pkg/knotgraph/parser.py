"""Knot expression parser.

Grammar (whitespace is insignificant)::

    knot-expr := term ("+" term)*
    term      := [count "*"] atom
    atom      := "T(" int "," int ")" | "m(" atom ")" | "r(" atom ")"
               | "U" | name
    name      := "6_1" | "3_1" | "Wh" | <atlas name>
    count     := positive integer

``3_1`` is T(2,3). :func:`knotgraph.knots.pretty` prints normalized knots
back in this grammar.

Examples
--------
>>> str(parse_knot("2*T(2,9) + T(2,15)"))
'2*T(2,9) + T(2,15)'
>>> str(parse_knot("m(T(2,3)) + 6_1"))
'm(T(2,3)) + 6_1'
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from knotgraph.exceptions import KnotSyntaxError
from knotgraph.knots import (
    UNKNOT,
    FormalKnot,
    NamedKnot,
    generator,
    mirror,
    multiply,
    reverse,
    torus,
)

ALIASES = {"3_1": (2, 3)}

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<int>-?\d+(?![\w]))|(?P<word>[A-Za-z0-9_]+)"
    r"|(?P<lparen>\()|(?P<rparen>\))|(?P<comma>,)|(?P<plus>\+)|(?P<star>\*)"
)

EOF = "end of input"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens, ending with an ``eof`` token.

    Raises
    ------
    KnotSyntaxError
        At the first character that starts no token.
    """
    tokens: list[Token] = []
    index = 0
    while index < len(text):
        match = _TOKEN.match(text, index)
        if match is None:
            expected = ["'+'", "'*'", "'('", "')'", "','", "a knot"]
            raise KnotSyntaxError(text, _byte_offset(text, index), expected)
        if match.lastgroup != "ws":
            offset = _byte_offset(text, index)
            tokens.append(Token(match.lastgroup, match.group(), offset))
        index = match.end()
    tokens.append(Token("eof", "", _byte_offset(text, len(text))))
    return tokens


class KnotParser:
    """Recursive-descent parser over :func:`tokenize` output."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def _error(self, expected: list[str]) -> KnotSyntaxError:
        return KnotSyntaxError(self.text, self.current.offset, expected)

    def _advance(self) -> Token:
        token = self.current
        self.position += 1
        return token

    def _expect(self, kind: str, label: str) -> Token:
        if self.current.kind != kind:
            raise self._error([label])
        return self._advance()

    def _peek_call(self, word: str) -> bool:
        """Whether the next tokens are ``word`` followed by ``(``."""
        return (
            self.current.kind == "word"
            and self.current.text == word
            and self.tokens[self.position + 1].kind == "lparen"
        )

    # knot-expr := term ("+" term)*
    def parse(self) -> FormalKnot:
        result = self.term()
        while self.current.kind == "plus":
            self._advance()
            result = result + self.term()
        if self.current.kind != "eof":
            raise self._error(["'+'", EOF])
        return result

    # term := [count "*"] atom
    def term(self) -> FormalKnot:
        if self.current.kind == "int" and self.tokens[self.position + 1].kind == "star":
            count_token = self._advance()
            count = int(count_token.text)
            if count < 1:
                raise KnotSyntaxError(self.text, count_token.offset, ["positive count"])
            self._advance()
            return multiply(self.atom(), count)
        return self.atom()

    def atom(self) -> FormalKnot:
        token = self.current
        if self._peek_call("T"):
            self.position += 2
            p = int(self._expect("int", "integer").text)
            self._expect("comma", "','")
            q = int(self._expect("int", "integer").text)
            self._expect("rparen", "')'")
            return torus(p, q)
        for word, decorate in (("m", mirror), ("r", reverse)):
            if self._peek_call(word):
                self.position += 2
                inner = self.atom()
                self._expect("rparen", "')'")
                return decorate(inner)
        if token.kind == "word" and token.text == "U":
            self._advance()
            return UNKNOT
        if token.kind in ("word", "int") and token.text in ALIASES:
            self._advance()
            return torus(*ALIASES[token.text])
        if token.kind == "word":
            self._advance()
            return generator(NamedKnot(token.text))
        raise self._error(["'T('", "'m('", "'r('", "'U'", "a knot name", "count '*'"])


def parse_knot(text: str) -> FormalKnot:
    """Parse a knot expression.

    Raises
    ------
    KnotSyntaxError
        With the byte offset and the set of expected tokens.
    UnknownKnotError
        For a name missing from the atlas.
    InvalidTorusKnotError
        For non-coprime or zero torus parameters.
    """
    return KnotParser(text).parse()
