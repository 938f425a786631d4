"""Recursive descent parser for polynomial symbols.

Grammar (whitespace insignificant, multiplication always explicit)::

    expr     := ['+' | '-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := 'x' | 'xi' | 'i' | 'I' | rational | '(' expr ')'
    rational := uint ('/' uint)?
"""

import logging
import re
from typing import NamedTuple

from sympy import Rational

from regsym.algebra.bivariate import BivariatePoly, gaussian
from regsym.errors import SymbolSyntaxError, UnsupportedExponent

logger = logging.getLogger(__name__)

TOKEN_PATTERN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()])|(?P<bad>\S))")

NAMES = {
    "x": BivariatePoly.x,
    "xi": BivariatePoly.xi,
    "i": lambda: BivariatePoly.constant(gaussian(0, 1)),
    "I": lambda: BivariatePoly.constant(gaussian(0, 1)),
}


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    """Split `text` into tokens, ending with an ``end`` token at ``len(text)``."""
    tokens = []
    position = 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            # trailing whitespace
            break
        kind = match.lastgroup
        if kind == "bad":
            raise SymbolSyntaxError(f"unexpected character {match.group(kind)!r}", match.start(kind), "a token")
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class SymbolParser:
    """Parser for one symbol string.

    Methods
    -------
    parse() -> BivariatePoly
        Parse the whole input as one expression.
    """

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        """The token under the cursor."""
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _is_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def parse(self) -> BivariatePoly:
        """Parse the input; the result is the exact expanded polynomial."""
        result = self._expr()
        if self.current.kind != "end":
            raise SymbolSyntaxError(f"unexpected {self.current.text!r}", self.current.position, "'+', '-', '*' or end")
        return result

    def _expr(self) -> BivariatePoly:
        negate = False
        if self._is_op("+", "-"):
            negate = self._advance().text == "-"
        result = self._term()
        if negate:
            result = -result
        while self._is_op("+", "-"):
            sign = self._advance().text
            term = self._term()
            result = result + term if sign == "+" else result - term
        return result

    def _term(self) -> BivariatePoly:
        result = self._factor()
        while self._is_op("*"):
            self._advance()
            result = result * self._factor()
        return result

    def _factor(self) -> BivariatePoly:
        base = self._base()
        if not self._is_op("^"):
            return base
        self._advance()
        token = self.current
        if token.kind == "op" and token.text in ("-", "("):
            raise UnsupportedExponent("exponents must be non-negative integer literals", token.position)
        if token.kind != "number":
            raise SymbolSyntaxError(f"unexpected {token.text or 'end of input'!r}", token.position, "an integer")
        self._advance()
        if self._is_op("/"):
            raise UnsupportedExponent("non-integer exponent", self.current.position)
        return base ** int(token.text)

    def _base(self) -> BivariatePoly:
        token = self.current
        if token.kind == "number":
            self._advance()
            numerator = int(token.text)
            if not self._is_op("/"):
                return BivariatePoly.constant(numerator)
            self._advance()
            denominator = self.current
            if denominator.kind != "number":
                raise SymbolSyntaxError("incomplete rational", denominator.position, "an integer denominator")
            if int(denominator.text) == 0:
                raise SymbolSyntaxError("zero denominator", denominator.position, "a nonzero integer")
            self._advance()
            return BivariatePoly.constant(Rational(numerator, int(denominator.text)))
        if token.kind == "name":
            if token.text not in NAMES:
                raise SymbolSyntaxError(f"unknown name {token.text!r}", token.position, "'x', 'xi' or 'i'")
            self._advance()
            return NAMES[token.text]()
        if self._is_op("("):
            self._advance()
            inner = self._expr()
            if not self._is_op(")"):
                raise SymbolSyntaxError("unbalanced parenthesis", self.current.position, "')'")
            self._advance()
            return inner
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise SymbolSyntaxError(f"unexpected {found}", token.position, "'x', 'xi', 'i', a number or '('")


def parse_symbol(text: str) -> BivariatePoly:
    """
    Parse a symbol string into an exact polynomial.

    Parameters
    ----------
    text : str
        Symbol in the grammar of this module, e.g. ``"xi^3 + i*x*xi^2 + x^2"``.
    """
    result = SymbolParser(text).parse()
    logger.debug("parsed %r as %s", text, result)
    return result
