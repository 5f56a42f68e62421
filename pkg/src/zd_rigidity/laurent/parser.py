"""Text grammar for Laurent polynomials.

Grammar (whitespace is ignored)::

    expr    := term (('+' | '-') term)*
    term    := signed ('*' signed)*
    signed  := ['+' | '-'] factor
    factor  := primary ['^' ['+' | '-'] INTEGER]
    primary := INTEGER | VARIABLE | '(' expr ')'

Variables are ``u1`` .. ``u9``; for d ≤ 3 the aliases ``x``, ``y``, ``z`` name
u1, u2, u3. Multiplication must be written: ``2u1`` and ``(u1)(u2)`` are errors.
Negative exponents are allowed on unit monomials only, e.g. ``u1^-2``.

Example:
    >>> str(parse_poly("2*(u1 - 1)^2"))
    '2 - 4*u1 + 2*u1^2'
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from zd_rigidity.errors import PolynomialSyntaxError
from zd_rigidity.laurent.poly import LaurentPoly

MAX_VARIABLES = 9
ALIASES = {"x": 1, "y": 2, "z": 3}

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>u\d+|[a-zA-Z_]\w*)|(?P<op>[-+*^()]))")


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise PolynomialSyntaxError(f"Unexpected character {text[offset]!r}", text, offset)
        kind = match.lastgroup or "op"
        start = match.start(kind)
        tokens.append(_Token(kind, match.group(kind), start))
        position = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


def _variable_index(token: _Token, text: str) -> int:
    name = token.text
    if name in ALIASES:
        return ALIASES[name]
    if name.startswith("u") and name[1:].isdigit():
        index = int(name[1:])
        if 1 <= index <= MAX_VARIABLES:
            return index
    raise PolynomialSyntaxError(f"Unknown variable {name!r}", text, token.position)


class _Parser:
    def __init__(self, text: str, tokens: list[_Token], dim: int):
        self.text = text
        self.tokens = tokens
        self.dim = dim
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, message: str, token: _Token | None = None) -> PolynomialSyntaxError:
        where = token or self.current
        return PolynomialSyntaxError(message, self.text, where.position)

    def parse(self) -> LaurentPoly:
        result = self.expr()
        if self.current.kind != "end":
            raise self.fail(f"Unexpected {self.current.text!r}")
        return result

    def expr(self) -> LaurentPoly:
        result = self.term()
        while self.current.kind == "op" and self.current.text in ("+", "-"):
            op = self.advance().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> LaurentPoly:
        result = self.signed()
        while self.current.kind == "op" and self.current.text == "*":
            self.advance()
            result = result * self.signed()
        return result

    def signed(self) -> LaurentPoly:
        if self.current.kind == "op" and self.current.text in ("+", "-"):
            negate = self.advance().text == "-"
            value = self.factor()
            return -value if negate else value
        return self.factor()

    def factor(self) -> LaurentPoly:
        base = self.primary()
        if self.current.kind == "op" and self.current.text == "^":
            caret = self.advance()
            sign = 1
            if self.current.kind == "op" and self.current.text in ("+", "-"):
                sign = -1 if self.advance().text == "-" else 1
            if self.current.kind != "int":
                raise self.fail("Expected integer exponent")
            exponent = sign * int(self.advance().text)
            if exponent < 0 and not base.is_unit():
                raise self.fail("Negative exponent on a non-unit", caret)
            base = base**exponent
        if self.current.kind in ("int", "var") or self.current.text == "(":
            raise self.fail("Implicit multiplication is not allowed; write '*'")
        return base

    def primary(self) -> LaurentPoly:
        token = self.current
        if token.kind == "int":
            self.advance()
            return LaurentPoly.constant(int(token.text), self.dim)
        if token.kind == "var":
            self.advance()
            return LaurentPoly.variable(_variable_index(token, self.text) - 1, self.dim)
        if token.kind == "op" and token.text == "(":
            self.advance()
            inner = self.expr()
            if not (self.current.kind == "op" and self.current.text == ")"):
                raise self.fail("Expected ')'")
            self.advance()
            return inner
        if token.kind == "end":
            raise self.fail("Unexpected end of input")
        raise self.fail(f"Unexpected {token.text!r}")


def infer_dimension(text: str) -> int:
    """Smallest dimension containing every variable named in text (at least 1)."""
    tokens = _tokenize(text)
    indices = [_variable_index(t, text) for t in tokens if t.kind == "var"]
    return max(indices, default=1)


def parse_poly(text: str, dim: int | None = None) -> LaurentPoly:
    """Parse polynomial text into a canonical LaurentPoly.

    Args:
        text: Polynomial text following the module grammar
        dim: Ambient dimension; inferred from the variables used when omitted

    Returns:
        The canonical polynomial

    Raises:
        PolynomialSyntaxError: On syntax errors, unknown variables, or when the
            text needs more variables than dim (or uses x/y/z with dim > 3)

    Example:
        >>> parse_poly("u1^-1").support
        ((-1,),)
    """
    tokens = _tokenize(text)
    used = [(t, _variable_index(t, text)) for t in tokens if t.kind == "var"]
    needed = max((index for _, index in used), default=1)
    if dim is None:
        dim = needed
    for token, index in used:
        if index > dim:
            raise PolynomialSyntaxError(
                f"Variable {token.text!r} conflicts with dimension {dim}", text, token.position
            )
        if token.text in ALIASES and dim > 3:
            raise PolynomialSyntaxError(
                f"Alias {token.text!r} is only available for d <= 3", text, token.position
            )
    return _Parser(text, tokens, dim).parse()


__all__ = ["infer_dimension", "parse_poly"]
