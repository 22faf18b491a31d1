"""Product expressions such as ``E3(x+1/2)*B2`` or ``E1^3``.

Grammar (whitespace is ignored between tokens)::

    expr     := factor ("*" factor)*
    factor   := family index power? arg?
    family   := "E" | "B"
    index    := decimal integer
    power    := "^" decimal integer
    arg      := "(" "x" (("+" | "-") rational)? ")"
    rational := integer ("/" positive-integer)?

A power ``^k`` expands to ``k`` repeated factors, so a parsed
:class:`ProductExpr` is always a flat list of shifted basis polynomials.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from .exactnum import Rational, rat_text
from .oracle import Factor, Family, ProductSpec

logger = logging.getLogger(__name__)

__all__ = ["MAX_INDEX", "ExprSyntaxError", "ProductExpr", "parse_expr", "render_expr"]

#: Largest accepted polynomial index and power.
MAX_INDEX = 10_000


class ExprSyntaxError(ValueError):
    """Raised when an expression does not match the product grammar.

    Attributes
    ----------
    text : str
        The expression as given.
    offset : int
        0-based character (code point) offset of the offending token.
        The caret line is aligned on this offset.
    expected : tuple of str
        Sorted descriptions of what would have been accepted there.
    """

    def __init__(self, text: str, offset: int, expected: Iterable[str]):
        self.text = text
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        super().__init__(
            f"expected one of: {', '.join(self.expected)} at offset {offset}"
        )

    def caret(self) -> str:
        """The expression with a ``^`` marker under the offending position."""
        return f"{self.text}\n{' ' * self.offset}^"

    @property
    def byte_offset(self) -> int:
        """The same position counted in UTF-8 bytes."""
        return len(self.text[: self.offset].encode("utf-8"))


@dataclass(frozen=True)
class ProductExpr:
    """Parsed product: ``(family, index, shift)`` triples in input order."""

    factors: Tuple[Factor, ...]

    def to_spec(self) -> ProductSpec:
        return ProductSpec(self.factors)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> Optional[str]:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def _fail(self, *expected: str) -> ExprSyntaxError:
        return ExprSyntaxError(self.text, self.pos, expected)

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            raise self._fail(repr(char))
        self.pos += 1

    def _digits(self) -> Tuple[int, int]:
        """Read a decimal integer; returns ``(value, start offset)``."""
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and "0" <= self.text[self.pos] <= "9":
            self.pos += 1
        if start == self.pos:
            raise self._fail("digit")
        return int(self.text[start:self.pos]), start

    def _bounded(self, what: str) -> int:
        value, start = self._digits()
        if value > MAX_INDEX:
            raise ExprSyntaxError(self.text, start, [f"{what} <= {MAX_INDEX}"])
        return value

    def _rational(self) -> Rational:
        numerator, _ = self._digits()
        if self._peek() != "/":
            return Fraction(numerator)
        self.pos += 1
        denominator, start = self._digits()
        if denominator == 0:
            raise ExprSyntaxError(self.text, start, ["positive integer"])
        return Fraction(numerator, denominator)

    def _shift(self) -> Rational:
        self._expect("(")
        self._expect("x")
        sign = self._peek()
        shift = Fraction(0)
        if sign in ("+", "-"):
            self.pos += 1
            shift = self._rational()
            if sign == "-":
                shift = -shift
        elif sign != ")":
            raise self._fail("'+'", "'-'", "')'")
        self._expect(")")
        return shift

    def _factor(self) -> List[Factor]:
        family = self._peek()
        if family not in ("E", "B"):
            raise self._fail("'B'", "'E'")
        self.pos += 1
        index = self._bounded("index")
        power = 1
        if self._peek() == "^":
            self.pos += 1
            power = self._bounded("power")
            if power == 0:
                raise ExprSyntaxError(self.text, self.pos - 1, ["positive power"])
        shift = self._shift() if self._peek() == "(" else Fraction(0)
        return [Factor(Family(family), index, shift)] * power

    def parse(self) -> ProductExpr:
        factors = self._factor()
        while self._peek() == "*":
            self.pos += 1
            factors.extend(self._factor())
        if self._peek() is not None:
            raise self._fail("'*'", "end of input")
        return ProductExpr(tuple(factors))


def parse_expr(text: str) -> ProductExpr:
    """Parse ``text`` into a :class:`ProductExpr`.

    Examples
    --------
    >>> [(f.family.value, f.index, str(f.shift)) for f in parse_expr("E3(x+1/2)*B2").factors]
    [('E', 3, '1/2'), ('B', 2, '0')]

    Raises
    ------
    ExprSyntaxError
        On malformed input, with the offset and the expected tokens.
    """
    expr = _Parser(text).parse()
    logger.debug("Parsed %r into %d factors", text, len(expr.factors))
    return expr


def _factor_text(factor: Factor) -> str:
    head = f"{factor.family.value}{factor.index}"
    if factor.shift == 0:
        return head
    sign = "-" if factor.shift < 0 else "+"
    return f"{head}(x{sign}{rat_text(abs(factor.shift))})"


def render_expr(expr: ProductExpr) -> str:
    """Canonical text of ``expr``; powers are written out as repeated factors."""
    return "*".join(_factor_text(f) for f in expr.factors)
