"""Exact rational arithmetic and integer combinatorics.

Every scalar in the package is a ``fractions.Fraction``: always in lowest
terms, denominator positive, zero stored as ``0/1``. The ``rat_*`` helpers
exist so callers outside the package get the same error vocabulary
(:class:`DomainError`) that the rest of the library raises.
"""

import math
from fractions import Fraction
from typing import Union

__all__ = [
    "Rational",
    "DomainError",
    "rat_make",
    "rat_add",
    "rat_mul",
    "rat_neg",
    "rat_div",
    "rat_text",
    "parse_rational",
    "factorial",
    "binomial",
    "gamma_int",
    "beta_int",
]

Rational = Fraction

RationalLike = Union[int, Fraction]


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def rat_make(p: int, q: int = 1) -> Rational:
    """Build the canonical fraction ``p/q``.

    Raises
    ------
    DomainError
        If ``q`` is zero.
    """
    if q == 0:
        raise DomainError("zero denominator")
    return Fraction(p, q)


def rat_add(a: RationalLike, b: RationalLike) -> Rational:
    return Fraction(a) + Fraction(b)


def rat_mul(a: RationalLike, b: RationalLike) -> Rational:
    return Fraction(a) * Fraction(b)


def rat_neg(a: RationalLike) -> Rational:
    return -Fraction(a)


def rat_div(a: RationalLike, b: RationalLike) -> Rational:
    """Exact quotient ``a / b``.

    Raises
    ------
    DomainError
        If ``b`` is zero.
    """
    if b == 0:
        raise DomainError("division by zero")
    return Fraction(a) / Fraction(b)


def rat_text(a: RationalLike) -> str:
    """Render ``a`` as ``-3/4``; the denominator is omitted when it is 1."""
    return str(Fraction(a))


def parse_rational(text: str) -> Rational:
    """Parse the ``p/q`` text form (also accepts a bare integer).

    Raises
    ------
    DomainError
        If the text is not a signed integer optionally followed by
        ``/`` and a nonzero integer.
    """
    numerator, sep, denominator = text.strip().partition("/")
    try:
        p = int(numerator)
        q = int(denominator) if sep else 1
    except ValueError:
        raise DomainError(f"not a rational number: {text!r}") from None
    return rat_make(p, q)


def factorial(n: int) -> int:
    """``n!`` for ``n >= 0``; the Gamma function at positive integers is ``(n-1)!``."""
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient ``C(n, k)``, zero when ``k < 0`` or ``k > n``.

    The zero extension lets sums written up to infinity truncate themselves.
    """
    if n < 0:
        raise DomainError(f"binomial with negative upper index {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def beta_int(a: int, b: int) -> Rational:
    """Beta function at positive integers: ``(a-1)! (b-1)! / (a+b-1)!``.

    Raises
    ------
    DomainError
        If ``a`` or ``b`` is not positive.
    """
    if a <= 0 or b <= 0:
        raise DomainError(f"nonpositive Beta argument: B({a}, {b})")
    return Fraction(factorial(a - 1) * factorial(b - 1), factorial(a + b - 1))


def gamma_int(a: int) -> int:
    """Gamma function at a positive integer: ``Gamma(a) = (a-1)!``."""
    if a <= 0:
        raise DomainError(f"nonpositive Gamma argument: Gamma({a})")
    return factorial(a - 1)
