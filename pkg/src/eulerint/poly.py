"""Dense univariate polynomials over the rationals.

A :class:`Poly` stores its coefficients constant-first, ``coeffs[i]`` being
the coefficient of ``x**i``. Trailing zeros are stripped on construction, so
the zero polynomial is the empty tuple and equality is plain coefficientwise
comparison.

The module also builds the Euler and Bernoulli polynomials from their
number tables by the umbral expansion ``P_n(x) = sum_k C(n,k) P_k x^(n-k)``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Tuple, Union

from .exactnum import DomainError, Rational, binomial, rat_text
from .sequences import bernoulli_numbers, euler_numbers

logger = logging.getLogger(__name__)

__all__ = [
    "Poly",
    "X",
    "ONE",
    "ZERO",
    "poly_linear_combine",
    "poly_mul",
    "poly_shift",
    "poly_compose_linear",
    "poly_reflect",
    "poly_derivative",
    "poly_antiderivative",
    "integral01",
    "poly_eval",
    "euler_poly",
    "bernoulli_poly",
    "poly_text",
    "poly_json",
]

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Poly:
    """Immutable dense polynomial with rational coefficients."""

    coeffs: Tuple[Rational, ...] = ()

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Poly":
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Rational:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: Union["Poly", Scalar]) -> "Poly":
        other = _as_poly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self.coeff(i) + other.coeff(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["Poly", Scalar]) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: Scalar) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, Poly):
            return poly_mul(self, other)
        return Poly(tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Poly":
        if other == 0:
            raise DomainError("division by zero")
        return Poly(tuple(c / other for c in self.coeffs))

    def __call__(self, x: Scalar) -> Rational:
        return poly_eval(self, x)

    def __str__(self) -> str:
        return poly_text(self)


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


def _as_poly(value: Union[Poly, Scalar]) -> Poly:
    return value if isinstance(value, Poly) else Poly((value,))


def poly_linear_combine(terms: Iterable[Tuple[Scalar, Poly]]) -> Poly:
    """Return ``sum c_i * P_i`` for the given ``(c_i, P_i)`` pairs."""
    acc = [Fraction(0)]
    for c, p in terms:
        if len(p.coeffs) > len(acc):
            acc.extend([Fraction(0)] * (len(p.coeffs) - len(acc)))
        for i, a in enumerate(p.coeffs):
            acc[i] += c * a
    return Poly(tuple(acc))


def poly_mul(a: Poly, b: Poly) -> Poly:
    """Exact convolution product."""
    if a.is_zero() or b.is_zero():
        return ZERO
    out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            out[i + j] += ai * bj
    return Poly(tuple(out))


def poly_compose_linear(p: Poly, a: Scalar, b: Scalar) -> Poly:
    """Return ``p(a*x + b)`` by Horner's scheme."""
    inner = Poly((b, a))
    result = ZERO
    for c in reversed(p.coeffs):
        result = poly_mul(result, inner) + c
    return result


def poly_shift(p: Poly, c: Scalar) -> Poly:
    """Return ``p(x + c)``."""
    if c == 0:
        return p
    return poly_compose_linear(p, 1, c)


def poly_reflect(p: Poly) -> Poly:
    """Return ``p(-x)``."""
    return Poly(tuple(-c if i % 2 else c for i, c in enumerate(p.coeffs)))


def poly_derivative(p: Poly) -> Poly:
    return Poly(tuple(i * c for i, c in enumerate(p.coeffs) if i > 0))


def poly_antiderivative(p: Poly) -> Poly:
    """Antiderivative with zero constant term."""
    return Poly((0,) + tuple(c / (i + 1) for i, c in enumerate(p.coeffs)))


def integral01(p: Poly) -> Rational:
    """Exact ``integral_0^1 p(x) dx``."""
    return sum((c / (i + 1) for i, c in enumerate(p.coeffs)), Fraction(0))


def poly_eval(p: Poly, x: Scalar) -> Rational:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def euler_poly(n: int) -> Poly:
    """Euler polynomial ``E_n(x) = sum_k C(n,k) E_k x^(n-k)``.

    Examples
    --------
    >>> str(euler_poly(3))
    'x^3 - 3/2*x^2 + 1/4'
    """
    if n < 0:
        raise DomainError(f"Euler polynomial index must be nonnegative, got {n}")
    table = euler_numbers(n)
    return Poly(tuple(binomial(n, n - i) * table[n - i] for i in range(n + 1)))


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> Poly:
    """Bernoulli polynomial ``B_n(x) = sum_k C(n,k) B_k x^(n-k)``."""
    if n < 0:
        raise DomainError(f"Bernoulli polynomial index must be nonnegative, got {n}")
    table = bernoulli_numbers(n)
    return Poly(tuple(binomial(n, n - i) * table[n - i] for i in range(n + 1)))


# ---------------------------------------------------------------------------
# Text and JSON forms
# ---------------------------------------------------------------------------


def _monomial_text(c: Rational, i: int) -> str:
    if i == 0:
        return rat_text(c)
    power = "x" if i == 1 else f"x^{i}"
    if c == 1:
        return power
    return f"{rat_text(c)}*{power}"


def poly_text(p: Poly) -> str:
    """Render as ``x^3 - 3/2*x^2 + 1/4`` (descending powers)."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        if not parts:
            parts.append(("-" if c < 0 else "") + _monomial_text(abs(c), i))
        else:
            parts.append((" - " if c < 0 else " + ") + _monomial_text(abs(c), i))
    return "".join(parts)


def poly_json(p: Poly) -> dict:
    """JSON form ``{"coeffs": [...]}``, constant first."""
    return {"coeffs": [rat_text(c) for c in p.coeffs]}
