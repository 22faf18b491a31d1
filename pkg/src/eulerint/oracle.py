"""Ground-truth integrals of Euler/Bernoulli products over [0, 1].

:func:`product_integral` is the brute-force oracle: multiply the factor
polynomials and integrate termwise. The remaining routines carry out the
integration-by-parts reductions as algorithms. Their boundary terms are always
computed by evaluating exact antiderivatives at 0 and 1, never by assuming a
simplified closed form, so each chain is an independent route to the same
number and can be compared against the oracle.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Tuple

from .exactnum import DomainError, Rational, beta_int, binomial
from .poly import (
    ONE,
    ZERO,
    Poly,
    bernoulli_poly,
    euler_poly,
    integral01,
    poly_derivative,
    poly_eval,
    poly_mul,
    poly_reflect,
    poly_shift,
)
from .sequences import euler_numbers

logger = logging.getLogger(__name__)

__all__ = [
    "Family",
    "Factor",
    "ProductSpec",
    "basis_poly",
    "product_poly",
    "product_integral",
    "product_eval",
    "y_moment",
    "ynEn_expand",
    "ynEn_reflect",
    "ibp_ynEn_chain",
    "ibp_ynEn_forward",
    "ibp_EmEn_chain",
    "EmEn_beta_sum",
    "ibp_BqEp_chain",
    "bernoulli_expansion",
    "thm6_expansion",
    "triple_via_expansion",
    "triple_beta_sum",
]


class Family(str, Enum):
    E = "E"
    B = "B"


@dataclass(frozen=True)
class Factor:
    """One factor ``P_index(x + shift)`` of a product, ``P`` being E or B."""

    family: Family
    index: int
    shift: Rational = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "shift", Fraction(self.shift))
        if self.index < 0:
            raise DomainError(f"factor index must be nonnegative, got {self.index}")


@dataclass(frozen=True)
class ProductSpec:
    """A nonempty product of shifted Euler/Bernoulli polynomials."""

    factors: Tuple[Factor, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise DomainError("a product needs at least one factor")

    @classmethod
    def euler(cls, *indices: int) -> "ProductSpec":
        """Product of unshifted Euler polynomials ``E_i1(x) E_i2(x) ...``."""
        return cls(tuple(Factor(Family.E, i) for i in indices))

    @classmethod
    def of(cls, *pairs: Tuple[str, int]) -> "ProductSpec":
        """Product from ``(family, index)`` pairs, e.g. ``of(("B", 3), ("E", 2))``."""
        return cls(tuple(Factor(Family(f), i) for f, i in pairs))


def basis_poly(family: Family, index: int) -> Poly:
    if Family(family) is Family.E:
        return euler_poly(index)
    return bernoulli_poly(index)


def product_poly(spec: ProductSpec) -> Poly:
    result = ONE
    for f in spec.factors:
        result = poly_mul(result, poly_shift(basis_poly(f.family, f.index), f.shift))
    return result


def product_integral(spec: ProductSpec) -> Rational:
    """Exact ``integral_0^1 prod_i P_i(x + shift_i) dx``."""
    return integral01(product_poly(spec))


def product_eval(spec: ProductSpec, x: Rational) -> Rational:
    """Exact value of the product at the rational point ``x``."""
    return poly_eval(product_poly(spec), x)


def y_moment(a: int, p: Poly) -> Poly:
    """``integral_0^1 y^a p(x + y) dy`` as a polynomial in ``x``.

    Uses ``p(x + y) = sum_k p^(k)(x) y^k / k!`` and integrates each power of
    ``y`` exactly.
    """
    if a < 0:
        raise DomainError(f"y-moment exponent must be nonnegative, got {a}")
    terms: List[Tuple[Rational, Poly]] = []
    derivative, k_factorial = p, 1
    k = 0
    while not derivative.is_zero():
        terms.append((Fraction(1, k_factorial * (a + k + 1)), derivative))
        k += 1
        k_factorial *= k
        derivative = poly_derivative(derivative)
    return sum((c * q for c, q in terms), ZERO)


# ---------------------------------------------------------------------------
# integral_0^1 y^n E_n(x + y) dy
# ---------------------------------------------------------------------------


def ynEn_expand(n: int) -> Poly:
    """``sum_l C(n,l) E_{n-l}(x) / (n+l+1)``: binomial expansion in ``y``."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return sum(
        (Fraction(binomial(n, l), n + l + 1) * euler_poly(n - l) for l in range(n + 1)),
        ZERO,
    )


def ynEn_reflect(n: int) -> Poly:
    """The same integral through ``E_n(x) = (-1)^n E_n(1-x)`` and Beta values."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return sum(
        (
            binomial(n, l) * (-1) ** l * beta_int(n + 1, l + 1)
            * poly_shift(euler_poly(n - l), 1)
            for l in range(n + 1)
        ),
        ZERO,
    )


def _y_boundary(a: int, p: Poly) -> Poly:
    """``[y^(a+1)/(a+1) * p(x+y)]_{y=0}^{y=1}``."""
    # the lower limit vanishes since a + 1 >= 1
    return poly_shift(p, 1) / (a + 1)


def ibp_ynEn_chain(n: int) -> Poly:
    """Reduce ``integral_0^1 y^n E_n(x+y) dy`` by parts down to ``E_1``.

    Step ``j`` integrates ``y^(n+j)`` and differentiates ``E_(n-j)``, leaving
    ``-(n-j)/(n+j+1)`` times the next integral. The final ``E_1`` integral is
    evaluated exactly.
    """
    if n < 3:
        raise DomainError(f"the descending chain is stated for n >= 3, got n={n}")
    acc = ZERO
    coef = Fraction(1)
    for j in range(n - 1):
        k, a = n - j, n + j
        acc = acc + coef * _y_boundary(a, euler_poly(k))
        coef *= Fraction(-k, a + 1)
    return acc + coef * y_moment(2 * n - 1, euler_poly(1))


def ibp_ynEn_forward(n: int) -> Poly:
    """One integration by parts raising the Euler index.

    ``integral y^n E_n(x+y) dy = [y^n E_{n+1}(x+y)/(n+1)]_0^1
    - n/(n+1) integral y^(n-1) E_{n+1}(x+y) dy``, the last integral evaluated
    through the reflected Beta sum.
    """
    if n < 1:
        raise DomainError(f"the ascending step needs n >= 1, got n={n}")
    e_next = euler_poly(n + 1)
    boundary = poly_shift(e_next, 1) / (n + 1)
    sign = (-1) ** (n + 1)
    rest = sum(
        (
            sign * binomial(n + 1, l) * beta_int(n, l + 1)
            * poly_reflect(euler_poly(n + 1 - l))
            for l in range(n + 2)
        ),
        ZERO,
    )
    return boundary - Fraction(n, n + 1) * rest


# ---------------------------------------------------------------------------
# integral_0^1 E_n(x) E_m(x) dx
# ---------------------------------------------------------------------------


def ibp_EmEn_chain(m: int, n: int) -> Rational:
    """``integral_0^1 E_n E_m`` by moving derivatives from ``E_m`` onto ``E_n``.

    Each step is ``int E_a E_b = [E_{a+1} E_b/(a+1)]_0^1 - b/(a+1) int
    E_{a+1} E_{b-1}``; the chain stops at ``b = 0`` where
    ``int E_a = integral01(E_a)``.
    """
    if m < 0 or n < 0:
        raise DomainError(f"indices must be nonnegative, got m={m}, n={n}")
    if m + n < 1:
        raise DomainError("the product chain needs m + n >= 1")
    value = Fraction(0)
    coef = Fraction(1)
    a, b = n, m
    while b > 0:
        upper, lower = euler_poly(a + 1), euler_poly(b)
        boundary = (
            poly_eval(upper, 1) * poly_eval(lower, 1)
            - poly_eval(upper, 0) * poly_eval(lower, 0)
        ) / (a + 1)
        value += coef * boundary
        coef *= Fraction(-b, a + 1)
        a, b = a + 1, b - 1
    return value + coef * integral01(euler_poly(a))


def EmEn_beta_sum(m: int, n: int) -> Rational:
    """``integral_0^1 E_n E_m`` as the double Beta sum.

    ``E_n(x) = sum_l C(n,l) E_l x^(n-l)`` and
    ``E_m(x) = (-1)^m sum_k C(m,k) E_k (1-x)^(m-k)``.
    """
    if m < 0 or n < 0:
        raise DomainError(f"indices must be nonnegative, got m={m}, n={n}")
    E = euler_numbers(max(m, n))
    total = Fraction(0)
    for l in range(n + 1):
        for k in range(m + 1):
            total += (
                binomial(n, l) * binomial(m, k) * E[l] * E[k]
                * beta_int(n - l + 1, m - k + 1)
            )
    return (-1) ** m * total


# ---------------------------------------------------------------------------
# Bernoulli times Euler, and triple products
# ---------------------------------------------------------------------------


def ibp_BqEp_chain(q: int, p: int) -> Rational:
    """``integral_0^1 B_q E_p`` by repeated integration of the Bernoulli factor.

    ``int B_a E_b = [B_{a+1} E_b/(a+1)]_0^1 - b/(a+1) int B_{a+1} E_{b-1}``,
    closed at ``b = 0`` by ``integral01(B_a)``.
    """
    if q < 1:
        raise DomainError(f"the Bernoulli index must satisfy q >= 1, got q={q}")
    if p < 0:
        raise DomainError(f"the Euler index must be nonnegative, got p={p}")
    value = Fraction(0)
    coef = Fraction(1)
    a, b = q, p
    while b > 0:
        upper, lower = bernoulli_poly(a + 1), euler_poly(b)
        boundary = (
            poly_eval(upper, 1) * poly_eval(lower, 1)
            - poly_eval(upper, 0) * poly_eval(lower, 0)
        ) / (a + 1)
        value += coef * boundary
        coef *= Fraction(-b, a + 1)
        a, b = a + 1, b - 1
    return value + coef * integral01(bernoulli_poly(a))


def bernoulli_expansion(m: int, n: int) -> List[Tuple[Rational, int]]:
    """Non-constant part of ``E_m(x) E_n(x)`` in Bernoulli polynomials.

    Returns ``(c, q)`` pairs with ``E_m E_n = sum c * B_q(x) + const``, where
    ``c = -2 (C(m,2r+1) + C(n,2r+1)) E_{2r+1} / (m+n-2r)`` and
    ``q = m+n-2r``. Terms stop once both binomials vanish.
    """
    if m + n < 2:
        raise DomainError(f"the Bernoulli expansion needs m + n >= 2, got m={m}, n={n}")
    E = euler_numbers(max(m, n))
    terms = []
    r = 0
    while 2 * r + 1 <= max(m, n):
        weight = binomial(m, 2 * r + 1) + binomial(n, 2 * r + 1)
        coef = Fraction(-2 * weight) * E[2 * r + 1] / (m + n - 2 * r)
        if coef:
            terms.append((coef, m + n - 2 * r))
        r += 1
    return terms


def thm6_expansion(m: int, n: int) -> Tuple[List[Tuple[Rational, int]], Rational]:
    """Full Bernoulli expansion of ``E_m(x) E_n(x)`` as ``(terms, constant)``.

    The constant is ``integral_0^1 E_m E_n``: every ``B_q`` with ``q >= 1``
    integrates to zero over [0, 1].
    """
    return bernoulli_expansion(m, n), ibp_EmEn_chain(m, n)


def triple_via_expansion(m: int, n: int, p: int) -> Rational:
    """``integral_0^1 E_m E_n E_p`` through the Bernoulli expansion of ``E_m E_n``.

    The constant of the expansion is ``integral_0^1 E_m E_n`` (every
    ``B_q`` with ``q >= 1`` integrates to zero), taken from
    :func:`ibp_EmEn_chain`.
    """
    if m + n < 2:
        raise DomainError(f"the triple expansion needs m + n >= 2, got m={m}, n={n}")
    if p < 0:
        raise DomainError(f"p must be nonnegative, got p={p}")
    terms, constant = thm6_expansion(m, n)
    total = constant * integral01(euler_poly(p))
    for coef, q in terms:
        total += coef * ibp_BqEp_chain(q, p)
    return total


def triple_beta_sum(m: int, n: int, p: int) -> Rational:
    """``integral_0^1 E_m E_n E_p`` as a triple Beta sum.

    The first two factors are expanded in powers of ``x``, the third in
    powers of ``1 - x`` after reflection.
    """
    if min(m, n, p) < 0:
        raise DomainError(f"indices must be nonnegative, got m={m}, n={n}, p={p}")
    E = euler_numbers(max(m, n, p))
    total = Fraction(0)
    for l in range(m + 1):
        for j in range(n + 1):
            left = binomial(m, l) * binomial(n, j) * E[m - l] * E[n - j]
            if not left:
                continue
            for k in range(p + 1):
                total += (
                    left * binomial(p, k) * E[k] * beta_int(l + j + 1, p - k + 1)
                )
    return (-1) ** p * total
