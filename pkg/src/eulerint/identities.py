"""Registry of printed identities and the audit that checks them.

Each :class:`IdentityItem` transcribes one printed display literally: its
``lhs`` and ``rhs`` evaluators compute both sides exactly, as written, with
two mechanical conventions only: sums written up to infinity stop where the
binomial weights vanish, and Gamma at a positive integer is a factorial.
Nothing is repaired. A display that is misprinted simply gets a nonzero
residual.

Where a display has an exact counterpart (an oracle), the audit also compares
each printed side with it, so a failing display shows which side is off.

Ids fall into two classes. Verified-class ids are expected to hold on every
grid; a failure there is an error. Audit-class ids are recorded as found.
"""

import itertools
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .exactnum import DomainError, Rational, binomial, factorial, gamma_int
from .models import (
    CHECK_LHS_ORACLE,
    CHECK_RHS_ORACLE,
    AuditRanges,
    AuditReport,
    ItemResult,
    ItemSummary,
    Value,
    ValueKind,
)
from .oracle import (
    ProductSpec,
    ibp_BqEp_chain,
    ibp_EmEn_chain,
    product_integral,
    y_moment,
    ynEn_expand,
)
from .poly import (
    ZERO,
    Poly,
    bernoulli_poly,
    euler_poly,
    poly_derivative,
    poly_eval,
    poly_mul,
    poly_shift,
)
from .sequences import bernoulli_numbers, euler_numbers

logger = logging.getLogger(__name__)

__all__ = [
    "IdentityItem",
    "UnknownIdentityError",
    "NoOracleError",
    "VERIFIED_IDS",
    "AUDIT_IDS",
    "registry",
    "get_item",
    "check_item",
    "check_against_oracle",
    "thm6_constant",
    "grid_points",
    "audit_grid",
]

Params = Dict[str, int]
Evaluator = Callable[..., Value]


class UnknownIdentityError(KeyError):
    """Raised for an id that is not in the registry."""


class NoOracleError(LookupError):
    """Raised when an identity has no oracle counterpart."""


@dataclass(frozen=True)
class IdentityItem:
    """One printed display with exact evaluators for both of its sides.

    Parameters
    ----------
    id : str
        Registry key.
    description : str
        Where the display comes from and what it claims.
    params : tuple of str
        Parameter names in order, e.g. ``("m", "n")``.
    kind : ValueKind
        Whether both sides are polynomials in ``x`` or rationals.
    lhs, rhs : callable
        Side evaluators taking the parameters as keyword arguments.
    domain : callable
        Predicate on the parameters.
    restriction : str
        The stated restriction, quoted in domain errors.
    verified : bool
        True for verified-class ids.
    oracle : callable, optional
        Exact value both sides should equal.
    """

    id: str
    description: str
    params: Tuple[str, ...]
    kind: ValueKind
    lhs: Evaluator
    rhs: Evaluator
    domain: Callable[..., bool]
    restriction: str
    verified: bool = False
    oracle: Optional[Evaluator] = None

    def accepts(self, params: Mapping[str, int]) -> bool:
        return self.domain(**params)


# ---------------------------------------------------------------------------
# Shorthands
# ---------------------------------------------------------------------------


def _En(k: int) -> Rational:
    """Euler number ``E_k``."""
    return euler_numbers(k)[k]


def _Bn(k: int) -> Rational:
    """Bernoulli number ``B_k``."""
    return bernoulli_numbers(k)[k]


def _Ex(k: int) -> Poly:
    """``E_k(x)``."""
    return euler_poly(k)


def _Ex1(k: int) -> Poly:
    """``E_k(x + 1)``."""
    return poly_shift(euler_poly(k), 1)


def _Bx(k: int) -> Poly:
    return bernoulli_poly(k)


def _ratio(n: int, l: int) -> Fraction:
    """``C(n,l) / C(n+l,l)``, the shape every Beta value takes in these sums."""
    return Fraction(binomial(n, l), binomial(n + l, l))


def _odd_terms(m: int, n: int) -> Iterable[Tuple[int, int]]:
    """``(r, C(m,2r+1) + C(n,2r+1))`` until both binomials are zero."""
    r = 0
    while 2 * r + 1 <= max(m, n):
        yield r, binomial(m, 2 * r + 1) + binomial(n, 2 * r + 1)
        r += 1


def _psum(terms: Iterable[Poly]) -> Poly:
    return sum(terms, ZERO)


def _rsum(terms: Iterable[Rational]) -> Rational:
    return sum(terms, Fraction(0))


def _euler_integral(*indices: int) -> Rational:
    return product_integral(ProductSpec.euler(*indices))


# ---------------------------------------------------------------------------
# Euler-number recurrence
# ---------------------------------------------------------------------------


def _eq2_lhs(n):
    return _En(n)


def _eq2_rhs(n):
    return -_rsum(binomial(n, i) * _En(i) for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# integral_0^1 y^n E_n(x + y) dy
# ---------------------------------------------------------------------------


def _thm1_lhs(n):
    return _psum(Fraction(binomial(n, l), n + l + 1) * _Ex(n - l) for l in range(n + 1))


def _thm1_rhs(n):
    return _psum(
        (-1) ** l * Fraction(1, n + l + 1) * _ratio(n, l) * _Ex1(n - l)
        for l in range(n + 1)
    )


def _thm1_x0_lhs(n):
    return _rsum(Fraction(binomial(n, l), n + l + 1) * _En(n - l) for l in range(n + 1))


def _thm1_x0_rhs(n):
    return (-1) ** n * _rsum(
        _En(n - l) * Fraction(1, n + l + 1) * _ratio(n, l) for l in range(n + 1)
    )


def _thm2_lhs(n):
    # the reflected Beta sum in E_{n-l}(x+1)
    return _thm1_rhs(n)


def _thm2_tail(n):
    return (
        Fraction((-1) ** (n - 1), binomial(2 * n, n))
        * (_Ex1(1) - Fraction(1, 2 * n + 1))
    )


def _thm2_printed_rhs(n):
    middle = _psum(
        Fraction(binomial(n, l) * (n - l + 2) * (-1) ** (l - 1), binomial(n + l, l))
        * _Ex1(n - l + 1)
        for l in range(2, n)
    )
    return _Ex1(n) / (n + 1) + middle + _thm2_tail(n)


def _thm2_plus_rhs(n):
    middle = _psum(
        Fraction(
            math.prod(range(n - l + 2, n + 1)) * (-1) ** (l - 1),
            math.prod(range(n + 1, n + l + 1)),
        )
        * _Ex1(n - l + 1)
        for l in range(2, n)
    )
    tail = (
        Fraction((-1) ** (n - 1) * factorial(n), math.prod(range(n + 1, 2 * n + 1)))
        * (_Ex1(1) - Fraction(1, 2 * n + 1))
    )
    return _Ex1(n) / (n + 1) + middle + tail


def _thm2_x0_lhs(n):
    return _rsum(
        _En(n - l) * Fraction(1, n + l + 1) * _ratio(n, l) for l in range(n + 1)
    )


def _thm2_x0_rhs(n):
    middle = _rsum(
        Fraction(binomial(n, l) * (n - l + 2), binomial(n + l, l)) * _En(n - l + 1)
        for l in range(2, n)
    )
    tail = Fraction(1, binomial(2 * n, n)) * (Fraction(1, 2) + Fraction(1, 2 * n + 1))
    return _En(n) / (n + 1) + middle + tail


def _thm3_lhs(n):
    return _Ex(n + 1) / (n + 1)


def _thm3_rhs(n):
    first = _psum(
        Fraction(binomial(n + 1, l), binomial(n + l, l)) * (-1) ** l * _Ex1(n + 1 - l)
        for l in range(n + 2)
    )
    second = _psum(
        Fraction(1, n + l + 1) * (-1) ** l * _ratio(n, l) * _Ex1(n - l)
        for l in range(n + 1)
    )
    return first / (n + 1) - second


def _thm3_x0_lhs(n):
    return -_En(n + 1) / (n + 1)


def _thm3_x0_rhs(n):
    first = _rsum(
        Fraction(binomial(n + 1, l), binomial(n + l, l)) * _En(n + 1 - l)
        for l in range(n + 2)
    )
    second = _rsum(_ratio(n, l) * _En(n - l) / (n + l + 1) for l in range(n + 1))
    return first / (n + 1) + second


def _eq17_lhs(n):
    return y_moment(n, _Ex(n))


def _eq17_rhs(n):
    return _Ex(n) / (n + 1) - Fraction(n, n + 1) * y_moment(n - 1, _Ex(n + 1))


# ---------------------------------------------------------------------------
# integral_0^1 E_n(x) E_m(x) dx
# ---------------------------------------------------------------------------


def _thm4_closed_lhs(m, n):
    return Fraction(-2) * _En(n + m + 1) / (binomial(n + m, n) * (n + m + 1))


def _thm4_closed_rhs(m, n):
    return _rsum(
        Fraction(
            binomial(n, l) * binomial(m, k)
            * gamma_int(n - l + 1) * gamma_int(m - k + 1),
            gamma_int(n + m - l - k + 2),
        )
        * _En(l) * _En(k)
        for l in range(n + 1)
        for k in range(m + 1)
    )


def _thm4_moreover_lhs(m, n):
    return _En(n + m + 1)


def _thm4_moreover_rhs(m, n):
    return -Fraction(1, 2) * _rsum(
        Fraction(
            binomial(n, l) * binomial(m, k) * binomial(n + m, n),
            binomial(n + m - l - k, n - l),
        )
        * Fraction(n + m + 1, n + m - l - k + 1)
        * _En(l) * _En(k)
        for l in range(n + 1)
        for k in range(m + 1)
    )


def _eq22_lhs(m, n):
    return _euler_integral(n + m - 1, 1)


def _eq22_rhs(m, n):
    return 2 * _En(n + m - 1) / ((m + n) * (m + n + 1))


def _eq23_lhs(m, n):
    return _euler_integral(n, m)


def _eq23_rhs(m, n):
    return (
        2 * (-1) ** (m + 1)
        * Fraction(factorial(m) * factorial(n), factorial(n + m))
        * _En(n + m + 1) / (n + m + 1)
    )


# ---------------------------------------------------------------------------
# Products as Bernoulli-polynomial combinations
# ---------------------------------------------------------------------------


def thm6_constant(m: int, n: int) -> Rational:
    """Integration constant of the Bernoulli expansion of ``E_m E_n``.

    ``C = 2 (-1)^(m+1) E_{n+m+1} / (C(n+m,n) (n+m+1))``.
    """
    if m + n < 2:
        raise DomainError(f"the constant is stated for m + n >= 2, got m={m}, n={n}")
    return (
        2 * (-1) ** (m + 1) * _En(n + m + 1)
        / (binomial(n + m, n) * (n + m + 1))
    )


def _thm5_lhs(m, n):
    return m * poly_mul(_Ex(m - 1), _Ex(n)) + n * poly_mul(_Ex(m), _Ex(n - 1))


def _thm5_rhs(m, n):
    return -2 * _psum(
        _En(2 * r + 1) * weight * _Bx(m - 2 * r - 1 + n) for r, weight in _odd_terms(m, n)
    )


def _thm6_lhs(m, n):
    return poly_mul(_Ex(m), _Ex(n))


def _thm6_rhs(m, n):
    series = _psum(
        weight * _En(2 * r + 1) / (m + n - 2 * r) * _Bx(m + n - 2 * r)
        for r, weight in _odd_terms(m, n)
    )
    return -2 * series + thm6_constant(m, n)


# ---------------------------------------------------------------------------
# Bernoulli times Euler, triple products
# ---------------------------------------------------------------------------


def _eq29_lhs(q, p):
    return product_integral(ProductSpec.of(("B", q), ("E", p)))


def _eq29_rhs(q, p):
    return 2 * factorial(p) * _rsum(
        _Bn(q + l) * _En(p - l + 1) / binomial(q + l, l) * Fraction((-1) ** l, factorial(l))
        for l in range(p + 1)
    )


def _eq33_lhs(m, n, p):
    series = _rsum(
        weight * _En(2 * r + 1) / (n + m - 2 * r)
        * _rsum(
            _Bn(m + n - 2 * r + l) * _En(p - l + 1) / binomial(n + m - 2 * r + l, l)
            * Fraction((-1) ** l, factorial(l))
            for l in range(1, p + 1)
        )
        for r, weight in _odd_terms(m, n)
    )
    closing = (
        4 * (-1) ** m * _En(n + m + 1) * _En(p + 1)
        / (binomial(n + m, n) * (n + m + 1) * (p + 1))
    )
    return -4 * factorial(p) * series + closing


def _eq33_rhs(m, n, p):
    return (-1) ** p * _rsum(
        Fraction(
            binomial(m, l) * binomial(n, j) * binomial(p, k),
            binomial(l + j + p - k, l + j) * (l + j + p - k + 1),
        )
        * _En(m - l) * _En(n - j) * _En(k)
        for l in range(m + 1)
        for j in range(n + 1)
        for k in range(p + 1)
    )


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _build_registry() -> Tuple[IdentityItem, ...]:
    P, R = ValueKind.POLY_IN_X, ValueKind.RATIONAL
    items = [
        IdentityItem(
            id="eq2",
            description="Euler-number recurrence E_n = -sum_{i=1}^{n} C(n,i) E_i",
            params=("n",),
            kind=R,
            lhs=_eq2_lhs,
            rhs=_eq2_rhs,
            domain=lambda n: n >= 1,
            restriction="n >= 1",
        ),
        IdentityItem(
            id="thm1",
            description="int_0^1 y^n E_n(x+y) dy: binomial sum equals reflected Beta sum",
            params=("n",),
            kind=P,
            lhs=_thm1_lhs,
            rhs=_thm1_rhs,
            domain=lambda n: n >= 0,
            restriction="n >= 0",
            verified=True,
            oracle=lambda n: ynEn_expand(n),
        ),
        IdentityItem(
            id="thm1_x0",
            description="thm1 specialised to x = 0",
            params=("n",),
            kind=R,
            lhs=_thm1_x0_lhs,
            rhs=_thm1_x0_rhs,
            domain=lambda n: n >= 0,
            restriction="n >= 0",
            verified=True,
            oracle=lambda n: poly_eval(ynEn_expand(n), 0),
        ),
        IdentityItem(
            id="thm2_printed",
            description="descending by-parts chain, middle coefficient C(n,l)(n-l+2)/C(n+l,l)",
            params=("n",),
            kind=P,
            lhs=_thm2_lhs,
            rhs=_thm2_printed_rhs,
            domain=lambda n: n >= 3,
            restriction="n >= 3",
            oracle=lambda n: ynEn_expand(n),
        ),
        IdentityItem(
            id="thm2_plus",
            description="descending by-parts chain with the '+' falling/rising factorial middle sum",
            params=("n",),
            kind=P,
            lhs=_thm2_lhs,
            rhs=_thm2_plus_rhs,
            domain=lambda n: n >= 3,
            restriction="n >= 3",
            oracle=lambda n: ynEn_expand(n),
        ),
        IdentityItem(
            id="thm2_x0",
            description="descending chain at x = 0 with Euler numbers",
            params=("n",),
            kind=R,
            lhs=_thm2_x0_lhs,
            rhs=_thm2_x0_rhs,
            domain=lambda n: n >= 3,
            restriction="n >= 3",
            oracle=lambda n: poly_eval(ynEn_expand(n), 0),
        ),
        IdentityItem(
            id="thm3",
            description="E_{n+1}(x)/(n+1) as a difference of two reflected sums",
            params=("n",),
            kind=P,
            lhs=_thm3_lhs,
            rhs=_thm3_rhs,
            domain=lambda n: n >= 1,
            restriction="n >= 1",
            oracle=lambda n: _Ex(n + 1) / (n + 1),
        ),
        IdentityItem(
            id="thm3_x0",
            description="thm3 at x = 0 with Euler numbers",
            params=("n",),
            kind=R,
            lhs=_thm3_x0_lhs,
            rhs=_thm3_x0_rhs,
            domain=lambda n: n >= 1,
            restriction="n >= 1",
            oracle=lambda n: poly_eval(_Ex(n + 1) / (n + 1), 0),
        ),
        IdentityItem(
            id="thm4_closed",
            description="-2 E_{n+m+1}/(C(n+m,n)(n+m+1)) equals the Gamma double sum",
            params=("m", "n"),
            kind=R,
            lhs=_thm4_closed_lhs,
            rhs=_thm4_closed_rhs,
            domain=lambda m, n: m >= 1 and n >= 0,
            restriction="m >= 1, n >= 0",
            verified=True,
            oracle=lambda m, n: (-1) ** m * ibp_EmEn_chain(m, n),
        ),
        IdentityItem(
            id="thm4_moreover",
            description="E_{n+m+1} as a normalised double sum of Euler-number products",
            params=("m", "n"),
            kind=R,
            lhs=_thm4_moreover_lhs,
            rhs=_thm4_moreover_rhs,
            domain=lambda m, n: m >= 1 and n >= 0,
            restriction="m >= 1, n >= 0",
            verified=True,
            oracle=lambda m, n: _En(n + m + 1),
        ),
        IdentityItem(
            id="thm5",
            description="d/dx (E_m E_n) as an odd-index Euler-weighted sum of B_{m+n-2r-1}(x)",
            params=("m", "n"),
            kind=P,
            lhs=_thm5_lhs,
            rhs=_thm5_rhs,
            domain=lambda m, n: m >= 1 and n >= 1,
            restriction="m >= 1, n >= 1",
            verified=True,
            oracle=lambda m, n: poly_derivative(poly_mul(_Ex(m), _Ex(n))),
        ),
        IdentityItem(
            id="thm6",
            description="E_m(x) E_n(x) as a Bernoulli-polynomial combination plus constant",
            params=("m", "n"),
            kind=P,
            lhs=_thm6_lhs,
            rhs=_thm6_rhs,
            domain=lambda m, n: m >= 0 and n >= 0 and m + n >= 2,
            restriction="m, n >= 0 with m + n >= 2",
            verified=True,
            oracle=lambda m, n: poly_mul(_Ex(m), _Ex(n)),
        ),
        IdentityItem(
            id="eq17",
            description="one by-parts step of int_0^1 y^n E_n(x+y) dy towards E_{n+1}",
            params=("n",),
            kind=P,
            lhs=_eq17_lhs,
            rhs=_eq17_rhs,
            domain=lambda n: n >= 1,
            restriction="n >= 1",
            oracle=lambda n: ynEn_expand(n),
        ),
        IdentityItem(
            id="eq22",
            description="int_0^1 E_{n+m-1} E_1 dx = 2 E_{n+m-1}/((m+n)(m+n+1))",
            params=("m", "n"),
            kind=R,
            lhs=_eq22_lhs,
            rhs=_eq22_rhs,
            domain=lambda m, n: m >= 1 and n >= 0,
            restriction="m >= 1, n >= 0",
            oracle=lambda m, n: ibp_EmEn_chain(1, n + m - 1),
        ),
        IdentityItem(
            id="eq23",
            description="int_0^1 E_n E_m dx = 2(-1)^(m+1) m!n!/(n+m)! E_{n+m+1}/(n+m+1)",
            params=("m", "n"),
            kind=R,
            lhs=_eq23_lhs,
            rhs=_eq23_rhs,
            domain=lambda m, n: m >= 1 and n >= 0,
            restriction="m >= 1, n >= 0",
            verified=True,
            oracle=lambda m, n: ibp_EmEn_chain(m, n),
        ),
        IdentityItem(
            id="eq29_printed",
            description="int_0^1 B_q E_p dx as the stated flat-prefactor sum",
            params=("q", "p"),
            kind=R,
            lhs=_eq29_lhs,
            rhs=_eq29_rhs,
            domain=lambda q, p: q >= 1 and p >= 1,
            restriction="q >= 1, p >= 1",
            oracle=lambda q, p: ibp_BqEp_chain(q, p),
        ),
        IdentityItem(
            id="eq33",
            description="int_0^1 E_m E_n E_p dx: Bernoulli-expansion form against Beta triple sum",
            params=("m", "n", "p"),
            kind=R,
            lhs=_eq33_lhs,
            rhs=_eq33_rhs,
            domain=lambda m, n, p: m >= 1 and n >= 1 and p >= 1,
            restriction="m, n, p >= 1",
            oracle=lambda m, n, p: _euler_integral(m, n, p),
        ),
    ]
    return tuple(sorted(items, key=lambda item: item.id))


VERIFIED_IDS = frozenset(item.id for item in _build_registry() if item.verified)
AUDIT_IDS = frozenset(item.id for item in _build_registry() if not item.verified)


def registry() -> List[IdentityItem]:
    """All registered identities, sorted by id."""
    return list(_build_registry())


def get_item(identity_id: str) -> IdentityItem:
    for item in _build_registry():
        if item.id == identity_id:
            return item
    raise UnknownIdentityError(f"unknown identity id {identity_id!r}")


# ---------------------------------------------------------------------------
# Checking
# ---------------------------------------------------------------------------


def _resolve_params(item: IdentityItem, params: Optional[Mapping[str, int]]) -> Params:
    given = dict(params or {})
    if set(given) != set(item.params):
        raise DomainError(
            f"{item.id} takes parameters {', '.join(item.params)}, got {sorted(given)}"
        )
    ordered = {name: int(given[name]) for name in item.params}
    if not item.accepts(ordered):
        raise DomainError(f"{item.id} requires {item.restriction}, got {ordered}")
    return ordered


def _evaluate(item: IdentityItem, side: Evaluator, params: Params) -> Value:
    value = side(**params)
    if item.kind is ValueKind.POLY_IN_X:
        if not isinstance(value, Poly):
            value = Poly.constant(value)
    elif isinstance(value, Poly):
        raise TypeError(f"{item.id} produced a polynomial for a rational display")
    else:
        value = Fraction(value)
    return value


def check_item(
    identity_id: str, params: Optional[Mapping[str, int]] = None, **kwargs: int
) -> ItemResult:
    """Evaluate both printed sides and return their exact residual.

    Parameters may be given as a mapping, as keywords, or both.

    Raises
    ------
    UnknownIdentityError
        If the id is not registered.
    DomainError
        If the parameters are outside the display's stated domain.
    """
    item = get_item(identity_id)
    resolved = _resolve_params(item, {**(params or {}), **kwargs})
    lhs = _evaluate(item, item.lhs, resolved)
    rhs = _evaluate(item, item.rhs, resolved)
    return ItemResult(id=item.id, params=resolved, residual=lhs - rhs)


def check_against_oracle(
    identity_id: str,
    params: Optional[Mapping[str, int]] = None,
    side: str = "rhs",
    **kwargs: int,
) -> ItemResult:
    """Residual of one printed side against the identity's oracle value.

    Raises
    ------
    NoOracleError
        If the identity has no oracle counterpart.
    """
    item = get_item(identity_id)
    if item.oracle is None:
        raise NoOracleError(f"{identity_id} has no oracle mapping")
    if side not in ("lhs", "rhs"):
        raise ValueError(f"side must be 'lhs' or 'rhs', got {side!r}")
    resolved = _resolve_params(item, {**(params or {}), **kwargs})
    printed = _evaluate(item, item.lhs if side == "lhs" else item.rhs, resolved)
    expected = _evaluate(item, item.oracle, resolved)
    check = CHECK_LHS_ORACLE if side == "lhs" else CHECK_RHS_ORACLE
    return ItemResult(
        id=item.id, params=resolved, residual=printed - expected, check=check
    )


def _check_point(item: IdentityItem, params: Params) -> List[ItemResult]:
    """All checks for one grid point, evaluating each side once."""
    logger.debug("Checking %s at %s", item.id, params)
    try:
        lhs = _evaluate(item, item.lhs, params)
        rhs = _evaluate(item, item.rhs, params)
        results = [ItemResult(id=item.id, params=params, residual=lhs - rhs)]
        if item.oracle is not None:
            expected = _evaluate(item, item.oracle, params)
            results.append(
                ItemResult(item.id, params, lhs - expected, CHECK_LHS_ORACLE)
            )
            results.append(
                ItemResult(item.id, params, rhs - expected, CHECK_RHS_ORACLE)
            )
    except Exception:
        logger.exception("Error evaluating %s at %s", item.id, params)
        raise
    return results


def grid_points(item: IdentityItem, ranges: AuditRanges) -> List[Params]:
    """Parameter points of ``item`` within ``ranges``, lexicographic, in domain."""
    axes = [range(ranges.bound(name) + 1) for name in item.params]
    points = []
    for values in itertools.product(*axes):
        params = dict(zip(item.params, values))
        if item.accepts(params):
            points.append(params)
    return points


def _summarise(identity_id: str, results: Sequence[ItemResult]) -> ItemSummary:
    failure = next((r for r in results if not r.holds), None)
    return ItemSummary(
        id=identity_id,
        holds_everywhere=failure is None,
        first_failure=dict(failure.params) if failure else None,
        failure_check=failure.check if failure else None,
        checked=len(results),
    )


def _package_version() -> str:
    from . import __version__

    return __version__


def _env_workers() -> int:
    raw = os.environ.get("EULERINT_WORKERS", "1")
    try:
        workers = int(raw)
    except ValueError:
        workers = 0
    if workers < 1:
        raise DomainError(f"EULERINT_WORKERS must be a positive integer, got {raw!r}")
    return workers


def audit_grid(
    ids: Optional[Iterable[str]] = None,
    ranges: Optional[AuditRanges] = None,
    workers: Optional[int] = None,
    version: Optional[str] = None,
) -> AuditReport:
    """Check every requested identity over its parameter grid.

    Parameters
    ----------
    ids : iterable of str, optional
        Registry ids to audit. All ids when omitted.
    ranges : AuditRanges, optional
        Inclusive upper bounds per parameter; defaults to 8 everywhere.
    workers : int, optional
        Worker threads for grid evaluation. Falls back to the
        ``EULERINT_WORKERS`` environment variable, then 1.
    version : str, optional
        Version string recorded in the report; the package version by default.

    Returns
    -------
    AuditReport
        Results sorted by id, parameters and check; the order does not depend
        on ``workers``.
    """
    ranges = ranges or AuditRanges()
    workers = workers or _env_workers()
    items = (
        registry() if ids is None else sorted({get_item(i) for i in ids}, key=lambda i: i.id)
    )
    tasks = [(item, params) for item in items for params in grid_points(item, ranges)]
    logger.info(
        "Auditing %d identities over %d grid points (%d workers)",
        len(items),
        len(tasks),
        workers,
    )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(lambda task: _check_point(*task), tasks))
    else:
        batches = [_check_point(item, params) for item, params in tasks]

    results = sorted(
        (r for batch in batches for r in batch), key=ItemResult.sort_key
    )
    summary = []
    for item in items:
        summary.append(_summarise(item.id, [r for r in results if r.id == item.id]))
        if item.verified and not summary[-1].holds_everywhere:
            logger.warning(
                "Verified identity %s fails at %s",
                item.id,
                summary[-1].first_failure,
            )

    failing = sum(1 for s in summary if not s.holds_everywhere)
    logger.info(
        "Audit finished: %d results, %d of %d ids with failures",
        len(results),
        failing,
        len(summary),
    )
    return AuditReport(
        version=version or _package_version(),
        ranges=ranges,
        results=results,
        summary=summary,
    )
