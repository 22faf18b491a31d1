"""Euler and Bernoulli numbers as exact rationals.

Euler numbers are the Taylor coefficients of ``2/(e^t+1)`` (so ``E_1 = -1/2``
and ``E_{2k} = 0`` for ``k >= 1``); Bernoulli numbers those of
``t/(e^t-1)`` (so ``B_1 = -1/2``).

Tables are cached per kind and only ever grow: asking for a longer prefix
extends the cached list in place and leaves earlier entries untouched. The
:class:`SequenceTable` handed to callers is an immutable snapshot.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from threading import Lock
from typing import Dict, Iterator, List, Sequence, Tuple

from .exactnum import DomainError, Rational, binomial, factorial

logger = logging.getLogger(__name__)

__all__ = [
    "SequenceKind",
    "SequenceTable",
    "euler_numbers",
    "bernoulli_numbers",
    "euler_number",
    "bernoulli_number",
    "series_euler_numbers",
    "series_bernoulli_numbers",
]


class SequenceKind(str, Enum):
    EULER = "euler"
    BERNOULLI = "bernoulli"


@dataclass(frozen=True)
class SequenceTable:
    """A prefix ``values[0..N]`` of the Euler or Bernoulli numbers."""

    kind: SequenceKind
    values: Tuple[Rational, ...]

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> Rational:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Rational]:
        return iter(self.values)


def _next_euler(values: List[Rational]) -> Rational:
    # (E+1)^n + E_n = 0 solved for E_n
    n = len(values)
    return -Fraction(1, 2) * sum(binomial(n, k) * values[k] for k in range(n))


def _next_bernoulli(values: List[Rational]) -> Rational:
    n = len(values)
    return -Fraction(1, n + 1) * sum(binomial(n + 1, k) * values[k] for k in range(n))


_RECURRENCES = {
    SequenceKind.EULER: _next_euler,
    SequenceKind.BERNOULLI: _next_bernoulli,
}

_cache: Dict[SequenceKind, List[Rational]] = {
    SequenceKind.EULER: [Fraction(1)],
    SequenceKind.BERNOULLI: [Fraction(1)],
}
_lock = Lock()


def _table(kind: SequenceKind, N: int) -> SequenceTable:
    if N < 0:
        raise DomainError(f"sequence length must be nonnegative, got N={N}")
    with _lock:
        values = _cache[kind]
        if len(values) <= N:
            logger.debug(
                "Extending %s table from %d to %d", kind.value, len(values) - 1, N
            )
            step = _RECURRENCES[kind]
            while len(values) <= N:
                values.append(step(values))
        return SequenceTable(kind=kind, values=tuple(values[: N + 1]))


def euler_numbers(N: int) -> SequenceTable:
    """Euler numbers ``E_0 .. E_N``.

    Examples
    --------
    >>> [str(v) for v in euler_numbers(3)]
    ['1', '-1/2', '0', '1/4']
    """
    return _table(SequenceKind.EULER, N)


def bernoulli_numbers(N: int) -> SequenceTable:
    """Bernoulli numbers ``B_0 .. B_N`` with the ``B_1 = -1/2`` convention."""
    return _table(SequenceKind.BERNOULLI, N)


def euler_number(k: int) -> Rational:
    return euler_numbers(k)[k]


def bernoulli_number(k: int) -> Rational:
    return bernoulli_numbers(k)[k]


# ---------------------------------------------------------------------------
# Power-series oracle
# ---------------------------------------------------------------------------


def _series_divide(
    num: Sequence[Rational], den: Sequence[Rational], N: int
) -> List[Rational]:
    """Coefficients ``0..N`` of ``num/den`` for truncated power series."""
    if den[0] == 0:
        raise DomainError("power series denominator has zero constant term")
    out: List[Rational] = []
    for n in range(N + 1):
        acc = num[n] if n < len(num) else Fraction(0)
        acc -= sum(den[k] * out[n - k] for k in range(1, min(n, len(den) - 1) + 1))
        out.append(acc / den[0])
    return out


def series_euler_numbers(N: int) -> SequenceTable:
    """Euler numbers by dividing ``2`` by ``e^t + 1`` as power series."""
    den = [Fraction(2)] + [Fraction(1, factorial(k)) for k in range(1, N + 1)]
    coeffs = _series_divide([Fraction(2)], den, N)
    return SequenceTable(
        kind=SequenceKind.EULER,
        values=tuple(c * factorial(n) for n, c in enumerate(coeffs)),
    )


def series_bernoulli_numbers(N: int) -> SequenceTable:
    """Bernoulli numbers by dividing ``1`` by ``(e^t - 1)/t`` as power series."""
    den = [Fraction(1, factorial(k + 1)) for k in range(N + 1)]
    coeffs = _series_divide([Fraction(1)], den, N)
    return SequenceTable(
        kind=SequenceKind.BERNOULLI,
        values=tuple(c * factorial(n) for n, c in enumerate(coeffs)),
    )
