"""
Core data records for identity audits.

An audit evaluates registered identities over a parameter grid; each grid
point yields an :class:`ItemResult` whose residual (lhs - rhs) is an exact
polynomial or rational. :class:`AuditReport` groups the results with one
:class:`ItemSummary` per identity id.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from .exactnum import Rational, rat_text
from .poly import Poly, poly_text

logger = logging.getLogger(__name__)

#: Check kinds recorded on every result, in report order.
CHECK_DISPLAY = "display"
CHECK_LHS_ORACLE = "lhs~oracle"
CHECK_RHS_ORACLE = "rhs~oracle"
CHECK_ORDER: Tuple[str, ...] = (CHECK_DISPLAY, CHECK_LHS_ORACLE, CHECK_RHS_ORACLE)

Value = Union[Poly, Rational]


class Status(str, Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"


class ValueKind(str, Enum):
    POLY_IN_X = "POLY_IN_X"
    RATIONAL = "RATIONAL"


def value_text(value: Value) -> str:
    """Text form of a residual: polynomial or rational."""
    if isinstance(value, Poly):
        return poly_text(value)
    return rat_text(value)


def is_zero(value: Value) -> bool:
    if isinstance(value, Poly):
        return value.is_zero()
    return value == 0


@dataclass(frozen=True)
class ItemResult:
    """Outcome of comparing two sides of one identity at one parameter point.

    ``status`` is derived from ``residual``: HOLDS exactly when the residual
    is the zero polynomial or the rational zero.
    """

    id: str
    params: Dict[str, int]
    residual: Value
    check: str = CHECK_DISPLAY

    @property
    def status(self) -> Status:
        return Status.HOLDS if is_zero(self.residual) else Status.FAILS

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    def sort_key(self) -> Tuple[str, Tuple[int, ...], int]:
        return (self.id, tuple(self.params.values()), CHECK_ORDER.index(self.check))


@dataclass(frozen=True)
class AuditRanges:
    """Upper bounds (inclusive) of the audit parameter grid."""

    n_max: int = 8
    m_max: int = 8
    p_max: int = 8
    q_max: int = 8

    @classmethod
    def uniform(cls, bound: int) -> "AuditRanges":
        return cls(n_max=bound, m_max=bound, p_max=bound, q_max=bound)

    def bound(self, param: str) -> int:
        return getattr(self, f"{param}_max")

    def as_dict(self) -> Dict[str, int]:
        return {
            "n_max": self.n_max,
            "m_max": self.m_max,
            "p_max": self.p_max,
            "q_max": self.q_max,
        }


@dataclass(frozen=True)
class ItemSummary:
    id: str
    holds_everywhere: bool
    first_failure: Optional[Dict[str, int]] = None
    failure_check: Optional[str] = None
    checked: int = 0


@dataclass
class AuditReport:
    """Results of an audit, ordered by id, then parameters, then check."""

    version: str
    ranges: AuditRanges
    results: List[ItemResult] = field(default_factory=list)
    summary: List[ItemSummary] = field(default_factory=list)

    def summary_for(self, identity_id: str) -> Optional[ItemSummary]:
        return next((s for s in self.summary if s.id == identity_id), None)

    def failing_ids(self) -> List[str]:
        return [s.id for s in self.summary if not s.holds_everywhere]
