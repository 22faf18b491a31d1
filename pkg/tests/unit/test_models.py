"""Tests for the audit data records."""

from fractions import Fraction

import pytest
from eulerint.models import (
    CHECK_DISPLAY,
    CHECK_LHS_ORACLE,
    CHECK_RHS_ORACLE,
    AuditRanges,
    AuditReport,
    ItemResult,
    ItemSummary,
    Status,
    value_text,
)
from eulerint.poly import ZERO, euler_poly


class TestItemResult:
    def test_status_follows_residual(self):
        assert ItemResult("a", {"n": 1}, Fraction(0)).status is Status.HOLDS
        assert ItemResult("a", {"n": 1}, ZERO).holds
        assert ItemResult("a", {"n": 1}, Fraction(1, 3)).status is Status.FAILS
        assert not ItemResult("a", {"n": 1}, euler_poly(1)).holds

    def test_sort_key_orders_checks(self):
        results = [
            ItemResult("b", {"n": 0}, 0),
            ItemResult("a", {"m": 2, "n": 0}, 0, CHECK_RHS_ORACLE),
            ItemResult("a", {"m": 1, "n": 5}, 0),
            ItemResult("a", {"m": 2, "n": 0}, 0, CHECK_DISPLAY),
            ItemResult("a", {"m": 2, "n": 0}, 0, CHECK_LHS_ORACLE),
        ]
        ordered = sorted(results, key=ItemResult.sort_key)
        assert [(r.id, tuple(r.params.values()), r.check) for r in ordered] == [
            ("a", (1, 5), CHECK_DISPLAY),
            ("a", (2, 0), CHECK_DISPLAY),
            ("a", (2, 0), CHECK_LHS_ORACLE),
            ("a", (2, 0), CHECK_RHS_ORACLE),
            ("b", (0,), CHECK_DISPLAY),
        ]

    def test_value_text(self):
        assert value_text(Fraction(-3, 4)) == "-3/4"
        assert value_text(euler_poly(2)) == "x^2 - x"


class TestAuditRanges:
    def test_defaults(self):
        assert AuditRanges().as_dict() == {"n_max": 8, "m_max": 8, "p_max": 8, "q_max": 8}

    def test_uniform(self):
        assert AuditRanges.uniform(3) == AuditRanges(3, 3, 3, 3)

    def test_bound_by_parameter(self):
        ranges = AuditRanges(n_max=1, m_max=2, p_max=3, q_max=4)
        assert [ranges.bound(p) for p in "nmpq"] == [1, 2, 3, 4]

    def test_frozen(self):
        with pytest.raises(AttributeError):
            AuditRanges().n_max = 3


class TestAuditReport:
    def test_lookup_and_failing_ids(self):
        report = AuditReport(
            version="0",
            ranges=AuditRanges(),
            summary=[ItemSummary("a", True), ItemSummary("b", False, {"n": 2})],
        )
        assert report.summary_for("b").first_failure == {"n": 2}
        assert report.summary_for("c") is None
        assert report.failing_ids() == ["b"]
