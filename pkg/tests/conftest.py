"""
Core pytest configuration and fixtures for eulerint testing.

Golden values live in ``tests/fixtures``; the pillar fixtures are
parametrized so every Format and Report implementation runs the same
contract tests.
"""

import json
import logging
import random
from fractions import Fraction
from pathlib import Path
from typing import Dict

import pytest
from eulerint.models import AuditRanges
from eulerint.report import FileReport, InMemoryReport, JSONFormat, TextFormat

FIXTURES_DIR = Path(__file__).parent / "fixtures"


# ===== GOLDEN DATA =====


@pytest.fixture(scope="session")
def golden() -> Dict:
    """Hand-checked values: number tables, polynomials, integrals."""
    with open(FIXTURES_DIR / "golden_values.json", encoding="utf-8") as f:
        return json.load(f)


@pytest.fixture(scope="session")
def golden_euler(golden):
    return [Fraction(v) for v in golden["euler_numbers"]]


@pytest.fixture(scope="session")
def golden_bernoulli(golden):
    return [Fraction(v) for v in golden["bernoulli_numbers"]]


# ===== AUDIT CONFIGURATION =====


@pytest.fixture
def small_ranges() -> AuditRanges:
    """A grid small enough for whole-registry audits in unit tests."""
    return AuditRanges.uniform(4)


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator so randomized checks are reproducible."""
    return random.Random(20240611)


# ===== PILLAR FIXTURES =====


@pytest.fixture(params=["text", "json"])
def any_format(request):
    return TextFormat() if request.param == "text" else JSONFormat()


@pytest.fixture(params=["memory", "file"])
def any_report(request, tmp_path):
    if request.param == "memory":
        return InMemoryReport()
    return FileReport(tmp_path / "report.json")


# ===== CLI HELPERS =====


@pytest.fixture
def run_cli(capsys):
    """Run ``eulerint.cli.main`` and return ``(exit_code, stdout, stderr)``."""
    from eulerint.cli import main

    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level

    def _run(*argv: str):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    yield _run
    # main() calls basicConfig; drop its handler so later tests start clean
    root.handlers[:] = handlers
    root.setLevel(level)
