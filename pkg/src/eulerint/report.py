"""Output pillars: how values are rendered and where audit reports go."""

import json
import logging
import os
import tempfile
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from .exactnum import Rational, rat_text
from .identities import IdentityItem
from .models import AuditReport, ItemResult, ItemSummary, value_text
from .poly import Poly, poly_json, poly_text
from .sequences import SequenceTable

logger = logging.getLogger(__name__)

__all__ = [
    "Format",
    "TextFormat",
    "JSONFormat",
    "Report",
    "InMemoryReport",
    "FileReport",
    "ReportWriteError",
    "report_to_dict",
]


class ReportWriteError(RuntimeError):
    """Raised when a report cannot be written to its destination."""


# ---------------------------------------------------------------------------
# Plain-data forms shared by the formats
# ---------------------------------------------------------------------------


def _result_to_dict(result: ItemResult) -> Dict[str, Any]:
    return {
        "id": result.id,
        "params": dict(result.params),
        "status": result.status.value,
        "residual": value_text(result.residual),
        "check": result.check,
    }


def _summary_to_dict(summary: ItemSummary) -> Dict[str, Any]:
    return {
        "id": summary.id,
        "holds_everywhere": summary.holds_everywhere,
        "first_failure": summary.first_failure,
        "failure_check": summary.failure_check,
        "checked": summary.checked,
    }


def report_to_dict(report: AuditReport) -> Dict[str, Any]:
    """Audit report as plain data, keys in schema order."""
    return {
        "version": report.version,
        "ranges": report.ranges.as_dict(),
        "results": [_result_to_dict(r) for r in report.results],
        "summary": [_summary_to_dict(s) for s in report.summary],
    }


def _params_text(params: Optional[Dict[str, int]]) -> str:
    if not params:
        return "-"
    return ",".join(f"{k}={v}" for k, v in params.items())


# ---------------------------------------------------------------------------
# Format pillar
# ---------------------------------------------------------------------------


class Format(ABC):
    """Interface for rendering results as text for stdout."""

    @abstractmethod
    def rational(self, value: Rational) -> str:
        """Render an exact rational."""
        pass

    @abstractmethod
    def poly(self, value: Poly) -> str:
        """Render a polynomial in ``x``."""
        pass

    @abstractmethod
    def sequence(self, table: SequenceTable) -> str:
        """Render a table of Euler or Bernoulli numbers."""
        pass

    @abstractmethod
    def audit(self, report: AuditReport) -> str:
        """Render a complete audit report."""
        pass

    @abstractmethod
    def registry(self, items: Sequence[IdentityItem]) -> str:
        """Render the registry listing."""
        pass


class TextFormat(Format):
    """Human-readable output using the rational and polynomial text forms."""

    def rational(self, value: Rational) -> str:
        return rat_text(value)

    def poly(self, value: Poly) -> str:
        return poly_text(value)

    def sequence(self, table: SequenceTable) -> str:
        return ", ".join(rat_text(v) for v in table)

    def audit(self, report: AuditReport) -> str:
        width = max((len(s.id) for s in report.summary), default=2)
        lines = [f"eulerint {report.version}"]
        for summary in report.summary:
            status = "HOLDS" if summary.holds_everywhere else "FAILS"
            line = f"{summary.id:<{width}}  {status}  checked={summary.checked}"
            if not summary.holds_everywhere:
                line += (
                    f"  first_failure={_params_text(summary.first_failure)}"
                    f" ({summary.failure_check})"
                )
            lines.append(line)
        failing = [r for r in report.results if not r.holds]
        if failing:
            lines.append("")
            lines.append("residuals:")
            for r in failing:
                lines.append(
                    f"  {r.id} {_params_text(r.params)} {r.check}: {value_text(r.residual)}"
                )
        return "\n".join(lines)

    def registry(self, items: Sequence[IdentityItem]) -> str:
        width = max((len(i.id) for i in items), default=2)
        lines = []
        for item in items:
            cls = "verified" if item.verified else "audit"
            lines.append(
                f"{item.id:<{width}}  ({','.join(item.params)})  {item.kind.value:<9}"
                f"  {cls:<8}  {item.description}"
            )
        return "\n".join(lines)


class JSONFormat(Format):
    """JSON documents with keys in schema order and a fixed indent."""

    def __init__(self, indent: Optional[int] = 2):
        self.indent = indent

    def dumps(self, data: Any) -> str:
        return json.dumps(data, indent=self.indent, ensure_ascii=False)

    def rational(self, value: Rational) -> str:
        return self.dumps({"value": rat_text(value)})

    def poly(self, value: Poly) -> str:
        return self.dumps(poly_json(value))

    def sequence(self, table: SequenceTable) -> str:
        return self.dumps(
            {"kind": table.kind.value, "values": [rat_text(v) for v in table]}
        )

    def audit(self, report: AuditReport) -> str:
        return self.dumps(report_to_dict(report))

    def registry(self, items: Sequence[IdentityItem]) -> str:
        data: List[Dict[str, Any]] = [
            {
                "id": item.id,
                "params": list(item.params),
                "kind": item.kind.value,
                "class": "verified" if item.verified else "audit",
                "restriction": item.restriction,
                "has_oracle": item.oracle is not None,
                "description": item.description,
            }
            for item in items
        ]
        return self.dumps(data)


# ---------------------------------------------------------------------------
# Report pillar
# ---------------------------------------------------------------------------


class Report(ABC):
    """Interface for persisting a rendered audit report."""

    @abstractmethod
    def write(self, document: str) -> None:
        """Persist a fully rendered document (a trailing newline is added)."""
        pass

    def write_report(self, report: AuditReport, fmt: Optional[Format] = None) -> str:
        """Render ``report`` (JSON by default), persist it and return the text."""
        document = (fmt or JSONFormat()).audit(report)
        self.write(document)
        return document


class InMemoryReport(Report):
    """Keeps written documents in memory; the last one is ``document``."""

    def __init__(self):
        self.documents: List[str] = []

    @property
    def document(self) -> Optional[str]:
        return self.documents[-1] if self.documents else None

    def write(self, document: str) -> None:
        self.documents.append(document + "\n")


class FileReport(Report):
    """Writes the report to ``path`` atomically (temp file, then replace)."""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def write(self, document: str) -> None:
        tmp_name = None
        try:
            with tempfile.NamedTemporaryFile(
                mode="w",
                dir=self.path.parent,
                delete=False,
                suffix=".tmp",
                encoding="utf-8",
                newline="\n",
            ) as tmp_file:
                tmp_file.write(document + "\n")
                tmp_name = tmp_file.name
            os.replace(tmp_name, self.path)
        except OSError as e:
            if tmp_name and os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise ReportWriteError(f"Failed to write report {self.path}: {e}") from e
        logger.info("Report written to %s", self.path)
