"""
Suite reports: pydantic models plus canonical JSON and Markdown renderers.
"""
from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field

from src import __version__
from src.utils.helpers import canonical_json, to_jsonable

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


class CheckResult(BaseModel):
    check_id: str
    status: Literal["pass", "fail", "skipped"]
    expected: Any = None
    actual: Any = None
    elapsed_ms: int = 0
    certificate: Optional[Any] = None
    note: Optional[str] = None


class Summary(BaseModel):
    passed: int = Field(0, serialization_alias="pass")
    failed: int = Field(0, serialization_alias="fail")
    skipped: int = 0


class SuiteReport(BaseModel):
    suite: str
    results: list[CheckResult]
    summary: Summary
    toolkit_version: str = __version__

    @classmethod
    def build(cls, suite: str, results: list[CheckResult]) -> SuiteReport:
        summary = Summary(
            passed=sum(r.status == PASS for r in results),
            failed=sum(r.status == FAIL for r in results),
            skipped=sum(r.status == SKIPPED for r in results),
        )
        return cls(suite=suite, results=results, summary=summary)

    @property
    def ok(self) -> bool:
        return self.summary.failed == 0


def report_payload(report: SuiteReport, verbose: bool = False) -> dict:
    results = []
    for r in report.results:
        item = {
            "check_id": r.check_id,
            "status": r.status,
            "expected": to_jsonable(r.expected),
            "actual": to_jsonable(r.actual),
        }
        if verbose:
            item["elapsed_ms"] = r.elapsed_ms
        if r.certificate is not None:
            item["certificate"] = to_jsonable(r.certificate)
        if r.note:
            item["note"] = r.note
        results.append(item)
    return {
        "suite": report.suite,
        "results": results,
        "summary": report.summary.model_dump(by_alias=True),
        "toolkit_version": report.toolkit_version,
    }


def render_json(report: SuiteReport, verbose: bool = False) -> str:
    """Canonical JSON; elapsed_ms only appears with verbose so output is reproducible."""
    return canonical_json(report_payload(report, verbose)) + "\n"


def _cell(value: Any) -> str:
    text = canonical_json(value).replace("\n", " ") if not isinstance(value, str) else value
    text = " ".join(text.split())
    return (text[:77] + "...") if len(text) > 80 else text


def render_markdown(report: SuiteReport, verbose: bool = False) -> str:
    s = report.summary
    lines = [
        f"# Verification report: {report.suite}",
        "",
        f"toolkit {report.toolkit_version}: {s.passed} pass, {s.failed} fail, {s.skipped} skipped",
        "",
        "| check | status | expected | actual |" + (" ms |" if verbose else ""),
        "|---|---|---|---|" + ("---|" if verbose else ""),
    ]
    for r in report.results:
        row = f"| `{r.check_id}` | {r.status} | {_cell(to_jsonable(r.expected))} | {_cell(to_jsonable(r.actual))} |"
        if verbose:
            row += f" {r.elapsed_ms} |"
        lines.append(row)

    by_id = {r.check_id: r for r in report.results}
    value_table = by_id.get("lemma2.value_table")
    if value_table and isinstance(value_table.certificate, dict):
        lines += ["", "## Gosset wall values on the dual vertices (n = 7)", ""]
        lines += ["| vertices | walls | values | expected |", "|---|---|---|---|"]
        for row in value_table.certificate.get("rows", []):
            lines.append(
                f"| {row['vertex_family']} | {row['wall_family']} | {row['values']} | {row['expected']} |"
            )

    table = by_id.get("thm3.reduction_table")
    if table and isinstance(table.certificate, dict):
        lines += ["", "## Reduction into D (n = 13)", ""]
        lines += ["| row | family | type | chain | matches |", "|---|---|---|---|---|"]
        for row in table.certificate.get("table", []):
            chain = " → ".join(row["chain"])
            lines.append(
                f"| {row['row']} | {row['family']} | {row['type_label']} | {chain} | "
                f"{'yes' if row['chain'] == row['expected_chain'] else 'no'} |"
            )

    notes = [f"- `{r.check_id}`: {r.note}" for r in report.results if r.note]
    if notes:
        lines += ["", "## Notes", "", *notes]
    return "\n".join(lines) + "\n"
