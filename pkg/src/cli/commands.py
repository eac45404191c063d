"""
Command implementations: coeff, verify, list and report.

Every command takes a RunConfig and returns an exit code:
0 success, 1 verification failure, 2 usage error, 3 budget rejection.
"""
import csv
import io
import json
import logging
import sys
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from ..counting import BudgetError, overpartition_series, rk_series
from ..series import EXACT, CoefficientRing, SeriesError
from ..verify import (
    CATALOG,
    ProfileError,
    ReportDocument,
    Summary,
    VerificationReport,
    match_ids,
    natural_key,
    run_registry,
)
from .config import EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE, RunConfig

logger = logging.getLogger(__name__)


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(output, "w", newline="") as f:
        f.write(text)
    logger.info("Wrote %s", output)


def _dump_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def cmd_coeff(config: RunConfig) -> int:
    """Print pbar_k(n) or r_k(n) for n <= limit, exact or mod M."""
    ring = CoefficientRing.modular(config.modulus) if config.modulus else EXACT
    try:
        build = overpartition_series if config.fn == "op" else rk_series
        table = build(config.k, ring, config.limit)
    except BudgetError as e:
        logger.error("%s", e)
        return EXIT_BUDGET
    except SeriesError as e:
        logger.error("%s", e)
        return EXIT_USAGE

    values = table.values.to_list()
    if config.fmt == "json":
        # big integers as decimal strings
        doc = {
            "schema": 1,
            "fn": config.fn,
            "k": config.k,
            "modulus": config.modulus,
            "values": [{"n": n, "value": str(v)} for n, v in enumerate(values)],
        }
        text = _dump_json(doc)
    elif config.fmt == "text":
        width = len(str(len(values) - 1))
        text = "".join(f"{n:>{width}}  {v}\n" for n, v in enumerate(values))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "value"])
        writer.writerows((n, str(v)) for n, v in enumerate(values))
        text = buf.getvalue()
    _emit(text, config.output)
    return EXIT_OK


def _report_line(report: VerificationReport) -> str:
    line = f"{report.id:<10} {report.status:<15} checked={report.checked_count}"
    if report.bound is not None:
        line += f" bound={report.bound}"
    ce = report.first_counterexample
    if ce is not None:
        line += f" n={ce.n} observed={ce.observed} expected={ce.expected}"
    if report.elapsed_ms is not None:
        line += f" {report.elapsed_ms:.0f}ms"
    return line


def _render_reports(reports: List[VerificationReport], fmt: str, profile: Optional[str], verbose: bool) -> str:
    if fmt == "json":
        return _dump_json(ReportDocument(profile=profile, reports=reports).to_dict())
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "status", "checked_count", "bound", "n", "observed", "expected", "elapsed_ms"])
        for r in reports:
            ce = r.first_counterexample
            writer.writerow([
                r.id, r.status, r.checked_count,
                "" if r.bound is None else r.bound,
                *(("", "", "") if ce is None else (ce.n, ce.observed, ce.expected)),
                "" if r.elapsed_ms is None else r.elapsed_ms,
            ])
        return buf.getvalue()
    lines = []
    for r in reports:
        lines.append(_report_line(r))
        if verbose or r.status == "fail":
            lines.extend(f"    {leg}" for leg in r.legs)
            if r.detail:
                lines.append(f"    {r.detail}")
    summary = Summary.of(reports)
    lines.append(
        f"{summary.total} checks: {summary.passed} passed, {summary.failed} failed, "
        f"{summary.skipped} skipped, {summary.info} informational"
    )
    return "\n".join(lines) + "\n"


def cmd_verify(config: RunConfig) -> int:
    """Run the selected checks; exit 1 if any fails."""
    ids = match_ids(config.filter)
    if not ids:
        logger.error("No registered check matches %r", config.filter)
        return EXIT_USAGE
    try:
        reports = run_registry(config.filter, config.profile, timings=config.timings)
    except ProfileError as e:
        logger.error("%s", e)
        return EXIT_USAGE
    _emit(_render_reports(reports, config.fmt, config.profile, config.verbose), config.output)
    return EXIT_FAILED if any(r.status == "fail" for r in reports) else EXIT_OK


def cmd_list(config: RunConfig) -> int:
    """Print the catalog: id, kind, claim and requested bounds."""
    checks = [CATALOG[i] for i in match_ids(config.filter)]
    if config.fmt == "json":
        rows = [
            {"id": c.id, "kind": c.kind, "anchor": c.anchor, "defaults": c.defaults, "expectation": c.expectation}
            for c in checks
        ]
        text = _dump_json({"schema": 1, "checks": rows})
    elif config.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "kind", "anchor", "defaults"])
        writer.writerows((c.id, c.kind, c.anchor, c.defaults) for c in checks)
        text = buf.getvalue()
    else:
        text = "".join(f"{c.id:<10} {c.kind:<24} {c.anchor}  [{c.defaults}]\n" for c in checks)
    _emit(text, config.output)
    return EXIT_OK


def _merge_rank(report: VerificationReport) -> Tuple[int, bool]:
    bound = -1 if report.bound is None else report.bound
    return bound, report.status != "skipped-budget"


def merge_reports(documents: List[ReportDocument]) -> List[VerificationReport]:
    """
    One report per id.

    The larger bound wins; on equal bounds a report that ran beats a
    skipped-budget one, and after that the later document wins.
    """
    merged: Dict[str, VerificationReport] = {}
    for doc in documents:
        for report in doc.reports:
            current = merged.get(report.id)
            if current is None or _merge_rank(report) >= _merge_rank(current):
                merged[report.id] = report
    return [merged[i] for i in sorted(merged, key=natural_key)]



def load_document(path: str) -> ReportDocument:
    with open(path, "r") as f:
        return ReportDocument.model_validate(json.load(f))


def cmd_report(config: RunConfig) -> int:
    """Merge JSON report files into one summary."""
    documents = []
    for path in config.paths:
        try:
            documents.append(load_document(path))
        except (OSError, json.JSONDecodeError, ValidationError) as e:
            logger.error("Cannot read report %s: %s", path, e)
            return EXIT_USAGE
    reports = merge_reports(documents)
    summary = Summary.of(reports)
    if config.fmt == "json":
        text = _dump_json(ReportDocument(summary=summary, reports=reports).to_dict())
    else:
        text = _render_reports(reports, "csv" if config.fmt == "csv" else "text", None, config.verbose)
    _emit(text, config.output)
    return EXIT_OK


COMMANDS = {
    "coeff": cmd_coeff,
    "verify": cmd_verify,
    "list": cmd_list,
    "report": cmd_report,
}
