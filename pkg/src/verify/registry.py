"""Selects registered checks by id pattern and runs them on a worker pool."""
import fnmatch
import logging
import os
import re
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from ..counting import BudgetError
from .catalog import CATALOG, TheoremCheck
from .context import SuiteContext
from .profiles import get_profile
from .report import VerificationReport

logger = logging.getLogger(__name__)

THREADS_ENV = "QSC_THREADS"


def natural_key(check_id: str) -> tuple:
    """Sort key that orders T2.10 after T2.9."""
    return tuple(int(part) if part.isdigit() else part for part in re.split(r"(\d+)", check_id))


def match_ids(pattern: Optional[str]) -> List[str]:
    """Registered ids matching any of the comma-separated glob patterns; None or '*' selects all."""
    ids = sorted(CATALOG, key=natural_key)
    if pattern is None:
        return ids
    globs = [p.strip() for p in pattern.split(",") if p.strip()]
    return [i for i in ids if any(fnmatch.fnmatchcase(i, g) for g in globs)]


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        count = int(raw)
        if count < 1:
            raise ValueError(raw)
        return count
    except ValueError:
        logger.warning("Ignoring %s=%r, running single-threaded", THREADS_ENV, raw)
        return 1


def run_check(check: TheoremCheck, ctx: SuiteContext, timings: bool = False) -> VerificationReport:
    start = time.perf_counter()
    try:
        report = check(ctx)
    except BudgetError as e:
        logger.warning("%s skipped: %s", check.id, e)
        report = VerificationReport(id=check.id, status="skipped-budget", kind=check.kind, detail=str(e))
    elapsed = (time.perf_counter() - start) * 1000
    logger.info("%s: %s (%d checked, %.0f ms)", check.id, report.status, report.checked_count, elapsed)
    if timings:
        report = report.model_copy(update={"elapsed_ms": round(elapsed, 3)})
    return report


def run_registry(
    pattern: Optional[str] = None,
    profile: str = "default",
    threads: Optional[int] = None,
    timings: bool = False,
    ctx: Optional[SuiteContext] = None,
) -> List[VerificationReport]:
    """
    Run every check whose id matches, ordered by id regardless of completion order.

    Shared tables are built once per process; checks read them concurrently.
    """
    ctx = ctx or SuiteContext(get_profile(profile))
    selected = [CATALOG[i] for i in match_ids(pattern)]
    workers = threads or thread_count()
    logger.info("Running %d checks with profile %r on %d thread(s)", len(selected), ctx.profile.name, workers)
    if workers == 1:
        reports = [run_check(c, ctx, timings) for c in selected]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda c: run_check(c, ctx, timings), selected))
    return sorted(reports, key=lambda r: natural_key(r.id))
