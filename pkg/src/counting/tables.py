"""Coefficient tables for pbar_k(n) and r_k(n), with a process-wide cache."""
import logging
import threading
import time
from dataclasses import dataclass, replace
from typing import Callable, Dict, Tuple

from ..series import CoefficientRing, Series, alternate_sign, coeff_at, invert, power
from ..theta import phi_series
from .oracles import BudgetError

logger = logging.getLogger(__name__)

EXACT_TABLE_LIMIT = 5000
# r_k(n) grows polynomially, so exact squares tables may be much longer.
EXACT_SQUARES_LIMIT = 200_000
MODULAR_TABLE_LIMIT = 1_300_000


def check_table_budget(ring: CoefficientRing, trunc: int, exact_limit: int = EXACT_TABLE_LIMIT) -> None:
    """
    Raises:
        BudgetError: trunc exceeds the limit for the ring
    """
    limit = exact_limit if ring.is_exact else MODULAR_TABLE_LIMIT
    if trunc < 0:
        raise ValueError(f"trunc must be non-negative, got {trunc}")
    if trunc > limit:
        raise BudgetError(f"tables over {ring} are limited to T <= {limit}, got {trunc}")


@dataclass(frozen=True)
class OverpartitionTable:
    """pbar_k(0..trunc): coefficients of 1/phi(-q)^k."""

    k: int
    ring: CoefficientRing
    values: Series

    @property
    def trunc(self) -> int:
        return self.values.trunc

    def __getitem__(self, n: int) -> int:
        return coeff_at(self.values, n)

    def truncated(self, trunc: int) -> "OverpartitionTable":
        return replace(self, values=self.values.truncate(trunc))


@dataclass(frozen=True)
class SquaresTable:
    """r_k(0..trunc): coefficients of phi(q)^k."""

    k: int
    ring: CoefficientRing
    values: Series

    @property
    def trunc(self) -> int:
        return self.values.trunc

    def __getitem__(self, n: int) -> int:
        return coeff_at(self.values, n)

    def truncated(self, trunc: int) -> "SquaresTable":
        return replace(self, values=self.values.truncate(trunc))


def overpartition_series(k: int, ring: CoefficientRing, trunc: int) -> OverpartitionTable:
    """
    Table of pbar_k(n) for n <= trunc.

    Computed as invert(phi(-q))^k; the inverse of the lacunary phi(-q) runs
    on its sparse support.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    check_table_budget(ring, trunc)
    start = time.perf_counter()
    base = invert(alternate_sign(phi_series(ring, trunc)))
    values = power(base, k)
    logger.info(
        "Built overpartition table k=%d over %s to T=%d in %.2fs",
        k, ring, trunc, time.perf_counter() - start,
    )
    return OverpartitionTable(k, ring, values)


def rk_series(k: int, ring: CoefficientRing, trunc: int) -> SquaresTable:
    """Table of r_k(n) for n <= trunc, as phi(q)^k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    check_table_budget(ring, trunc, EXACT_SQUARES_LIMIT)
    start = time.perf_counter()
    values = power(phi_series(ring, trunc), k)
    logger.info("Built r_%d table over %s to T=%d in %.2fs", k, ring, trunc, time.perf_counter() - start)
    return SquaresTable(k, ring, values)


_Key = Tuple[str, int, CoefficientRing]


class TableCache:
    """
    Builds each table once and hands out truncations of the largest one built.

    One lock per (kind, k, ring): concurrent callers asking for the same table
    wait for a single construction, different tables build in parallel.
    """

    def __init__(self):
        self._guard = threading.Lock()
        self._locks: Dict[_Key, threading.Lock] = {}
        self._tables: Dict[_Key, object] = {}

    def _lock_for(self, key: _Key) -> threading.Lock:
        with self._guard:
            lock = self._locks.get(key)
            if lock is None:
                lock = self._locks[key] = threading.Lock()
            return lock

    def _get(self, kind: str, k: int, ring: CoefficientRing, trunc: int, factory: Callable):
        key = (kind, k, ring)
        with self._lock_for(key):
            table = self._tables.get(key)
            if table is None or table.trunc < trunc:
                table = factory(k, ring, trunc)
                self._tables[key] = table
        return table.truncated(trunc) if table.trunc > trunc else table

    def overpartitions(self, k: int, ring: CoefficientRing, trunc: int) -> OverpartitionTable:
        return self._get("overpartition", k, ring, trunc, overpartition_series)

    def squares(self, k: int, ring: CoefficientRing, trunc: int) -> SquaresTable:
        return self._get("squares", k, ring, trunc, rk_series)

    def clear(self) -> None:
        with self._guard:
            self._locks.clear()
            self._tables.clear()


default_cache = TableCache()
