"""
Brute-force oracles for pbar_k(n) and r_k(n).

Neither oracle touches series inversion or theta powers: pbar_k comes from
expanding prod_j ((1 + q^j)/(1 - q^j))^k factor by factor, r_k from counting
signed lattice points. They exist to cross-check the series tables.
"""
import logging
import math
from functools import lru_cache

import numpy as np

logger = logging.getLogger(__name__)

OVERPARTITION_ORACLE_LIMIT = 2000
RK_ORACLE_LIMIT = 5000
RK_ORACLE_MAX_K = 8

# Oracle tables are built in blocks so nearby requests share one table.
_BLOCK = 400


class BudgetError(RuntimeError):
    """A request exceeds the desk-scale bound documented for it."""


def _geometric(values: np.ndarray, j: int) -> np.ndarray:
    """Multiply by 1/(1 - q^j): running sums along each residue class mod j."""
    n = len(values)
    rows = -(-n // j)
    padded = np.zeros(rows * j, dtype=object)
    padded[:n] = values
    return np.cumsum(padded.reshape(rows, j), axis=0).reshape(-1)[:n]


@lru_cache(maxsize=16)
def overpartition_oracle_table(k: int, limit: int) -> tuple:
    """
    pbar_k(0..limit) as exact integers, expanding the product one factor at a time.

    Raises:
        BudgetError: limit above OVERPARTITION_ORACLE_LIMIT
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if limit > OVERPARTITION_ORACLE_LIMIT:
        raise BudgetError(f"overpartition oracle is limited to n <= {OVERPARTITION_ORACLE_LIMIT}, got {limit}")
    table = np.zeros(limit + 1, dtype=object)
    table[0] = 1
    for j in range(1, limit + 1):
        for _ in range(k):
            table[j:] = table[j:] + table[:-j]
            table = _geometric(table, j)
    logger.debug("Expanded overpartition product k=%d to n=%d", k, limit)
    return tuple(int(v) for v in table)


def overpartition_oracle(k: int, n: int) -> int:
    """pbar_k(n) by direct product expansion."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > OVERPARTITION_ORACLE_LIMIT:
        raise BudgetError(f"overpartition oracle is limited to n <= {OVERPARTITION_ORACLE_LIMIT}, got {n}")
    limit = min(OVERPARTITION_ORACLE_LIMIT, -(-(n + 1) // _BLOCK) * _BLOCK)
    return overpartition_oracle_table(k, limit)[n]


@lru_cache(maxsize=None)
def _lattice_count(k: int, n: int) -> int:
    if k == 0:
        return 1 if n == 0 else 0
    total = _lattice_count(k - 1, n)
    x = 1
    while x * x <= n:
        total += 2 * _lattice_count(k - 1, n - x * x)
        x += 1
    return total


def rk_oracle(k: int, n: int) -> int:
    """
    Number of ordered signed k-tuples (x_1..x_k) with sum x_i^2 = n.

    Raises:
        BudgetError: k > RK_ORACLE_MAX_K or n > RK_ORACLE_LIMIT
    """
    if k < 1 or n < 0:
        raise ValueError(f"need k >= 1 and n >= 0, got k={k}, n={n}")
    if k > RK_ORACLE_MAX_K or n > RK_ORACLE_LIMIT:
        raise BudgetError(
            f"lattice oracle is limited to k <= {RK_ORACLE_MAX_K}, n <= {RK_ORACLE_LIMIT}; got k={k}, n={n}"
        )
    return _lattice_count(k, n)


def r2_lattice(n: int) -> int:
    """r2(n) by enumerating x and testing n - x^2."""
    if n < 0:
        return 0
    count = 0
    root = math.isqrt(n)
    for x in range(-root, root + 1):
        rest = n - x * x
        y = math.isqrt(rest)
        if y * y == rest:
            count += 1 if y == 0 else 2
    return count
