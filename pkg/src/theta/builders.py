"""
Constructors for the theta functions and q-products the congruence checks use.

    phi(q) = sum_{n in Z} q^(n^2)
    psi(q) = sum_{n >= 0} q^(n(n+1)/2)
    S(q)   = sum_{n >= 1} q^(n^2)
    (q^k; q^k)_inf, via Euler's pentagonal-number theorem
    B(q)   = (q;q)(q^6;q^6)^2 / ((q^2;q^2)(q^3;q^3))

Builders are memoized per (ring, T); the returned series are immutable, so
sharing them between threads and callers is safe.
"""
import logging
import math
from functools import lru_cache
from typing import Sequence, Tuple

from ..series import CoefficientRing, Series, invert, mul, one, power

logger = logging.getLogger(__name__)

# (k, e) pairs: B(q) = prod (q^k; q^k)_inf^e
B_FACTORS: Tuple[Tuple[int, int], ...] = ((1, 1), (6, 2), (2, -1), (3, -1))


def _from_support(ring: CoefficientRing, trunc: int, support) -> Series:
    out = ring.zeros(trunc + 1)
    for exponent, value in support:
        out[exponent] = ring.reduce(out[exponent] + value)
    return Series(ring, out)


@lru_cache(maxsize=64)
def phi_series(ring: CoefficientRing, trunc: int) -> Series:
    """phi(q): 1 at q^0, 2 at every positive square."""
    root = math.isqrt(trunc)
    return _from_support(ring, trunc, [(0, 1)] + [(n * n, 2) for n in range(1, root + 1)])


@lru_cache(maxsize=64)
def psi_series(ring: CoefficientRing, trunc: int) -> Series:
    support = []
    n = 0
    while n * (n + 1) // 2 <= trunc:
        support.append((n * (n + 1) // 2, 1))
        n += 1
    return _from_support(ring, trunc, support)


@lru_cache(maxsize=64)
def s_series(ring: CoefficientRing, trunc: int) -> Series:
    """S(q) = (phi(q) - 1)/2, built directly from the positive squares."""
    root = math.isqrt(trunc)
    return _from_support(ring, trunc, [(n * n, 1) for n in range(1, root + 1)])


@lru_cache(maxsize=64)
def pochhammer_series(k: int, ring: CoefficientRing, trunc: int) -> Series:
    """
    (q^k; q^k)_inf truncated to q^trunc.

    Uses (q;q)_inf = sum_j (-1)^j q^(j(3j-1)/2) over all integers j, with the
    exponents scaled by k.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    support = [(0, 1)]
    j = 1
    while k * (j * (3 * j - 1) // 2) <= trunc:
        sign = -1 if j % 2 else 1
        support.append((k * (j * (3 * j - 1) // 2), sign))
        upper = k * (j * (3 * j + 1) // 2)
        if upper <= trunc:
            support.append((upper, sign))
        j += 1
    return _from_support(ring, trunc, support)


def eta_quotient(factors: Sequence[Tuple[int, int]], ring: CoefficientRing, trunc: int) -> Series:
    """
    Product of (q^k; q^k)_inf^e over the given (k, e) pairs.

    Negative exponents go through invert(); every factor has constant term 1,
    so this never fails in any ring.
    """
    result = one(ring, trunc)
    for k, e in factors:
        base = pochhammer_series(k, ring, trunc)
        if e < 0:
            base = invert(base)
        result = mul(result, power(base, abs(e)))
    return result


@lru_cache(maxsize=32)
def b_series(ring: CoefficientRing, trunc: int) -> Series:
    """B(q) = (q;q)(q^6;q^6)^2 / ((q^2;q^2)(q^3;q^3))."""
    logger.debug("Building B(q) over %s to T=%d", ring, trunc)
    return eta_quotient(B_FACTORS, ring, trunc)
