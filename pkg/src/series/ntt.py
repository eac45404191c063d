"""Number-theoretic-transform multiplication for truncated coefficient arrays.

Products are computed modulo several word-size NTT primes p = c*2^s + 1 < 2^30
and recombined with Garner's algorithm, either reduced modulo the target
modulus M or lifted to the symmetric range for exact integer coefficients.
All residues stay below 2^30, so every product of two residues fits in int64.
"""
import logging
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from ..utils.primes import is_prime, primitive_root
from .errors import TransformCapacityError
from .ring import CoefficientRing

logger = logging.getLogger(__name__)

PRIME_LIMIT = 1 << 30
MAX_LOG_SIZE = 23


@lru_cache(maxsize=None)
def ntt_primes(log_size: int, count: int) -> Tuple[Tuple[int, int], ...]:
    """
    NTT-friendly primes supporting transforms of length 2^log_size.

    Args:
        log_size: required two-adic order of p - 1
        count: number of primes wanted

    Returns:
        Tuple of (prime, primitive root) pairs, largest primes first
    """
    if log_size > MAX_LOG_SIZE:
        raise TransformCapacityError(f"transform length 2^{log_size} exceeds 2^{MAX_LOG_SIZE}")
    found: List[Tuple[int, int]] = []
    c = (PRIME_LIMIT - 1) >> log_size
    while len(found) < count and c > 0:
        p = (c << log_size) + 1
        if is_prime(p):
            found.append((p, primitive_root(p)))
        c -= 1
    if len(found) < count:
        raise TransformCapacityError(
            f"only {len(found)} NTT primes below 2^30 support length 2^{log_size}, {count} needed"
        )
    return tuple(found)


class _Plan:
    """Bit-reversal permutation and twiddle tables for one (prime, size)."""

    def __init__(self, prime: int, generator: int, size: int):
        self.prime = prime
        self.size = size
        bits = size.bit_length() - 1
        idx = np.arange(size, dtype=np.int64)
        rev = np.zeros(size, dtype=np.int64)
        for b in range(bits):
            rev |= ((idx >> b) & 1) << (bits - 1 - b)
        self.bitrev = rev

        omega = pow(generator, (prime - 1) // size, prime)
        self.forward = self._powers(omega)
        self.inverse = self._powers(pow(omega, -1, prime))
        self.size_inverse = pow(size, -1, prime)

    def _powers(self, root: int) -> np.ndarray:
        table = np.ones(1, dtype=np.int64)
        half = max(1, self.size // 2)
        while len(table) < half:
            step = pow(root, len(table), self.prime)
            table = np.concatenate((table, table * step % self.prime))
        return table


@lru_cache(maxsize=12)
def _plan(prime: int, generator: int, size: int) -> _Plan:
    logger.debug("Building NTT plan p=%d size=%d", prime, size)
    return _Plan(prime, generator, size)


def _transform(values: np.ndarray, plan: _Plan, inverse: bool) -> np.ndarray:
    p = plan.prime
    n = plan.size
    table = plan.inverse if inverse else plan.forward
    a = values[plan.bitrev]
    half = 1
    while half < n:
        twiddles = table[:: n // (2 * half)][:half]
        blocks = a.reshape(-1, 2 * half)
        u = blocks[:, :half]
        v = blocks[:, half:] * twiddles % p
        a = np.concatenate(((u + v) % p, (u - v) % p), axis=1).reshape(-1)
        half *= 2
    if inverse:
        a = a * plan.size_inverse % p
    return a


def _convolve_prime(x: np.ndarray, y: np.ndarray, length: int, prime: int, generator: int, size: int) -> np.ndarray:
    plan = _plan(prime, generator, size)
    fx = np.zeros(size, dtype=np.int64)
    fy = np.zeros(size, dtype=np.int64)
    fx[: len(x)] = x
    fy[: len(y)] = y
    product = _transform(fx, plan, False) * _transform(fy, plan, False) % prime
    return _transform(product, plan, True)[:length]


def _residues(values: np.ndarray, prime: int) -> np.ndarray:
    if values.dtype == object:
        return np.mod(values, prime).astype(np.int64)
    return np.mod(values, prime)


def _garner_digits(residues: List[np.ndarray], primes: List[int]) -> List[np.ndarray]:
    """Mixed-radix digits d_i with value = d_0 + d_1*p_0 + d_2*p_0*p_1 + ..."""
    digits = [residues[0]]
    for i in range(1, len(primes)):
        p = primes[i]
        acc = np.zeros_like(residues[i])
        radix = 1
        for j in range(i):
            acc = (acc + digits[j] * (radix % p)) % p
            radix *= primes[j]
        inv = pow(radix % p, -1, p)
        digits.append((residues[i] - acc) % p * inv % p)
    return digits


def convolve(x: np.ndarray, y: np.ndarray, length: int, ring: CoefficientRing) -> np.ndarray:
    """
    First `length` coefficients of the product of two coefficient arrays.

    Args:
        x, y: coefficient arrays in the ring's storage format
        length: number of product coefficients wanted
        ring: coefficient ring of both operands

    Returns:
        Coefficient array of the given length in the ring's storage format
    """
    x = x[:length]
    y = y[:length]
    out_len = len(x) + len(y) - 1
    if len(x) == 0 or len(y) == 0:
        return ring.zeros(length)
    size = 1
    while size < out_len:
        size *= 2
    log_size = size.bit_length() - 1

    if ring.is_exact:
        max_x = int(np.abs(x).max())
        max_y = int(np.abs(y).max())
        bound = 2 * max_x * max_y * min(len(x), len(y)) + 1
    else:
        m = ring.modulus - 1
        bound = m * m * min(len(x), len(y)) + 1

    count = 1
    product = 1
    # Grow the prime set until its product exceeds the coefficient bound.
    while True:
        primes = ntt_primes(log_size, count)
        product = 1
        for p, _ in primes:
            product *= p
        if product > bound:
            break
        count += 1

    residues = [
        _convolve_prime(_residues(x, p), _residues(y, p), min(length, out_len), p, g, size)
        for p, g in primes
    ]
    digits = _garner_digits(residues, [p for p, _ in primes])

    out = ring.zeros(length)
    if ring.is_exact:
        value = np.zeros(len(digits[0]), dtype=object)
        radix = 1
        for digit, (p, _) in zip(digits, primes):
            value = value + digit.astype(object) * radix
            radix *= p
        half = product // 2
        value = np.where(value > half, value - product, value)
        out[: len(value)] = value
    else:
        modulus = ring.modulus
        value = np.zeros(len(digits[0]), dtype=np.int64)
        radix = 1
        for digit, (p, _) in zip(digits, primes):
            value = (value + digit * (radix % modulus)) % modulus
            radix *= p
        out[: len(value)] = value
    return out
