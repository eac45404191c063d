"""
Elementary arithmetic for the counting functions: square tests, the Legendre
symbol, r2+ and the closed-form residue classifiers for overpartition k-tuples.
"""
import math
from typing import NamedTuple

from ..utils.primes import is_odd_prime


class ClassifierDomainError(ValueError):
    """A classifier was asked about n outside its stated range (n >= 1)."""


class NotOddPrimeError(ValueError):
    """The Legendre symbol was requested modulo something other than an odd prime."""


class PredictedResidue(NamedTuple):
    residue: int
    modulus: int


def is_square(n: int) -> bool:
    if n < 0:
        return False
    root = math.isqrt(n)
    return root * root == n


def is_twice_square(n: int) -> bool:
    return n >= 0 and n % 2 == 0 and is_square(n // 2)


def chi(n: int) -> int:
    """1 if n is a perfect square, else 0."""
    return 1 if is_square(n) else 0


def r2_plus(n: int) -> int:
    """Number of (i, j) with i, j >= 1 and i^2 + j^2 = n."""
    if n < 1:
        raise ClassifierDomainError(f"r2+ is defined for n >= 1, got {n}")
    count = 0
    i = 1
    while i * i < n:
        if is_square(n - i * i):
            count += 1
        i += 1
    return count


def r2_divisor_sum(n: int) -> int:
    """r2(n) = 4 * sum over odd d | n of (-1)^((d-1)/2), for n >= 1."""
    if n < 1:
        raise ClassifierDomainError(f"the divisor-sum form of r2 needs n >= 1, got {n}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            for e in {d, n // d}:
                if e % 2 == 1:
                    total += 1 if e % 4 == 1 else -1
        d += 1
    return 4 * total


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if not is_odd_prime(p):
        raise NotOddPrimeError(f"Legendre symbol needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def m_exponent(k: int) -> int:
    """4 when k = 0 or 3 (mod 4), otherwise 3."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return 4 if k % 4 in (0, 3) else 3


def mod2m_predicted(k: int, n: int) -> PredictedResidue:
    """
    Residue of pbar_k(n) modulo 2^m(k).

    -2k for even squares, 2k for odd squares, 2k(k+1) for twice squares,
    0 otherwise.
    """
    if n < 1:
        raise ClassifierDomainError(f"the mod 2^m(k) classification covers n >= 1, got {n}")
    modulus = 2 ** m_exponent(k)
    if is_square(n):
        residue = -2 * k if n % 2 == 0 else 2 * k
    elif is_twice_square(n):
        residue = 2 * k * (k + 1)
    else:
        residue = 0
    return PredictedResidue(residue % modulus, modulus)


def two_adic_split(k: int) -> tuple:
    """k = 2^m * r with r odd; returns (m, r)."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    m = 0
    while k % 2 == 0:
        k //= 2
        m += 1
    return m, k


def keister_sellers_predicted(k: int, n: int) -> PredictedResidue:
    """Residue of pbar_k(n) modulo 2^(m+2), where k = 2^m * odd."""
    if n < 1:
        raise ClassifierDomainError(f"the 2^(m+2) classification covers n >= 1, got {n}")
    m, _ = two_adic_split(k)
    modulus = 2 ** (m + 2)
    if is_square(n) or is_twice_square(n):
        return PredictedResidue(2 ** (m + 1), modulus)
    return PredictedResidue(0, modulus)


def r2_mod8_predicted(n: int) -> int:
    if n < 1:
        raise ClassifierDomainError(f"the r2 mod 8 classification covers n >= 1, got {n}")
    return 4 if is_square(n) or is_twice_square(n) else 0
