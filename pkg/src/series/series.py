"""
Truncated power series over ZZ or Z/M.

A Series with trunc T keeps the coefficients of q^0..q^T. Every binary
operation truncates to the smaller of its operands' truncation orders.
Series are immutable: their coefficient arrays are marked read-only and every
operation returns a new Series.
"""
import logging
import math
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from . import ntt
from .errors import OutOfRangeError, RingMismatchError
from .ring import CoefficientRing

logger = logging.getLogger(__name__)

INT64_MAX = 2 ** 63 - 1

# Products shorter than this always use the schoolbook kernel.
SCHOOLBOOK_LENGTH = 128
# An operand with at most SPARSE_FACTOR * log2(length) non-zeros counts as lacunary.
SPARSE_FACTOR = 12

MUL_METHODS = ("auto", "schoolbook", "ntt")
INVERT_METHODS = ("auto", "recurrence", "newton")


@dataclass(frozen=True, eq=False)
class Series:
    """A truncated power series: coefficient i belongs to q^i, for i = 0..trunc."""

    ring: CoefficientRing
    coeffs: np.ndarray

    def __post_init__(self):
        if self.coeffs.ndim != 1 or len(self.coeffs) == 0:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs.setflags(write=False)

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self) -> str:
        head = ", ".join(str(int(c)) for c in self.coeffs[:8])
        more = ", ..." if self.trunc >= 8 else ""
        return f"Series({self.ring}, T={self.trunc}, [{head}{more}])"

    def __getitem__(self, n: int) -> int:
        return coeff_at(self, n)

    def to_list(self) -> list:
        return [int(c) for c in self.coeffs]

    def truncate(self, trunc: int) -> "Series":
        """Drop every coefficient above q^trunc (trunc may not exceed the current one)."""
        if trunc < 0 or trunc > self.trunc:
            raise OutOfRangeError(f"cannot truncate a series with T={self.trunc} to T={trunc}")
        return Series(self.ring, self.coeffs[: trunc + 1])

    def shift(self, k: int) -> "Series":
        """Multiply by q^k, keeping the truncation order."""
        if k < 0:
            raise OutOfRangeError(f"shift must be non-negative, got {k}")
        out = self.ring.zeros(self.trunc + 1)
        if k <= self.trunc:
            out[k:] = self.coeffs[: self.trunc + 1 - k]
        return Series(self.ring, out)

    def scale(self, c: int) -> "Series":
        c = int(c)
        if self.ring.is_exact:
            return Series(self.ring, self.coeffs * c)
        m = self.ring.modulus
        return Series(self.ring, self.coeffs * (c % m) % m)

    def __add__(self, other: "Series") -> "Series":
        return add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return sub(self, other)

    def __neg__(self) -> "Series":
        return self.scale(-1)

    def __mul__(self, other: Union["Series", int]) -> "Series":
        if isinstance(other, Series):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: int) -> "Series":
        return self.scale(other)

    def __pow__(self, e: int) -> "Series":
        return power(self, e)


@dataclass(frozen=True)
class SeriesComparison:
    """Outcome of series_equal; truthy exactly when the series agree."""

    equal: bool
    trunc: int
    first_mismatch: Optional[int] = None
    left: Optional[int] = None
    right: Optional[int] = None

    def __bool__(self) -> bool:
        return self.equal

    def describe(self) -> str:
        if self.equal:
            return f"equal to T={self.trunc}"
        return f"first mismatch at q^{self.first_mismatch}: {self.left} != {self.right}"


def _check_same_ring(a: Series, b: Series) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"operands live in different rings: {a.ring} vs {b.ring}")


def from_coefficients(ring: CoefficientRing, values: Iterable) -> Series:
    """Series whose coefficients are the given values, trunc = len(values) - 1."""
    return Series(ring, ring.normalize(values))


def make_series(ring: CoefficientRing, terms: Sequence[Tuple[int, int]], trunc: int) -> Series:
    """
    Build a series from sparse (exponent, value) terms.

    Raises:
        OutOfRangeError: an exponent lies outside 0..trunc
        ValueError: an exponent is repeated
    """
    if trunc < 0:
        raise OutOfRangeError(f"trunc must be non-negative, got {trunc}")
    out = ring.zeros(trunc + 1)
    seen = set()
    for exponent, value in terms:
        if exponent < 0 or exponent > trunc:
            raise OutOfRangeError(f"exponent {exponent} outside 0..{trunc}")
        if exponent in seen:
            raise ValueError(f"exponent {exponent} given twice")
        seen.add(exponent)
        out[exponent] = ring.reduce(value)
    return Series(ring, out)


def one(ring: CoefficientRing, trunc: int) -> Series:
    return make_series(ring, [(0, 1)], trunc)


def zero(ring: CoefficientRing, trunc: int) -> Series:
    return make_series(ring, [], trunc)


def add(a: Series, b: Series) -> Series:
    _check_same_ring(a, b)
    n = min(a.trunc, b.trunc) + 1
    out = a.coeffs[:n] + b.coeffs[:n]
    if not a.ring.is_exact:
        out %= a.ring.modulus
    return Series(a.ring, out)


def sub(a: Series, b: Series) -> Series:
    _check_same_ring(a, b)
    n = min(a.trunc, b.trunc) + 1
    out = a.coeffs[:n] - b.coeffs[:n]
    if not a.ring.is_exact:
        out %= a.ring.modulus
    return Series(a.ring, out)


def _reduction_period(modulus: int) -> int:
    """How many (M-1)^2-sized terms an int64 accumulator below M can absorb."""
    return max(1, INT64_MAX // ((modulus - 1) ** 2) - 1)


def _schoolbook(x: np.ndarray, y: np.ndarray, length: int, ring: CoefficientRing) -> np.ndarray:
    x = x[:length]
    y = y[:length]
    nx = np.flatnonzero(x)
    ny = np.flatnonzero(y)
    if len(nx) > len(ny):
        x, y, nx = y, x, ny
    out = ring.zeros(length)
    if ring.is_exact:
        for i in nx:
            out[i:] += x[i] * y[: length - i]
        return out

    m = ring.modulus
    period = _reduction_period(m)
    pending = 0
    for i in nx:
        out[i:] += x[i] * y[: length - i]
        pending += 1
        if pending >= period:
            out %= m
            pending = 0
    return out % m


def _is_lacunary(values: np.ndarray, length: int) -> bool:
    return np.count_nonzero(values) <= SPARSE_FACTOR * max(1.0, math.log2(max(length, 2)))


def _mul_arrays(x: np.ndarray, y: np.ndarray, length: int, ring: CoefficientRing, method: str) -> np.ndarray:
    if method == "auto":
        short = length < SCHOOLBOOK_LENGTH
        method = "schoolbook" if short or _is_lacunary(x[:length], length) or _is_lacunary(y[:length], length) else "ntt"
    if method == "schoolbook":
        return _schoolbook(x, y, length, ring)
    if method == "ntt":
        return ntt.convolve(x, y, length, ring)
    raise ValueError(f"unknown multiplication method {method!r}; expected one of {MUL_METHODS}")


def mul(a: Series, b: Series, method: str = "auto") -> Series:
    """
    Cauchy product truncated to min(Ta, Tb).

    Args:
        a, b: operands over the same ring
        method: "schoolbook", "ntt", or "auto" (schoolbook for short or
            lacunary operands, NTT otherwise); all methods agree exactly
    """
    _check_same_ring(a, b)
    length = min(a.trunc, b.trunc) + 1
    return Series(a.ring, _mul_arrays(a.coeffs, b.coeffs, length, a.ring, method))


def power(a: Series, e: int, method: str = "auto") -> Series:
    """a^e by repeated squaring; a^0 is the series 1."""
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    result = one(a.ring, a.trunc)
    base = a
    while e:
        if e & 1:
            result = mul(result, base, method)
        e >>= 1
        if e:
            base = mul(base, base, method)
    return result


def _dot(u: np.ndarray, v: np.ndarray, ring: CoefficientRing) -> Any:
    if ring.is_exact:
        return np.dot(u, v)
    m = ring.modulus
    period = _reduction_period(m)
    if len(u) <= period:
        return int(np.dot(u, v)) % m
    total = 0
    for start in range(0, len(u), period):
        total += int(np.dot(u[start:start + period], v[start:start + period])) % m
    return total % m


def _invert_recurrence(a: np.ndarray, inv0: int, ring: CoefficientRing) -> np.ndarray:
    """c_n = -a0^-1 * sum_{j>=1, a_j != 0} a_j c_{n-j}, driven by the support of a."""
    length = len(a)
    support = np.flatnonzero(a[1:]) + 1
    weights = a[support]
    c = ring.zeros(length)
    c[0] = inv0
    neg_inv0 = -inv0
    count = 0
    for n in range(1, length):
        while count < len(support) and support[count] <= n:
            count += 1
        if count == 0:
            continue
        s = _dot(weights[:count], c[n - support[:count]], ring)
        c[n] = ring.reduce(neg_inv0 * s)
    return c


def _invert_newton(a: np.ndarray, inv0: int, ring: CoefficientRing) -> np.ndarray:
    length = len(a)
    c = ring.zeros(1)
    c[0] = inv0
    precision = 1
    while precision < length:
        precision = min(2 * precision, length)
        grown = ring.zeros(precision)
        grown[: len(c)] = c
        t = _mul_arrays(a[:precision], grown, precision, ring, "auto")
        t = -t
        t[0] += 2
        if not ring.is_exact:
            t %= ring.modulus
        c = _mul_arrays(grown, t, precision, ring, "auto")
        logger.debug("Newton inversion reached precision %d", precision)
    return c


def invert(a: Series, method: str = "auto") -> Series:
    """
    Multiplicative inverse up to a's truncation order.

    Args:
        a: series whose constant term is a unit of its ring
        method: "recurrence", "newton", or "auto" (recurrence for short or
            lacunary input, Newton doubling otherwise)

    Raises:
        InversionError: the constant term is not a unit
    """
    inv0 = a.ring.unit_inverse(int(a.coeffs[0]))
    length = a.trunc + 1
    if method == "auto":
        short = length < 2 * SCHOOLBOOK_LENGTH
        method = "recurrence" if short or _is_lacunary(a.coeffs, length) else "newton"
    if method == "recurrence":
        coeffs = _invert_recurrence(a.coeffs, inv0, a.ring)
    elif method == "newton":
        coeffs = _invert_newton(a.coeffs, inv0, a.ring)
    else:
        raise ValueError(f"unknown inversion method {method!r}; expected one of {INVERT_METHODS}")
    return Series(a.ring, coeffs)


def dissect(a: Series, m: int, r: int) -> Series:
    """
    Series b with b_n = a_{mn+r}, trunc floor((T - r)/m).

    Raises OutOfRangeError when r is outside 0..m-1, and also when r > T:
    the result would have no coefficients, which a Series cannot hold.
    """
    if m < 1:
        raise OutOfRangeError(f"dissection modulus must be positive, got {m}")
    if r < 0 or r >= m:
        raise OutOfRangeError(f"residue {r} outside 0..{m - 1}")
    if r > a.trunc:
        raise OutOfRangeError(f"residue {r} exceeds trunc {a.trunc}; no coefficient survives")
    return Series(a.ring, a.coeffs[r::m].copy())


def inflate(a: Series, k: int, new_trunc: int) -> Series:
    """Substitute q -> q^k; exponents k*i beyond k*T are zero-padded."""
    if k < 1:
        raise OutOfRangeError(f"inflation factor must be positive, got {k}")
    if new_trunc < 0:
        raise OutOfRangeError(f"trunc must be non-negative, got {new_trunc}")
    out = a.ring.zeros(new_trunc + 1)
    count = min(new_trunc // k + 1, a.trunc + 1)
    out[: count * k : k] = a.coeffs[:count]
    if new_trunc // k > a.trunc:
        logger.debug("inflate by %d zero-pads exponents above %d", k, k * a.trunc)
    return Series(a.ring, out)


def alternate_sign(a: Series) -> Series:
    """Substitute q -> -q."""
    out = a.coeffs.copy()
    out[1::2] = -out[1::2]
    if not a.ring.is_exact:
        out %= a.ring.modulus
    return Series(a.ring, out)


def reduce_mod(a: Series, modulus: int) -> Series:
    """
    Reduce coefficients into Z/modulus.

    Accepts an exact series, or a modular one whose modulus is a multiple
    of the target.
    """
    target = CoefficientRing.modular(modulus)
    if a.ring.is_exact:
        return Series(target, np.mod(a.coeffs, modulus).astype(np.int64))
    if a.ring.modulus % modulus != 0:
        raise RingMismatchError(f"cannot reduce {a.ring} to Z/{modulus}: {modulus} does not divide {a.ring.modulus}")
    return Series(target, a.coeffs % modulus)


def coeff_at(a: Series, n: int) -> int:
    if n < 0 or n > a.trunc:
        raise OutOfRangeError(f"coefficient q^{n} outside 0..{a.trunc}")
    return int(a.coeffs[n])


def series_equal(a: Series, b: Series) -> SeriesComparison:
    """Coefficientwise comparison up to min(Ta, Tb)."""
    _check_same_ring(a, b)
    trunc = min(a.trunc, b.trunc)
    x = a.coeffs[: trunc + 1]
    y = b.coeffs[: trunc + 1]
    diff = np.flatnonzero(np.asarray(x != y, dtype=bool))
    if len(diff) == 0:
        return SeriesComparison(True, trunc)
    n = int(diff[0])
    return SeriesComparison(False, trunc, n, int(x[n]), int(y[n]))
