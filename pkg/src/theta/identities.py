"""
Both sides of the named theta-function identities, as series pairs.

Symbols used in the formulas:
    a = phi(q^4), b = psi(q^8)
    s = phi(q^9), t = 2 B(-q^3)
"""
import logging
from enum import Enum
from typing import Callable, Dict, Optional, Tuple, Union

from ..series import (
    CoefficientRing,
    Series,
    alternate_sign,
    inflate,
    invert,
    mul,
    power,
)
from ..utils.primes import is_prime
from .builders import b_series, phi_series, pochhammer_series, psi_series

logger = logging.getLogger(__name__)

FROBENIUS_PRIMES = (3, 5, 7, 11, 13)


class IdentityId(Enum):
    PHI_4DISSECT = "phi(q) = phi(q^4) + 2q psi(q^8)"
    PHI_SQ_4DISSECT = "phi(q)^2 = phi(q^2)^2 + 4q psi(q^4)^2"
    PHI_PHI_NEG = "phi(q) phi(-q) = phi(-q^2)^2"
    PSI_SQ = "psi(q)^2 = phi(q) psi(q^2)"
    PHI4_DIFF = "phi(q)^4 - phi(-q)^4 = 16q psi(q^2)^4"
    INV_PHI_NEG_4 = "1/phi(-q) = (a^3 + 2q a^2 b + 4q^2 a b^2 + 8q^3 b^3) / phi(-q^4)^4"
    PHI_9DISSECT = "phi(q) = phi(q^9) + 2q B(-q^3)"
    PHI3_CUBE_ID = "phi(q^3)^3 + 8q B(-q)^3 = phi(q)^4 / phi(q^3)"
    INV_PHI_9 = "1/phi(q) = phi(q^9)/phi(q^3)^4 (phi(q^9)^2 - 2q phi(q^9) B(-q^3) + 4q^2 B(-q^3)^2)"
    STONE = "s^3 + q^3 t^3 = phi(q^3)^4 / phi(q^9)"
    STTWO = "1/phi(q) = phi(q^9)/phi(q^3)^4 (s^2 - q s t + q^2 t^2)"
    EULER_POCHHAMMER_P = "(q;q)^p = (q^p;q^p) (mod p)"
    PHI_FROBENIUS_P = "phi(q)^p = phi(q^p) (mod p)"

    @property
    def formula(self) -> str:
        return self.value

    @property
    def needs_prime(self) -> bool:
        return self in (IdentityId.EULER_POCHHAMMER_P, IdentityId.PHI_FROBENIUS_P)


Sides = Tuple[Series, Series]


def _phi(ring: CoefficientRing, T: int, k: int = 1) -> Series:
    return inflate(phi_series(ring, T), k, T)


def _phi_neg(ring: CoefficientRing, T: int, k: int = 1) -> Series:
    return inflate(alternate_sign(phi_series(ring, T)), k, T)


def _psi(ring: CoefficientRing, T: int, k: int = 1) -> Series:
    return inflate(psi_series(ring, T), k, T)


def _b_neg(ring: CoefficientRing, T: int, k: int = 1) -> Series:
    """B(-q^k)."""
    return inflate(alternate_sign(b_series(ring, T)), k, T)


def _phi_4dissect(ring, T) -> Sides:
    return _phi(ring, T), _phi(ring, T, 4) + 2 * _psi(ring, T, 8).shift(1)


def _phi_sq_4dissect(ring, T) -> Sides:
    lhs = power(_phi(ring, T), 2)
    rhs = power(_phi(ring, T, 2), 2) + 4 * power(_psi(ring, T, 4), 2).shift(1)
    return lhs, rhs


def _phi_phi_neg(ring, T) -> Sides:
    return mul(_phi(ring, T), _phi_neg(ring, T)), power(_phi_neg(ring, T, 2), 2)


def _psi_sq(ring, T) -> Sides:
    return power(_psi(ring, T), 2), mul(_phi(ring, T), _psi(ring, T, 2))


def _phi4_diff(ring, T) -> Sides:
    lhs = power(_phi(ring, T), 4) - power(_phi_neg(ring, T), 4)
    return lhs, 16 * power(_psi(ring, T, 2), 4).shift(1)


def _inv_phi_neg_4(ring, T) -> Sides:
    a = _phi(ring, T, 4)
    b = _psi(ring, T, 8)
    a2 = power(a, 2)
    b2 = power(b, 2)
    poly = (
        mul(a2, a)
        + 2 * mul(a2, b).shift(1)
        + 4 * mul(a, b2).shift(2)
        + 8 * mul(b2, b).shift(3)
    )
    rhs = mul(poly, invert(power(_phi_neg(ring, T, 4), 4)))
    return invert(_phi_neg(ring, T)), rhs


def _phi_9dissect(ring, T) -> Sides:
    return _phi(ring, T), _phi(ring, T, 9) + 2 * _b_neg(ring, T, 3).shift(1)


def _phi3_cube_id(ring, T) -> Sides:
    lhs = power(_phi(ring, T, 3), 3) + 8 * power(_b_neg(ring, T), 3).shift(1)
    rhs = mul(power(_phi(ring, T), 4), invert(_phi(ring, T, 3)))
    return lhs, rhs


def _inv_phi_9(ring, T) -> Sides:
    s = _phi(ring, T, 9)
    b3 = _b_neg(ring, T, 3)
    bracket = power(s, 2) - 2 * mul(s, b3).shift(1) + 4 * power(b3, 2).shift(2)
    rhs = mul(mul(s, invert(power(_phi(ring, T, 3), 4))), bracket)
    return invert(_phi(ring, T)), rhs


def _st(ring, T) -> Tuple[Series, Series]:
    return _phi(ring, T, 9), 2 * _b_neg(ring, T, 3)


def _stone(ring, T) -> Sides:
    s, t = _st(ring, T)
    lhs = power(s, 3) + power(t, 3).shift(3)
    rhs = mul(power(_phi(ring, T, 3), 4), invert(s))
    return lhs, rhs


def _sttwo(ring, T) -> Sides:
    s, t = _st(ring, T)
    bracket = power(s, 2) - mul(s, t).shift(1) + power(t, 2).shift(2)
    rhs = mul(mul(s, invert(power(_phi(ring, T, 3), 4))), bracket)
    return invert(_phi(ring, T)), rhs


def _euler_pochhammer(ring, T, p) -> Sides:
    return power(pochhammer_series(1, ring, T), p), pochhammer_series(p, ring, T)


def _phi_frobenius(ring, T, p) -> Sides:
    return power(_phi(ring, T), p), _phi(ring, T, p)


_BUILDERS: Dict[IdentityId, Callable[..., Sides]] = {
    IdentityId.PHI_4DISSECT: _phi_4dissect,
    IdentityId.PHI_SQ_4DISSECT: _phi_sq_4dissect,
    IdentityId.PHI_PHI_NEG: _phi_phi_neg,
    IdentityId.PSI_SQ: _psi_sq,
    IdentityId.PHI4_DIFF: _phi4_diff,
    IdentityId.INV_PHI_NEG_4: _inv_phi_neg_4,
    IdentityId.PHI_9DISSECT: _phi_9dissect,
    IdentityId.PHI3_CUBE_ID: _phi3_cube_id,
    IdentityId.INV_PHI_9: _inv_phi_9,
    IdentityId.STONE: _stone,
    IdentityId.STTWO: _sttwo,
    IdentityId.EULER_POCHHAMMER_P: _euler_pochhammer,
    IdentityId.PHI_FROBENIUS_P: _phi_frobenius,
}


def identity_sides(
    identity: Union[IdentityId, str],
    ring: CoefficientRing,
    trunc: int,
    p: Optional[int] = None,
) -> Sides:
    """
    Build (lhs, rhs) of a named identity.

    Args:
        identity: IdentityId or its name
        ring: coefficient ring; the two mod-p identities use Z/p (p defaults
            to the ring's modulus)
        trunc: truncation order of both sides
        p: prime for EULER_POCHHAMMER_P and PHI_FROBENIUS_P

    Raises:
        KeyError: unknown identity name
        ValueError: mod-p identity without a prime
    """
    if isinstance(identity, str):
        try:
            identity = IdentityId[identity]
        except KeyError:
            raise KeyError(f"unknown identity {identity!r}") from None

    builder = _BUILDERS[identity]
    if not identity.needs_prime:
        return builder(ring, trunc)

    if p is None:
        p = ring.modulus
    if p is None or not is_prime(p):
        raise ValueError(f"{identity.name} needs a prime p, got {p}")
    logger.debug("Building %s for p=%d to T=%d", identity.name, p, trunc)
    return builder(CoefficientRing.modular(p), trunc, p)
