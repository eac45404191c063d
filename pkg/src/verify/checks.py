"""
Check operations. Each returns a VerificationReport; failures are data, not
exceptions. Budget problems surface as BudgetExceeded and are turned into
skipped-budget reports by the registry.
"""
import logging
import math
import random
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..counting import (
    chi,
    legendre,
    overpartition_oracle,
    r2_divisor_sum,
    r2_plus,
    rk_oracle,
)
from ..series import (
    EXACT,
    CoefficientRing,
    Series,
    alternate_sign,
    from_coefficients,
    inflate,
    invert,
    mul,
    power,
    series_equal,
)
from ..theta import IdentityId, b_series, identity_sides, phi_series, psi_series
from ..utils.primes import is_odd_prime
from .context import SuiteContext
from .report import TIGHTNESS, Counterexample, VerificationReport

logger = logging.getLogger(__name__)

ORACLE_SPOT_CHECKS = 10
ORACLE_INDEX_LIMIT = 400
R_ORACLE_LIMIT = 200
DENSITY_SPOT_CHECKS = 200


class UnknownRelationError(KeyError):
    """No relation, identity, recurrence or family is registered under this id."""


class IterationFamilyError(ValueError):
    """The prime lies outside the residue class the iteration family requires."""


def _context(ctx: Optional[SuiteContext]) -> SuiteContext:
    return ctx if ctx is not None else SuiteContext.for_profile("default")


def _skipped(check_id: str, kind: str, detail: str, bound: Optional[int] = None) -> VerificationReport:
    # bound stays unset: nothing was checked
    if bound is not None:
        detail = f"{detail}; requested bound {bound}"
    return VerificationReport(id=check_id, status="skipped-budget", kind=kind, detail=detail)


def _verdict(
    check_id: str,
    kind: str,
    checked: int,
    bound: Optional[int],
    counterexample: Optional[Counterexample],
    legs: Sequence[str] = (),
    detail: str = "",
) -> VerificationReport:
    return VerificationReport(
        id=check_id,
        status="fail" if counterexample else "pass",
        kind=kind,
        checked_count=checked,
        bound=bound,
        first_counterexample=counterexample,
        legs=list(legs),
        detail=detail,
    )


def _clamp_note(requested: int, used: int) -> str:
    return f"bound clamped from {requested} to {used} by table size" if used < requested else ""


def _signed(values: np.ndarray, modulus: int) -> np.ndarray:
    """Coefficients of f(-q) given those of f(q), mod modulus."""
    out = np.array(values, dtype=np.int64)
    out[1::2] = (-out[1::2]) % modulus
    return out


def _first_mismatch(lhs: np.ndarray, rhs: np.ndarray, start: int, offset: int = 0) -> Optional[Counterexample]:
    bad = np.flatnonzero(np.asarray(lhs[start:] != rhs[start:], dtype=bool))
    if len(bad) == 0:
        return None
    i = start + int(bad[0])
    return Counterexample(n=i + offset, observed=int(lhs[i]), expected=int(rhs[i]))


def combine(check_id: str, kind: str, reports: Sequence[VerificationReport], detail: str = "") -> VerificationReport:
    """Fold several sub-checks into one report that lists each as a leg."""
    legs = []
    for r in reports:
        line = f"{r.id}: {r.status}, {r.checked_count} checked"
        if r.bound is not None:
            line += f", bound {r.bound}"
        if r.detail:
            line += f" ({r.detail})"
        legs.append(line)
    failed = [r for r in reports if r.status == "fail"]
    ran = [r for r in reports if r.status in ("pass", "fail")]
    bounds = [r.bound for r in reports if r.bound is not None and r.status != "skipped-budget"]
    if failed:
        status = "fail"
    elif not ran:
        status = "skipped-budget"
    else:
        status = "pass"
    witness = failed[0].first_counterexample if failed else None
    if witness is None and kind == TIGHTNESS and status == "pass":
        witness = next(r.first_counterexample for r in reports if r.first_counterexample)
    return VerificationReport(
        id=check_id,
        status=status,
        kind=kind,
        checked_count=sum(r.checked_count for r in reports),
        bound=max(bounds) if bounds else None,
        first_counterexample=witness,
        legs=legs,
        detail=detail,
    )


# --- progressions -----------------------------------------------------------


def verify_progression(
    a: int,
    b: int,
    modulus: int,
    bound: int,
    multiplier: int = 1,
    k: int = 3,
    start: int = 0,
    ctx: Optional[SuiteContext] = None,
    check_id: Optional[str] = None,
) -> VerificationReport:
    """
    Check modulus | pbar_k(multiplier*(a*n + b)) for start <= n <= bound.

    The bound is clamped to the profile's table; members with index <= 400
    are re-checked against the product-expansion oracle.
    """
    if a < 1 or b < 0 or multiplier < 1 or modulus < 2:
        raise ValueError(f"bad progression {multiplier}*({a}n+{b}) mod {modulus}")
    ctx = _context(ctx)
    if check_id is None:
        check_id = f"{multiplier}*({a}n+{b}) mod {modulus}" if multiplier > 1 else f"{a}n+{b} mod {modulus}"
    kind = "ProgressionDivisibility"
    step, offset = multiplier * a, multiplier * b
    n_max = ctx.fit(bound, step, offset)
    if n_max < start:
        return _skipped(check_id, kind, f"index {offset + step * start} beyond T={ctx.trunc}", bound)

    residues = ctx.overpartition_residues(modulus, offset + step * n_max, k)
    values = residues[offset::step][: n_max + 1]
    bad = np.flatnonzero(values[start:])
    legs = [f"table: n={start}..{n_max}"]
    if len(bad):
        n = start + int(bad[0])
        ce = Counterexample(n=n, observed=int(values[n]), expected=0)
        return _verdict(check_id, kind, n_max - start + 1, n_max, ce, legs, _clamp_note(bound, n_max))

    members = [n for n in range(start, n_max + 1) if offset + step * n <= ORACLE_INDEX_LIMIT]
    sample = sorted(random.Random(check_id).sample(members, min(ORACLE_SPOT_CHECKS, len(members))))
    for n in sample:
        index = offset + step * n
        expected = overpartition_oracle(k, index) % modulus
        if int(residues[index]) != expected:
            ce = Counterexample(n=n, observed=int(residues[index]), expected=expected)
            return _verdict(check_id, kind, n_max - start + 1, n_max, ce, legs, "table disagrees with oracle")
    legs.append(f"oracle: {len(sample)} members")
    return _verdict(check_id, kind, n_max - start + 1, n_max, None, legs, _clamp_note(bound, n_max))


# --- pointwise relations ----------------------------------------------------


@dataclass(frozen=True)
class PointwiseRelation:
    """lhs(n) = rhs(n) (mod modulus) for n >= start, built from index steps."""

    modulus: int
    start: int
    lhs_step: int
    rhs_step: int
    rhs_source: str  # "pbar3", "r3", "r7", "r4", "r8"
    lhs_source: str = "pbar3"
    signed: bool = False


def _pointwise_relation(relation_id: str, p: Optional[int], alpha: int) -> PointwiseRelation:
    if relation_id == "P3_7_R3":
        return PointwiseRelation(7, 1, 7, 1, "r3", signed=True)
    if relation_id == "P3_11_R7":
        return PointwiseRelation(11, 0, 11, 1, "r7", signed=True)
    if relation_id == "P3_28_7":
        return PointwiseRelation(7, 0, 7 * 4 ** (alpha + 1), 7, "pbar3", signed=True)
    if relation_id == "P3_1331_11":
        return PointwiseRelation(11, 0, 11 ** 3, 11, "pbar3")
    if relation_id == "P3_2401_49":
        return PointwiseRelation(7, 0, 7 ** 4, 7 ** 2, "pbar3")
    if relation_id in ("R4_P", "R8_P"):
        if p is None or not is_odd_prime(p):
            raise ValueError(f"{relation_id} needs an odd prime p, got {p}")
        source = "r4" if relation_id == "R4_P" else "r8"
        return PointwiseRelation(p, 0, p, 1, source, lhs_source=source)
    raise UnknownRelationError(relation_id)


POINTWISE_RELATIONS = ("P3_7_R3", "P3_11_R7", "P3_28_7", "P3_1331_11", "P3_2401_49", "R4_P", "R8_P")


def _source(ctx: SuiteContext, source: str, modulus: int, upto: int) -> np.ndarray:
    if source == "pbar3":
        return ctx.overpartition_residues(modulus, upto)
    return ctx.squares_residues(int(source[1:]), modulus, upto)


def verify_pointwise(
    relation_id: str,
    bound: int,
    p: Optional[int] = None,
    alpha: int = 0,
    ctx: Optional[SuiteContext] = None,
    check_id: Optional[str] = None,
) -> VerificationReport:
    """
    Compare both sides of a pointwise congruence for start <= n <= bound.

    Relations: P3_7_R3, P3_11_R7, P3_28_7 (alpha), P3_1331_11, P3_2401_49,
    R4_P and R8_P (prime p). Right sides built from r_k are cross-checked
    against the lattice oracle for n <= 200.
    """
    rel = _pointwise_relation(relation_id, p, alpha)
    ctx = _context(ctx)
    kind = "PointwiseRelation"
    suffix = f"[p={p}]" if p is not None else (f"[alpha={alpha}]" if relation_id == "P3_28_7" else "")
    check_id = check_id or relation_id + suffix
    n_max = ctx.fit(bound, max(rel.lhs_step, rel.rhs_step))
    if n_max < rel.start:
        return _skipped(check_id, kind, f"needs index {rel.lhs_step * rel.start} beyond T={ctx.trunc}", bound)

    m = rel.modulus
    lhs = _source(ctx, rel.lhs_source, m, rel.lhs_step * n_max)[:: rel.lhs_step][: n_max + 1]
    rhs_table = _source(ctx, rel.rhs_source, m, rel.rhs_step * n_max)
    rhs = rhs_table[:: rel.rhs_step][: n_max + 1]
    if rel.signed:
        rhs = _signed(rhs, m)
    legs = [f"table: n={rel.start}..{n_max} mod {m}"]
    ce = _first_mismatch(lhs, rhs, rel.start)
    if ce is not None:
        return _verdict(check_id, kind, n_max - rel.start + 1, n_max, ce, legs, _clamp_note(bound, n_max))

    if rel.rhs_source.startswith("r") and rel.rhs_step == 1:
        k = int(rel.rhs_source[1:])
        top = min(R_ORACLE_LIMIT, n_max)
        for n in range(top + 1):
            expected = rk_oracle(k, n) % m
            if int(rhs_table[n]) != expected:
                ce = Counterexample(n=n, observed=int(rhs_table[n]), expected=expected)
                return _verdict(check_id, kind, n_max - rel.start + 1, n_max, ce, legs, "r-series disagrees with lattice oracle")
        legs.append(f"lattice oracle: r_{k}(0..{top})")
    return _verdict(check_id, kind, n_max - rel.start + 1, n_max, None, legs, _clamp_note(bound, n_max))


# --- series identities ------------------------------------------------------


@dataclass(frozen=True)
class CongruenceIdentity:
    """sum pbar_3(step*n + offset) (+-q)^n = rhs (mod modulus)."""

    modulus: int
    step: Callable[[int], int]
    offset: int
    signed: bool
    rhs: Callable[[CoefficientRing, int], Series]


def _phi_pow(ring: CoefficientRing, T: int, e: int, k: int = 1) -> Series:
    return power(inflate(phi_series(ring, T), k, T), e)


def _inv_phi_pow(ring: CoefficientRing, T: int, e: int) -> Series:
    return invert(_phi_pow(ring, T, e))


def _psi2_pow(ring: CoefficientRing, T: int, e: int) -> Series:
    return power(inflate(psi_series(ring, T), 2, T), e)


def _b_neg_pow(ring: CoefficientRing, T: int, e: int) -> Series:
    return power(alternate_sign(b_series(ring, T)), e)


CONGRUENCE_IDENTITIES: Dict[str, CongruenceIdentity] = {
    "P3THM1_0": CongruenceIdentity(
        72, lambda a: 3, 0, True,
        lambda R, T: mul(_phi_pow(R, T, 1, 3), _inv_phi_pow(R, T, 4)),
    ),
    "P3THM1_1": CongruenceIdentity(
        144, lambda a: 3, 1, True,
        lambda R, T: 6 * mul(mul(_phi_pow(R, T, 4, 3), _b_neg_pow(R, T, 1)), _inv_phi_pow(R, T, 8)),
    ),
    "P3THM1_2": CongruenceIdentity(
        288, lambda a: 3, 2, True,
        lambda R, T: 24 * mul(mul(_phi_pow(R, T, 3, 3), _b_neg_pow(R, T, 2)), _inv_phi_pow(R, T, 8)),
    ),
    "P3THM2_EVEN": CongruenceIdentity(
        72, lambda a: 3 ** (2 * a), 0, True,
        lambda R, T: mul(_phi_pow(R, T, 4, 3), _inv_phi_pow(R, T, 7)),
    ),
    "P3THM2_ODD": CongruenceIdentity(
        72, lambda a: 3 ** (2 * a + 1), 0, True,
        lambda R, T: mul(_phi_pow(R, T, 5, 3), _inv_phi_pow(R, T, 8)),
    ),
    "MOD7EQ": CongruenceIdentity(7, lambda a: 7, 0, True, lambda R, T: _phi_pow(R, T, 3)),
    "MOD11EQ": CongruenceIdentity(11, lambda a: 11, 0, True, lambda R, T: _phi_pow(R, T, 7)),
    "TERM12": CongruenceIdentity(
        128, lambda a: 4, 2, False,
        lambda R, T: 24 * mul(_psi2_pow(R, T, 2), _inv_phi_pow(R, T, 5)),
    ),
    "TERM21": CongruenceIdentity(
        64, lambda a: 4, 3, False,
        lambda R, T: 80 * mul(_psi2_pow(R, T, 3), _inv_phi_pow(R, T, 6)),
    ),
    "P3_7_4N3": CongruenceIdentity(7, lambda a: 28, 21, False, lambda R, T: -8 * _psi2_pow(R, T, 3)),
}


def verify_series_identity(
    identity: Union[IdentityId, str],
    modulus: Optional[int] = None,
    trunc: int = 500,
    alpha: int = 1,
    p: Optional[int] = None,
    ctx: Optional[SuiteContext] = None,
    check_id: Optional[str] = None,
) -> VerificationReport:
    """
    Coefficientwise comparison of the two sides of a named identity.

    Theta identities (IdentityId) run over ZZ, or Z/modulus when given, or
    Z/p for the Frobenius identities. Congruence identities (keys of
    CONGRUENCE_IDENTITIES) dissect the pbar_3 table and compare with the
    theta quotient in Z/M, M defaulting to the identity's own modulus.
    """
    kind = "SeriesIdentity"
    name = identity.name if isinstance(identity, IdentityId) else identity
    if isinstance(identity, IdentityId) or name in IdentityId.__members__:
        ident = IdentityId[name]
        if ident.needs_prime:
            ring = CoefficientRing.modular(p or modulus)
            label = f"{name}[p={ring.modulus}]"
        else:
            ring = CoefficientRing.modular(modulus) if modulus else EXACT
            label = name
        lhs, rhs = identity_sides(ident, ring, trunc, p)
        cmp = series_equal(lhs, rhs)
        ce = None if cmp else Counterexample(n=cmp.first_mismatch, observed=cmp.left, expected=cmp.right)
        return _verdict(check_id or label, kind, cmp.trunc + 1, cmp.trunc, ce, [f"{ring}: {cmp.describe()}"])

    if name not in CONGRUENCE_IDENTITIES:
        raise UnknownRelationError(name)
    spec = CONGRUENCE_IDENTITIES[name]
    ctx = _context(ctx)
    m = modulus or spec.modulus
    step = spec.step(alpha)
    label = check_id or (f"{name}[alpha={alpha}]" if name.startswith("P3THM2") else name)
    T = ctx.fit(trunc, step, spec.offset)
    if T < 0:
        return _skipped(label, kind, f"index {spec.offset} beyond T={ctx.trunc}", trunc)

    ring = CoefficientRing.modular(m)
    residues = ctx.overpartition_residues(m, spec.offset + step * T)
    lhs = from_coefficients(ring, residues[spec.offset::step][: T + 1])
    if spec.signed:
        lhs = alternate_sign(lhs)
    rhs = spec.rhs(ring, T)
    cmp = series_equal(lhs, rhs)
    ce = None if cmp else Counterexample(n=cmp.first_mismatch, observed=cmp.left, expected=cmp.right)
    legs = [f"Z/{m}, index {step}n+{spec.offset}: {cmp.describe()}"]
    return _verdict(label, kind, T + 1, T, ce, legs, _clamp_note(trunc, T))


# --- recurrences ------------------------------------------------------------

Lookup = Callable[[int], int]


def _part(table: Lookup, numerator: int, divisor: int) -> int:
    """table(numerator / divisor), taken as 0 unless divisor | numerator."""
    return table(numerator // divisor) if numerator % divisor == 0 else 0


def _r3_hurwitz(t: Lookup, p: int, n: int) -> Tuple[int, int]:
    lhs = t(p * p * n) + legendre(-n, p) * t(n) + p * _part(t, n, p * p)
    return lhs, (p + 1) * t(n)


def _r3_shifted(t: Lookup, p: int, n: int) -> Tuple[int, int]:
    return t(p ** 3 * n) + p * _part(t, n, p), (p + 1) * t(p * n)


def _r7_cooper(t: Lookup, p: int, n: int) -> Tuple[int, int]:
    p5 = p ** 5
    rhs = (p5 - p * p * legendre(-n, p) + 1) * t(n) - p5 * _part(t, n, p * p)
    return t(p * p * n), rhs


def _r7_shifted(t: Lookup, p: int, n: int) -> Tuple[int, int]:
    p5 = p ** 5
    return t(p ** 3 * n), (p5 + 1) * t(p * n) - p5 * _part(t, n, p)


def _p3_7_rel(t: Lookup, p: int, n: int) -> Tuple[int, int]:
    # pbar_3(7m) for m = p^3 n, n/p, p n
    return t(7 * p ** 3 * n) + p * (t(7 * (n // p)) if n % p == 0 else 0), (p + 1) * t(7 * p * n)


def _p3_7_hecke(t: Lookup, p: int, n: int) -> Tuple[int, int]:
    lhs = t(7 * p * p * n) + legendre(-n, p) * t(7 * n) + p * (t(7 * (n // (p * p))) if n % (p * p) == 0 else 0)
    return lhs, (p + 1) * t(7 * n)


def _p3_11_rel(t: Lookup, p: int, n: int) -> Tuple[int, int]:
    p5 = p ** 5
    rhs = (p5 + 1) * t(11 * p * n) - p5 * (t(11 * (n // p)) if n % p == 0 else 0)
    return t(11 * p ** 3 * n), rhs


@dataclass(frozen=True)
class Recurrence:
    relation: Callable[[Lookup, int, int], Tuple[int, int]]
    source: str  # "r3", "r7" (exact) or "pbar3"
    modulus: Optional[int]
    # largest index needed for prime p, as a multiple of n
    reach: Callable[[int], int]


RECURRENCES: Dict[str, Recurrence] = {
    "R3_HURWITZ": Recurrence(_r3_hurwitz, "r3", None, lambda p: p * p),
    "R3_SHIFTED": Recurrence(_r3_shifted, "r3", None, lambda p: p ** 3),
    "R7_COOPER": Recurrence(_r7_cooper, "r7", None, lambda p: p * p),
    "R7_SHIFTED": Recurrence(_r7_shifted, "r7", None, lambda p: p ** 3),
    "P3_7_REL": Recurrence(_p3_7_rel, "pbar3", 7, lambda p: 7 * p ** 3),
    "P3_7_HECKE": Recurrence(_p3_7_hecke, "pbar3", 7, lambda p: 7 * p * p),
    "P3_11_REL": Recurrence(_p3_11_rel, "pbar3", 11, lambda p: 11 * p ** 3),
}


def verify_recurrence(
    recurrence_id: str,
    primes: Iterable[int],
    bound: int,
    ctx: Optional[SuiteContext] = None,
    check_id: Optional[str] = None,
) -> VerificationReport:
    """
    Check a prime recurrence for 0 <= n <= bound and each prime.

    r_k recurrences hold exactly over ZZ; the pbar_3 forms hold mod 7 or 11.
    Terms f(n/p) and f(n/p^2) are 0 unless the division is exact.
    """
    if recurrence_id not in RECURRENCES:
        raise UnknownRelationError(recurrence_id)
    rec = RECURRENCES[recurrence_id]
    ctx = _context(ctx)
    primes = list(primes)
    kind = "Recurrence"
    check_id = check_id or f"{recurrence_id}[p={','.join(map(str, primes))}]"
    for p in primes:
        if not is_odd_prime(p):
            raise ValueError(f"{recurrence_id} needs odd primes, got {p}")

    if rec.source == "pbar3":
        limit = ctx.trunc
    else:
        limit = min(ctx.trunc, ctx.exact_squares_limit)
    plan = [(p, ctx.fit(bound, rec.reach(p), limit=limit)) for p in primes]
    # n = 0 alone says nothing about a prime
    plan = [(p, n_max) for p, n_max in plan if n_max >= 1]
    if not plan:
        return _skipped(check_id, kind, f"no prime fits T={limit}", bound)

    top = max(rec.reach(p) * n_max for p, n_max in plan)
    if rec.source == "pbar3":
        table = ctx.overpartition_residues(rec.modulus, top)
    else:
        table = ctx.squares_exact(int(rec.source[1:]), top)

    def lookup(i: int) -> int:
        return int(table[i])

    checked = 0
    legs = []
    for p, n_max in plan:
        for n in range(n_max + 1):
            lhs, rhs = rec.relation(lookup, p, n)
            if rec.modulus is not None:
                lhs, rhs = lhs % rec.modulus, rhs % rec.modulus
            checked += 1
            if lhs != rhs:
                ce = Counterexample(n=n, observed=lhs, expected=rhs)
                return _verdict(check_id, kind, checked, n_max, ce, legs + [f"p={p}: fails at n={n}"])
        legs.append(f"p={p}: n=0..{n_max}")
    skipped = [p for p in primes if p not in {q for q, _ in plan}]
    detail = f"primes {skipped} skipped (table too small)" if skipped else ""
    bound_used = max(n_max for _, n_max in plan)
    if not detail:
        detail = _clamp_note(bound, min(n_max for _, n_max in plan))
    return _verdict(check_id, kind, checked, bound_used, None, legs, detail)


# --- iteration coefficients -------------------------------------------------


@dataclass(frozen=True)
class IterationFamily:
    modulus: int
    residues: Tuple[int, ...]
    exponent: Callable[[int], int]  # k as a function of alpha
    power: int  # 1 for the mod-7 families, 5 for the mod-11 ones


ITERATION_FAMILIES: Dict[str, IterationFamily] = {
    "MOD7_14A13": IterationFamily(7, (1,), lambda a: 7 * a + 6, 1),
    "MOD7_12A11": IterationFamily(7, (2, 3, 4, 5, 6), lambda a: 6 * a + 5, 1),
    "MOD11_22A21": IterationFamily(11, (1, 3, 4, 5, 9), lambda a: 11 * a + 10, 5),
    "MOD11_4A3": IterationFamily(11, (2, 6, 7, 8, 10), lambda a: 2 * a + 1, 5),
}


def iteration_coefficient(family_id: str, p: int, alpha: int) -> int:
    """P(P^k - 1)/(P - 1) + 1 with P = p^power and k from alpha, as an exact integer."""
    fam = ITERATION_FAMILIES[family_id]
    big = p ** fam.power
    k = fam.exponent(alpha)
    return big * (big ** k - 1) // (big - 1) + 1


def verify_iteration_coefficient(
    family_id: str,
    p: int,
    alpha_max: int,
    check_id: Optional[str] = None,
) -> VerificationReport:
    """
    Check that the iteration coefficient vanishes mod 7 or 11 for alpha = 0..alpha_max.

    Raises:
        IterationFamilyError: p is not an odd prime in the family's residue class
    """
    if family_id not in ITERATION_FAMILIES:
        raise UnknownRelationError(family_id)
    fam = ITERATION_FAMILIES[family_id]
    if not is_odd_prime(p) or p % fam.modulus not in fam.residues:
        raise IterationFamilyError(
            f"{family_id} needs an odd prime p = {fam.residues} (mod {fam.modulus}), got {p}"
        )
    check_id = check_id or f"{family_id}[p={p}]"
    for alpha in range(alpha_max + 1):
        value = iteration_coefficient(family_id, p, alpha) % fam.modulus
        if value != 0:
            ce = Counterexample(n=alpha, observed=value, expected=0)
            return _verdict(check_id, "IterationCoefficient", alpha + 1, alpha_max, ce)
    return _verdict(
        check_id, "IterationCoefficient", alpha_max + 1, alpha_max, None,
        [f"k = {fam.exponent(0)}..{fam.exponent(alpha_max)}: coefficient = 0 mod {fam.modulus}"],
    )


# --- direct family instances ------------------------------------------------


@dataclass(frozen=True)
class FamilyInstance:
    """Indices multiplier*(a*n + b) for n_start <= n <= n_max must vanish mod modulus."""

    label: str
    multiplier: int
    a: int
    b: int
    n_max: int
    modulus: int
    n_start: int = 0
    coprime_to: Optional[int] = None
    deep_only: bool = False

    def indices(self, n_max: int) -> List[Tuple[int, int]]:
        return [
            (n, self.multiplier * (self.a * n + self.b))
            for n in range(self.n_start, n_max + 1)
            if self.coprime_to is None or n % self.coprime_to != 0
        ]


FAMILIES: Dict[str, Tuple[FamilyInstance, ...]] = {
    "F4A_56N49": tuple(FamilyInstance(f"4^{a}(56n+49)", 4 ** a, 56, 49, 60, 7) for a in range(3)),
    "F7P3_13": (FamilyInstance("7*13^3*N", 7 * 13 ** 3, 1, 0, 6, 7, n_start=1, coprime_to=13),),
    "F7P11_3": (FamilyInstance("7*3^11*N", 7 * 3 ** 11, 1, 0, 1, 7, n_start=1, coprime_to=3, deep_only=True),),
    "F7POW_R": tuple(FamilyInstance(f"7^3(7n+{r})", 7 ** 3, 7, r, 40, 7) for r in (3, 5, 6)),
    "F11P3_13": (FamilyInstance("11*13^3*N", 11 * 13 ** 3, 1, 0, 4, 11, n_start=1, coprime_to=13),),
    "F3POW_144": (
        FamilyInstance("27(3n+2)", 27, 3, 2, 300, 144),
        FamilyInstance("243(3n+2)", 243, 3, 2, 100, 144),
    ),
}


def verify_family_direct(
    family_id: str,
    instances: Optional[Sequence[FamilyInstance]] = None,
    ctx: Optional[SuiteContext] = None,
    check_id: Optional[str] = None,
) -> VerificationReport:
    """
    Evaluate each instance of a congruence family directly from the table.

    Instances that do not fit the profile are itemized as skipped; deep-only
    instances are skipped silently below the deep table size.
    """
    if instances is None:
        if family_id not in FAMILIES:
            raise UnknownRelationError(family_id)
        instances = FAMILIES[family_id]
    ctx = _context(ctx)
    kind = "FamilyDirect"
    check_id = check_id or family_id
    legs: List[str] = []
    checked = 0
    ran = 0
    reached = 0
    for inst in instances:
        n_max = ctx.fit(inst.n_max, inst.multiplier * inst.a, inst.multiplier * inst.b)
        members = inst.indices(n_max) if n_max >= inst.n_start else []
        if not members:
            need = inst.multiplier * (inst.a * inst.n_start + inst.b)
            note = "deep only" if inst.deep_only else "skipped-budget"
            legs.append(f"{inst.label}: not run, {note} (needs T={need})")
            continue
        residues = ctx.overpartition_residues(inst.modulus, members[-1][1])
        for n, index in members:
            checked += 1
            if residues[index] != 0:
                ce = Counterexample(n=n, observed=int(residues[index]), expected=0)
                legs.append(f"{inst.label}: fails at n={n} (index {index})")
                return _verdict(check_id, kind, checked, n, ce, legs)
        ran += 1
        reached = max(reached, n_max)
        clamp = f", clamped from {inst.n_max}" if n_max < inst.n_max else ""
        legs.append(f"{inst.label} mod {inst.modulus}: {len(members)} indices, n<={n_max}{clamp}")
    if ran == 0:
        return VerificationReport(id=check_id, status="skipped-budget", kind=kind, legs=legs)
    return _verdict(check_id, kind, checked, reached, None, legs)


# --- density counts ---------------------------------------------------------


@dataclass(frozen=True)
class DensityFamily:
    modulus: int
    target: float
    # (step, offset) pairs: members are step*n + offset
    progressions: Callable[[int], List[Tuple[int, int]]]


def _dens_144(N: int) -> List[Tuple[int, int]]:
    out, alpha = [], 1
    while 2 * 3 ** (2 * alpha + 1) <= N:
        m = 3 ** (2 * alpha + 1)
        out.append((3 * m, 2 * m))
        alpha += 1
    return out


def _dens_7(N: int) -> List[Tuple[int, int]]:
    out, alpha = [], 1
    while 3 * 7 ** (2 * alpha + 1) <= N:
        m = 7 ** (2 * alpha + 1)
        out.extend((7 * m, r * m) for r in (3, 5, 6))
        alpha += 1
    return out


def _dens_11(N: int) -> List[Tuple[int, int]]:
    out, alpha = [], 0
    while 11 * 7 ** (4 * alpha + 3) <= N:
        m = 11 * 7 ** (4 * alpha + 3)
        out.extend((7 * m, r * m) for r in range(1, 7))
        alpha += 1
    return out


DENSITY_FAMILIES: Dict[str, DensityFamily] = {
    "DENS_144": DensityFamily(144, 1 / 72, _dens_144),
    "DENS_7": DensityFamily(7, 1 / 784, _dens_7),
    "DENS_11": DensityFamily(11, 1 / 4400, _dens_11),
}


def progression_mask(progressions: Iterable[Tuple[int, int]], N: int) -> np.ndarray:
    """Boolean mask over 0..N of the union of the progressions."""
    mask = np.zeros(N + 1, dtype=bool)
    for step, offset in progressions:
        mask[offset::step] = True
    return mask


def density_count(family_id: str, N: int, ctx: Optional[SuiteContext] = None, check_id: Optional[str] = None) -> VerificationReport:
    """
    Count n <= N in the family's progression union and compare with its density.

    Passes when count/N >= density - 2/sqrt(N); members within the table are
    spot-checked for divisibility.
    """
    if family_id not in DENSITY_FAMILIES:
        raise UnknownRelationError(family_id)
    fam = DENSITY_FAMILIES[family_id]
    ctx = _context(ctx)
    kind = "DensityCount"
    check_id = check_id or family_id
    mask = progression_mask(fam.progressions(N), N)
    mask[0] = False
    count = int(mask.sum())
    required = fam.target - 2 / math.sqrt(N)
    legs = [f"count: {count} of {N} ({count / N:.6f}, need >= {required:.6f})"]
    if count / N < required:
        ce = Counterexample(n=N, observed=count, expected=math.ceil(required * N))
        return _verdict(check_id, kind, N, N, ce, legs)

    members = np.flatnonzero(mask[: min(N, ctx.trunc) + 1])
    if len(members) == 0:
        return _verdict(check_id, kind, N, N, None, legs, "no member within the table for spot checks")
    picks = np.unique(members[np.linspace(0, len(members) - 1, min(DENSITY_SPOT_CHECKS, len(members))).astype(int)])
    residues = ctx.overpartition_residues(fam.modulus, int(picks[-1]))
    for index in picks:
        if residues[index] != 0:
            ce = Counterexample(n=int(index), observed=int(residues[index]), expected=0)
            return _verdict(check_id, kind, N, N, ce, legs + [f"spot check fails at {index}"])
    legs.append(f"spot checks: {len(picks)} members divisible by {fam.modulus}")
    return _verdict(check_id, kind, N, N, None, legs)


# --- classifiers and counting helpers ---------------------------------------


def verify_classifier(
    check_id: str,
    ks: Iterable[int],
    predictor: Callable[[int, int], Tuple[int, int]],
    bound: int,
    ctx: Optional[SuiteContext] = None,
) -> VerificationReport:
    """Compare pbar_k(n) mod 2^j with a closed-form classifier for 1 <= n <= bound."""
    ctx = _context(ctx)
    kind = "Classifier"
    n_max = ctx.fit(bound, 1)
    if n_max < 1:
        return _skipped(check_id, kind, "empty table", bound)
    checked = 0
    legs = []
    for k in ks:
        modulus = predictor(k, 1).modulus
        residues = ctx.overpartition_residues(modulus, n_max, k)
        for n in range(1, n_max + 1):
            expected = predictor(k, n).residue
            checked += 1
            if int(residues[n]) != expected:
                ce = Counterexample(n=n, observed=int(residues[n]), expected=expected)
                return _verdict(check_id, kind, checked, n_max, ce, legs + [f"k={k}: fails at n={n}"])
        legs.append(f"k={k} mod {modulus}: n=1..{n_max}")
    return _verdict(check_id, kind, checked, n_max, None, legs, _clamp_note(bound, n_max))


def verify_two_squares(bound: int, ctx: Optional[SuiteContext] = None, check_id: str = "R2_PLUS") -> VerificationReport:
    """r2+(n) = r2(n)/4 - chi(n), with r2 from phi^2 and from the divisor sum."""
    ctx = _context(ctx)
    n_max = ctx.fit(bound, 1)
    r2 = ctx.squares_exact(2, n_max)
    for n in range(1, n_max + 1):
        series_value = int(r2[n])
        if series_value != r2_divisor_sum(n):
            ce = Counterexample(n=n, observed=series_value, expected=r2_divisor_sum(n))
            return _verdict(check_id, "PointwiseRelation", n, n_max, ce, [], "phi^2 disagrees with divisor sum")
        expected = series_value // 4 - chi(n)
        if r2_plus(n) != expected:
            return _verdict(check_id, "PointwiseRelation", n, n_max, Counterexample(n=n, observed=r2_plus(n), expected=expected))
    legs = [f"r2 from phi^2 = divisor sum, n=1..{n_max}", f"r2+ by enumeration, n=1..{n_max}"]
    return _verdict(check_id, "PointwiseRelation", n_max, n_max, None, legs, _clamp_note(bound, n_max))


def verify_r2_mod8(bound: int, ctx: Optional[SuiteContext] = None, check_id: str = "R2_MOD8") -> VerificationReport:
    from ..counting import r2_mod8_predicted

    ctx = _context(ctx)
    n_max = ctx.fit(bound, 1)
    r2 = ctx.squares_residues(2, 8, n_max)
    for n in range(1, n_max + 1):
        expected = r2_mod8_predicted(n)
        if int(r2[n]) != expected:
            ce = Counterexample(n=n, observed=int(r2[n]), expected=expected)
            return _verdict(check_id, "Classifier", n, n_max, ce)
    return _verdict(check_id, "Classifier", n_max, n_max, None, [f"r2 mod 8, n=1..{n_max}"], _clamp_note(bound, n_max))


def divisibility_frequency(
    ks: Iterable[int],
    modulus: int,
    bound: int,
    ctx: Optional[SuiteContext] = None,
    check_id: str = "FREQ",
) -> VerificationReport:
    """Informational: share of 1 <= n <= bound with modulus | pbar_k(n)."""
    ctx = _context(ctx)
    n_max = ctx.fit(bound, 1)
    legs = []
    for k in ks:
        residues = ctx.overpartition_residues(modulus, n_max, k)[1:]
        hits = int(np.count_nonzero(residues == 0))
        legs.append(f"k={k}: {hits}/{n_max} = {hits / max(n_max, 1):.5f} divisible by {modulus}")
    return VerificationReport(
        id=check_id, status="info", kind="Frequency", checked_count=n_max, bound=n_max, legs=legs,
        detail="empirical frequency, not a density proof",
    )


def expect_failure(
    check_id: str,
    inner: VerificationReport,
    witness_n: int,
    witness_residue: int,
) -> VerificationReport:
    """A tightness check passes iff the inner check fails exactly at the witness."""
    kind = "Tightness"
    ce = inner.first_counterexample
    legs = [f"{inner.id}: {inner.status}"]
    if inner.status == "skipped-budget":
        return VerificationReport(id=check_id, status="skipped-budget", kind=kind, legs=legs, detail=inner.detail)
    if ce is not None and ce.n == witness_n and ce.observed == witness_residue:
        return VerificationReport(
            id=check_id, status="pass", kind=kind, checked_count=inner.checked_count, bound=inner.bound,
            first_counterexample=ce, legs=legs,
            detail=f"fails at n={witness_n} with residue {witness_residue} as expected",
        )
    witness = ce or Counterexample(n=witness_n, observed=0, expected=witness_residue)
    return VerificationReport(
        id=check_id, status="fail", kind=kind, checked_count=inner.checked_count, bound=inner.bound,
        first_counterexample=witness, legs=legs,
        detail=f"expected failure at n={witness_n} with residue {witness_residue}",
    )
