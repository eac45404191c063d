"""
The registered checks. Each entry is declarative: an id, a kind, the claim it
verifies, its requested bounds and a runner built from the check operations.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

from ..counting import keister_sellers_predicted, mod2m_predicted
from ..theta import FROBENIUS_PRIMES, IdentityId
from . import checks as ck
from .context import SuiteContext
from .report import VerificationReport

# indices up to this value are "every representable index"
FILL_LIMIT = 100_000


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    kind: str
    anchor: str
    run: Callable[[SuiteContext], VerificationReport] = field(repr=False, compare=False)
    defaults: str = ""
    expectation: str = "holds"

    def __call__(self, ctx: SuiteContext) -> VerificationReport:
        report = self.run(ctx)
        return report if report.id == self.id else report.relabel(self.id)


def _fill(a: int, b: int) -> int:
    return (FILL_LIMIT - b) // a


def _progressions(check_id: str, ctx: SuiteContext, rows: List[Tuple[int, int, int, int]]) -> VerificationReport:
    reports = [ck.verify_progression(a, b, m, n, ctx=ctx) for a, b, m, n in rows]
    return ck.combine(check_id, "ProgressionDivisibility", reports)


def _identities(check_id: str, ids: List[IdentityId], trunc: int, ctx: SuiteContext) -> VerificationReport:
    reports = [ck.verify_series_identity(i, trunc=trunc, ctx=ctx) for i in ids]
    return ck.combine(check_id, "SeriesIdentity", reports)


CORRECTION_8N = (2, 8, 16, 2, 16, 16)
PBAR3_SMALL = (6, 24, 80, 234, 624, 1552)


def _t2_6(ctx):
    rows = [(8, r, m, 5000) for r, m in zip(range(1, 7), CORRECTION_8N)]
    return _progressions("T2.6", ctx, rows)


def _tight_2_6(ctx):
    # doubling each modulus fails at n = 0, where pbar_3(r) is the witness
    reports = []
    for r, (m, value) in enumerate(zip(CORRECTION_8N, PBAR3_SMALL), start=1):
        inner = ck.verify_progression(8, r, 2 * m, 5000, ctx=ctx)
        reports.append(ck.expect_failure(f"8n+{r} mod {2 * m}", inner, 0, value % (2 * m)))
    return ck.combine("TIGHT.2.6", "Tightness", reports)


def _t3_5(ctx):
    return _progressions("T3.5", ctx, [(3, 1, 6, 30_000), (3, 2, 24, 30_000)])


def _t3_4(ctx):
    reports = [ck.verify_series_identity(name, trunc=1500, ctx=ctx) for name in ("P3THM1_0", "P3THM1_1", "P3THM1_2")]
    return ck.combine("T3.4", "SeriesIdentity", reports)


def _t3_6(ctx):
    reports = [
        ck.verify_series_identity(name, trunc=1500, alpha=alpha, ctx=ctx)
        for alpha in (1, 2)
        for name in ("P3THM2_EVEN", "P3THM2_ODD")
    ]
    return ck.combine("T3.6", "SeriesIdentity", reports)


def _t3_3(ctx):
    reports = [
        ck.verify_series_identity(ident, p=p, trunc=500, ctx=ctx)
        for ident in (IdentityId.EULER_POCHHAMMER_P, IdentityId.PHI_FROBENIUS_P)
        for p in FROBENIUS_PRIMES
    ]
    return ck.combine("T3.3", "SeriesIdentity", reports)


def _t4_1_1(ctx):
    reports = [ck.verify_pointwise(rel, 1000, p=p, ctx=ctx) for rel in ("R4_P", "R8_P") for p in (3, 5, 7, 11)]
    return ck.combine("T4.1.1", "PointwiseRelation", reports)


def _t4_2(ctx):
    reports = [ck.verify_pointwise("P3_28_7", 800, alpha=alpha, ctx=ctx) for alpha in (0, 1)]
    reports.append(ck.verify_family_direct("F4A_56N49", ctx=ctx))
    reports.append(ck.verify_series_identity("P3_7_4N3", trunc=1000, ctx=ctx))
    return ck.combine("T4.2", "PointwiseRelation", reports)


def _iterations_7(alpha_max: int = 5) -> List[VerificationReport]:
    return [ck.verify_iteration_coefficient("MOD7_14A13", p, alpha_max) for p in (29, 43)] + [
        ck.verify_iteration_coefficient("MOD7_12A11", p, alpha_max) for p in (3, 5)
    ]


def _iterations_11(alpha_max: int = 5) -> List[VerificationReport]:
    return [ck.verify_iteration_coefficient("MOD11_22A21", p, alpha_max) for p in (3, 5, 23)] + [
        ck.verify_iteration_coefficient("MOD11_4A3", p, alpha_max) for p in (7, 13, 17)
    ]


def _t4_3(ctx):
    reports = [
        ck.verify_family_direct("F7P3_13", ctx=ctx),
        ck.verify_family_direct("F7P11_3", ctx=ctx),
        ck.verify_recurrence("P3_7_REL", [3], 150, ctx=ctx),
    ]
    reports += _iterations_7()
    return ck.combine(
        "T4.3", "FamilyDirect", reports,
        "direct smallest instances, generating recurrence and iteration coefficients",
    )


def _t4_3_1(ctx):
    reports = [
        ck.verify_recurrence("R3_HURWITZ", [3, 5, 7, 11, 13], 500, ctx=ctx),
        ck.verify_recurrence("R3_SHIFTED", [3, 5, 7], 150, ctx=ctx),
    ]
    return ck.combine("T4.3.1", "Recurrence", reports)


def _t4_4(ctx):
    reports = [
        ck.verify_pointwise("P3_2401_49", 40, ctx=ctx),
        ck.verify_family_direct("F7POW_R", ctx=ctx),
        ck.verify_recurrence("P3_7_HECKE", [7], 40, ctx=ctx),
    ]
    return ck.combine("T4.4", "PointwiseRelation", reports)


def _t4_6(ctx):
    reports = [
        ck.verify_pointwise("P3_11_R7", 2000, ctx=ctx),
        ck.verify_series_identity("MOD11EQ", trunc=2000, ctx=ctx),
    ]
    return ck.combine("T4.6", "PointwiseRelation", reports)


def _t4_6_1(ctx):
    reports = [
        ck.verify_recurrence("R7_COOPER", [3, 5, 7], 200, ctx=ctx),
        ck.verify_recurrence("R7_SHIFTED", [3, 5], 100, ctx=ctx),
    ]
    return ck.combine("T4.6.1", "Recurrence", reports)


def _t4_7(ctx):
    reports = [
        ck.verify_pointwise("P3_1331_11", 75, ctx=ctx),
        ck.verify_family_direct("F11P3_13", ctx=ctx),
        ck.verify_recurrence("P3_11_REL", [3], 150, ctx=ctx),
    ]
    reports += _iterations_11()
    return ck.combine("T4.7", "PointwiseRelation", reports)


def _density(family: str, N: int):
    def run(ctx):
        return ck.density_count(family, max(1000, int(N * ctx.profile.density_scale)), ctx=ctx)

    return run


CHECKS: Tuple[TheoremCheck, ...] = (
    TheoremCheck(
        "T1.1", "Classifier",
        "pbar_k(n) = 2^(m+1) (mod 2^(m+2)) if n is a square or twice a square, else 0; k = 2^m * odd",
        lambda ctx: ck.verify_classifier("T1.1", (1, 2, 3, 4, 6, 12), keister_sellers_predicted, 5000, ctx),
        "k in {1,2,3,4,6,12}, n <= 5000",
    ),
    TheoremCheck(
        "T2.1", "Classifier",
        "pbar_k(n) mod 2^m(k): -2k for even squares, 2k for odd squares, 2k(k+1) for twice squares, else 0",
        lambda ctx: ck.verify_classifier("T2.1", range(1, 9), mod2m_predicted, 10_000, ctx),
        "k = 1..8, n <= 10000",
    ),
    TheoremCheck(
        "T2.2", "PointwiseRelation",
        "r2+(n) = r2(n)/4 - chi(n); r2(n) = 4 sum over odd d | n of (-1)^((d-1)/2)",
        lambda ctx: ck.verify_two_squares(2000, ctx, "T2.2"),
        "n <= 2000",
    ),
    TheoremCheck(
        "T2.3", "Classifier",
        "r2(n) = 4 (mod 8) if n is a square or twice a square, else 0",
        lambda ctx: ck.verify_r2_mod8(10_000, ctx, "T2.3"),
        "n <= 10000",
    ),
    TheoremCheck(
        "T2.4", "Frequency",
        "pbar_k(n) = 0 (mod 16) for almost all n",
        lambda ctx: ck.divisibility_frequency((3, 7), 16, 10_000, ctx, "T2.4"),
        "k in {3,7}, n <= 10000 (informational)",
        "informational",
    ),
    TheoremCheck(
        "T2.5", "Classifier",
        "pbar_3(n) mod 16: 10 for even squares, 6 for odd squares, 8 for twice squares, else 0",
        lambda ctx: ck.verify_classifier("T2.5", (3,), mod2m_predicted, 10_000, ctx),
        "n <= 10000",
    ),
    TheoremCheck(
        "T2.6", "ProgressionDivisibility",
        "pbar_3(8n+r) = 0 (mod 2, 8, 16, 2, 16, 16) for r = 1..6",
        _t2_6,
        "n <= 5000",
    ),
    TheoremCheck(
        "T2.7.1", "SeriesIdentity",
        "phi(q) phi(-q) = phi(-q^2)^2; psi(q)^2 = phi(q) psi(q^2)",
        lambda ctx: _identities("T2.7.1", [IdentityId.PHI_PHI_NEG, IdentityId.PSI_SQ], 500, ctx),
        "exact, T = 500",
    ),
    TheoremCheck(
        "T2.7.2", "SeriesIdentity",
        "phi(q)^4 - phi(-q)^4 = 16q psi(q^2)^4",
        lambda ctx: _identities("T2.7.2", [IdentityId.PHI4_DIFF], 500, ctx),
        "exact, T = 500",
    ),
    TheoremCheck(
        "T2.7.3", "SeriesIdentity",
        "phi(q) = phi(q^4) + 2q psi(q^8) and the 4-dissection of 1/phi(-q)",
        lambda ctx: _identities(
            "T2.7.3", [IdentityId.PHI_4DISSECT, IdentityId.PHI_SQ_4DISSECT, IdentityId.INV_PHI_NEG_4], 500, ctx
        ),
        "exact, T = 500",
    ),
    TheoremCheck(
        "T2.8", "ProgressionDivisibility",
        "pbar_3(16n+14) = 0 (mod 32)",
        lambda ctx: ck.verify_progression(16, 14, 32, _fill(16, 14), ctx=ctx, check_id="T2.8"),
        "every index <= 100000",
    ),
    TheoremCheck(
        "T2.8.1", "SeriesIdentity",
        "sum pbar_3(4n+2) q^n = 24 psi(q^2)^2 / phi(q)^5 (mod 128)",
        lambda ctx: ck.verify_series_identity("TERM12", trunc=1500, ctx=ctx, check_id="T2.8.1"),
        "Z/128, T = 1500",
    ),
    TheoremCheck(
        "T2.9", "ProgressionDivisibility",
        "pbar_3(8n+7) = 0 (mod 64)",
        lambda ctx: ck.verify_progression(8, 7, 64, _fill(8, 7), ctx=ctx, check_id="T2.9"),
        "every index <= 100000",
    ),
    TheoremCheck(
        "T2.9.1", "SeriesIdentity",
        "sum pbar_3(4n+3) q^n = 80 psi(q^2)^3 / phi(q)^6 (mod 64)",
        lambda ctx: ck.verify_series_identity("TERM21", trunc=1500, ctx=ctx, check_id="T2.9.1"),
        "Z/64, T = 1500",
    ),
    TheoremCheck(
        "TIGHT.2.6", "Tightness",
        "the moduli 2, 8, 16, 2, 16, 16 of pbar_3(8n+r) cannot be doubled",
        _tight_2_6,
        "witnesses pbar_3(1..6)",
        "fails-at-witness",
    ),
    TheoremCheck(
        "TIGHT.2.8", "Tightness",
        "pbar_3(16n+14) = 0 (mod 32) cannot be raised to 64: pbar_3(14) = 535008",
        lambda ctx: ck.expect_failure("TIGHT.2.8", ck.verify_progression(16, 14, 64, 500, ctx=ctx), 0, 32),
        "n <= 500",
        "fails-at-witness",
    ),
    TheoremCheck(
        "TIGHT.2.9", "Tightness",
        "pbar_3(8n+7) = 0 (mod 64) cannot be raised to 128: pbar_3(7) = 3648",
        lambda ctx: ck.expect_failure("TIGHT.2.9", ck.verify_progression(8, 7, 128, 500, ctx=ctx), 0, 64),
        "n <= 500",
        "fails-at-witness",
    ),
    TheoremCheck(
        "T3.1", "SeriesIdentity",
        "phi(q) = phi(q^9) + 2q B(-q^3); phi(q^3)^3 + 8q B(-q)^3 = phi(q)^4 / phi(q^3)",
        lambda ctx: _identities("T3.1", [IdentityId.PHI_9DISSECT, IdentityId.PHI3_CUBE_ID], 500, ctx),
        "exact, T = 500",
    ),
    TheoremCheck(
        "T3.2", "SeriesIdentity",
        "1/phi(q) = phi(q^9)/phi(q^3)^4 (phi(q^9)^2 - 2q phi(q^9) B(-q^3) + 4q^2 B(-q^3)^2)",
        lambda ctx: _identities("T3.2", [IdentityId.INV_PHI_9], 500, ctx),
        "exact, T = 500",
    ),
    TheoremCheck(
        "T3.2.1", "SeriesIdentity",
        "s^3 + q^3 t^3 = phi(q^3)^4 / phi(q^9)",
        lambda ctx: _identities("T3.2.1", [IdentityId.STONE], 500, ctx),
        "exact, T = 500",
    ),
    TheoremCheck(
        "T3.2.2", "SeriesIdentity",
        "1/phi(q) = phi(q^9)/phi(q^3)^4 (s^2 - q s t + q^2 t^2)",
        lambda ctx: _identities("T3.2.2", [IdentityId.STTWO], 500, ctx),
        "exact, T = 500",
    ),
    TheoremCheck(
        "T3.3", "SeriesIdentity",
        "(q;q)^p = (q^p;q^p) and phi(q)^p = phi(q^p) (mod p)",
        _t3_3,
        "p in {3,5,7,11,13}, T = 500",
    ),
    TheoremCheck(
        "T3.4", "SeriesIdentity",
        "3-dissection of the pbar_3 generating function (mod 72, 144, 288)",
        _t3_4,
        "T = 1500",
    ),
    TheoremCheck(
        "T3.5", "ProgressionDivisibility",
        "pbar_3(3n+1) = 0 (mod 6); pbar_3(3n+2) = 0 (mod 24)",
        _t3_5,
        "n <= 30000",
    ),
    TheoremCheck(
        "T3.6", "SeriesIdentity",
        "sum pbar_3(3^(2a) n)(-q)^n and sum pbar_3(3^(2a+1) n)(-q)^n as theta quotients (mod 72)",
        _t3_6,
        "a in {1,2}, T = 1500",
    ),
    TheoremCheck(
        "T3.7", "FamilyDirect",
        "pbar_3(3^(2a+1)(3n+2)) = 0 (mod 144)",
        lambda ctx: ck.verify_family_direct("F3POW_144", ctx=ctx, check_id="T3.7"),
        "27(3n+2) for n <= 300, 243(3n+2) for n <= 100",
    ),
    TheoremCheck(
        "T3.8", "DensityCount",
        "pbar_3(n) = 0 (mod 144) for at least 1/72 of n",
        _density("DENS_144", 1_000_000),
        "N = 10^6",
    ),
    TheoremCheck(
        "T4.1", "PointwiseRelation",
        "pbar_3(7n) = (-1)^n r3(n) (mod 7) for n >= 1",
        lambda ctx: ck.verify_pointwise("P3_7_R3", 3000, ctx=ctx, check_id="T4.1"),
        "1 <= n <= 3000, lattice oracle n <= 200",
    ),
    TheoremCheck(
        "T4.1.1", "PointwiseRelation",
        "r4(pn) = r4(n) and r8(pn) = r8(n) (mod p)",
        _t4_1_1,
        "p in {3,5,7,11}, n <= 1000",
    ),
    TheoremCheck(
        "T4.1.2", "SeriesIdentity",
        "sum pbar_3(7n)(-q)^n = phi(q)^3 (mod 7)",
        lambda ctx: ck.verify_series_identity("MOD7EQ", trunc=2000, ctx=ctx, check_id="T4.1.2"),
        "Z/7, T = 2000",
    ),
    TheoremCheck(
        "T4.2", "PointwiseRelation",
        "pbar_3(7*4^(a+1) n) = (-1)^n pbar_3(7n) (mod 7); pbar_3(4^a(56n+49)) = 0 (mod 7)",
        _t4_2,
        "a in {0,1}, n <= 800; 4^a(56n+49) for a <= 2, n <= 60",
    ),
    TheoremCheck(
        "T4.3", "FamilyDirect",
        "pbar_3(7p^(14a+13)N), pbar_3(7p^(12a+11)N) and pbar_3(7p^3 N) = 0 (mod 7)",
        _t4_3,
        "7*13^3*N for N <= 6; 7*3^11 deep only; iteration a <= 5",
    ),
    TheoremCheck(
        "T4.3.1", "Recurrence",
        "r3(p^2 n) + (-n/p) r3(n) + p r3(n/p^2) = (p+1) r3(n)",
        _t4_3_1,
        "p in {3,5,7,11,13}, n <= 500, exact",
    ),
    TheoremCheck(
        "T4.3.2", "Recurrence",
        "pbar_3(7p^3 n) + p pbar_3(7n/p) = (p+1) pbar_3(7pn) (mod 7)",
        lambda ctx: ck.verify_recurrence("P3_7_REL", [3, 5], 150, ctx=ctx, check_id="T4.3.2"),
        "p in {3,5}, n <= 150",
    ),
    TheoremCheck(
        "T4.3.3", "IterationCoefficient",
        "(p(p^k - 1)/(p - 1) + 1) = 0 (mod 7) for k = 7a+6 (p = 1 mod 7) and k = 6a+5",
        lambda ctx: ck.combine("T4.3.3", "IterationCoefficient", _iterations_7()),
        "p in {29,43} and {3,5}, a <= 5",
    ),
    TheoremCheck(
        "T4.4", "PointwiseRelation",
        "pbar_3(7^4 n) = pbar_3(7^2 n) and pbar_3(7^(2a+1)(7n+r)) = 0 (mod 7), r in {3,5,6}",
        _t4_4,
        "n <= 40",
    ),
    TheoremCheck(
        "T4.5", "DensityCount",
        "pbar_3(n) = 0 (mod 7) for at least 1/784 of n",
        _density("DENS_7", 10_000_000),
        "N = 10^7",
    ),
    TheoremCheck(
        "T4.6", "PointwiseRelation",
        "pbar_3(11n) = (-1)^n r7(n) (mod 11)",
        _t4_6,
        "0 <= n <= 2000, lattice oracle n <= 200",
    ),
    TheoremCheck(
        "T4.6.1", "Recurrence",
        "r7(p^2 n) = (p^5 - p^2 (-n/p) + 1) r7(n) - p^5 r7(n/p^2)",
        _t4_6_1,
        "p in {3,5,7}, n <= 200, exact",
    ),
    TheoremCheck(
        "T4.6.2", "Recurrence",
        "pbar_3(11p^3 n) = (p^5 + 1) pbar_3(11pn) - p^5 pbar_3(11n/p) (mod 11)",
        lambda ctx: ck.verify_recurrence("P3_11_REL", [3], 150, ctx=ctx, check_id="T4.6.2"),
        "p = 3, n <= 150",
    ),
    TheoremCheck(
        "T4.6.3", "IterationCoefficient",
        "(p^5(p^(5k) - 1)/(p^5 - 1) + 1) = 0 (mod 11) for k = 11a+10 and k = 2a+1",
        lambda ctx: ck.combine("T4.6.3", "IterationCoefficient", _iterations_11()),
        "p in {3,5,23} and {7,13,17}, a <= 5",
    ),
    TheoremCheck(
        "T4.7", "PointwiseRelation",
        "pbar_3(11^3 n) = pbar_3(11n) (mod 11); pbar_3(11p^(4a+3) N) = 0 (mod 11)",
        _t4_7,
        "n <= 75; 11*13^3*N for N <= 4",
    ),
    TheoremCheck(
        "T4.8", "DensityCount",
        "pbar_3(n) = 0 (mod 11) for at least 1/4400 of n",
        _density("DENS_11", 10_000_000),
        "N = 10^7",
    ),
)

CATALOG: Dict[str, TheoremCheck] = {check.id: check for check in CHECKS}
