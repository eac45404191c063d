import pytest
from pydantic import ValidationError

from src.counting import TableCache
from src.theta import IdentityId
from src.verify import (
    CATALOG,
    Counterexample,
    FamilyInstance,
    IterationFamilyError,
    ReportDocument,
    SuiteContext,
    Summary,
    UnknownRelationError,
    VerificationReport,
    combine,
    density_count,
    expect_failure,
    get_profile,
    match_ids,
    natural_key,
    progression_mask,
    run_registry,
    verify_family_direct,
    verify_iteration_coefficient,
    verify_pointwise,
    verify_progression,
    verify_recurrence,
    verify_series_identity,
)

REGISTERED = {
    "T1.1", "T2.1", "T2.2", "T2.3", "T2.4", "T2.5", "T2.6",
    "T2.7.1", "T2.7.2", "T2.7.3", "T2.8", "T2.8.1", "T2.9", "T2.9.1",
    "TIGHT.2.6", "TIGHT.2.8", "TIGHT.2.9",
    "T3.1", "T3.2", "T3.2.1", "T3.2.2", "T3.3", "T3.4", "T3.5", "T3.6", "T3.7", "T3.8",
    "T4.1", "T4.1.1", "T4.1.2", "T4.2", "T4.3", "T4.3.1", "T4.3.2", "T4.3.3",
    "T4.4", "T4.5", "T4.6", "T4.6.1", "T4.6.2", "T4.6.3", "T4.7", "T4.8",
}


class TestReports:
    def test_fail_needs_counterexample(self):
        with pytest.raises(ValidationError):
            VerificationReport(id="x", status="fail")
        with pytest.raises(ValidationError):
            VerificationReport(id="x", status="pass", first_counterexample=Counterexample(n=0, observed=1, expected=0))

    def test_tightness_pass_carries_witness(self):
        ce = Counterexample(n=0, observed=32, expected=0)
        report = VerificationReport(id="t", status="pass", kind="Tightness", first_counterexample=ce)
        assert report.passed
        with pytest.raises(ValidationError):
            VerificationReport(id="t", status="pass", kind="Tightness")

    def test_json_shape(self):
        report = VerificationReport(id="T2.9", status="pass", checked_count=3, bound=2)
        data = report.to_dict()
        assert data["schema"] == 1
        assert data["first_counterexample"] is None
        assert data["elapsed_ms"] is None
        assert VerificationReport.model_validate(data) == report

    def test_document_round_trip(self):
        reports = [
            VerificationReport(id="a", status="pass"),
            VerificationReport(id="b", status="fail", first_counterexample=Counterexample(n=1, observed=2, expected=0)),
            VerificationReport(id="c", status="skipped-budget"),
            VerificationReport(id="d", status="info"),
        ]
        doc = ReportDocument(profile="quick", reports=reports)
        assert ReportDocument.model_validate(doc.to_dict()) == doc
        assert Summary.of(reports) == Summary(total=4, passed=1, failed=1, skipped=1, info=1)


class TestRegistry:
    def test_every_claim_is_registered_once(self):
        assert set(CATALOG) == REGISTERED

    def test_catalog_anchor(self):
        assert "(mod 144)" in CATALOG["T3.7"].anchor
        assert CATALOG["T2.4"].expectation == "informational"
        assert CATALOG["TIGHT.2.8"].kind == "Tightness"

    def test_natural_ordering(self):
        ids = ["T2.10", "T2.9", "T2.8.1", "T10.1"]
        assert sorted(ids, key=natural_key) == ["T2.8.1", "T2.9", "T2.10", "T10.1"]

    def test_match_ids(self):
        assert match_ids("T2.7.*") == ["T2.7.1", "T2.7.2", "T2.7.3"]
        assert match_ids("T3.5,TIGHT.2.8") == ["T3.5", "TIGHT.2.8"]
        assert match_ids("NOSUCH") == []
        assert len(match_ids(None)) == len(REGISTERED)

    def test_run_registry_sorted_and_deterministic(self):
        first = run_registry("T2.7.*,T2.5", "quick")
        second = run_registry("T2.7.*,T2.5", "quick", threads=3)
        assert [r.id for r in first] == ["T2.5", "T2.7.1", "T2.7.2", "T2.7.3"]
        assert [r.to_dict() for r in first] == [r.to_dict() for r in second]
        assert all(r.status == "pass" for r in first)
        assert all(r.elapsed_ms is None for r in first)

    def test_timings_are_opt_in(self):
        (report,) = run_registry("T4.3.3", "quick", timings=True)
        assert report.elapsed_ms is not None

    def test_thread_env_fallback(self, monkeypatch, caplog):
        from src.verify.registry import thread_count

        monkeypatch.setenv("QSC_THREADS", "lots")
        assert thread_count() == 1
        assert "QSC_THREADS" in caplog.text
        monkeypatch.setenv("QSC_THREADS", "4")
        assert thread_count() == 4

    def test_t3_5_progressions(self):
        (report,) = run_registry("T3.5", "quick")
        assert report.status == "pass"
        assert len(report.legs) == 2


class TestProgressions:
    def test_8n_plus_7_mod_64(self, quick_ctx):
        report = verify_progression(8, 7, 64, 500, ctx=quick_ctx)
        assert report.status == "pass"
        assert report.checked_count == 501
        assert any(leg.startswith("oracle") for leg in report.legs)

    def test_doubled_modulus_fails_at_zero(self, quick_ctx):
        report = verify_progression(16, 14, 64, 500, ctx=quick_ctx)
        assert report.status == "fail"
        assert report.first_counterexample == Counterexample(n=0, observed=32, expected=0)

    def test_bound_clamped_to_profile(self, quick_ctx):
        report = verify_progression(16, 14, 32, 500, ctx=quick_ctx)
        assert report.status == "pass"
        assert report.bound == (5000 - 14) // 16
        assert "clamped" in report.detail

    def test_unreachable_progression_is_skipped(self, quick_ctx):
        report = verify_progression(1, 6000, 7, 10, ctx=quick_ctx)
        assert report.status == "skipped-budget"
        assert report.bound is None
        assert "requested bound 10" in report.detail

    def test_bad_arguments(self, quick_ctx):
        with pytest.raises(ValueError):
            verify_progression(0, 1, 7, 10, ctx=quick_ctx)
        with pytest.raises(ValueError):
            verify_progression(3, 1, 1, 10, ctx=quick_ctx)

    @pytest.mark.parametrize("r, modulus", [(1, 2), (2, 8), (3, 16), (4, 2), (5, 16), (6, 16)])
    def test_8n_plus_r(self, quick_ctx, r, modulus):
        assert verify_progression(8, r, modulus, 5000, ctx=quick_ctx).passed

    def test_tightness_catalog_entries(self, quick_ctx):
        for check_id, residue in (("TIGHT.2.8", 32), ("TIGHT.2.9", 64)):
            report = CATALOG[check_id](quick_ctx)
            assert report.status == "pass"
            assert report.first_counterexample.n == 0
            assert report.first_counterexample.observed == residue
        assert CATALOG["TIGHT.2.6"](quick_ctx).status == "pass"

    def test_expect_failure_rejects_a_pass(self, quick_ctx):
        inner = verify_progression(8, 7, 64, 100, ctx=quick_ctx)
        report = expect_failure("tight", inner, 0, 64)
        assert report.status == "fail"


class TestPointwise:
    def test_pbar3_7n_and_r3(self, quick_ctx):
        report = verify_pointwise("P3_7_R3", 700, ctx=quick_ctx)
        assert report.status == "pass"
        assert report.checked_count == 700
        assert any("lattice oracle" in leg for leg in report.legs)

    def test_pbar3_11n_and_r7(self, quick_ctx):
        report = verify_pointwise("P3_11_R7", 2000, ctx=quick_ctx)
        assert report.status == "pass"
        assert report.bound == 5000 // 11

    @pytest.mark.parametrize("alpha", [0, 1])
    def test_power_of_four(self, quick_ctx, alpha):
        assert verify_pointwise("P3_28_7", 800, alpha=alpha, ctx=quick_ctx).passed

    @pytest.mark.parametrize("relation", ["R4_P", "R8_P"])
    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_r4_r8_mod_p(self, quick_ctx, relation, p):
        assert verify_pointwise(relation, 1000, p=p, ctx=quick_ctx).passed

    def test_prime_required(self, quick_ctx):
        with pytest.raises(ValueError):
            verify_pointwise("R4_P", 10, p=9, ctx=quick_ctx)

    def test_unknown_relation(self, quick_ctx):
        with pytest.raises(UnknownRelationError):
            verify_pointwise("NOPE", 10, ctx=quick_ctx)


class TestSeriesIdentities:
    def test_theta_identity(self):
        report = verify_series_identity(IdentityId.PHI4_DIFF, trunc=300)
        assert report.status == "pass"
        assert report.bound == 300

    def test_frobenius_prime(self):
        report = verify_series_identity("PHI_FROBENIUS_P", p=11, trunc=200)
        assert report.passed
        assert report.id == "PHI_FROBENIUS_P[p=11]"

    @pytest.mark.parametrize("name", ["P3THM1_0", "P3THM1_1", "P3THM1_2", "TERM12", "TERM21", "MOD7EQ", "MOD11EQ", "P3_7_4N3"])
    def test_congruence_identities(self, quick_ctx, name):
        report = verify_series_identity(name, trunc=400, ctx=quick_ctx)
        assert report.status == "pass", report.legs

    @pytest.mark.parametrize("alpha", [1, 2])
    @pytest.mark.parametrize("name", ["P3THM2_EVEN", "P3THM2_ODD"])
    def test_power_of_three_dissections(self, quick_ctx, name, alpha):
        assert verify_series_identity(name, trunc=1000, alpha=alpha, ctx=quick_ctx).passed

    def test_wrong_modulus_fails(self, quick_ctx):
        # the 3n+1 component is not congruent to its quotient mod 288
        report = verify_series_identity("P3THM1_1", modulus=288, trunc=200, ctx=quick_ctx)
        assert report.status == "fail"

    def test_unknown_identity(self, quick_ctx):
        with pytest.raises(UnknownRelationError):
            verify_series_identity("NOPE", ctx=quick_ctx)


class TestRecurrences:
    def test_r3_hurwitz(self, quick_ctx):
        report = verify_recurrence("R3_HURWITZ", [3, 5, 7, 11, 13], 500, ctx=quick_ctx)
        assert report.status == "pass"
        assert len(report.legs) == 5

    @pytest.mark.parametrize("rec", ["R3_SHIFTED", "R7_COOPER", "R7_SHIFTED"])
    def test_r_recurrences(self, quick_ctx, rec):
        assert verify_recurrence(rec, [3, 5], 60, ctx=quick_ctx).passed

    @pytest.mark.parametrize("rec, primes", [("P3_7_REL", [3]), ("P3_7_HECKE", [3, 7]), ("P3_11_REL", [3])])
    def test_pbar3_recurrences(self, quick_ctx, rec, primes):
        assert verify_recurrence(rec, primes, 150, ctx=quick_ctx).passed

    def test_oversized_prime_is_skipped(self, quick_ctx):
        report = verify_recurrence("P3_11_REL", [3, 101], 10, ctx=quick_ctx)
        assert report.status == "pass"
        assert "101" in report.detail

    def test_unknown(self, quick_ctx):
        with pytest.raises(UnknownRelationError):
            verify_recurrence("R5", [3], 10, ctx=quick_ctx)


class TestIterationCoefficients:
    @pytest.mark.parametrize(
        "family, p",
        [("MOD7_14A13", 29), ("MOD7_14A13", 43), ("MOD7_12A11", 3), ("MOD7_12A11", 5),
         ("MOD11_22A21", 3), ("MOD11_22A21", 5), ("MOD11_22A21", 23), ("MOD11_4A3", 7)],
    )
    def test_coefficients_vanish(self, family, p):
        report = verify_iteration_coefficient(family, p, 5)
        assert report.status == "pass"
        assert report.checked_count == 6

    @pytest.mark.parametrize("family, p", [("MOD7_14A13", 3), ("MOD7_12A11", 29), ("MOD11_22A21", 7), ("MOD7_14A13", 15)])
    def test_wrong_residue_class(self, family, p):
        with pytest.raises(IterationFamilyError):
            verify_iteration_coefficient(family, p, 5)


class TestFamilies:
    def test_four_power_family(self, quick_ctx):
        report = verify_family_direct("F4A_56N49", ctx=quick_ctx)
        assert report.status == "pass"
        assert len(report.legs) == 3

    def test_large_instance_skipped_on_quick(self, quick_ctx):
        report = verify_family_direct("F7P3_13", ctx=quick_ctx)
        assert report.status == "skipped-budget"
        assert "not run" in report.legs[0]
        assert report.bound is None

    def test_custom_instances(self, quick_ctx):
        instances = [FamilyInstance("27(3n+2)", 27, 3, 2, 50, 144)]
        report = verify_family_direct("custom", instances, ctx=quick_ctx)
        assert report.passed
        assert report.bound == 50

    def test_bound_is_the_clamped_one(self, quick_ctx):
        # 27(3*61+2) = 4995 is the last index inside T = 5000
        instances = [FamilyInstance("27(3n+2)", 27, 3, 2, 10_000, 144)]
        report = verify_family_direct("custom", instances, ctx=quick_ctx)
        assert report.passed
        assert report.bound == 61
        assert report.checked_count == 62
        assert "clamped from 10000" in report.legs[0]

    def test_skipped_instance_does_not_raise_the_bound(self, quick_ctx):
        instances = [
            FamilyInstance("27(3n+2)", 27, 3, 2, 50, 144),
            FamilyInstance("7*13^3*N", 7 * 13 ** 3, 1, 0, 6, 7, n_start=1, coprime_to=13),
        ]
        report = verify_family_direct("custom", instances, ctx=quick_ctx)
        assert report.passed
        assert report.bound == 50
        assert "not run" in report.legs[1]

    def test_failing_instance(self, quick_ctx):
        instances = [FamilyInstance("3n+2 mod 48", 1, 3, 2, 50, 48)]
        report = verify_family_direct("custom", instances, ctx=quick_ctx)
        assert report.status == "fail"
        assert report.first_counterexample.n == 0

    @pytest.mark.slow
    def test_default_profile_direct_instances(self, default_ctx):
        for family in ("F7P3_13", "F11P3_13", "F7POW_R", "F3POW_144"):
            assert verify_family_direct(family, ctx=default_ctx).status == "pass", family
        deep_only = verify_family_direct("F7P11_3", ctx=default_ctx)
        assert deep_only.status == "skipped-budget"
        assert "deep only" in deep_only.legs[0]


class TestDensity:
    def test_single_progression_count(self):
        N = 100_000
        mask = progression_mask([(81, 54)], N)
        assert int(mask.sum()) == (N - 54) // 81 + 1

    @pytest.mark.parametrize("family, N", [("DENS_144", 10 ** 6), ("DENS_7", 10 ** 6), ("DENS_11", 10 ** 6)])
    def test_density_bounds(self, quick_ctx, family, N):
        report = density_count(family, N, ctx=quick_ctx)
        assert report.status == "pass", report.legs

    def test_unknown_family(self, quick_ctx):
        with pytest.raises(UnknownRelationError):
            density_count("DENS_5", 1000, ctx=quick_ctx)


class TestCombine:
    def test_status_precedence(self):
        ok = VerificationReport(id="a", status="pass", checked_count=2, bound=5)
        skipped = VerificationReport(id="b", status="skipped-budget")
        bad = VerificationReport(id="c", status="fail", first_counterexample=Counterexample(n=3, observed=1, expected=0))
        assert combine("x", "K", [ok, skipped]).status == "pass"
        assert combine("x", "K", [skipped]).status == "skipped-budget"
        merged = combine("x", "K", [ok, bad])
        assert merged.status == "fail"
        assert merged.first_counterexample.n == 3
        assert merged.checked_count == 2

    def test_skipped_bounds_are_not_reported(self):
        ok = VerificationReport(id="a", status="pass", checked_count=2, bound=5)
        skipped = VerificationReport(id="b", status="skipped-budget", bound=900)
        assert combine("x", "K", [ok, skipped]).bound == 5
        assert combine("x", "K", [skipped]).bound is None


@pytest.mark.slow
def test_quick_profile_has_no_failures():
    ctx = SuiteContext(get_profile("quick"), TableCache())
    reports = run_registry(None, "quick", ctx=ctx)
    assert [r.id for r in reports if r.status == "fail"] == []


@pytest.mark.slow
def test_default_profile_acceptance_bounds(default_ctx):
    report = verify_progression(16, 14, 32, (100_000 - 14) // 16, ctx=default_ctx)
    assert report.passed
    assert verify_pointwise("P3_7_R3", 3000, ctx=default_ctx).bound == 3000
