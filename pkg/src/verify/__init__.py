"""Registry of verifiable claims, their check operations and reports."""
from .catalog import CATALOG, CHECKS, TheoremCheck
from .checks import (
    CONGRUENCE_IDENTITIES,
    DENSITY_FAMILIES,
    FAMILIES,
    ITERATION_FAMILIES,
    POINTWISE_RELATIONS,
    RECURRENCES,
    FamilyInstance,
    IterationFamilyError,
    UnknownRelationError,
    combine,
    density_count,
    divisibility_frequency,
    expect_failure,
    iteration_coefficient,
    progression_mask,
    verify_classifier,
    verify_family_direct,
    verify_iteration_coefficient,
    verify_pointwise,
    verify_progression,
    verify_r2_mod8,
    verify_recurrence,
    verify_series_identity,
    verify_two_squares,
)
from .context import SHARED_MODULUS, BudgetExceeded, SuiteContext
from .profiles import PROFILE_NAMES, Profile, ProfileError, get_profile, load_profiles
from .registry import match_ids, natural_key, run_registry
from .report import SCHEMA_VERSION, Counterexample, ReportDocument, Summary, VerificationReport

__all__ = [
    "CATALOG",
    "CHECKS",
    "TheoremCheck",
    "CONGRUENCE_IDENTITIES",
    "DENSITY_FAMILIES",
    "FAMILIES",
    "ITERATION_FAMILIES",
    "POINTWISE_RELATIONS",
    "RECURRENCES",
    "FamilyInstance",
    "IterationFamilyError",
    "UnknownRelationError",
    "combine",
    "density_count",
    "divisibility_frequency",
    "expect_failure",
    "iteration_coefficient",
    "progression_mask",
    "verify_classifier",
    "verify_family_direct",
    "verify_iteration_coefficient",
    "verify_pointwise",
    "verify_progression",
    "verify_r2_mod8",
    "verify_recurrence",
    "verify_series_identity",
    "verify_two_squares",
    "SHARED_MODULUS",
    "BudgetExceeded",
    "SuiteContext",
    "PROFILE_NAMES",
    "Profile",
    "ProfileError",
    "get_profile",
    "load_profiles",
    "match_ids",
    "natural_key",
    "run_registry",
    "SCHEMA_VERSION",
    "Counterexample",
    "ReportDocument",
    "Summary",
    "VerificationReport",
]
