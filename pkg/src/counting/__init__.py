"""Counting functions pbar_k(n), r_k(n), r2+(n), their oracles and classifiers."""
from .arithmetic import (
    ClassifierDomainError,
    NotOddPrimeError,
    PredictedResidue,
    chi,
    is_square,
    is_twice_square,
    keister_sellers_predicted,
    legendre,
    m_exponent,
    mod2m_predicted,
    r2_divisor_sum,
    r2_mod8_predicted,
    r2_plus,
    two_adic_split,
)
from .oracles import (
    BudgetError,
    overpartition_oracle,
    overpartition_oracle_table,
    r2_lattice,
    rk_oracle,
)
from .tables import (
    EXACT_SQUARES_LIMIT,
    EXACT_TABLE_LIMIT,
    MODULAR_TABLE_LIMIT,
    OverpartitionTable,
    SquaresTable,
    TableCache,
    check_table_budget,
    default_cache,
    overpartition_series,
    rk_series,
)

__all__ = [
    "ClassifierDomainError",
    "NotOddPrimeError",
    "BudgetError",
    "PredictedResidue",
    "chi",
    "is_square",
    "is_twice_square",
    "r2_plus",
    "r2_divisor_sum",
    "r2_lattice",
    "legendre",
    "m_exponent",
    "two_adic_split",
    "mod2m_predicted",
    "keister_sellers_predicted",
    "r2_mod8_predicted",
    "overpartition_oracle",
    "overpartition_oracle_table",
    "rk_oracle",
    "OverpartitionTable",
    "SquaresTable",
    "overpartition_series",
    "rk_series",
    "TableCache",
    "default_cache",
    "check_table_budget",
    "EXACT_TABLE_LIMIT",
    "EXACT_SQUARES_LIMIT",
    "MODULAR_TABLE_LIMIT",
]
