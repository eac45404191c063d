"""
Table access for the checks, bounded by the active profile.

pbar_3 residues for every modulus dividing SHARED_MODULUS = 2^7 * 3^2 * 7 * 11
come from a single table, so mod 7, 11, 16, 32, 64, 72, 128, 144 and 288
checks all read one computation.
"""
import logging
from typing import Optional

import numpy as np

from ..counting import BudgetError, TableCache, default_cache
from ..counting.tables import EXACT_SQUARES_LIMIT
from ..series import EXACT, CoefficientRing
from .profiles import Profile, get_profile

logger = logging.getLogger(__name__)

SHARED_MODULUS = 88704


class BudgetExceeded(BudgetError):
    """A check needs coefficients beyond what the profile allows."""


class SuiteContext:
    """Profile-bounded view of the shared coefficient tables."""

    def __init__(self, profile: Profile, cache: Optional[TableCache] = None):
        self.profile = profile
        self.cache = cache or default_cache

    @classmethod
    def for_profile(cls, name: str) -> "SuiteContext":
        return cls(get_profile(name))

    @property
    def trunc(self) -> int:
        return self.profile.trunc

    @property
    def exact_squares_limit(self) -> int:
        return EXACT_SQUARES_LIMIT

    def _require(self, upto: int, limit: int, what: str) -> None:
        if upto > limit:
            raise BudgetExceeded(f"{what} needs index {upto}, profile {self.profile.name!r} allows {limit}")

    def fit(self, bound: int, a: int, b: int = 0, limit: Optional[int] = None) -> int:
        """Largest n <= bound with a*n + b within the table; -1 if none fits."""
        limit = self.trunc if limit is None else limit
        if b > limit:
            return -1
        return min(bound, (limit - b) // a)

    def overpartition_residues(self, modulus: int, upto: int, k: int = 3) -> np.ndarray:
        """pbar_k(0..upto) mod modulus as an int64 array."""
        self._require(upto, self.trunc, f"pbar_{k} mod {modulus}")
        if k == 3 and SHARED_MODULUS % modulus == 0:
            table = self.cache.overpartitions(3, CoefficientRing.modular(SHARED_MODULUS), self.trunc)
            return table.values.coeffs[: upto + 1] % modulus
        table = self.cache.overpartitions(k, CoefficientRing.modular(modulus), upto)
        return np.asarray(table.values.coeffs[: upto + 1])

    def squares_residues(self, k: int, modulus: int, upto: int) -> np.ndarray:
        """r_k(0..upto) mod modulus."""
        self._require(upto, self.trunc, f"r_{k} mod {modulus}")
        table = self.cache.squares(k, CoefficientRing.modular(modulus), upto)
        return np.asarray(table.values.coeffs[: upto + 1])

    def squares_exact(self, k: int, upto: int) -> np.ndarray:
        """r_k(0..upto) as exact integers (object array)."""
        self._require(upto, EXACT_SQUARES_LIMIT, f"exact r_{k}")
        table = self.cache.squares(k, EXACT, upto)
        return np.asarray(table.values.coeffs[: upto + 1])
