"""Coefficient rings: exact integers or residues modulo a composite M."""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

import numpy as np

from .errors import InversionError

# Residues are stored as int64; products of two residues must fit.
MAX_MODULUS = 2 ** 31


class RingKind(Enum):
    EXACT = "exact"
    MODULAR = "modular"


@dataclass(frozen=True)
class CoefficientRing:
    """
    The ring a series takes its coefficients from.

    Exact rings keep arbitrary-precision Python integers in object arrays.
    Modular rings keep residues 0..M-1 in int64 arrays; M may be composite.
    """

    kind: RingKind
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind is RingKind.EXACT:
            if self.modulus is not None:
                raise ValueError("the exact ring takes no modulus")
        else:
            if self.modulus is None or self.modulus < 2:
                raise ValueError(f"modulus must be an integer >= 2, got {self.modulus}")
            if self.modulus >= MAX_MODULUS:
                raise ValueError(f"modulus {self.modulus} exceeds 2^31")

    @classmethod
    def exact(cls) -> "CoefficientRing":
        return cls(RingKind.EXACT)

    @classmethod
    def modular(cls, modulus: int) -> "CoefficientRing":
        return cls(RingKind.MODULAR, int(modulus))

    @property
    def is_exact(self) -> bool:
        return self.kind is RingKind.EXACT

    @property
    def dtype(self):
        return object if self.is_exact else np.int64

    def __str__(self) -> str:
        return "ZZ" if self.is_exact else f"Z/{self.modulus}"

    def reduce(self, value: int) -> int:
        """Map an integer into the ring's canonical representative."""
        value = int(value)
        return value if self.is_exact else value % self.modulus

    def normalize(self, values: Iterable) -> np.ndarray:
        """
        Build a coefficient array in this ring's storage format.

        Args:
            values: integers (Python ints, numpy ints or an existing array)

        Returns:
            object array of Python ints (exact) or int64 residues (modular)
        """
        if isinstance(values, np.ndarray) and values.dtype != object:
            if self.is_exact:
                return values.astype(object)
            return np.mod(values.astype(np.int64), self.modulus)

        arr = np.array([int(v) for v in values], dtype=object)
        if self.is_exact:
            return arr
        if arr.size == 0:
            return np.zeros(0, dtype=np.int64)
        return np.mod(arr, self.modulus).astype(np.int64)

    def zeros(self, length: int) -> np.ndarray:
        if self.is_exact:
            return np.zeros(length, dtype=object)
        return np.zeros(length, dtype=np.int64)

    def unit_inverse(self, value: int) -> int:
        """
        Inverse of a unit of the ring.

        Raises:
            InversionError: value is not a unit (gcd(value, M) > 1, or not +-1 over ZZ)
        """
        value = int(value)
        if self.is_exact:
            if value in (1, -1):
                return value
            raise InversionError(f"constant term {value} is not a unit of ZZ (units are +-1)")
        g = math.gcd(value, self.modulus)
        if g != 1:
            raise InversionError(
                f"constant term {value} is not a unit mod {self.modulus}: gcd({value}, {self.modulus}) = {g}"
            )
        return pow(value, -1, self.modulus)


EXACT = CoefficientRing.exact()
