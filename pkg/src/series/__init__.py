"""Truncated power-series arithmetic over exact integers or Z/M."""
from .errors import InversionError, OutOfRangeError, RingMismatchError, SeriesError, TransformCapacityError
from .ring import EXACT, CoefficientRing, RingKind
from .series import (
    Series,
    SeriesComparison,
    add,
    alternate_sign,
    coeff_at,
    dissect,
    from_coefficients,
    inflate,
    invert,
    make_series,
    mul,
    one,
    power,
    reduce_mod,
    series_equal,
    sub,
    zero,
)

__all__ = [
    "CoefficientRing",
    "RingKind",
    "EXACT",
    "Series",
    "SeriesComparison",
    "SeriesError",
    "RingMismatchError",
    "OutOfRangeError",
    "InversionError",
    "TransformCapacityError",
    "make_series",
    "from_coefficients",
    "one",
    "zero",
    "add",
    "sub",
    "mul",
    "power",
    "invert",
    "dissect",
    "inflate",
    "alternate_sign",
    "reduce_mod",
    "coeff_at",
    "series_equal",
]
