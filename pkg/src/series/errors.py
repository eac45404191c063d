"""Exceptions raised by the truncated power-series layer."""


class SeriesError(Exception):
    """Base class for all series arithmetic failures."""


class RingMismatchError(SeriesError, ValueError):
    """Two operands live in different coefficient rings."""


class OutOfRangeError(SeriesError, IndexError):
    """An exponent, residue or index lies outside the retained range."""


class InversionError(SeriesError, ArithmeticError):
    """The constant term of a series is not a unit of its ring."""


class TransformCapacityError(SeriesError):
    """A product is too long for the available number-theoretic transforms."""
