"""Exact ordinal arithmetic and ordinal covering compactness."""

from .ordinal import (
    KAPPA, KAPPA_PLUS, OMEGA, ONE, ZERO, CardClass, Exponent, Ordinal, OrdinalError, UnsupportedOrdinal, add,
    cofinality, left_sub, mul, natural_sum, parse, power,
)
from .sums import is_mixed_sum, is_shifted_sum, min_mixed_sum, mixed_sums, shifted_sums, sigma, star_sum
from .intervals import IntervalSet
from .transfer import ImplicationQuery, Interval, SpaceClass, Verdict, implies, implies_compactness

__all__ = [
    "KAPPA", "KAPPA_PLUS", "OMEGA", "ONE", "ZERO", "CardClass", "Exponent", "Ordinal", "OrdinalError",
    "UnsupportedOrdinal", "add", "cofinality", "left_sub", "mul", "natural_sum", "parse", "power",
    "is_mixed_sum", "is_shifted_sum", "min_mixed_sum", "mixed_sums", "shifted_sums", "sigma", "star_sum",
    "IntervalSet", "ImplicationQuery", "Interval", "SpaceClass", "Verdict", "implies", "implies_compactness",
]
