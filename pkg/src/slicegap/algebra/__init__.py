"""Exact rings, truncated series, integer matrices and chain complexes."""

from .rings import (QQ, ZZ, CyclotomicDyadic, CyclotomicMod2, FiniteField, IntegerRing, LaurentRing,
                    PrimeField, RationalField, Ring, RingError)
from .series import SeriesError, TruncSeries, series_compose, series_inverse, series_reverse
from .matrices import (ChainComplexZ, ChainError, IntMatrix, MatrixError, block_matrix, cohomology,
                       format_group, homology, invariant_factors, rank, snf, snf_diagonal)

__all__ = [
    "QQ", "ZZ", "CyclotomicDyadic", "CyclotomicMod2", "FiniteField", "IntegerRing", "LaurentRing",
    "PrimeField", "RationalField", "Ring", "RingError", "SeriesError", "TruncSeries", "series_compose",
    "series_reverse", "series_inverse", "ChainComplexZ", "ChainError", "IntMatrix", "MatrixError", "block_matrix",
    "cohomology", "format_group", "homology", "invariant_factors", "rank", "snf", "snf_diagonal",
]
