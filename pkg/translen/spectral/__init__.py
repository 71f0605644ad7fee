from translen.spectral.boolean import BooleanMatrix
from translen.spectral.spectral import (
    SpectralResult,
    diagonal_positive_exponent,
    dilatation,
    primitivity_exponent,
    word_dilatation,
)

__all__ = [
    "BooleanMatrix",
    "SpectralResult",
    "diagonal_positive_exponent",
    "dilatation",
    "primitivity_exponent",
    "word_dilatation",
]
