"""
Square matrices over the Boolean semiring, one bitmask per row.

Bit j of rows[i] is set when entry (i, j) is positive. Products use
OR-accumulation of the other matrix's rows, so powers of a nonnegative
integer matrix keep exactly its zero pattern.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from translen.exceptions import SpectralPreconditionError
from translen.twist_engine.transition import TransitionMatrix


@dataclass(frozen=True)
class BooleanMatrix:
    size: int
    rows: Tuple[int, ...]

    @classmethod
    def from_pattern(cls, pattern: Sequence[Sequence[bool]]) -> "BooleanMatrix":
        rows = []
        for row in pattern:
            mask = 0
            for j, value in enumerate(row):
                if value:
                    mask |= 1 << j
            rows.append(mask)
        return cls(len(rows), tuple(rows))

    @classmethod
    def of(cls, m: TransitionMatrix) -> "BooleanMatrix":
        """
        Zero pattern of a transition matrix.

        Raises:
            SpectralPreconditionError: If an entry is negative
        """
        if any(value < 0 for row in m.rows for value in row):
            raise SpectralPreconditionError("Matrix has negative entries; Boolean powering needs a nonnegative matrix")
        return cls.from_pattern(m.zero_pattern())

    @property
    def full_row(self) -> int:
        return (1 << self.size) - 1

    def __matmul__(self, other: "BooleanMatrix") -> "BooleanMatrix":
        rows = []
        for mask in self.rows:
            acc = 0
            while mask:
                low = mask & -mask
                acc |= other.rows[low.bit_length() - 1]
                mask ^= low
            rows.append(acc)
        return BooleanMatrix(self.size, tuple(rows))

    def is_positive(self) -> bool:
        full = self.full_row
        return all(row == full for row in self.rows)

    def has_positive_diagonal(self) -> bool:
        return any(row >> i & 1 for i, row in enumerate(self.rows))

    def pattern(self) -> Tuple[Tuple[bool, ...], ...]:
        return tuple(tuple(bool(row >> j & 1) for j in range(self.size)) for row in self.rows)
