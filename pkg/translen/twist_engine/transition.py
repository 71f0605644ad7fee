"""
Transition matrices of twist words on the configuration coordinates.

The matrix of a single twist about c is the identity plus column c, whose
(e, c) entry is i(c, e). A word's matrix is the product of its letter
matrices written in word order, so applying it to the curve part of a
vector matches apply_word. Witness coordinates are excluded.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from translen.configuration.multicurve import MulticurveConfiguration, TwistWord
from translen.exceptions import StructuralError
from translen.logger_utils.logger_utils import setup_logger

logger = setup_logger("transition", module="twist_engine")


@dataclass(frozen=True)
class TransitionMatrix:
    """Square nonnegative integer matrix with arbitrary-precision entries."""

    names: Tuple[str, ...]
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        size = len(self.names)
        if len(self.rows) != size or any(len(row) != size for row in self.rows):
            raise StructuralError(f"Transition matrix must be {size}x{size}")
        if any(value < 0 for row in self.rows for value in row):
            raise StructuralError("Transition matrix entries must be nonnegative")

    @classmethod
    def identity(cls, names: Sequence[str]) -> "TransitionMatrix":
        size = len(names)
        return cls(tuple(names), tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], names: Sequence[str] = ()) -> "TransitionMatrix":
        names = tuple(names) or tuple(f"x{i}" for i in range(len(rows)))
        return cls(names, tuple(tuple(int(v) for v in row) for row in rows))

    @property
    def dimension(self) -> int:
        return len(self.names)

    def __matmul__(self, other: "TransitionMatrix") -> "TransitionMatrix":
        if self.names != other.names:
            raise StructuralError("Cannot multiply transition matrices over different coordinates")
        columns = list(zip(*other.rows))
        product = tuple(
            tuple(sum(a * b for a, b in zip(row, column) if a and b) for column in columns)
            for row in self.rows
        )
        return TransitionMatrix(self.names, product)

    def power(self, k: int) -> "TransitionMatrix":
        if k < 0:
            raise StructuralError(f"Matrix powers must be nonnegative, got {k}")
        result = TransitionMatrix.identity(self.names)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, values: Sequence[int]) -> Tuple[int, ...]:
        if len(values) != self.dimension:
            raise StructuralError(f"Vector has {len(values)} entries, expected {self.dimension}")
        return tuple(sum(a * b for a, b in zip(row, values)) for row in self.rows)

    def zero_pattern(self) -> Tuple[Tuple[bool, ...], ...]:
        return tuple(tuple(value > 0 for value in row) for row in self.rows)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dimension))

    def to_numpy(self) -> np.ndarray:
        """Float copy for numerical work; exact entries stay in rows."""
        return np.array([[float(v) for v in row] for row in self.rows], dtype=float)

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


def _left_multiply_letter(rows: List[List[int]], config: MulticurveConfiguration, curve_index: int) -> None:
    """rows <- L_c . rows, where L_c adds i(c, e) * row c to each row e."""
    source = rows[curve_index]
    size = config.dimension
    for e, value in config.twist_targets[curve_index]:
        if e >= size:
            continue
        target = rows[e]
        for column, entry in enumerate(source):
            if entry:
                target[column] += value * entry


def letter_matrix(config: MulticurveConfiguration, curve: str) -> TransitionMatrix:
    """Identity plus column c with (e, c) entry i(c, e)."""
    return word_matrix(config, TwistWord((curve,)))


def word_matrix(config: MulticurveConfiguration, word: TwistWord) -> TransitionMatrix:
    """
    Product of the letter matrices in word order (rightmost letter acts first).

    Raises:
        StructuralError: If a letter is not a configuration curve
    """
    word.check_against(config)
    size = config.dimension
    rows = [[int(i == j) for j in range(size)] for i in range(size)]
    for letter in word.application_order():
        _left_multiply_letter(rows, config, config.curve_index(letter))
    matrix = TransitionMatrix(config.curve_names, tuple(tuple(row) for row in rows))
    logger.debug(f"Assembled {size}x{size} word matrix from {len(word)} letters")
    return matrix


