"""
Action of Penner multitwist words on intersection vectors.

A curve d is recorded by its intersection numbers with every configuration
curve and witness. Twisting about c updates each other coordinate e by
i(c, e) * v[c]. For Penner words the composed action has no cancellation,
so the update is exact; for any word it bounds the true intersection
numbers from above, hence a computed zero is a true zero. Both twist signs
use the same nonnegative update.
"""

import logging
from dataclasses import dataclass
from itertools import islice
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Tuple

from translen.configuration.multicurve import MulticurveConfiguration, TwistWord
from translen.exceptions import StructuralError
from translen.logger_utils.logger_utils import setup_logger

logger = setup_logger("intersection", module="twist_engine")


@dataclass(frozen=True)
class IntersectionVector:
    """Nonnegative integer coordinates indexed by configuration curves and witnesses."""

    names: Tuple[str, ...]
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.entries):
            raise StructuralError(f"{len(self.names)} names but {len(self.entries)} entries")
        for name, value in zip(self.names, self.entries):
            if value < 0:
                raise StructuralError(f"coordinate '{name}' is negative ({value})")

    @classmethod
    def zero(cls, config: MulticurveConfiguration) -> "IntersectionVector":
        names = config.coordinate_names
        return cls(names, (0,) * len(names))

    @classmethod
    def of_curve(cls, config: MulticurveConfiguration, name: str) -> "IntersectionVector":
        """Coordinates of a configuration curve or witness: its row of intersection numbers."""
        return cls(config.coordinate_names, config.coordinate_row(name))

    @classmethod
    def from_mapping(cls, config: MulticurveConfiguration, values: Mapping[str, int]) -> "IntersectionVector":
        """Missing names default to 0; unknown names are rejected."""
        entries = [0] * len(config.coordinate_names)
        for name, value in values.items():
            entries[config.index_of(name)] = value
        return cls(config.coordinate_names, tuple(entries))

    def __getitem__(self, name: str) -> int:
        try:
            return self.entries[self.names.index(name)]
        except ValueError:
            raise StructuralError(f"Unknown coordinate '{name}'")

    def as_dict(self) -> Dict[str, int]:
        return dict(zip(self.names, self.entries))

    def dominates(self, other: "IntersectionVector") -> bool:
        """Coordinatewise >=."""
        return self.names == other.names and all(a >= b for a, b in zip(self.entries, other.entries))

    def curve_part(self, config: MulticurveConfiguration) -> Tuple[int, ...]:
        return self.entries[:config.dimension]


def _check_vector(v: IntersectionVector, config: MulticurveConfiguration) -> None:
    if v.names != config.coordinate_names:
        raise StructuralError("Vector coordinates do not match the configuration")


def _twist_in_place(entries: List[int], config: MulticurveConfiguration, curve_index: int) -> None:
    weight = entries[curve_index]
    if weight == 0:
        return
    for e, value in config.twist_targets[curve_index]:
        entries[e] += value * weight


def apply_twist(v: IntersectionVector, config: MulticurveConfiguration, curve: str) -> IntersectionVector:
    """
    out[e] = v[e] + i(curve, e) * v[curve] for e != curve; out[curve] = v[curve].

    Raises:
        StructuralError: If curve is not a configuration curve
    """
    _check_vector(v, config)
    index = config.curve_index(curve)
    entries = list(v.entries)
    _twist_in_place(entries, config, index)
    return IntersectionVector(v.names, tuple(entries))


def _application_indices(config: MulticurveConfiguration, word: TwistWord) -> Tuple[int, ...]:
    word.check_against(config)
    return tuple(config.curve_index(letter) for letter in word.application_order())


def apply_word(v: IntersectionVector, config: MulticurveConfiguration, word: TwistWord) -> IntersectionVector:
    """Apply every letter of the word, rightmost first."""
    _check_vector(v, config)
    entries = list(v.entries)
    for index in _application_indices(config, word):
        _twist_in_place(entries, config, index)
    return IntersectionVector(v.names, tuple(entries))


def iterate_word(v: IntersectionVector, config: MulticurveConfiguration,
                 word: TwistWord) -> Iterator[IntersectionVector]:
    """Yield v, w(v), w(w(v)), ... with exact arithmetic."""
    _check_vector(v, config)
    order = _application_indices(config, word)
    entries = list(v.entries)
    yield v
    while True:
        for index in order:
            _twist_in_place(entries, config, index)
        yield IntersectionVector(v.names, tuple(entries))


def support(v: IntersectionVector) -> FrozenSet[str]:
    """Names with a strictly positive entry."""
    return frozenset(name for name, value in zip(v.names, v.entries) if value > 0)


def _mask_of(config: MulticurveConfiguration, names: Iterable[str]) -> int:
    mask = 0
    for name in names:
        mask |= 1 << config.index_of(name)
    return mask


def _names_of(config: MulticurveConfiguration, mask: int) -> FrozenSet[str]:
    names = config.coordinate_names
    return frozenset(names[i] for i in range(len(names)) if mask >> i & 1)


def iterate_supports(seed_support: Iterable[str], config: MulticurveConfiguration,
                     word: TwistWord) -> Iterator[FrozenSet[str]]:
    """
    Saturating version of iterate_word over the Boolean semiring.

    A coordinate turns on when a twisted curve with an on coordinate meets
    it; updates never cancel, so this tracks the zero pattern exactly.
    """
    order = _application_indices(config, word)
    masks = config.twist_masks
    state = _mask_of(config, seed_support)
    yield _names_of(config, state)
    while True:
        for index in order:
            if state >> index & 1:
                state |= masks[index]
        yield _names_of(config, state)


def boolean_propagate(seed_support: Iterable[str], config: MulticurveConfiguration,
                      word: TwistWord, iterations: int) -> List[FrozenSet[str]]:
    """Supports after 0, 1, ..., iterations word applications."""
    if iterations < 0:
        raise StructuralError(f"iterations must be >= 0, got {iterations}")
    supports = list(islice(iterate_supports(seed_support, config, word), iterations + 1))
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(f"boolean_propagate: {iterations} iterations, final support size {len(supports[-1])}")
    return supports
