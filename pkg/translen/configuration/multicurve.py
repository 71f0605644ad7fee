"""
Multicurve configurations, twist words and family instances.

A configuration lists the curves of two multicurves A and B together with
their pairwise geometric intersection numbers, plus witness (test) curves
given by their intersection rows against the configuration curves.
Coordinates of intersection vectors are the configuration curves followed
by the witnesses, in declaration order.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

import networkx as nx

from translen.exceptions import StructuralError
from translen.logger_utils.logger_utils import setup_logger
from translen.surface.surface import Surface

logger = setup_logger("multicurve", module="configuration")


class CurveClass(str, Enum):
    A = "A"
    B = "B"

    @property
    def twist_sign(self) -> int:
        """Penner convention: positive twists about A, negative twists about B."""
        return 1 if self is CurveClass.A else -1


@dataclass(frozen=True)
class Curve:
    name: str
    curve_class: CurveClass
    separating: bool = True

    def __post_init__(self):
        try:
            object.__setattr__(self, "curve_class", CurveClass(self.curve_class))
        except ValueError:
            raise StructuralError(f"curve '{self.name}' has class {self.curve_class!r}, expected 'A' or 'B'")


@dataclass(frozen=True)
class Witness:
    name: str
    intersections: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "intersections", tuple(self.intersections))


def _check_entry(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise StructuralError(f"{where} must be a nonnegative integer, got {value!r}")
    return value


@dataclass(frozen=True)
class MulticurveConfiguration:
    """
    Curves, their intersection matrix and witness rows on a surface.

    Construction checks structure only (dimensions, entry types, unique
    names). Symmetry, zero diagonal, class disjointness and connectivity are
    reported by validate_penner.
    """

    surface: Surface
    curves: Tuple[Curve, ...]
    intersections: Tuple[Tuple[int, ...], ...]
    witnesses: Tuple[Witness, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        object.__setattr__(self, "intersections", tuple(tuple(row) for row in self.intersections))
        object.__setattr__(self, "witnesses", tuple(self.witnesses))

        size = len(self.curves)
        if size == 0:
            raise StructuralError("A configuration needs at least one curve")
        if len(self.intersections) != size:
            raise StructuralError(
                f"intersections has {len(self.intersections)} rows but there are {size} curves"
            )
        for i, row in enumerate(self.intersections):
            if len(row) != size:
                raise StructuralError(f"intersections[{i}] has {len(row)} entries, expected {size}")
            for j, value in enumerate(row):
                _check_entry(value, f"intersections[{i}][{j}]")

        for witness in self.witnesses:
            if len(witness.intersections) != size:
                raise StructuralError(
                    f"witness '{witness.name}' has {len(witness.intersections)} entries, expected {size}"
                )
            for j, value in enumerate(witness.intersections):
                _check_entry(value, f"witness '{witness.name}' entry {j}")

        names = [c.name for c in self.curves] + [w.name for w in self.witnesses]
        seen = set()
        for name in names:
            if not isinstance(name, str) or not name:
                raise StructuralError(f"Curve and witness names must be non-empty strings, got {name!r}")
            if name in seen:
                raise StructuralError(f"Duplicate curve or witness name: '{name}'")
            seen.add(name)

    @property
    def curve_names(self) -> Tuple[str, ...]:
        return tuple(c.name for c in self.curves)

    @property
    def witness_names(self) -> Tuple[str, ...]:
        return tuple(w.name for w in self.witnesses)

    @cached_property
    def coordinate_names(self) -> Tuple[str, ...]:
        return self.curve_names + self.witness_names

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.coordinate_names)}

    @property
    def dimension(self) -> int:
        return len(self.curves)

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise StructuralError(f"Unknown curve or witness: '{name}'")

    def is_curve(self, name: str) -> bool:
        return self._index.get(name, len(self.curves)) < len(self.curves)

    def is_witness(self, name: str) -> bool:
        return self._index.get(name, -1) >= len(self.curves)

    def curve(self, name: str) -> Curve:
        if not self.is_curve(name):
            raise StructuralError(f"'{name}' is not a configuration curve")
        return self.curves[self._index[name]]

    def curve_index(self, name: str) -> int:
        if not self.is_curve(name):
            raise StructuralError(f"'{name}' is not a configuration curve")
        return self._index[name]

    def intersection(self, first: str, second: str) -> int:
        """i(first, second) where at least one of the two is a configuration curve."""
        i, j = self.index_of(first), self.index_of(second)
        size = len(self.curves)
        if i < size and j < size:
            return self.intersections[i][j]
        if i < size:
            return self.witnesses[j - size].intersections[i]
        if j < size:
            return self.witnesses[i - size].intersections[j]
        raise StructuralError(f"Intersections between witnesses are not recorded ('{first}', '{second}')")

    def coordinate_row(self, name: str) -> Tuple[int, ...]:
        """Intersection numbers of a configuration curve or witness with every coordinate."""
        size = len(self.curves)
        i = self.index_of(name)
        if i < size:
            return self.intersections[i] + tuple(w.intersections[i] for w in self.witnesses)
        # Witness-witness intersections are unknown and reported as 0
        return self.witnesses[i - size].intersections + (0,) * len(self.witnesses)

    @cached_property
    def twist_targets(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """
        For each curve index c: the (coordinate index, i(c, e)) pairs with
        e != c and i(c, e) > 0, witnesses included.
        """
        targets = []
        for c in range(len(self.curves)):
            row = self.coordinate_row(self.curves[c].name)
            targets.append(tuple((e, value) for e, value in enumerate(row) if e != c and value > 0))
        return tuple(targets)

    @cached_property
    def twist_masks(self) -> Tuple[int, ...]:
        """Bitmask version of twist_targets over coordinate indices."""
        masks = []
        for targets in self.twist_targets:
            mask = 0
            for e, _ in targets:
                mask |= 1 << e
            masks.append(mask)
        return tuple(masks)

    def intersection_graph(self) -> nx.Graph:
        """Configuration curves joined where they intersect, weighted by intersection number."""
        graph = nx.Graph()
        graph.add_nodes_from(self.curve_names)
        names = self.curve_names
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                if self.intersections[i][j] > 0:
                    graph.add_edge(names[i], names[j], weight=self.intersections[i][j])
        return graph


@dataclass(frozen=True)
class TwistWord:
    """
    Word in Dehn twists about configuration curves.

    Letters are written left to right and applied right to left: the
    rightmost letter acts first. The sign of each twist is given by the
    class of its curve.
    """

    letters: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.letters + other.letters)

    def power(self, m: int) -> "TwistWord":
        if m < 0:
            raise StructuralError(f"Word powers must be nonnegative, got {m}")
        return TwistWord(self.letters * m)

    def application_order(self) -> Tuple[str, ...]:
        return tuple(reversed(self.letters))

    def check_against(self, config: MulticurveConfiguration) -> None:
        """Raise StructuralError if a letter is not a configuration curve."""
        for position, letter in enumerate(self.letters):
            if config.is_witness(letter):
                raise StructuralError(f"word[{position}] = '{letter}' is a witness, not a configuration curve")
            if not config.is_curve(letter):
                raise StructuralError(f"word[{position}] = '{letter}' is not a configuration curve")

    def render(self, config: Optional[MulticurveConfiguration] = None) -> str:
        if config is None:
            return " ".join(self.letters)
        return " ".join(
            f"T_{letter}" if config.curve(letter).curve_class.twist_sign > 0 else f"T_{letter}^-1"
            for letter in self.letters
        )


@dataclass(frozen=True)
class FamilyInstance:
    """
    A configuration with a word, a seed curve and a witness curve.

    The seed must be disjoint from the witness so the witness is at
    distance 1 from the seed in the curve graph.
    """

    config: MulticurveConfiguration
    word: TwistWord
    seed: str
    witness: str
    claimed_j: Optional[int] = None
    claimed_bound: Optional[Fraction] = None
    kind: str = "custom"
    parameter: Optional[int] = None
    metadata: Tuple[Tuple[str, str], ...] = field(default=())

    def __post_init__(self):
        self.word.check_against(self.config)
        if not self.config.is_curve(self.seed):
            raise StructuralError(f"seed '{self.seed}' is not a configuration curve")
        if not self.config.is_witness(self.witness):
            raise StructuralError(f"witness '{self.witness}' is not a declared witness")
        if self.config.intersection(self.seed, self.witness) != 0:
            raise StructuralError(
                f"seed '{self.seed}' meets witness '{self.witness}' "
                f"({self.config.intersection(self.seed, self.witness)} times); they must be disjoint"
            )

    @property
    def surface(self) -> Surface:
        return self.config.surface

    def with_word(self, word: TwistWord) -> "FamilyInstance":
        return replace(self, word=word, claimed_j=None, claimed_bound=None)


def build_configuration(surface: Surface, curves: Iterable[Curve],
                        intersections: Sequence[Sequence[int]],
                        witnesses: Iterable[Witness] = ()) -> MulticurveConfiguration:
    return MulticurveConfiguration(
        surface=surface,
        curves=tuple(curves),
        intersections=tuple(tuple(row) for row in intersections),
        witnesses=tuple(witnesses),
    )
