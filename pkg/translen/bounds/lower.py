"""
Lower bounds on the minimal translation length of a subgroup.

Every pseudo-Anosov f with a real-branch budget r and a transition-matrix
exponent q satisfies ell(f) >= 1/w, where

    k = 2qr + 24|chi| - 8n,    w = k + 6|chi| - 2n.

r is the branch budget of the surface. q comes from the sign of the
Lefschetz number for the Torelli group, and from an Euler-Poincare
pigeonhole argument over puncture prongs for pure braids and the pure
mapping class group.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from translen.exceptions import ProvisoError, StructuralError
from translen.logger_utils.logger_utils import setup_logger
from translen.surface.surface import Surface, branch_budget, require_complexity

logger = setup_logger("lower", module="bounds")


class GroupKind(str, Enum):
    TORELLI = "torelli"
    PUREBRAID = "purebraid"
    PMOD = "pmod"


TORELLI_MIN_GENUS = 2
PUREBRAID_MIN_PUNCTURES = 4

# Real branches per monogon (case 1) and per bigon (case 2) that would
# exceed the budget; q is one less.
CASE_CONSTANTS = {
    GroupKind.PUREBRAID: (24, 12),
    GroupKind.PMOD: (32, 16),
}


def lefschetz_number(traces: Sequence[int]) -> int:
    """Alternating sum of the traces of f on H_0, H_1, H_2, ..."""
    return sum(trace if i % 2 == 0 else -trace for i, trace in enumerate(traces))


def lefschetz_torelli(g: int) -> int:
    """
    L(f) for f acting trivially on H_1(S_g): traces (1, 2g, 1), so 2 - 2g.

    Raises:
        ProvisoError: If g < 2 (L(f) >= 0 and no fixed rectangle is forced)
    """
    if g < TORELLI_MIN_GENUS:
        raise ProvisoError(f"Lefschetz argument needs g >= {TORELLI_MIN_GENUS} so that L(f) = 2 - 2g < 0, got g = {g}")
    return lefschetz_number((1, 2 * g, 1))


@dataclass(frozen=True)
class SingularityData:
    """Prong counts of the puncture singularities and of the interior singularities."""

    puncture_prongs: Tuple[int, ...] = ()
    interior_prongs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "puncture_prongs", tuple(self.puncture_prongs))
        object.__setattr__(self, "interior_prongs", tuple(self.interior_prongs))
        for prongs in self.puncture_prongs:
            if prongs < 1:
                raise StructuralError(f"puncture singularities have at least 1 prong, got {prongs}")
        for prongs in self.interior_prongs:
            if prongs < 3:
                raise StructuralError(f"interior singularities have at least 3 prongs, got {prongs}")

    @property
    def monogons(self) -> int:
        """k_1: 1-pronged punctures."""
        return sum(1 for p in self.puncture_prongs if p == 1)

    @property
    def bigons(self) -> int:
        """k_2: 2-pronged (regular) punctures."""
        return sum(1 for p in self.puncture_prongs if p == 2)

    def index_sum(self) -> int:
        return sum(2 - p for p in self.puncture_prongs + self.interior_prongs)


def euler_poincare_check(closed_chi: int, d: SingularityData) -> bool:
    """True iff the sum of (2 - P_s) over all singularities equals 2 * closed_chi."""
    total = d.index_sum()
    result = total == 2 * closed_chi
    logger.debug(f"euler_poincare_check: sum(2 - P_s) = {total}, 2*chi = {2 * closed_chi}, result {result}")
    return result


def _fmt(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class PigeonholeCase:
    """
    One branch of the prong-counting argument.

    count_bound is the strict lower bound on the number of monogons (case 1)
    or the lower bound on bigons (case 2); forced_branches is
    (m/2) * count_bound. The case yields q = m - 1 when forced_branches
    exceeds the real-branch budget.
    """

    name: str
    condition: str
    branches_per_singularity: int
    count_bound: Fraction
    forced_branches: Fraction
    budget: int
    holds: bool

    @property
    def q_constant(self) -> int:
        return self.branches_per_singularity - 1

    def chain(self) -> str:
        half = self.branches_per_singularity // 2
        variable = "k1" if self.name == "monogon" else "k2"
        relation = ">" if self.holds else "<="
        return (
            f"{self.condition}: {half}*{variable} >= {_fmt(self.forced_branches)} "
            f"{relation} {self.budget} = 3|chi| "
            f"({'contradiction, q = ' + str(self.q_constant) if self.holds else 'no contradiction'})"
        )


@dataclass(frozen=True)
class QDerivation:
    group_kind: GroupKind
    surface: Surface
    q: int
    source: str
    lefschetz: Optional[int] = None
    cases: Tuple[PigeonholeCase, ...] = ()

    def chain(self) -> List[str]:
        lines = []
        if self.lefschetz is not None:
            lines.append(f"L(f) = 2 - 2g = {self.lefschetz} < 0: a rectangle is fixed, q = 1")
        lines.extend(case.chain() for case in self.cases)
        lines.append(f"q = {self.q} (from {self.source})")
        return lines


def _pigeonhole_cases(kind: GroupKind, genus: int, punctures: int, budget: int) -> Tuple[PigeonholeCase, ...]:
    closed_chi = 2 - 2 * genus
    monogon_m, bigon_m = CASE_CONSTANTS[kind]

    # k1 >= (n - k2)/2 + chi(closed); with k2 < n/2 this is k1 > n/4 + chi(closed)
    k1_bound = Fraction(punctures, 4) + closed_chi
    monogon_forced = Fraction(monogon_m, 2) * k1_bound
    k2_bound = Fraction(punctures, 2)
    bigon_forced = Fraction(bigon_m, 2) * k2_bound

    return (
        PigeonholeCase(
            name="monogon",
            condition=f"case 1 (k2 < n/2, k1 > n/4 + {closed_chi} = {_fmt(k1_bound)})",
            branches_per_singularity=monogon_m,
            count_bound=k1_bound,
            forced_branches=monogon_forced,
            budget=budget,
            holds=monogon_forced > budget,
        ),
        PigeonholeCase(
            name="bigon",
            condition=f"case 2 (k2 >= n/2 = {_fmt(k2_bound)})",
            branches_per_singularity=bigon_m,
            count_bound=k2_bound,
            forced_branches=bigon_forced,
            budget=budget,
            holds=bigon_forced > budget,
        ),
    )


def q_derivation(group_kind, s: Surface) -> QDerivation:
    """
    Derive q for a group on a surface, with the inequality chain.

    Raises:
        ProvisoError: If the surface does not suit the group, or a
            pigeonhole case fails to reach a contradiction
        SurfaceError: If a pmod surface meets n > 38g - 38 but has xi < 2
    """
    kind = _group_kind(group_kind)

    if kind is GroupKind.TORELLI:
        if not s.is_closed:
            raise ProvisoError(f"torelli needs a closed surface, got {s.label()}")
        lefschetz = lefschetz_torelli(s.genus)
        return QDerivation(kind, s, q=1, source="negative Lefschetz number", lefschetz=lefschetz)

    if kind is GroupKind.PUREBRAID:
        if not s.is_disk or s.punctures < PUREBRAID_MIN_PUNCTURES:
            raise ProvisoError(
                f"purebraid needs D_n with n >= {PUREBRAID_MIN_PUNCTURES}, got {s.label()}"
            )
    else:
        if s.boundary:
            raise ProvisoError(f"pmod needs a surface without boundary, got {s.label()}")
        if s.punctures > 38 * s.genus - 38:
            require_complexity(s)

    budget = 3 * s.abs_chi
    cases = _pigeonhole_cases(kind, s.genus, s.punctures, budget)
    for case in cases:
        if not case.holds:
            message = f"{kind.value} on {s.label()}: {case.chain()}"
            if kind is GroupKind.PMOD:
                message += f"; requires n > 38g - 38 = {38 * s.genus - 38}, got n = {s.punctures}"
            raise ProvisoError(message)

    best = max(cases, key=lambda case: case.q_constant)
    return QDerivation(kind, s, q=best.q_constant, source=f"{best.name} case", cases=cases)


def derive_q(group_kind, s: Surface) -> int:
    """q = 1 for torelli, 23 for purebraid, 31 for pmod, after checking the provisos."""
    derivation = q_derivation(group_kind, s)
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(f"derive_q({derivation.group_kind.value}, {s.label()}): " + "; ".join(derivation.chain()))
    return derivation.q


@dataclass(frozen=True)
class LowerBoundRecord:
    surface: Surface
    q: int
    r: int
    k: int
    w: int
    bound: Fraction
    group_kind: Optional[GroupKind] = None
    published_w: Optional[int] = None
    derivation: Optional[QDerivation] = field(default=None, compare=False)

    @property
    def published_bound(self) -> Optional[Fraction]:
        return Fraction(1, self.published_w) if self.published_w else None

    @property
    def discrepancy(self) -> bool:
        return self.published_w is not None and self.published_w != self.w

    def trace(self) -> List[str]:
        lines = list(self.derivation.chain()) if self.derivation else []
        n = self.surface.punctures
        abs_chi = self.surface.abs_chi
        lines.append(f"r = {self.r} (real-branch budget of {self.surface.label()})")
        lines.append(f"k = 2*{self.q}*{self.r} + 24*{abs_chi} - 8*{n} = {self.k}")
        lines.append(f"w = {self.k} + 6*{abs_chi} - 2*{n} = {self.w}")
        if self.discrepancy:
            lines.append(f"published w = {self.published_w} differs from the derived w = {self.w}")
        return lines


def bound_from_constants(s: Surface, r: int, q: int) -> LowerBoundRecord:
    """
    General lower bound 1/w from explicit constants.

    Evaluates k = 2qr + 24|chi| - 8n and w = k + 6|chi| - 2n for a surface,
    branch budget r and exponent q. lower_bound feeds it r from
    branch_budget and q from derive_q; any other certified pair can be
    passed directly.

    Raises:
        SurfaceError: If xi(s) < 2
        ProvisoError: If r < 1, q < 1 or w <= 0
    """
    require_complexity(s)
    if r < 1:
        raise ProvisoError(f"r must be >= 1, got r = {r}")
    if q < 1:
        raise ProvisoError(f"q must be >= 1, got q = {q}")
    abs_chi = s.abs_chi
    n = s.punctures
    k = 2 * q * r + 24 * abs_chi - 8 * n
    w = k + 6 * abs_chi - 2 * n
    if w <= 0:
        raise ProvisoError(f"w = {w} is not positive for {s.label()}, r = {r}, q = {q}")
    return LowerBoundRecord(surface=s, q=q, r=r, k=k, w=w, bound=Fraction(1, w))


def _group_kind(group_kind) -> GroupKind:
    try:
        return GroupKind(group_kind)
    except ValueError:
        raise ProvisoError(
            f"Unknown group '{group_kind}', expected one of {', '.join(k.value for k in GroupKind)}"
        )


def _surface_for(kind: GroupKind, g: int, n: int) -> Surface:
    if kind is GroupKind.TORELLI:
        if n:
            raise ProvisoError(f"torelli needs a closed surface, got {n} punctures")
        return Surface.closed(g)
    if kind is GroupKind.PUREBRAID:
        if g:
            raise ProvisoError(f"purebraid lives on the punctured disk (genus 0), got genus {g}")
        if n < PUREBRAID_MIN_PUNCTURES:
            raise ProvisoError(f"purebraid needs n >= {PUREBRAID_MIN_PUNCTURES}, got n = {n}")
        return Surface.disk(n)
    return Surface.punctured(g, n)


def published_w(kind: GroupKind, g: int, n: int) -> int:
    if kind is GroupKind.TORELLI:
        return 96 * g - 96
    if kind is GroupKind.PUREBRAID:
        return 158 * n - 168
    return 1296 * g + 638 * n - 1296


def lower_bound(group_kind, g: int = 0, n: int = 0) -> LowerBoundRecord:
    """
    Lower bound 1/w for a group on S_g (torelli), D_n (purebraid) or S_{g,n} (pmod).

    The record also carries the published constant (96g - 96, 158n - 168
    or 1296g + 638n - 1296); only pmod differs from the derived w.

    Raises:
        ProvisoError: If a group precondition or proviso is violated
        SurfaceError: If the surface is invalid or xi < 2
    """
    kind = _group_kind(group_kind)
    surface = _surface_for(kind, g, n)
    derivation = q_derivation(kind, surface)
    r = branch_budget(surface).max_real
    record = bound_from_constants(surface, r, derivation.q)
    record = replace(
        record,
        group_kind=kind,
        derivation=derivation,
        published_w=published_w(kind, g, n),
    )
    logger.info(f"lower_bound({kind.value}, g={g}, n={n}): w = {record.w}, bound = {_fmt(record.bound)}")
    if record.discrepancy:
        logger.info(f"{kind.value} on {surface.label()}: derived w = {record.w}, published w = {record.published_w}")
    return record
