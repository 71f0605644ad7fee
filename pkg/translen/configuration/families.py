"""
Generators for the explicit Penner families on D_n and S_g.

Adjacent curves intersect twice: separating and puncture-bounding curves
meet an even number of times and the certificates depend only on which
intersections vanish. Inside each multitwist the letters are applied in
descending index; twists about disjoint curves commute, so the order does
not change the mapping class.
"""

from fractions import Fraction
from typing import List, Tuple

from translen.configuration.multicurve import (
    Curve,
    CurveClass,
    FamilyInstance,
    TwistWord,
    Witness,
    build_configuration,
)
from translen.configuration.validation import require_penner
from translen.exceptions import ProvisoError, SurfaceError
from translen.logger_utils.logger_utils import setup_logger
from translen.surface.surface import Surface

logger = setup_logger("families", module="configuration")

ADJACENT_INTERSECTION = 2
WITNESS_NAME = "gamma"
TORELLI_MIN_GENUS = 13
PUREBRAID_MIN_PUNCTURES = 4

FAMILY_KINDS = ("purebraid", "torelli")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def purebraid_family(n: int) -> FamilyInstance:
    """
    Pure braid f_n = prod_{i=1}^{n-1} T_{a_i}^{(-1)^{i+1}} on D_n.

    a_i bounds the punctures p_i and p_{i+1}; odd-indexed curves form the
    multicurve A and even-indexed ones B. The witness gamma encloses
    p_1 .. p_{n-1} and meets only a_{n-1}. The seed a_1 stays disjoint from
    gamma for n - 3 iterations, giving the claimed bound 2/(n-3).

    Raises:
        SurfaceError: If n < 4 (xi(D_n) < 2)
    """
    if not isinstance(n, int) or n < PUREBRAID_MIN_PUNCTURES:
        raise SurfaceError(
            f"purebraid family needs n >= {PUREBRAID_MIN_PUNCTURES} (xi(D_n) = n - 2 >= 2), got n = {n}"
        )

    count = n - 1
    curves = [
        Curve(f"a{i}", CurveClass.A if i % 2 == 1 else CurveClass.B, separating=True)
        for i in range(1, n)
    ]
    matrix = [[0] * count for _ in range(count)]
    for k in range(count - 1):
        matrix[k][k + 1] = matrix[k + 1][k] = ADJACENT_INTERSECTION
    gamma_row = [0] * count
    gamma_row[-1] = ADJACENT_INTERSECTION

    config = build_configuration(
        Surface.disk(n), curves, matrix, [Witness(WITNESS_NAME, tuple(gamma_row))]
    )
    # Rightmost letter acts first: a_{n-1}, ..., a_1
    word = TwistWord(tuple(curve.name for curve in curves))
    instance = FamilyInstance(
        config=config,
        word=word,
        seed="a1",
        witness=WITNESS_NAME,
        claimed_j=n - 3,
        claimed_bound=Fraction(2, n - 3),
        kind="purebraid",
        parameter=n,
        metadata=(("witness_essential", "gamma encloses p_1..p_{n-1}, essential and distinct from a_1"),),
    )
    logger.debug(f"Generated purebraid family n={n}: {count} curves")
    return instance


def torelli_family(g: int) -> FamilyInstance:
    """
    Torelli element f_g = T_B^{-1} T_A on the closed surface S_g.

    With m = floor(g/2): separating curves a_0..a_m (class A) and b_0..b_m
    (class B) form the chain a_0 - b_0 - a_1 - b_1 - ... - a_m - b_m, i.e.
    a_k meets b_{k-1} and b_k. The witness gamma meets exactly the curves of
    index 0 and of index >= m - 1. Seed a_i with i = ceil(g/4); claimed
    j = ceil(g/4) - 3 and claimed bound 8/(g - 12).

    Raises:
        ProvisoError: If g < 13
    """
    if not isinstance(g, int) or g < TORELLI_MIN_GENUS:
        raise ProvisoError(f"torelli family needs g >= {TORELLI_MIN_GENUS}, got g = {g}")

    m = g // 2
    a_names = [f"a{k}" for k in range(m + 1)]
    b_names = [f"b{k}" for k in range(m + 1)]
    curves = [Curve(name, CurveClass.A, separating=True) for name in a_names]
    curves += [Curve(name, CurveClass.B, separating=True) for name in b_names]

    size = len(curves)
    offset = m + 1
    matrix = [[0] * size for _ in range(size)]
    for k in range(m + 1):
        neighbours = [k] + ([k - 1] if k >= 1 else [])
        for b_index in neighbours:
            matrix[k][offset + b_index] = matrix[offset + b_index][k] = ADJACENT_INTERSECTION

    def _meets_gamma(index: int) -> bool:
        return index == 0 or index >= m - 1

    gamma_row = [ADJACENT_INTERSECTION if _meets_gamma(k) else 0 for k in range(m + 1)] * 2

    config = build_configuration(
        Surface.closed(g), curves, matrix, [Witness(WITNESS_NAME, tuple(gamma_row))]
    )
    # Leftmost letters act last: T_B^{-1} after T_A, descending index inside each
    word = TwistWord(tuple(b_names) + tuple(a_names))
    seed_index = _ceil_div(g, 4)
    instance = FamilyInstance(
        config=config,
        word=word,
        seed=f"a{seed_index}",
        witness=WITNESS_NAME,
        claimed_j=seed_index - 3,
        claimed_bound=Fraction(8, g - 12),
        kind="torelli",
        parameter=g,
        metadata=(("witness_essential", "gamma is essential and distinct from a_i and its images"),),
    )
    logger.debug(f"Generated torelli family g={g}: {size} curves, seed a{seed_index}")
    return instance


def generate_family(kind: str, parameter: int) -> FamilyInstance:
    if kind == "purebraid":
        return purebraid_family(parameter)
    if kind == "torelli":
        return torelli_family(parameter)
    raise ProvisoError(f"Unknown family kind '{kind}', expected one of {', '.join(FAMILY_KINDS)}")


def torelli_verdict(inst: FamilyInstance) -> Tuple[bool, str]:
    """
    Decide membership of the word's mapping class in the Torelli-type subgroup.

    Raises:
        ValidationError: If the instance fails Penner validation
    """
    require_penner(inst.config, inst.word)
    config = inst.config
    if config.surface.is_disk:
        return True, "twists fix punctures pointwise"

    non_separating: List[str] = sorted(
        {letter for letter in inst.word if not config.curve(letter).separating}
    )
    if non_separating:
        return False, f"non-separating curves twisted: {', '.join(non_separating)}"
    return True, "every twisted curve is separating"


def is_torelli(inst: FamilyInstance) -> bool:
    result, reason = torelli_verdict(inst)
    logger.info(f"is_torelli({inst.kind}, {inst.parameter}) = {result}: {reason}")
    return result
