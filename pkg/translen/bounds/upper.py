"""
Upper bounds from witness disjointness.

If the seed curve a and the witness gamma are disjoint, and gamma stays
disjoint from f^t(a) for t <= j, then d(a, f^j(a)) <= 2 through gamma and
ell(f) <= 2/j. A zero witness coordinate from the twist engine is a true
zero, so the count is sound.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterator, Optional, Tuple, Union

from translen.bounds.config_loader import load_config
from translen.configuration.multicurve import FamilyInstance, MulticurveConfiguration, TwistWord
from translen.configuration.validation import ValidationReport, require_penner
from translen.exceptions import EmptyCertificateError, RangeError, StructuralError, TranslenError
from translen.logger_utils.logger_utils import setup_logger
from translen.twist_engine.intersection import IntersectionVector, iterate_supports, iterate_word, support

logger = setup_logger("upper", module="bounds")

MODES = ("boolean", "exact")

InstanceLike = Union[FamilyInstance, Tuple[MulticurveConfiguration, TwistWord, str, str]]


@dataclass(frozen=True)
class UpperBoundCertificate:
    """
    trace[t] is the support of f^t(seed) for t = 0..j; the witness is
    absent from each. witness_hit_at is the first t where it appears, or
    None when max_j was reached first.
    """

    instance: FamilyInstance
    j: int
    bound: Fraction
    trace: Tuple[FrozenSet[str], ...]
    mode: str
    max_j: int
    witness_hit_at: Optional[int]
    validation: ValidationReport

    @property
    def meets_claim(self) -> Optional[bool]:
        if self.instance.claimed_bound is None:
            return None
        return self.bound <= self.instance.claimed_bound


def _as_instance(inst: InstanceLike) -> FamilyInstance:
    if isinstance(inst, FamilyInstance):
        return inst
    try:
        config, word, seed, witness = inst
    except (TypeError, ValueError):
        raise StructuralError("Expected a FamilyInstance or a (config, word, seed, witness) tuple")
    return FamilyInstance(config=config, word=word, seed=seed, witness=witness)


def _exact_supports(inst: FamilyInstance) -> Iterator[FrozenSet[str]]:
    seed = IntersectionVector.of_curve(inst.config, inst.seed)
    for vector in iterate_word(seed, inst.config, inst.word):
        yield support(vector)


def _boolean_supports(inst: FamilyInstance) -> Iterator[FrozenSet[str]]:
    seed = support(IntersectionVector.of_curve(inst.config, inst.seed))
    return iterate_supports(seed, inst.config, inst.word)


def _spot_checked(inst: FamilyInstance) -> Iterator[FrozenSet[str]]:
    for t, (fast, exact) in enumerate(zip(_boolean_supports(inst), _exact_supports(inst))):
        if fast != exact:
            raise TranslenError(
                f"exact spot check failed at iteration {t}: Boolean support {sorted(fast)} "
                f"differs from exact support {sorted(exact)}"
            )
        yield fast


def certify_upper(inst: InstanceLike, max_j: Optional[int] = None, mode: Optional[str] = None,
                  spot_check: Optional[bool] = None) -> UpperBoundCertificate:
    """
    Count the word applications that keep the witness disjoint from the seed's image.

    Args:
        inst: Family instance, or an explicit (config, word, seed, witness) tuple
        max_j: Largest iteration examined, defaults to the bounds settings
        mode: "boolean" (bitmask propagation) or "exact" (integer vectors)
        spot_check: Compare Boolean supports with exact ones on every iteration;
            defaults to the debug_exact_spot_check setting

    Returns:
        UpperBoundCertificate: j and the bound 2/j

    Raises:
        ValidationError: If the word is not a valid Penner word
        EmptyCertificateError: If the witness is hit by the first application
    """
    settings = load_config()["certify"]
    max_j = settings["max_j"] if max_j is None else max_j
    mode = mode or settings["mode"]
    spot_check = settings["debug_exact_spot_check"] if spot_check is None else spot_check
    if mode not in MODES:
        raise StructuralError(f"Unknown mode '{mode}', expected one of {', '.join(MODES)}")
    if max_j < 1:
        raise RangeError(f"max_j must be >= 1, got {max_j}")

    instance = _as_instance(inst)
    report = require_penner(instance.config, instance.word)

    if mode == "exact":
        supports = _exact_supports(instance)
    elif spot_check:
        supports = _spot_checked(instance)
    else:
        supports = _boolean_supports(instance)

    trace = [next(supports)]
    hit_at = None
    for t in range(1, max_j + 1):
        current = next(supports)
        if instance.witness in current:
            hit_at = t
            break
        trace.append(current)
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(f"t={t}: support size {len(current)}, witness '{instance.witness}' still disjoint")

    j = len(trace) - 1
    if j == 0:
        raise EmptyCertificateError(
            f"witness hit immediately: '{instance.witness}' meets the image of '{instance.seed}' "
            f"after one application of the word"
        )

    certificate = UpperBoundCertificate(
        instance=instance,
        j=j,
        bound=Fraction(2, j),
        trace=tuple(trace),
        mode=mode,
        max_j=max_j,
        witness_hit_at=hit_at,
        validation=report,
    )
    logger.info(
        f"certify_upper({instance.kind}, {instance.parameter}, mode={mode}): j = {j}, "
        f"bound = 2/{j}, witness hit at {hit_at}"
    )
    if instance.claimed_j is not None and j < instance.claimed_j:
        logger.warning(f"{instance.kind} {instance.parameter}: certified j = {j} is below the claimed j = {instance.claimed_j}")
    return certificate


def power_certificate(cert: UpperBoundCertificate, m: int) -> UpperBoundCertificate:
    """
    Certificate for the m-fold word with j' = floor(j/m), re-verified by propagation.

    Raises:
        RangeError: If m < 1
        EmptyCertificateError: If floor(j/m) = 0
    """
    if m < 1:
        raise RangeError(f"power must be >= 1, got m = {m}")
    target = cert.j // m
    if target == 0:
        raise EmptyCertificateError(f"floor({cert.j}/{m}) = 0: the {m}-fold word has an empty certificate")

    powered = cert.instance.with_word(cert.instance.word.power(m))
    powered_cert = certify_upper(powered, max_j=target, mode=cert.mode, spot_check=False)
    if powered_cert.j != target:
        raise TranslenError(
            f"re-verification failed: the {m}-fold word keeps the witness disjoint for "
            f"{powered_cert.j} iterations, expected {target}"
        )
    logger.debug(f"power_certificate(j={cert.j}, m={m}) = {target}")
    return powered_cert
