"""
Both halves of a bound for one family instance.
"""

from dataclasses import dataclass
from typing import Optional

from translen.bounds.lower import GroupKind, LowerBoundRecord, lower_bound
from translen.bounds.upper import UpperBoundCertificate, certify_upper
from translen.configuration.multicurve import FamilyInstance
from translen.exceptions import ProvisoError
from translen.logger_utils.logger_utils import setup_logger

logger = setup_logger("interval", module="bounds")

FAMILY_GROUPS = {
    "purebraid": GroupKind.PUREBRAID,
    "torelli": GroupKind.TORELLI,
}


@dataclass(frozen=True)
class BoundInterval:
    lower: LowerBoundRecord
    upper: UpperBoundCertificate

    @property
    def ordered(self) -> bool:
        return self.lower.bound <= self.upper.bound


def interval(inst: FamilyInstance, group_kind=None, max_j: Optional[int] = None,
             mode: Optional[str] = None) -> BoundInterval:
    """
    Lower bound for the group on the instance's surface and upper certificate
    for the instance. The group defaults to the one of the family kind.

    Raises:
        ProvisoError: If no group is given for a custom instance
    """
    if group_kind is None:
        if inst.kind not in FAMILY_GROUPS:
            raise ProvisoError(f"No group known for family kind '{inst.kind}'; pass group_kind")
        group_kind = FAMILY_GROUPS[inst.kind]
    surface = inst.surface
    lower = lower_bound(group_kind, surface.genus, surface.punctures)
    upper = certify_upper(inst, max_j=max_j, mode=mode)
    result = BoundInterval(lower=lower, upper=upper)
    if not result.ordered:
        logger.error(
            f"{inst.kind} {inst.parameter}: lower bound 1/{lower.w} exceeds upper bound "
            f"{upper.bound.numerator}/{upper.bound.denominator}"
        )
    return result
