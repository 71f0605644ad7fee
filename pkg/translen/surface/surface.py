"""
Surface arithmetic: Euler characteristic, complexity and train-track
branch budgets.

A punctured disk D_n is genus 0 with n punctures and one boundary
component; the boundary counts like a puncture in chi and in the
complexity, but not in the puncture count n used by the budgets.
"""

from dataclasses import dataclass
from typing import NamedTuple

from translen.exceptions import SurfaceError
from translen.logger_utils.logger_utils import setup_logger

logger = setup_logger("surface", module="surface")

MIN_COMPLEXITY = 2


@dataclass(frozen=True)
class Surface:
    """Orientable surface of a given genus with punctures and at most one boundary."""

    genus: int
    punctures: int = 0
    boundary: int = 0

    def __post_init__(self):
        for field_name in ("genus", "punctures", "boundary"):
            value = getattr(self, field_name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise SurfaceError(f"Surface {field_name} must be a nonnegative integer, got {value!r}")
        if self.boundary > 1:
            raise SurfaceError(f"At most one boundary component is supported, got {self.boundary}")

    @classmethod
    def closed(cls, genus: int) -> "Surface":
        return cls(genus=genus)

    @classmethod
    def punctured(cls, genus: int, punctures: int) -> "Surface":
        return cls(genus=genus, punctures=punctures)

    @classmethod
    def disk(cls, punctures: int) -> "Surface":
        """The n-punctured disk D_n."""
        return cls(genus=0, punctures=punctures, boundary=1)

    @property
    def is_closed(self) -> bool:
        return self.punctures == 0 and self.boundary == 0

    @property
    def is_disk(self) -> bool:
        return self.genus == 0 and self.boundary == 1

    @property
    def chi(self) -> int:
        return euler_characteristic(self)

    @property
    def abs_chi(self) -> int:
        return abs(euler_characteristic(self))

    @property
    def xi(self) -> int:
        return complexity(self)

    def label(self) -> str:
        if self.is_disk:
            return f"D_{self.punctures}"
        if self.is_closed:
            return f"S_{self.genus}"
        suffix = f",b={self.boundary}" if self.boundary else ""
        return f"S_{{{self.genus},{self.punctures}{suffix}}}"

    def to_dict(self) -> dict:
        return {"genus": self.genus, "punctures": self.punctures, "boundary": self.boundary}


class BranchBudget(NamedTuple):
    max_real: int
    max_infinitesimal: int


def euler_characteristic(s: Surface) -> int:
    return 2 - 2 * s.genus - s.punctures - s.boundary


def complexity(s: Surface) -> int:
    """xi = 3g - 3 + n, with the boundary counted as a puncture (xi(D_n) = n - 2)."""
    return 3 * s.genus - 3 + s.punctures + s.boundary


def require_complexity(s: Surface) -> None:
    """Raise SurfaceError unless xi(s) >= 2."""
    xi = complexity(s)
    if xi < MIN_COMPLEXITY:
        raise SurfaceError(
            f"{s.label()} has complexity xi = {xi}; bound computations need xi >= {MIN_COMPLEXITY}"
        )


def branch_budget(s: Surface) -> BranchBudget:
    """
    Upper bounds on the real and infinitesimal branches of an invariant
    train track produced by the Bestvina-Handel algorithm.

    Real branches: 9|chi| on a closed surface, 3|chi| otherwise.
    Infinitesimal branches: 24|chi| - 8n, n the number of punctures.

    Raises:
        SurfaceError: If xi(s) < 2
    """
    require_complexity(s)
    abs_chi = s.abs_chi
    max_real = 9 * abs_chi if s.is_closed else 3 * abs_chi
    max_infinitesimal = 24 * abs_chi - 8 * s.punctures
    logger.debug(f"Branch budget for {s.label()}: real={max_real}, infinitesimal={max_infinitesimal}")
    return BranchBudget(max_real=max_real, max_infinitesimal=max_infinitesimal)
