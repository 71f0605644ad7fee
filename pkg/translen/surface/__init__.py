from translen.surface.surface import (
    BranchBudget,
    Surface,
    branch_budget,
    complexity,
    euler_characteristic,
    require_complexity,
)

__all__ = [
    "BranchBudget",
    "Surface",
    "branch_budget",
    "complexity",
    "euler_characteristic",
    "require_complexity",
]
