from __future__ import annotations

import pytest

from translen.exceptions import SurfaceError
from translen.surface import (
    Surface,
    branch_budget,
    complexity,
    euler_characteristic,
    require_complexity,
)


@pytest.mark.parametrize(
    "genus, punctures, boundary, expected",
    [
        (2, 0, 0, -2),
        (0, 5, 1, -4),
        (0, 0, 0, 2),
    ],
)
def test_euler_characteristic(genus, punctures, boundary, expected):
    assert euler_characteristic(Surface(genus, punctures, boundary)) == expected


def test_disk_chi_is_one_minus_n():
    for n in range(1, 20):
        assert Surface.disk(n).chi == 1 - n


def test_euler_characteristic_is_additive_in_punctures():
    for g in range(0, 6):
        for n in range(0, 10):
            for b in (0, 1):
                assert euler_characteristic(Surface(g, n + 1, b)) == euler_characteristic(Surface(g, n, b)) - 1


@pytest.mark.parametrize(
    "surface, expected",
    [
        (Surface.closed(2), (18, 48)),
        (Surface.disk(5), (12, 56)),
        (Surface.punctured(1, 3), (9, 48)),
    ],
)
def test_branch_budget_examples(surface, expected):
    assert tuple(branch_budget(surface)) == expected


def test_branch_budget_positive_on_grid():
    for g in range(0, 11):
        for n in range(0, 31):
            surface = Surface.punctured(g, n)
            if complexity(surface) < 2 or n > 2 * surface.abs_chi:
                continue
            budget = branch_budget(surface)
            assert budget.max_real > 0
            assert budget.max_infinitesimal > 0


@pytest.mark.parametrize("surface", [Surface.closed(1), Surface.disk(3), Surface.punctured(0, 4)])
def test_low_complexity_rejected(surface):
    with pytest.raises(SurfaceError):
        branch_budget(surface)
    with pytest.raises(SurfaceError):
        require_complexity(surface)


def test_disk_complexity_is_n_minus_two():
    assert [complexity(Surface.disk(n)) for n in range(2, 7)] == [0, 1, 2, 3, 4]


@pytest.mark.parametrize(
    "kwargs",
    [
        {"genus": -1},
        {"genus": 1, "punctures": -2},
        {"genus": 0, "punctures": 3, "boundary": 2},
        {"genus": 1.5},
    ],
)
def test_invalid_surfaces(kwargs):
    with pytest.raises(SurfaceError):
        Surface(**kwargs)


def test_labels():
    assert Surface.disk(5).label() == "D_5"
    assert Surface.closed(2).label() == "S_2"
    assert Surface.punctured(1, 3).label() == "S_{1,3}"
