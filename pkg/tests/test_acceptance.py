"""
End-to-end checks of the published bounds over the generated families.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, islice

import pytest

from conftest import make_two_curve_instance
from translen.bounds import (
    SingularityData,
    certify_upper,
    euler_poincare_check,
    lower_bound,
    power_certificate,
)
from translen.configuration import TwistWord, purebraid_family, torelli_family
from translen.exceptions import ProvisoError, SurfaceError
from translen.spectral import word_dilatation
from translen.twist_engine import IntersectionVector, boolean_propagate, iterate_word, support, word_matrix


@pytest.mark.timeout(10)
def test_lower_bound_formulas_are_exact():
    for g in range(2, 201):
        assert lower_bound("torelli", g).bound == Fraction(1, 96 * g - 96)
    for n in range(4, 201):
        assert lower_bound("purebraid", 0, n).bound == Fraction(1, 158 * n - 168)


@pytest.mark.timeout(30)
def test_pmod_dual_report_and_proviso():
    for g in range(0, 6):
        for n in range(0, 241):
            if n <= 38 * g - 38:
                with pytest.raises(ProvisoError):
                    lower_bound("pmod", g, n)
            elif 3 * g - 3 + n < 2:
                with pytest.raises(SurfaceError):
                    lower_bound("pmod", g, n)
            else:
                record = lower_bound("pmod", g, n)
                assert record.w == 432 * g + 206 * n - 432
                assert record.published_w == 1296 * g + 638 * n - 1296
                assert record.discrepancy


@pytest.mark.timeout(60)
def test_purebraid_certificates():
    for n in range(5, 81):
        inst = purebraid_family(n)
        boolean = certify_upper(inst, mode="boolean")
        exact = certify_upper(inst, mode="exact")
        assert boolean.j == exact.j == n - 3
        assert boolean.bound == Fraction(2, n - 3)
        assert boolean.trace == exact.trace


@pytest.mark.timeout(60)
def test_torelli_certificates():
    for g in range(13, 81):
        cert = certify_upper(torelli_family(g))
        assert cert.bound <= Fraction(8, g - 12)
        assert cert.j >= math.ceil(g / 4) - 3


@pytest.mark.timeout(60)
def test_normalized_bounds_stay_in_band():
    for n in range(15, 101):
        upper = n * certify_upper(purebraid_family(n)).bound
        lower = n * lower_bound("purebraid", 0, n).bound
        assert Fraction(2) <= upper <= Fraction(5, 2)
        assert Fraction(1, 158) <= lower <= Fraction(1, 100)

    for g in range(20, 101):
        upper = g * certify_upper(torelli_family(g)).bound
        lower = g * lower_bound("torelli", g).bound
        assert upper <= Fraction(8 * g, g - 12) <= 20
        assert Fraction(1, 96) <= lower <= Fraction(1, 48)


@pytest.mark.timeout(10)
def test_dilatation_checks():
    two_curve = make_two_curve_instance()
    result = word_dilatation(two_curve.config, two_curve.word)
    assert abs(result.dilatation - (3 + 2 * math.sqrt(2))) < 1e-9

    for inst in (purebraid_family(5), torelli_family(13)):
        base = word_dilatation(inst.config, inst.word).dilatation
        squared = word_dilatation(inst.config, inst.word.power(2), tol=1e-10).dilatation
        assert squared == pytest.approx(base ** 2, rel=1e-8)


@pytest.mark.timeout(120)
def test_boolean_propagation_matches_exact_zero_pattern():
    instances = [purebraid_family(n) for n in range(4, 41)] + [torelli_family(g) for g in range(13, 41)]
    for inst in instances:
        config, word = inst.config, inst.word
        seed = IntersectionVector.of_curve(config, inst.seed)
        expected = [support(v) for v in islice(iterate_word(seed, config, word), 31)]
        assert boolean_propagate(support(seed), config, word, 30) == expected


@pytest.mark.timeout(120)
@pytest.mark.parametrize(
    "inst",
    [purebraid_family(n) for n in (4, 11, 24, 40)] + [torelli_family(g) for g in (13, 26, 40)],
    ids=lambda inst: f"{inst.kind}-{inst.parameter}",
)
def test_same_class_twists_commute(inst):
    config = inst.config
    for first, second in combinations(config.curve_names, 2):
        if config.curve(first).curve_class != config.curve(second).curve_class:
            continue
        assert word_matrix(config, TwistWord((first, second))) == word_matrix(config, TwistWord((second, first)))


@pytest.mark.timeout(10)
def test_power_certificates_floor_divide():
    cert = certify_upper(purebraid_family(30))
    assert cert.j == 27
    for m, expected in ((2, 13), (3, 9), (5, 5)):
        powered = power_certificate(cert, m)
        assert powered.j == expected
        assert powered.bound == Fraction(2, expected)


def test_euler_poincare_validator():
    assert euler_poincare_check(2, SingularityData(puncture_prongs=(1,) * 4))
    assert euler_poincare_check(2, SingularityData(puncture_prongs=(1,) * 5, interior_prongs=(3,)))
    assert not euler_poincare_check(2, SingularityData(puncture_prongs=(1,) * 3))
