from __future__ import annotations

import random
from itertools import combinations

import pytest

from translen.configuration import TwistWord, purebraid_family, torelli_family
from translen.exceptions import StructuralError
from translen.twist_engine import (
    IntersectionVector,
    TransitionMatrix,
    apply_twist,
    apply_word,
    boolean_propagate,
    letter_matrix,
    support,
    word_matrix,
)


class TestApplyTwist:
    def test_squared_intersection_identity(self, two_curve):
        config = two_curve.config
        out = apply_twist(IntersectionVector.of_curve(config, "b"), config, "a")
        assert out["a"] == 2
        assert out["b"] == 4

    def test_zero_vector_is_fixed(self, two_curve):
        zero = IntersectionVector.zero(two_curve.config)
        for curve in ("a", "b"):
            assert apply_twist(zero, two_curve.config, curve) == zero

    def test_vanishing_coordinate_is_identity(self, two_curve):
        config = two_curve.config
        v = IntersectionVector.from_mapping(config, {"b": 3, "gamma": 1})
        assert apply_twist(v, config, "a") == v

    def test_unknown_curve(self, two_curve):
        zero = IntersectionVector.zero(two_curve.config)
        with pytest.raises(StructuralError):
            apply_twist(zero, two_curve.config, "gamma")
        with pytest.raises(StructuralError):
            apply_twist(zero, two_curve.config, "z")

    def test_monotone_and_keeps_own_coordinate(self):
        rng = random.Random(7)
        inst = purebraid_family(8)
        config = inst.config
        for _ in range(50):
            v = IntersectionVector(
                config.coordinate_names,
                tuple(rng.randrange(0, 20) for _ in config.coordinate_names),
            )
            curve = rng.choice(config.curve_names)
            out = apply_twist(v, config, curve)
            assert out.dominates(v)
            assert out[curve] == v[curve]

    def test_negative_entries_rejected(self, two_curve):
        with pytest.raises(StructuralError):
            IntersectionVector(two_curve.config.coordinate_names, (0, -1, 0))


class TestApplyWord:
    def test_purebraid5_one_application(self, purebraid5):
        config = purebraid5.config
        seed = IntersectionVector.of_curve(config, "a1")
        assert seed.as_dict() == {"a1": 0, "a2": 2, "a3": 0, "a4": 0, "gamma": 0}
        out = apply_word(seed, config, purebraid5.word)
        assert out.as_dict() == {"a1": 4, "a2": 10, "a3": 4, "a4": 0, "gamma": 0}

    def test_empty_word(self, purebraid5):
        seed = IntersectionVector.of_curve(purebraid5.config, "a1")
        assert apply_word(seed, purebraid5.config, TwistWord()) == seed

    def test_letters_away_from_support(self, purebraid5):
        config = purebraid5.config
        v = IntersectionVector.from_mapping(config, {"a1": 5})
        # a3 and a4 have zero weight and do not meet a1
        assert apply_word(v, config, TwistWord(("a3", "a4"))) == v


class TestSupport:
    def test_support_examples(self, purebraid5):
        config = purebraid5.config
        v = IntersectionVector.from_mapping(config, {"a1": 4, "a2": 10, "a3": 4})
        assert support(v) == {"a1", "a2", "a3"}
        assert support(IntersectionVector.zero(config)) == frozenset()
        assert support(IntersectionVector.of_curve(config, "a1")) == {"a2"}


class TestWordMatrix:
    def test_two_curve_product(self, two_curve):
        m = word_matrix(two_curve.config, two_curve.word)
        assert m.as_lists() == [[1, 2], [2, 5]]
        assert m == letter_matrix(two_curve.config, "a") @ letter_matrix(two_curve.config, "b")

    def test_letter_matrix_shape(self, two_curve):
        assert letter_matrix(two_curve.config, "b").as_lists() == [[1, 2], [0, 1]]
        assert letter_matrix(two_curve.config, "a").as_lists() == [[1, 0], [2, 1]]

    def test_empty_word_is_identity(self, purebraid5):
        m = word_matrix(purebraid5.config, TwistWord())
        assert m == TransitionMatrix.identity(purebraid5.config.curve_names)

    def test_functoriality(self, purebraid5):
        config, word = purebraid5.config, purebraid5.word
        m = word_matrix(config, word)
        assert m @ m == word_matrix(config, word + word)
        assert m.power(3) == word_matrix(config, word.power(3))

    @pytest.mark.parametrize("inst", [purebraid_family(5), purebraid_family(9), torelli_family(13)])
    def test_matrix_matches_apply_word(self, inst):
        config = inst.config
        m = word_matrix(config, inst.word)
        for name in config.curve_names:
            v = IntersectionVector.of_curve(config, name)
            expected = apply_word(v, config, inst.word).curve_part(config)
            assert m.apply(v.curve_part(config)) == expected

    def test_disjoint_twists_commute(self, torelli13):
        config = torelli13.config
        for first, second in combinations(config.curve_names, 2):
            if config.intersection(first, second):
                continue
            assert letter_matrix(config, first) @ letter_matrix(config, second) == \
                letter_matrix(config, second) @ letter_matrix(config, first)


class TestBooleanPropagate:
    def test_purebraid5_two_iterations(self, purebraid5):
        supports = boolean_propagate({"a2"}, purebraid5.config, purebraid5.word, 2)
        assert supports == [{"a2"}, {"a1", "a2", "a3"}, {"a1", "a2", "a3", "a4"}]

    def test_zero_iterations(self, purebraid5):
        assert boolean_propagate({"a2"}, purebraid5.config, purebraid5.word, 0) == [{"a2"}]

    def test_torelli20_window(self):
        inst = torelli_family(20)
        seed = support(IntersectionVector.of_curve(inst.config, "a5"))
        supports = boolean_propagate(seed, inst.config, inst.word, 1)
        assert supports[1] <= {"a4", "a5", "a6", "b4", "b5"}

    def test_negative_iterations(self, purebraid5):
        with pytest.raises(StructuralError):
            boolean_propagate({"a2"}, purebraid5.config, purebraid5.word, -1)

    def test_matches_exact_supports(self, purebraid5):
        config, word = purebraid5.config, purebraid5.word
        v = IntersectionVector.of_curve(config, "a1")
        supports = boolean_propagate(support(v), config, word, 5)
        for expected in supports:
            assert support(v) == expected
            v = apply_word(v, config, word)
