from translen.twist_engine.intersection import (
    IntersectionVector,
    apply_twist,
    apply_word,
    boolean_propagate,
    iterate_supports,
    iterate_word,
    support,
)
from translen.twist_engine.transition import TransitionMatrix, letter_matrix, word_matrix

__all__ = [
    "IntersectionVector",
    "TransitionMatrix",
    "apply_twist",
    "apply_word",
    "boolean_propagate",
    "iterate_supports",
    "iterate_word",
    "letter_matrix",
    "support",
    "word_matrix",
]
