"""Permutations, latin squares and group tables."""

from .groups import (GroupCheck, boolean_group, check_group, cyclic_group, involutions,
                     is_boolean_group, is_group, klein_group, two_sided_identity)
from .permutation import Permutation, compose, format_cycles, invert, parse_cycles
from .square import (LatinSquare, distance, format_square, is_commutative, is_latin,
                     left_divide, left_translation, parastrophe, parse_square, relabel,
                     right_divide, transpose)

__all__ = [
    "GroupCheck", "LatinSquare", "Permutation", "boolean_group", "check_group", "compose",
    "cyclic_group", "distance", "format_cycles", "format_square", "invert", "involutions",
    "is_boolean_group", "is_commutative", "is_group", "is_latin", "klein_group",
    "left_divide", "left_translation", "parastrophe", "parse_cycles", "parse_square",
    "relabel", "right_divide", "transpose", "two_sided_identity",
]
