"""Rectangles (intercalates) in latin squares.

Finds rectangles through left translations, switches them, enumerates
autotopisms, groups rectangles into classes under the autotopism group, and
decides isotopy of small quasigroups.
"""

from .core import (LatinSquare, Permutation, boolean_group, check_group, compose,
                   cyclic_group, distance, format_cycles, format_square, invert, involutions,
                   is_commutative, is_group, klein_group, left_divide, left_translation,
                   parastrophe, parse_cycles, parse_square, right_divide)
from .errors import (LatinRectError, MalformedInputError, NotAGroupError, NotARectangleError,
                     NotLatinError, OrderMismatchError, SearchBoundError)
from .rectangles import (Rectangle, boolean_rectangle, canonicalize, find_rectangles,
                         find_rectangles_oracle, group_has_rectangle, rectangle_from_cycle,
                         two_cycles)
from .symmetry import (IsotopyTriple, apply_isotopy, are_antiisotopic, are_isotopic,
                       autotopisms, equivalence_classes, is_autotopism, rectangle_image)
from .transform import rectangle_transform, transformed_rectangle

__version__ = "0.1.0"
