"""Rectangles (intercalates) of a quasigroup.

A rectangle <x,y,z,u> has x != z, y != u and xy = zu = a, xu = zy = b.  It is
stored in canonical form with x < z and y < u, so two rectangles are equal
exactly when they occupy the same four cells.

:func:`find_rectangles` uses left translations: rows x and z carry a
rectangle with values a, b precisely when (a b) is a 2-cycle of L_x L_z^-1.
:func:`find_rectangles_oracle` scans the definition directly and serves as an
independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .core.groups import check_group, involutions, is_boolean_group
from .core.permutation import Permutation, compose, invert
from .core.square import LatinSquare, left_divide, left_translation
from .errors import NotAGroupError, NotARectangleError


@dataclass(frozen=True, order=True)
class Rectangle:
    """Canonical rectangle: rows x < z, columns y < u, a = x·y = z·u, b = x·u = z·y.

    Equality, hashing and ordering use the cells only.
    """

    x: int
    y: int
    z: int
    u: int
    a: int = field(compare=False)
    b: int = field(compare=False)

    @property
    def quad(self) -> tuple[int, int, int, int]:
        return (self.x, self.y, self.z, self.u)

    @property
    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset({(self.x, self.y), (self.x, self.u), (self.z, self.y), (self.z, self.u)})

    def as_list(self) -> list[int]:
        return [self.x, self.y, self.z, self.u, self.a, self.b]

    def __str__(self) -> str:
        return f"⟨{self.x},{self.y},{self.z},{self.u}⟩"


def normalized(x: int, y: int, z: int, u: int, a: int, b: int) -> Rectangle:
    """Canonical form of a rectangle given with its values, without a table.

    Swapping only the rows, or only the columns, exchanges the roles of a and b.
    """
    if x == z or y == u:
        raise NotARectangleError(f"degenerate quadruple ⟨{x},{y},{z},{u}⟩")
    if x > z:
        x, z, a, b = z, x, b, a
    if y > u:
        y, u, a, b = u, y, b, a
    return Rectangle(x, y, z, u, a, b)


def canonicalize(s: LatinSquare, x: int, y: int, z: int, u: int) -> Rectangle:
    """Validate ⟨x,y,z,u⟩ against s and return its canonical form.

    Raises :class:`NotARectangleError` naming the first equality that fails.
    """
    for v in (x, y, z, u):
        if not 1 <= v <= s.n:
            raise NotARectangleError(f"symbol {v} outside 1..{s.n}")
    if x == z:
        raise NotARectangleError(f"rows must differ (x = z = {x})")
    if y == u:
        raise NotARectangleError(f"columns must differ (y = u = {y})")
    xy, zu, xu, zy = s[x, y], s[z, u], s[x, u], s[z, y]
    if xy != zu:
        raise NotARectangleError(f"{x}·{y} = {xy} but {z}·{u} = {zu}")
    if xu != zy:
        raise NotARectangleError(f"{x}·{u} = {xu} but {z}·{y} = {zy}")
    return normalized(x, y, z, u, xy, xu)


def check_rectangle(s: LatinSquare, r: Rectangle) -> None:
    """Raise unless r, including its values a and b, is a rectangle of s."""
    c = canonicalize(s, *r.quad)
    if (c.a, c.b) != (r.a, r.b):
        raise NotARectangleError(
            f"{r} carries values ({r.a},{r.b}) but the table holds ({c.a},{c.b})")


def two_cycles(p: Permutation) -> list[tuple[int, int]]:
    """Pairs (a, b), a < b, with p(a) = b and p(b) = a, sorted."""
    return [(a, b) for a, b in enumerate(p.images, 1) if a < b and p.images[b - 1] == a]


def translation_product(s: LatinSquare, x: int, z: int) -> Permutation:
    """L_x L_z^-1."""
    return compose(left_translation(s, x), invert(left_translation(s, z)))


def rectangle_from_cycle(s: LatinSquare, x: int, z: int, a: int, b: int) -> Rectangle:
    """The rectangle on rows x, z generated by the 2-cycle (a b) of L_x L_z^-1."""
    if x == z:
        raise NotARectangleError("rows must differ")
    p = translation_product(s, x, z)
    if a == b or p(a) != b or p(b) != a:
        raise NotARectangleError(
            f"({a},{b}) is not a 2-cycle of L{x}L{z}^-1 = {p}")
    y = left_divide(s, x, a)
    u = left_divide(s, x, b)
    return normalized(x, y, z, u, a, b)


def find_rectangles(s: LatinSquare) -> list[Rectangle]:
    """All rectangles of s via 2-cycles of L_x L_z^-1 for x < z, sorted."""
    n = s.n
    out = []
    for x in range(1, n + 1):
        for z in range(x + 1, n + 1):
            for a, b in two_cycles(translation_product(s, x, z)):
                out.append(normalized(x, left_divide(s, x, a), z, left_divide(s, x, b), a, b))
    out.sort()
    return out


def find_rectangles_oracle(s: LatinSquare) -> list[Rectangle]:
    """All rectangles of s by scanning the definition over x < z, y < u."""
    t = s.rows
    n = s.n
    out = []
    for x in range(n):
        for z in range(x + 1, n):
            for y in range(n):
                for u in range(y + 1, n):
                    if t[x][y] == t[z][u] and t[x][u] == t[z][y]:
                        out.append(Rectangle(x + 1, y + 1, z + 1, u + 1, t[x][y], t[x][u]))
    out.sort()
    return out


def rectangles_by_row_pair(rects: Iterable[Rectangle]) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for r in rects:
        counts[r.x, r.z] = counts.get((r.x, r.z), 0) + 1
    return counts


def group_has_rectangle(s: LatinSquare) -> bool:
    """Whether a group table has a rectangle, decided by the existence of an involution."""
    return bool(involutions(s))


def boolean_rectangle(s: LatinSquare, x: int, y: int) -> Rectangle:
    """The rectangle ⟨x, y, x·y, e⟩ of a Boolean group table."""
    if not is_boolean_group(s):
        raise NotAGroupError("square is not a Boolean group table")
    e = check_group(s).identity
    if y == e:
        raise NotARectangleError(f"y = e = {e} gives a degenerate quadruple")
    return canonicalize(s, x, y, s[x, y], e)
