"""Rectangle transformations: switching the two values inside an intercalate."""

from __future__ import annotations

from .core.square import LatinSquare
from .rectangles import Rectangle, check_rectangle


def rectangle_transform(s: LatinSquare, r: Rectangle) -> LatinSquare:
    """Swap a and b on the four cells of r; the result is at distance 4 from s.

    ``r`` must be a rectangle of ``s`` with matching values, otherwise
    :class:`~latinrect.errors.NotARectangleError` is raised.
    """
    check_rectangle(s, r)
    rows = [list(row) for row in s.rows]
    rows[r.x - 1][r.y - 1] = r.b
    rows[r.z - 1][r.u - 1] = r.b
    rows[r.x - 1][r.u - 1] = r.a
    rows[r.z - 1][r.y - 1] = r.a
    return LatinSquare(rows)


def transformed_rectangle(r: Rectangle) -> Rectangle:
    """The same cells with a and b exchanged, i.e. r as it sits in the transformed square."""
    return Rectangle(r.x, r.y, r.z, r.u, r.b, r.a)
