"""Group predicates and Cayley-table generators.

Generated tables use symbol 1 as the identity.  The cyclic group of order n
maps symbol s to residue s - 1; the Boolean group of exponent k maps symbol s
to the bit vector s - 1 and multiplies by XOR.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotAGroupError
from .square import LatinSquare


@dataclass(frozen=True)
class GroupCheck:
    is_group: bool
    identity: int | None = None
    # (x, y, z) with (x·y)·z != x·(y·z), when associativity fails
    witness: tuple[int, int, int] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.is_group


def two_sided_identity(s: LatinSquare) -> int | None:
    n = s.n
    ident = tuple(range(1, n + 1))
    for e in range(1, n + 1):
        if s.rows[e - 1] == ident and all(s.rows[x][e - 1] == x + 1 for x in range(n)):
            return e
    return None


def check_group(s: LatinSquare) -> GroupCheck:
    """Decide whether s is a group table, with a counterexample on failure."""
    e = two_sided_identity(s)
    if e is None:
        return GroupCheck(False, reason="no two-sided identity")
    t = s.rows
    rng = range(s.n)
    for x in rng:
        for y in rng:
            xy = t[x][y] - 1
            for z in rng:
                if t[xy][z] != t[x][t[y][z] - 1]:
                    return GroupCheck(False, identity=e, witness=(x + 1, y + 1, z + 1),
                                      reason="not associative")
    return GroupCheck(True, identity=e)


def is_group(s: LatinSquare) -> bool:
    return check_group(s).is_group


def involutions(s: LatinSquare) -> set[int]:
    """Elements of order two of a group table."""
    chk = check_group(s)
    if not chk:
        raise NotAGroupError(f"square is not a group table ({chk.reason})")
    e = chk.identity
    return {x for x in range(1, s.n + 1) if x != e and s[x, x] == e}


def cyclic_group(n: int) -> LatinSquare:
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    return LatinSquare([[(x + y) % n + 1 for y in range(n)] for x in range(n)])


def boolean_group(k: int) -> LatinSquare:
    """Cayley table of (Z_2)^k on symbols 1..2^k."""
    if k < 1:
        raise ValueError(f"exponent must be positive, got {k}")
    n = 1 << k
    return LatinSquare([[(x ^ y) + 1 for y in range(n)] for x in range(n)])


def klein_group() -> LatinSquare:
    return boolean_group(2)


def is_boolean_group(s: LatinSquare) -> bool:
    chk = check_group(s)
    return chk.is_group and all(s[x, x] == chk.identity for x in range(1, s.n + 1))
