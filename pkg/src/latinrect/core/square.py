"""Latin squares as quasigroup multiplication tables over symbols 1..n."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, TextIO

from ..errors import MalformedInputError, NotLatinError, OrderMismatchError
from .permutation import Permutation


@dataclass(frozen=True, eq=True)
class LatinSquare:
    """An n×n latin square; ``s[x, y]`` is the product x·y (all 1-based).

    Construction validates that every entry lies in 1..n and that no row or
    column repeats a symbol.
    """

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Sequence[int]]):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        n = len(rows)
        if n < 1:
            raise MalformedInputError("a latin square needs at least one row")
        for i, r in enumerate(rows, 1):
            if len(r) != n:
                raise MalformedInputError(f"row {i} has {len(r)} entries, expected {n}")
            for j, v in enumerate(r, 1):
                if not 1 <= v <= n:
                    raise MalformedInputError(f"row {i}, column {j}: value {v} outside 1..{n}")
        _check_latin(rows)
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, xy: tuple[int, int]) -> int:
        x, y = xy
        self._check_symbol(x)
        self._check_symbol(y)
        return self.rows[x - 1][y - 1]

    def __str__(self) -> str:
        return format_square(self)

    def _check_symbol(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise IndexError(f"symbol {v} outside 1..{self.n}")

    def column(self, y: int) -> tuple[int, ...]:
        self._check_symbol(y)
        return tuple(r[y - 1] for r in self.rows)

    @cached_property
    def _ldiv(self) -> tuple[tuple[int, ...], ...]:
        # _ldiv[x-1][a-1] = x\a
        out = []
        for r in self.rows:
            inv = [0] * self.n
            for y, v in enumerate(r, 1):
                inv[v - 1] = y
            out.append(tuple(inv))
        return tuple(out)

    @cached_property
    def _rdiv(self) -> tuple[tuple[int, ...], ...]:
        # _rdiv[y-1][a-1] = a/y
        out = []
        for y in range(self.n):
            inv = [0] * self.n
            for x, r in enumerate(self.rows, 1):
                inv[r[y] - 1] = x
            out.append(tuple(inv))
        return tuple(out)


def _check_latin(rows: tuple[tuple[int, ...], ...]) -> None:
    n = len(rows)
    for i, r in enumerate(rows, 1):
        first: dict[int, int] = {}
        for j, v in enumerate(r, 1):
            if v in first:
                raise NotLatinError(
                    f"row {i}: symbol {v} appears in columns {first[v]} and {j}")
            first[v] = j
    for j in range(n):
        first = {}
        for i in range(n):
            v = rows[i][j]
            if v in first:
                raise NotLatinError(
                    f"column {j + 1}: symbol {v} appears in rows {first[v]} and {i + 1}")
            first[v] = i + 1


def is_latin(rows: Iterable[Sequence[int]]) -> bool:
    try:
        LatinSquare(rows)
    except (MalformedInputError, NotLatinError):
        return False
    return True


def parse_square(text: str | TextIO) -> LatinSquare:
    """Parse the square file format.

    Line 1 holds the order n, the next n lines hold n whitespace-separated
    integers each.  Blank lines and lines starting with ``#`` are ignored;
    CRLF line endings are accepted.
    """
    if not isinstance(text, str):
        text = text.read()
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((lineno, line))
    if not lines:
        raise MalformedInputError("empty input: expected the order on the first line")
    lineno, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise MalformedInputError(f"line {lineno}: expected the order, got {header!r}") from None
    if n < 1:
        raise MalformedInputError(f"line {lineno}: order must be positive, got {n}")
    data = lines[1:]
    if len(data) != n:
        raise MalformedInputError(f"expected {n} rows after the header, found {len(data)}")
    rows = []
    for i, (lineno, line) in enumerate(data, 1):
        toks = line.split()
        if len(toks) != n:
            raise MalformedInputError(
                f"row {i} (line {lineno}): expected {n} entries, found {len(toks)}")
        row = []
        for j, tok in enumerate(toks, 1):
            try:
                row.append(int(tok))
            except ValueError:
                raise MalformedInputError(
                    f"row {i}, column {j} (line {lineno}): {tok!r} is not an integer") from None
        rows.append(row)
    return LatinSquare(rows)


def format_square(s: LatinSquare) -> str:
    return f"{s.n}\n" + "".join(" ".join(map(str, r)) + "\n" for r in s.rows)


def left_translation(s: LatinSquare, i: int) -> Permutation:
    """L_i, the permutation x -> i·x (row i of the table)."""
    s._check_symbol(i)
    return Permutation(s.rows[i - 1])


def left_divide(s: LatinSquare, x: int, a: int) -> int:
    """x\\a: the unique y with x·y = a."""
    s._check_symbol(x)
    s._check_symbol(a)
    return s._ldiv[x - 1][a - 1]


def right_divide(s: LatinSquare, a: int, y: int) -> int:
    """a/y: the unique z with z·y = a."""
    s._check_symbol(a)
    s._check_symbol(y)
    return s._rdiv[y - 1][a - 1]


def parastrophe(s: LatinSquare, k: int) -> LatinSquare:
    """Table of the k-th parastrophe ∘k of s (k = 0 returns s).

    ====  ===========================
    k     x ∘k y = z  iff
    ====  ===========================
    1     x·z = y
    2     z·y = x
    3     z·x = y
    4     y·z = x
    5     y·x = z
    ====  ===========================
    """
    if k == 0:
        return s
    n = s.n
    rng = range(1, n + 1)
    if k == 1:
        rows = [[s._ldiv[x - 1][y - 1] for y in rng] for x in rng]
    elif k == 2:
        rows = [[s._rdiv[y - 1][x - 1] for y in rng] for x in rng]
    elif k == 3:
        rows = [[s._rdiv[x - 1][y - 1] for y in rng] for x in rng]
    elif k == 4:
        rows = [[s._ldiv[y - 1][x - 1] for y in rng] for x in rng]
    elif k == 5:
        rows = [[s.rows[y - 1][x - 1] for y in rng] for x in rng]
    else:
        raise ValueError(f"parastrophe index must be in 0..5, got {k}")
    return LatinSquare(rows)


def transpose(s: LatinSquare) -> LatinSquare:
    return parastrophe(s, 5)


def distance(a: LatinSquare, b: LatinSquare) -> int:
    """Number of cells in which a and b differ."""
    if a.n != b.n:
        raise OrderMismatchError(f"distance needs equal orders, got {a.n} and {b.n}")
    return sum(u != v for ra, rb in zip(a.rows, b.rows) for u, v in zip(ra, rb))


def is_commutative(s: LatinSquare) -> bool:
    return all(s.rows[x][y] == s.rows[y][x] for x in range(s.n) for y in range(x))


def relabel(s: LatinSquare, p: Permutation) -> LatinSquare:
    """Apply the symbol permutation p to every entry (rows and columns fixed)."""
    if p.n != s.n:
        raise OrderMismatchError(f"relabeling of order {p.n} for a square of order {s.n}")
    return LatinSquare([[p.images[v - 1] for v in r] for r in s.rows])
