"""Permutations of {1..n} in dotted cycle notation.

Composition follows the right-to-left convention ``compose(phi, psi)(x) ==
phi(psi(x))``.  Cycles are written as ``(132.45.6.78.)``: each cycle is
terminated by a dot and, for n <= 9, elements are single digits.  From n = 10
on, elements inside a cycle are separated by commas, e.g. ``(1,10.2.3,4. ...)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from ..errors import MalformedInputError, OrderMismatchError


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} stored by its images: ``images[x - 1] == p(x)``."""

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        images = tuple(int(v) for v in images)
        n = len(images)
        if n < 1:
            raise MalformedInputError("a permutation needs at least one point")
        if sorted(images) != list(range(1, n + 1)):
            raise MalformedInputError(f"{list(images)} is not a permutation of 1..{n}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise IndexError(f"point {x} outside 1..{self.n}")
        return self.images[x - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __len__(self) -> int:
        return self.n

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return invert(self)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r})"

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles in canonical order, fixed points included as 1-cycles."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start - 1]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x - 1]
            out.append(tuple(cyc))
        return out


def compose(phi: Permutation, psi: Permutation) -> Permutation:
    """Return phi∘psi, i.e. ``x -> phi(psi(x))``."""
    if phi.n != psi.n:
        raise OrderMismatchError(f"cannot compose permutations of orders {phi.n} and {psi.n}")
    a = phi.images
    return Permutation(a[v - 1] for v in psi.images)


def invert(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for x, v in enumerate(p.images, 1):
        inv[v - 1] = x
    return Permutation(inv)


def format_cycles(p: Permutation) -> str:
    """Dotted cycle notation; every cycle starts at its minimum, cycles sorted by minimum."""
    sep = "," if p.n >= 10 else ""
    return "(" + "".join(sep.join(map(str, c)) + "." for c in p.cycles()) + ")"


_CYCLES_RE = re.compile(r"^\(([0-9.,\s]*)\)$")


def parse_cycles(text: str, n: int, strict: bool = True) -> Permutation:
    """Parse dotted cycle notation into a permutation of {1..n}.

    With ``strict=True`` every point of 1..n must occur exactly once, so fixed
    points have to be written as 1-cycles.  With ``strict=False`` points that
    are absent are taken to be fixed.
    """
    m = _CYCLES_RE.match(text.strip())
    if not m:
        raise MalformedInputError(f"not a dotted cycle string: {text!r}")
    body = m.group(1).replace(" ", "")
    tokens = body.split(".")
    # a missing final dot is tolerated
    if tokens and tokens[-1] == "":
        tokens.pop()
    images = list(range(1, n + 1))
    seen: set[int] = set()
    for tok in tokens:
        if tok == "":
            raise MalformedInputError(f"empty cycle in {text!r}")
        if "," in tok or n >= 10:
            parts = tok.split(",")
            if any(p == "" for p in parts):
                raise MalformedInputError(f"empty element in cycle {tok!r}")
            cyc = [int(p) for p in parts]
        else:
            cyc = [int(ch) for ch in tok]
        for x in cyc:
            if not 1 <= x <= n:
                raise MalformedInputError(f"element {x} out of range 1..{n} in {text!r}")
            if x in seen:
                raise MalformedInputError(f"element {x} repeated in {text!r}")
            seen.add(x)
        for i, x in enumerate(cyc):
            images[x - 1] = cyc[(i + 1) % len(cyc)]
    if strict and len(seen) != n:
        missing = sorted(set(range(1, n + 1)) - seen)
        raise MalformedInputError(f"elements {missing} missing from {text!r}")
    return Permutation(images)
