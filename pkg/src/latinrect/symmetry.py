"""Autotopisms, equivalence of rectangles, and isotopy of small quasigroups.

A triple (alpha, beta, gamma) maps (Q, ·) to (Q, *) when
alpha(x) * beta(y) = gamma(x · y) for all x, y; it is an autotopism when both
operations coincide.  In terms of left translations this reads
``gamma L_i beta^-1 = T_alpha(i)`` where T are the translations of the target.

The search fixes alpha(1) and beta, which determines gamma = T_alpha(1) beta L_1^-1,
and then propagates alpha(i) by looking up gamma L_i beta^-1 among the target
rows.  Most candidates die at i = 2, so orders up to 8 are cheap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from .core.permutation import Permutation, format_cycles
from .core.square import LatinSquare, transpose
from .errors import OrderMismatchError, SearchBoundError
from .rectangles import (Rectangle, find_rectangles, normalized,
                         rectangles_by_row_pair)

DEFAULT_BOUND = 8


@dataclass(frozen=True)
class IsotopyTriple:
    alpha: Permutation
    beta: Permutation
    gamma: Permutation

    def __post_init__(self):
        if not self.alpha.n == self.beta.n == self.gamma.n:
            raise OrderMismatchError("alpha, beta, gamma must have equal orders")

    @classmethod
    def identity(cls, n: int) -> IsotopyTriple:
        e = Permutation.identity(n)
        return cls(e, e, e)

    @property
    def n(self) -> int:
        return self.alpha.n

    def is_identity(self) -> bool:
        return self.alpha.is_identity() and self.beta.is_identity() and self.gamma.is_identity()

    def sort_key(self) -> tuple:
        return (self.alpha.images, self.beta.images, self.gamma.images)

    def __str__(self) -> str:
        return f"({format_cycles(self.alpha)}, {format_cycles(self.beta)}, {format_cycles(self.gamma)})"


def _check_orders(s: LatinSquare, t: IsotopyTriple) -> None:
    if s.n != t.n:
        raise OrderMismatchError(f"triple of order {t.n} for a square of order {s.n}")


def is_isotopy(s: LatinSquare, target: LatinSquare, t: IsotopyTriple) -> bool:
    """Whether target[alpha(x), beta(y)] == gamma(s[x, y]) for all x, y."""
    _check_orders(s, t)
    _check_orders(target, t)
    al, be, ga = t.alpha.images, t.beta.images, t.gamma.images
    src, dst = s.rows, target.rows
    rng = range(s.n)
    return all(dst[al[x] - 1][be[y] - 1] == ga[src[x][y] - 1] for x in rng for y in rng)


def is_autotopism(s: LatinSquare, t: IsotopyTriple) -> bool:
    return is_isotopy(s, s, t)


def apply_isotopy(s: LatinSquare, t: IsotopyTriple) -> LatinSquare:
    """The square o with o[alpha(x), beta(y)] = gamma(s[x, y])."""
    _check_orders(s, t)
    n = s.n
    al, be, ga = t.alpha.images, t.beta.images, t.gamma.images
    rows = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            rows[al[x] - 1][be[y] - 1] = ga[s.rows[x][y] - 1]
    return LatinSquare(rows)


def compose_triples(t1: IsotopyTriple, t2: IsotopyTriple) -> IsotopyTriple:
    """Componentwise t1∘t2 (apply t2 first)."""
    return IsotopyTriple(t1.alpha * t2.alpha, t1.beta * t2.beta, t1.gamma * t2.gamma)


def invert_triple(t: IsotopyTriple) -> IsotopyTriple:
    return IsotopyTriple(~t.alpha, ~t.beta, ~t.gamma)


def random_isotopy(n: int, rng: random.Random) -> IsotopyTriple:
    def perm():
        v = list(range(1, n + 1))
        rng.shuffle(v)
        return Permutation(v)
    return IsotopyTriple(perm(), perm(), perm())


def rectangle_image(r: Rectangle, t: IsotopyTriple) -> Rectangle:
    """Canonical form of ⟨alpha(x), beta(y), alpha(z), beta(u)⟩ with values gamma(a), gamma(b)."""
    al, be, ga = t.alpha, t.beta, t.gamma
    return normalized(al(r.x), be(r.y), al(r.z), be(r.u), ga(r.a), ga(r.b))


def _search(s: LatinSquare, target: LatinSquare, first_only: bool) -> list[IsotopyTriple]:
    # 0-based throughout; candidates visited in (beta, alpha(1)) lexicographic order
    n = s.n
    dst_index = {tuple(v - 1 for v in r): j for j, r in enumerate(target.rows)}
    src0 = [tuple(v - 1 for v in r) for r in s.rows]
    l1_inv = [0] * n
    for y, v in enumerate(src0[0]):
        l1_inv[v] = y
    dst0 = [tuple(v - 1 for v in r) for r in target.rows]
    found = []
    for beta in permutations(range(n)):
        beta_inv = [0] * n
        for y, v in enumerate(beta):
            beta_inv[v] = y
        for a1 in range(n):
            # gamma = T_{a1} beta L_1^-1
            t_row = dst0[a1]
            gamma = [t_row[beta[l1_inv[v]]] for v in range(n)]
            alpha = [a1] + [0] * (n - 1)
            used = {a1}
            ok = True
            for i in range(1, n):
                li = src0[i]
                j = dst_index.get(tuple(gamma[li[beta_inv[y]]] for y in range(n)))
                if j is None or j in used:
                    ok = False
                    break
                alpha[i] = j
                used.add(j)
            if ok:
                found.append(IsotopyTriple(Permutation(v + 1 for v in alpha),
                                           Permutation(v + 1 for v in beta),
                                           Permutation(v + 1 for v in gamma)))
                if first_only:
                    break
        if first_only and found:
            break
    found.sort(key=IsotopyTriple.sort_key)
    return found


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise SearchBoundError(f"order {n} exceeds the search bound {bound}")


def autotopisms(s: LatinSquare, bound: int = DEFAULT_BOUND) -> list[IsotopyTriple]:
    """All autotopisms of s, sorted by (alpha, beta) images; the identity comes first."""
    _check_bound(s.n, bound)
    return _search(s, s, first_only=False)


def autotopisms_brute_force(s: LatinSquare) -> list[IsotopyTriple]:
    """All autotopisms by testing every one of the (n!)^3 triples.  Tiny orders only."""
    n = s.n
    perms = [Permutation(p) for p in permutations(range(1, n + 1))]
    out = []
    for al in perms:
        for be in perms:
            for ga in perms:
                t = IsotopyTriple(al, be, ga)
                if is_autotopism(s, t):
                    out.append(t)
    out.sort(key=IsotopyTriple.sort_key)
    return out


def equivalence_classes(s: LatinSquare, bound: int = DEFAULT_BOUND,
                        autos: list[IsotopyTriple] | None = None) -> list[list[Rectangle]]:
    """Orbits of the rectangles of s under its autotopism group.

    Each class is sorted and classes are ordered by their least rectangle.
    """
    if autos is None:
        autos = autotopisms(s, bound)
    remaining = set(find_rectangles(s))
    classes = []
    while remaining:
        r = min(remaining)
        orbit = {rectangle_image(r, t) for t in autos}
        classes.append(sorted(orbit))
        remaining -= orbit
    return classes


def isotopy_invariants(s: LatinSquare) -> tuple[int, tuple[int, ...]]:
    """Rectangle count and the sorted multiset of per-row-pair rectangle counts."""
    rects = find_rectangles(s)
    per_pair = rectangles_by_row_pair(rects)
    n = s.n
    counts = [per_pair.get((x, z), 0) for x in range(1, n + 1) for z in range(x + 1, n + 1)]
    return len(rects), tuple(sorted(counts))


@dataclass(frozen=True)
class IsotopyResult:
    isotopic: bool
    witness: IsotopyTriple | None = None
    fast_reject: bool = False

    def __bool__(self) -> bool:
        return self.isotopic


def are_isotopic(s: LatinSquare, t: LatinSquare, bound: int = DEFAULT_BOUND,
                 fast_reject: bool = True) -> IsotopyResult:
    """Decide whether some triple maps s onto t, returning a witness if so.

    With ``fast_reject`` the rectangle invariants are compared first; they are
    only a filter, equal invariants never decide isotopy on their own.
    """
    if s.n != t.n:
        raise OrderMismatchError(f"cannot compare squares of orders {s.n} and {t.n}")
    _check_bound(s.n, bound)
    if fast_reject and isotopy_invariants(s) != isotopy_invariants(t):
        return IsotopyResult(False, fast_reject=True)
    found = _search(s, t, first_only=True)
    if not found:
        return IsotopyResult(False)
    return IsotopyResult(True, witness=found[0])


def are_antiisotopic(s: LatinSquare, t: LatinSquare, bound: int = DEFAULT_BOUND,
                     fast_reject: bool = True) -> IsotopyResult:
    """Isotopy of s onto the transpose of t."""
    return are_isotopic(s, transpose(t), bound, fast_reject)
