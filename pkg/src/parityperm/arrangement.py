"""
The arrangement K_2n handled combinatorially.

A region is identified with its sign vector over the oE pairs (2i-1, 2j),
1 <= i <= j <= n. Sign ``True`` ("-" in text form) means x_odd < x_even.
A total order of the coordinates is given as the list of indices from the
smallest coordinate to the largest; read that way, a permutation is
compatible with a region exactly when it is a witness order for it.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Iterator, Sequence

from . import perm as P
from .errors import (
    BruteForceBoundExceeded,
    CyclicConstraints,
    DimensionMismatch,
    NotRealizable,
    OddLength,
    RangeError,
)

BRUTE_FORCE_BOUND = 4

OEPair = tuple[int, int]


def oe_pairs(n: int) -> tuple[OEPair, ...]:
    if n < 0:
        raise RangeError("n must be nonnegative")
    return tuple((2 * i - 1, 2 * j) for i in range(1, n + 1) for j in range(i, n + 1))


def _pair_index(n: int) -> dict[OEPair, int]:
    return {pq: k for k, pq in enumerate(oe_pairs(n))}


@dataclass(frozen=True)
class Region:
    n: int
    signs: tuple[bool, ...]
    witness: P.Word | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        if len(self.signs) != self.n * (self.n + 1) // 2:
            raise DimensionMismatch(f"{len(self.signs)} signs for n = {self.n}")

    def less(self, odd: int, even: int) -> bool:
        """Is x_odd < x_even?"""
        i, j = (odd + 1) // 2, even // 2
        if odd % 2 == 0 or even % 2 or not 1 <= i <= j <= self.n:
            raise RangeError(f"({odd}, {even}) is not an oE pair for n = {self.n}")
        # index of (i, j) in lexicographic order
        k = (i - 1) * self.n - (i - 1) * (i - 2) // 2 + (j - i)
        return self.signs[k]

    def sign_map(self) -> dict[OEPair, bool]:
        return dict(zip(oe_pairs(self.n), self.signs))

    def __str__(self) -> str:
        return format_region(self)


def format_region(r: Region) -> str:
    return f"n={r.n};" + "".join("-" if s else "+" for s in r.signs)


def parse_region(text: str) -> Region:
    m = re.fullmatch(r"\s*n\s*=\s*(\d+)\s*;\s*([+-]*)\s*", text)
    if not m:
        raise ValueError(f"cannot parse region {text!r}")
    return Region(int(m.group(1)), tuple(ch == "-" for ch in m.group(2)))


def region_from_order(order: Sequence[int]) -> Region:
    """Signs read off a total order given from smallest to largest coordinate."""
    order = P.as_permutation(order)
    if len(order) % 2:
        raise OddLength(f"order of odd length {len(order)}")
    rank = P.inverse(order)
    n = len(order) // 2
    signs = tuple(rank[a - 1] < rank[b - 1] for a, b in oe_pairs(n))
    return Region(n, signs, witness=order)


def region_of(p: Sequence[int]) -> Region:
    """The region compatible with ``p``: the letter at an earlier position has the smaller coordinate."""
    return region_from_order(p)


def compatible(p: Sequence[int], r: Region) -> bool:
    if len(p) != 2 * r.n:
        raise DimensionMismatch(f"permutation of length {len(p)} vs region with n = {r.n}")
    return region_of(p).signs == r.signs


def enumerate_regions(n: int, bound: int = BRUTE_FORCE_BOUND) -> set[Region]:
    """All regions of K_2n, found by deduplicating the signs of every total order."""
    if n > bound:
        raise BruteForceBoundExceeded(f"n = {n} exceeds the brute-force bound {bound}")
    if n < 1:
        raise RangeError("n must be at least 1")
    seen: dict[tuple[bool, ...], Region] = {}
    for order in itertools.permutations(range(1, 2 * n + 1)):
        r = region_from_order(order)
        seen.setdefault(r.signs, r)
    return set(seen.values())


def sorted_regions(n: int, bound: int = BRUTE_FORCE_BOUND) -> list[Region]:
    return sorted(enumerate_regions(n, bound), key=format_region)


# -- poset --------------------------------------------------------------------

def _relations(r: Region) -> list[tuple[int, int]]:
    """(smaller, larger) index pairs forced by the signs."""
    return [(a, b) if s else (b, a) for (a, b), s in zip(oe_pairs(r.n), r.signs)]


@dataclass(frozen=True)
class RegionPoset:
    n: int
    covers: frozenset[tuple[int, int]]  # (smaller, larger)

    def elements(self) -> range:
        return range(1, 2 * self.n + 1)


def _check_acyclic(n: int, rel: list[tuple[int, int]]) -> None:
    ts = TopologicalSorter({k: set() for k in range(1, 2 * n + 1)})
    for lo, hi in rel:
        ts.add(hi, lo)
    try:
        ts.prepare()
    except CycleError as exc:
        raise CyclicConstraints(f"sign vector is not realizable: cycle {exc.args[1]}") from exc


def is_realizable(r: Region) -> bool:
    try:
        _check_acyclic(r.n, _relations(r))
    except CyclicConstraints:
        return False
    return True


def require_realizable(r: Region) -> Region:
    if not is_realizable(r):
        raise NotRealizable(f"{format_region(r)} is not a region")
    return r


def poset(r: Region) -> RegionPoset:
    rel = _relations(r)
    _check_acyclic(r.n, rel)
    up: dict[int, set[int]] = {k: set() for k in range(1, 2 * r.n + 1)}
    for lo, hi in rel:
        up[lo].add(hi)

    def reach_without(src: int, dst: int) -> bool:
        # is dst reachable from src using a path of length >= 2?
        stack = [c for c in up[src] if c != dst]
        seen = set(stack)
        while stack:
            x = stack.pop()
            if dst in up[x]:
                return True
            for c in up[x]:
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        return False

    covers = frozenset((lo, hi) for lo, hi in rel if not reach_without(lo, hi))
    return RegionPoset(r.n, covers)


def export_dot(rp: RegionPoset, name: str = "region") -> str:
    lines = [f"digraph {name} {{"]
    for k in rp.elements():
        lines.append(f'  x{k} [label="x{k}"];')
    for lo, hi in sorted(rp.covers):
        lines.append(f"  x{hi} -> x{lo};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def linear_extensions(rp: RegionPoset) -> Iterator[P.Word]:
    """Every linear extension (smallest first), in lexicographic order."""
    size = 2 * rp.n
    below: dict[int, set[int]] = {k: set() for k in rp.elements()}
    for lo, hi in rp.covers:
        below[hi].add(lo)
    placed = [False] * (size + 1)
    out: list[int] = []

    def rec():
        if len(out) == size:
            yield tuple(out)
            return
        for k in range(1, size + 1):
            if not placed[k] and all(placed[b] for b in below[k]):
                placed[k] = True
                out.append(k)
                yield from rec()
                out.pop()
                placed[k] = False

    yield from rec()


def canonical_extension(rp: RegionPoset) -> P.Word:
    return next(linear_extensions(rp))


# -- projections --------------------------------------------------------------

def proj(r: Region) -> Region:
    """Forget the coordinates 2n+1 and 2n+2."""
    if r.n < 1:
        raise RangeError("cannot project the empty arrangement")
    m = r.n - 1
    signs = tuple(r.less(a, b) for a, b in oe_pairs(m))
    return Region(m, signs)


def proj_prime(r: Region) -> Region:
    """Forget coordinates 1 and 2 and relabel k -> k - 2."""
    if r.n < 1:
        raise RangeError("cannot project the empty arrangement")
    m = r.n - 1
    signs = tuple(r.less(a + 2, b + 2) for a, b in oe_pairs(m))
    return Region(m, signs)


# -- the worked example on K_18 -------------------------------------------------

# For each i: the j with x_{2i-1} < x_{2j}. All other j >= i have x_{2i-1} > x_{2j}.
_EXAMPLE_K18_LESS = {
    1: {1, 2, 4, 6, 7, 8, 9},
    2: {2, 6, 7, 8},
    3: {4, 5, 6, 7, 8, 9},
    4: {4, 6, 7, 8},
    5: {8},
    6: {6, 8},
    7: set(),
    8: {8},
    9: set(),
}


def example_k18() -> Region:
    n = 9
    signs = tuple(j in _EXAMPLE_K18_LESS[i] for i in range(1, n + 1) for j in range(i, n + 1))
    return require_realizable(Region(n, signs))


NAMED_REGIONS = {"example-k18": example_k18}


def resolve_region(text: str) -> Region:
    """Parse region text, or look up a named fixture written ``@name``."""
    text = text.strip()
    if text.startswith("@"):
        try:
            return NAMED_REGIONS[text[1:]]()
        except KeyError:
            raise ValueError(f"unknown region fixture {text!r}") from None
    return require_realizable(parse_region(text))
