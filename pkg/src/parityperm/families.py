"""
The fourteen permutation families: membership, pruned generation, counting.

Membership predicates in :func:`is_member` follow the definitions literally
and double as the oracle for the generators, which instead test one appended
letter at a time (:data:`_EXTEND`) and prune dead prefixes.
"""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from . import perm as P
from .errors import OddLength, RangeError, checked


class FamilyId(str, enum.Enum):
    GI = "gi"
    GII = "gii"
    GIII = "giii"
    GIV = "giv"
    DUMONT_I = "d1"
    DUMONT_II = "d2"
    DUMONT_III = "d3"
    DUMONT_IV = "d4"
    DPERM = "dperm"
    EPERM = "eperm"
    X = "x"
    COLLAPSED = "co"
    DCYCLE = "dcycle"
    ECYCLE = "ecycle"

    @classmethod
    def parse(cls, token: str | FamilyId) -> FamilyId:
        return token if isinstance(token, cls) else cls(token.lower())


LABELING_FAMILIES = (FamilyId.GI, FamilyId.GII, FamilyId.GIII, FamilyId.GIV)
MEDIAN_FAMILIES = LABELING_FAMILIES + (FamilyId.DPERM, FamilyId.EPERM, FamilyId.X)
DUMONT_FAMILIES = (FamilyId.DUMONT_I, FamilyId.DUMONT_II, FamilyId.DUMONT_III, FamilyId.DUMONT_IV)


def _check_length(two_n: int) -> int:
    if two_n % 2:
        raise OddLength(f"length {two_n} is odd")
    if two_n < 2:
        raise RangeError("length must be at least 2")
    return two_n // 2


# -- membership, straight from the definitions ---------------------------------

def _is_gi(s):
    return not any(P.contains_parity_pattern(s, k) for k in ("eE", "eO", "oO"))


def _initial_oe_only(s):
    for m in range(1, len(s)):
        a, b = s[m - 1], s[m]
        if a > b and a % 2 == 1 and b % 2 == 0:
            head = s[:m]
            if not all(x % 2 for x in head) or any(x <= y for x, y in zip(head, head[1:])):
                return False
    return True


def _is_gii(s):
    if any(P.contains_parity_pattern(s, k) for k in ("Ee", "eO", "oO")):
        return False
    return _initial_oe_only(s)


def _is_giii(s):
    if P.contains_parity_pattern(s, "Oo") or P.contains_parity_pattern(s, "eE"):
        return False
    return not P.contains_generalized(s, "eO")


def _is_giv(s):
    if P.contains_parity_pattern(s, "eO"):
        return False
    return not (P.contains_generalized(s, "Oo") or P.contains_generalized(s, "Ee"))


def _is_d1(s):
    m = len(s)
    for i in range(1, m + 1):
        x = s[i - 1]
        if x % 2 == 0:
            if not (i < m and x > s[i]):
                return False
        elif not (i == m or x < s[i]):
            return False
    return True


def _is_d2(s):
    return all(s[2 * i - 1] < 2 * i and s[2 * i - 2] >= 2 * i - 1 for i in range(1, len(s) // 2 + 1))


def _is_d3(s):
    return all(a < b or (a % 2 == 0 and b % 2 == 0) for a, b in zip(s, s[1:]))


def _is_d4(s):
    return all(x >= i or (i % 2 == 0 and x % 2 == 0) for i, x in enumerate(s, start=1))


def _is_dperm(s):
    return all(s[2 * i - 1] <= 2 * i and s[2 * i - 2] >= 2 * i - 1 for i in range(1, len(s) // 2 + 1))


def _is_eperm(s):
    return P.drops(s) == P.even_odd_drops(s)


def _is_x(s):
    return all(a < b or (a % 2 == 0 and b % 2 == 1) for a, b in zip(s, s[1:]))


def _is_collapsed(s):
    n = len(s) // 2
    inv = P.inverse(s)
    return all(1 + k // 2 <= inv[k - 1] <= n + k // 2 for k in range(1, len(s) + 1))


def _is_dcycle(s):
    return _is_dperm(s) and P.cycle_count(s) == 1


def _is_ecycle(s):
    return _is_eperm(s) and P.cycle_count(s) == 1


_MEMBER: dict[FamilyId, Callable[[Sequence[int]], bool]] = {
    FamilyId.GI: _is_gi,
    FamilyId.GII: _is_gii,
    FamilyId.GIII: _is_giii,
    FamilyId.GIV: _is_giv,
    FamilyId.DUMONT_I: _is_d1,
    FamilyId.DUMONT_II: _is_d2,
    FamilyId.DUMONT_III: _is_d3,
    FamilyId.DUMONT_IV: _is_d4,
    FamilyId.DPERM: _is_dperm,
    FamilyId.EPERM: _is_eperm,
    FamilyId.X: _is_x,
    FamilyId.COLLAPSED: _is_collapsed,
    FamilyId.DCYCLE: _is_dcycle,
    FamilyId.ECYCLE: _is_ecycle,
}


def is_member(family: FamilyId | str, p: Sequence[int]) -> bool:
    family = FamilyId.parse(family)
    p = P.as_permutation(p)
    if len(p) % 2:
        raise OddLength(f"length {len(p)} is odd")
    return _MEMBER[family](p)


def is_cycle_member_on(family: FamilyId | str, cycle: Sequence[int]) -> bool:
    """D-cycle / E-cycle test for a single cycle on an arbitrary finite support."""
    family = FamilyId.parse(family)
    if family not in (FamilyId.DCYCLE, FamilyId.ECYCLE):
        raise ValueError("only dcycle and ecycle are defined on arbitrary supports")
    relabelled = P.reduced_form(P.validate_word(cycle))
    return is_member(family, P.from_cycles([relabelled]))


# -- incremental checks for the pruned generator ------------------------------
# Each takes the current prefix (a list), the candidate letter x and n, and
# decides whether prefix + [x] can still be extended to a member.

def _ext_gi(pre, x, n):
    if pre and pre[-1] < x:
        return pre[-1] % 2 == 1 and x % 2 == 0
    return True


def _ext_gii(pre, x, n):
    if not pre:
        return True
    a = pre[-1]
    if a < x:
        return x % 2 == 0
    if a % 2 == 0 and x % 2 == 0:
        return False
    if a % 2 == 1 and x % 2 == 0:
        return all(y % 2 for y in pre) and all(u > v for u, v in zip(pre, pre[1:]))
    return True


def _ext_giii(pre, x, n):
    if not pre:
        return True
    a = pre[-1]
    if a < x and a % 2 == 0 and x % 2 == 0:
        return False
    if a > x and a % 2 == 1 and x % 2 == 1:
        return False
    if x % 2 == 1:
        for y in reversed(pre):
            if y % 2 == 0:
                return y > x
    return True


def _ext_giv(pre, x, n):
    if not pre:
        return True
    if pre[-1] < x and pre[-1] % 2 == 0 and x % 2 == 1:
        return False
    par = x % 2
    alpha = []
    for y in reversed(pre):
        if y % 2 == par:
            if not alpha:
                return y < x
            if par == 1:
                return not (y > max(alpha) > x)
            return not (y > min(alpha) > x)
        alpha.append(y)
    return True


def _ext_d1(pre, x, n):
    if pre:
        a = pre[-1]
        if (a % 2 == 0) != (a > x):
            return False
    if len(pre) + 1 == 2 * n:
        return x % 2 == 1
    return True


def _ext_d2(pre, x, n):
    p = len(pre) + 1
    return x < p if p % 2 == 0 else x >= p


def _ext_d3(pre, x, n):
    return not pre or pre[-1] < x or (pre[-1] % 2 == 0 and x % 2 == 0)


def _ext_d4(pre, x, n):
    p = len(pre) + 1
    return x >= p or (p % 2 == 0 and x % 2 == 0)


def _ext_dperm(pre, x, n):
    p = len(pre) + 1
    return x <= p if p % 2 == 0 else x >= p


def _ext_eperm(pre, x, n):
    p = len(pre) + 1
    return x >= p or (p % 2 == 0 and x % 2 == 1)


def _ext_x(pre, x, n):
    return not pre or pre[-1] < x or (pre[-1] % 2 == 0 and x % 2 == 1)


def _ext_co(pre, x, n):
    p = len(pre) + 1
    return 1 + x // 2 <= p <= n + x // 2


def _closes_early(pre, x, n):
    p = len(pre) + 1
    if p == 2 * n:
        return False
    t = x
    while t <= p:
        if t == p:
            return True
        t = pre[t - 1]
    return False


def _ext_dcycle(pre, x, n):
    return _ext_dperm(pre, x, n) and not _closes_early(pre, x, n)


def _ext_ecycle(pre, x, n):
    return _ext_eperm(pre, x, n) and not _closes_early(pre, x, n)


_EXTEND = {
    FamilyId.GI: _ext_gi,
    FamilyId.GII: _ext_gii,
    FamilyId.GIII: _ext_giii,
    FamilyId.GIV: _ext_giv,
    FamilyId.DUMONT_I: _ext_d1,
    FamilyId.DUMONT_II: _ext_d2,
    FamilyId.DUMONT_III: _ext_d3,
    FamilyId.DUMONT_IV: _ext_d4,
    FamilyId.DPERM: _ext_dperm,
    FamilyId.EPERM: _ext_eperm,
    FamilyId.X: _ext_x,
    FamilyId.COLLAPSED: _ext_co,
    FamilyId.DCYCLE: _ext_dcycle,
    FamilyId.ECYCLE: _ext_ecycle,
}


def enumerate_family(family: FamilyId | str, two_n: int, first: int | None = None) -> Iterator[P.Word]:
    """Members of length ``two_n`` in lexicographic order, optionally with a fixed first letter."""
    family = FamilyId.parse(family)
    n = _check_length(two_n)
    ext = _EXTEND[family]
    used = [False] * (two_n + 1)
    pre: list[int] = []

    def rec():
        if len(pre) == two_n:
            yield tuple(pre)
            return
        letters = range(1, two_n + 1) if not pre and first is None else None
        if not pre and first is not None:
            letters = (first,)
        for x in letters if letters is not None else range(1, two_n + 1):
            if used[x] or not ext(pre, x, n):
                continue
            used[x] = True
            pre.append(x)
            yield from rec()
            pre.pop()
            used[x] = False

    yield from rec()


def naive_members(family: FamilyId | str, two_n: int) -> Iterator[P.Word]:
    """Filter all of S_{2n} through :func:`is_member` (the unpruned oracle)."""
    family = FamilyId.parse(family)
    _check_length(two_n)
    test = _MEMBER[family]
    for p in itertools.permutations(range(1, two_n + 1)):
        if test(p):
            yield p


def _count_first(args):
    family, two_n, first = args
    return sum(1 for _ in enumerate_family(family, two_n, first))


def count(family: FamilyId | str, two_n: int, jobs: int = 1) -> int:
    family = FamilyId.parse(family)
    _check_length(two_n)
    if jobs <= 1:
        return checked(sum(1 for _ in enumerate_family(family, two_n)))
    work = [(family, two_n, k) for k in range(1, two_n + 1)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return checked(sum(pool.map(_count_first, work)))


@dataclass(frozen=True)
class RefinedCountTable:
    """Counts of a family of length 2n split by first letter k = 1..2n."""

    n: int
    entries: dict[int, int]

    def row(self) -> tuple[int, ...]:
        return tuple(self.entries[k] for k in range(1, 2 * self.n + 1))

    def total(self) -> int:
        return sum(self.entries.values())


def refined_count_first_letter(two_n: int, family: FamilyId | str = FamilyId.GI, jobs: int = 1) -> RefinedCountTable:
    family = FamilyId.parse(family)
    n = _check_length(two_n)
    work = [(family, two_n, k) for k in range(1, two_n + 1)]
    if jobs <= 1:
        counts = list(map(_count_first, work))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            counts = list(pool.map(_count_first, work))
    return RefinedCountTable(n, {k: checked(c) for k, c in enumerate(counts, start=1)})


def leftmost_even(word: Sequence[int]) -> int | None:
    return next((x for x in word if x % 2 == 0), None)


def diii_slice(two_n: int, two_k: int) -> Iterator[P.Word]:
    """Dumont permutations of the third kind whose leftmost even letter is ``two_k``."""
    n = _check_length(two_n)
    if two_k % 2 or not 1 <= two_k // 2 <= n:
        raise RangeError(f"2k = {two_k} outside 2..{two_n}")
    for p in enumerate_family(FamilyId.DUMONT_III, two_n):
        if leftmost_even(p) == two_k:
            yield p


def diii_refined_count(two_n: int, two_k: int) -> int:
    return checked(sum(1 for _ in diii_slice(two_n, two_k)))


def gi_slice(two_n: int, k: int) -> list[P.Word]:
    """Members of GI of length ``two_n`` starting with ``k``."""
    _check_length(two_n)
    if not 1 <= k <= two_n:
        return []
    return list(enumerate_family(FamilyId.GI, two_n, first=k))
