"""
The four region labelings, built by repeatedly inserting two new letters.

Labelings I-III recurse through ``proj`` and insert 2N+1, 2N+2; labeling IV
recurses through ``proj_prime`` (shifting every letter up by two) and inserts
1, 2. Every comparison the insertion steps need is an oE-pair sign, so the
region's signs are consulted directly and no coordinates are involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import perm as P
from .arrangement import Region, linear_extensions, poset, proj, proj_prime, require_realizable
from .families import LABELING_FAMILIES, FamilyId, is_member

Word = P.Word


@dataclass(frozen=True)
class BadPair:
    i: int
    j: int


def bad_pairs(base: Sequence[int], r: Region, flavor: str = "odd") -> list[BadPair]:
    """Bad pairs of ``base`` against the pivot coordinate of ``r``.

    ``odd``: odd i before odd j with x_j < x_{2n} < x_i, where 2n is the
    largest index of ``r``. ``even``: even i before even j with x_j < x_1 < x_i.
    Pairs are returned in order of (position of j, position of i).
    """
    if flavor == "odd":
        top = 2 * r.n
        below = {x: r.less(x, top) for x in base if x % 2}
    elif flavor == "even":
        below = {x: not r.less(1, x) for x in base if x % 2 == 0}
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    letters = [x for x in base if x in below]
    out = []
    for b, j in enumerate(letters):
        if below[j]:
            out.extend(BadPair(i, j) for i in letters[:b] if not below[i])
    return out


def _rightmost_bad(base: Sequence[int], pairs: list[BadPair]) -> tuple[int, list[int]] | None:
    if not pairs:
        return None
    pos = {x: t for t, x in enumerate(base)}
    j = max((p.j for p in pairs), key=pos.__getitem__)
    return j, [p.i for p in pairs if p.j == j]


def _insert_after(word: list[int], anchor: int, letters: Sequence[int]) -> list[int]:
    t = word.index(anchor) + 1
    return word[:t] + list(letters) + word[t:]


def _insert_before_index(word: list[int], t: int | None, letters: Sequence[int]) -> list[int]:
    if t is None:
        return word + list(letters)
    return word[:t] + list(letters) + word[t:]


# -- insertion algorithms -------------------------------------------------------
# Each returns the list of stages: the word after every round, from n = 1 up.

def _top_pair_less(r: Region) -> bool:
    return r.less(2 * r.n - 1, 2 * r.n)


def _step4_right_of_lower(w: list[int], r: Region, y: Sequence[int]) -> list[int]:
    """Insert y right after the rightmost odd k with x_k < x_top; prepend if none."""
    top = 2 * r.n
    ks = [t for t, x in enumerate(w) if x % 2 and r.less(x, top)]
    if not ks:
        return list(y) + w
    return w[: ks[-1] + 1] + list(y) + w[ks[-1] + 1:]


def _ia1(base: Word, r: Region) -> Word:
    top = 2 * r.n
    found = _rightmost_bad(base, bad_pairs(base, r))
    w = list(base)
    if found:
        j, us = found
        u = sorted(us, reverse=True)
        w = [x for x in w if x not in us]
        w = _insert_after(w, j, u)
    y = [top] if _top_pair_less(r) else [top, top - 1]
    w = _step4_right_of_lower(w, r, y)
    return tuple([top - 1] + w) if _top_pair_less(r) else tuple(w)


def _ia2(base: Word, r: Region) -> Word:
    top = 2 * r.n
    found = _rightmost_bad(base, bad_pairs(base, r))
    w = list(base)
    if found:
        j, us = found
        u = sorted(us, reverse=True)
        i_m = u[-1]
        w = [x for x in w if x not in us]
        start = w.index(j) + 1
        z = next((t for t in range(start, len(w)) if w[t] % 2 or w[t] > i_m), None)
        w = _insert_before_index(w, z, u)
    y = [top] if _top_pair_less(r) else [top, top - 1]
    k = next((t for t, x in enumerate(w) if x % 2 and not r.less(x, top)), None)
    # Repair: if y lands inside the initial odd run o_1 > ... > o_m, the evens
    # right after o_m that are smaller than it would form a non-initial Oe.
    # They travel with y (they only pass larger odds and y, so no oE sign moves).
    m = 0
    while m < len(w) and w[m] % 2:
        m += 1
    if k is not None and k < m:
        e = m
        while e < len(w) and w[e] % 2 == 0 and w[e] < w[m - 1]:
            e += 1
        y = w[m:e] + y
        w = w[:m] + w[e:]
    w = _insert_before_index(w, k, y)
    return tuple([top - 1] + w) if _top_pair_less(r) else tuple(w)


def _ia3(base: Word, r: Region) -> Word:
    top = 2 * r.n
    found = _rightmost_bad(base, bad_pairs(base, r))
    w = list(base)
    if found:
        j, us = found
        w = [x for x in w if x not in us]
        start = w.index(j) + 1
        end = start
        while end < len(w) and w[end] % 2:
            end += 1
        w = w[:start] + sorted(w[start:end] + us) + w[end:]
    w = _step4_right_of_lower(w, r, [top])
    if _top_pair_less(r):
        t = next((t for t, x in enumerate(w) if x % 2 == 0), None)
    else:
        after = w.index(top) + 1
        # append when no even letter follows 2n+2
        t = next((t for t in range(after, len(w)) if w[t] % 2 == 0), None)
    return tuple(_insert_before_index(w, t, [top - 1]))


def _ia4(base: Word, r: Region) -> Word:
    """Insert 1 and then 2 into ``base`` (letters 3..2n)."""
    found = _rightmost_bad(base, bad_pairs(base, r, "even"))
    w = list(base)
    u: list[int] = []
    if found:
        _, us = found
        u = sorted(us)
        w = [x for x in w if x not in us]
    ks = [t for t, x in enumerate(w) if x % 2 == 0 and not r.less(1, x)]
    if not ks:
        w = [1] + w
    else:
        kt = ks[-1]
        k = w[kt]
        # maximal even factor around k, split at k
        e0 = kt
        while e0 > 0 and w[e0 - 1] % 2 == 0:
            e0 -= 1
        e1 = kt + 1
        while e1 < len(w) and w[e1] % 2 == 0:
            e1 += 1
        gamma_minus, gamma_plus = w[e0:kt], w[kt + 1:e1]
        # odd factor before it
        b0 = e0
        while b0 > 0 and w[b0 - 1] % 2:
            b0 -= 1
        beta = w[b0:e0]
        beta_minus = [x for x in beta if x < k]
        beta_plus = [x for x in beta if x > k]
        alpha = w[:b0]
        # odd factor after it
        s1 = e1
        while s1 < len(w) and w[s1] % 2:
            s1 += 1
        sigma = w[e1:s1]
        tau = w[s1:]
        if u:
            sigma_minus = [x for x in sigma if x < u[-1]]
            sigma_plus = [x for x in sigma if x > u[-1]]
        else:
            sigma_minus, sigma_plus = [], sigma
        head = alpha + beta_minus + gamma_minus + [k, 1]
        if not gamma_plus and not sigma_minus:
            w = head + beta_plus + sigma_plus + u + tau
        elif not gamma_plus:
            w = head + u + sigma_minus + sigma_plus + tau
        else:
            w = head + beta_plus + u + gamma_plus + sigma_minus + sigma_plus + tau
    one = w.index(1)
    if r.less(1, 2):
        t = next((t for t in range(one + 1, len(w)) if w[t] % 2 == 0), None)
        return tuple(_insert_before_index(w, t, [2]))
    ell = next((t for t, x in enumerate(w) if x % 2 == 0), None)
    if ell is not None and ell < one:
        return tuple(_insert_before_index(w, ell, [2]))
    return tuple([2] + w)


def _stages_via_proj(r: Region, step: Callable[[Word, Region], Word]) -> list[Word]:
    chain = [r]
    while chain[-1].n > 1:
        chain.append(proj(chain[-1]))
    chain.reverse()
    cur: Word = (1, 2) if chain[0].less(1, 2) else (2, 1)
    stages = [cur]
    for reg in chain[1:]:
        cur = step(cur, reg)
        stages.append(cur)
    return stages


def _stages_iv(r: Region) -> list[Word]:
    chain = [r]
    while chain[-1].n > 1:
        chain.append(proj_prime(chain[-1]))
    chain.reverse()
    cur: Word = (1, 2) if chain[0].less(1, 2) else (2, 1)
    stages = [cur]
    for reg in chain[1:]:
        cur = _ia4(P.shift(cur, 2), reg)
        stages.append(cur)
    return stages


def stages(family: FamilyId | str, r: Region) -> list[Word]:
    """The image after each round, for half-dimensions 1, 2, ..., n.

    For labeling IV the stage of size 2m labels the region on the last 2m
    coordinates, so its letters are shifted by 2(n - m) relative to the final word.
    """
    family = FamilyId.parse(family)
    require_realizable(r)
    if r.n < 1:
        raise ValueError("empty region")
    if family is FamilyId.GI:
        return _stages_via_proj(r, _ia1)
    if family is FamilyId.GII:
        return _stages_via_proj(r, _ia2)
    if family is FamilyId.GIII:
        return _stages_via_proj(r, _ia3)
    if family is FamilyId.GIV:
        return _stages_iv(r)
    raise ValueError(f"no labeling onto {family.value}")


def lambda1(r: Region) -> Word:
    return stages(FamilyId.GI, r)[-1]


def lambda2(r: Region) -> Word:
    return stages(FamilyId.GII, r)[-1]


def lambda3(r: Region) -> Word:
    return stages(FamilyId.GIII, r)[-1]


def lambda4(r: Region) -> Word:
    return stages(FamilyId.GIV, r)[-1]


LABELINGS = {
    FamilyId.GI: lambda1,
    FamilyId.GII: lambda2,
    FamilyId.GIII: lambda3,
    FamilyId.GIV: lambda4,
}


def label(family: FamilyId | str, r: Region) -> Word:
    family = FamilyId.parse(family)
    if family not in LABELINGS:
        raise ValueError(f"no labeling onto {family.value}")
    return LABELINGS[family](r)


@dataclass(frozen=True)
class Labels:
    gi: Word
    gii: Word
    giii: Word
    giv: Word


def label_all(r: Region) -> Labels:
    return Labels(lambda1(r), lambda2(r), lambda3(r), lambda4(r))


def oracle_label(family: FamilyId | str, r: Region) -> Word:
    """The unique family member among the linear extensions of the region poset."""
    family = FamilyId.parse(family)
    if family not in LABELING_FAMILIES:
        raise ValueError(f"no labeling onto {family.value}")
    hits = [p for p in linear_extensions(poset(r)) if is_member(family, p)]
    if len(hits) != 1:
        raise AssertionError(f"{len(hits)} compatible members of {family.value}")
    return hits[0]
