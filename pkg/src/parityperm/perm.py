"""
Words and permutations as tuples of positive integers in one-line notation.

Positions and values are 1-indexed: ``w[0]`` holds the letter at position 1.
Every function here is pure and returns fresh tuples.

>>> reduced_form((4, 3, 5))
(2, 1, 3)
>>> format_cycles(to_cycles(inverse((3, 2, 4, 1, 6, 5)), MinimaOrder.DECREASING))
'(5 6)(2)(1 4 3)'
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BadSupport, DuplicateLetter, NonPositiveLetter

Word = tuple[int, ...]

PARITY_PATTERNS = ("eE", "eO", "oE", "oO", "Ee", "Eo", "Oe", "Oo")
GENERALIZED_PATTERNS = ("eO", "Oo", "Ee")


def validate_word(letters: Iterable[int]) -> Word:
    word = tuple(int(x) for x in letters)
    for x in word:
        if x <= 0:
            raise NonPositiveLetter(f"letter {x} is not positive")
    if len(set(word)) != len(word):
        raise DuplicateLetter(f"repeated letter in {word}")
    return word


def as_permutation(letters: Iterable[int]) -> Word:
    """Validate that ``letters`` is a permutation of {1, ..., len}."""
    word = validate_word(letters)
    if set(word) != set(range(1, len(word) + 1)):
        raise BadSupport(f"{word} is not a permutation of 1..{len(word)}")
    return word


def is_permutation(letters: Sequence[int]) -> bool:
    return sorted(letters) == list(range(1, len(letters) + 1))


def parse_word(text: str) -> Word:
    """Parse ``"6 5 10 1"`` or, when every letter is a single digit, ``"6510"``."""
    text = text.strip()
    if not text:
        return ()
    if re.search(r"[\s,]", text):
        return validate_word(int(tok) for tok in re.split(r"[\s,]+", text) if tok)
    if not text.isdigit():
        raise ValueError(f"cannot parse word {text!r}")
    return validate_word(int(ch) for ch in text)


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(x) for x in word)


def reduced_form(word: Sequence[int]) -> Word:
    """Replace the i-th smallest letter by i."""
    rank = {x: i for i, x in enumerate(sorted(word), start=1)}
    return tuple(rank[x] for x in word)


def shift(word: Sequence[int], by: int) -> Word:
    return tuple(x + by for x in word)


def inverse(perm: Sequence[int]) -> Word:
    inv = [0] * len(perm)
    for pos, val in enumerate(perm, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def reverse(word: Sequence[int]) -> Word:
    return tuple(reversed(word))


def _parity_ok(letter: int, tag_char: str) -> bool:
    return letter % 2 == (0 if tag_char in "eE" else 1)


def contains_parity_pattern(word: Sequence[int], kind: str) -> bool:
    """Does some adjacent pair of ``word`` realize the parity pattern ``kind``?

    The first character constrains the left letter, the second the right one;
    lower case marks the smaller of the two, so ``eO`` is an ascent from an
    even letter to an odd letter and ``Oe`` a descent from odd to even.
    """
    if kind not in PARITY_PATTERNS:
        raise ValueError(f"unknown parity pattern {kind!r}")
    ascent = kind[0].islower()
    for a, b in zip(word, word[1:]):
        if (a < b) == ascent and _parity_ok(a, kind[0]) and _parity_ok(b, kind[1]):
            return True
    return False


def generalized_occurrences(word: Sequence[int], kind: str) -> Iterator[tuple[int, int, int]]:
    """Yield ``(i, j, d)`` (1-indexed positions) for each occurrence of ``kind`` at distance d.

    eO_d: an even letter, then d odd letters, then an odd letter larger than it.
    Oo_d: two odd letters around an even factor alpha of length d with
    left > max(alpha) > right (left > right when d = 0).
    Ee_d: two even letters around an odd factor alpha of length d with
    left > min(alpha) > right (left > right when d = 0).
    """
    n = len(word)
    if kind == "eO":
        for i in range(n):
            if word[i] % 2:
                continue
            j = i + 1
            while j < n and word[j] % 2 == 1:
                if word[i] < word[j]:
                    yield i + 1, j + 1, j - i - 1
                j += 1
    elif kind in ("Oo", "Ee"):
        end_parity = 1 if kind == "Oo" else 0
        for i in range(n):
            if word[i] % 2 != end_parity:
                continue
            j = i + 1
            while j < n and word[j] % 2 != end_parity:
                j += 1
            if j == n:
                continue
            alpha = word[i + 1:j]
            if not alpha:
                hit = word[i] > word[j]
            elif kind == "Oo":
                hit = word[i] > max(alpha) > word[j]
            else:
                hit = word[i] > min(alpha) > word[j]
            if hit:
                yield i + 1, j + 1, len(alpha)
    else:
        raise ValueError(f"unknown generalized pattern {kind!r}")


def contains_generalized(word: Sequence[int], kind: str, d: int | None = None) -> bool:
    """Generalized pattern containment; ``d=None`` means at any distance."""
    return any(d is None or dist == d for _, _, dist in generalized_occurrences(word, kind))


def drops(perm: Sequence[int]) -> set[tuple[int, int]]:
    return {(i, v) for i, v in enumerate(perm, start=1) if i > v}


def even_odd_drops(perm: Sequence[int]) -> set[tuple[int, int]]:
    return {(i, v) for i, v in drops(perm) if i % 2 == 0 and v % 2 == 1}


def left_to_right_minima(word: Sequence[int]) -> list[int]:
    """Left-to-right minima in order of appearance."""
    out: list[int] = []
    for x in word:
        if not out or x < out[-1]:
            out.append(x)
    return out


def maximal_parity_factors(word: Sequence[int]) -> list[tuple[str, Word]]:
    """Split into maximal runs of equal parity, tagged ``'e'`` or ``'o'``."""
    factors: list[tuple[str, Word]] = []
    for x in word:
        tag = "e" if x % 2 == 0 else "o"
        if factors and factors[-1][0] == tag:
            factors[-1] = (tag, factors[-1][1] + (x,))
        else:
            factors.append((tag, (x,)))
    return factors


def reorder_ascending(word: Sequence[int]) -> Word:
    return tuple(sorted(word))


class MinimaOrder(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


@dataclass(frozen=True)
class CycleForm:
    """Disjoint cycles, each written starting from its minimum.

    ``(a b c)`` sends a to b, b to c and c to a.
    """

    cycles: tuple[Word, ...]
    order: MinimaOrder = MinimaOrder.INCREASING

    def __post_init__(self):
        seen: set[int] = set()
        for cyc in self.cycles:
            if not cyc:
                raise BadSupport("empty cycle")
            if cyc[0] != min(cyc):
                raise BadSupport(f"cycle {cyc} does not start with its minimum")
            if seen & set(cyc) or len(set(cyc)) != len(cyc):
                raise BadSupport("cycles are not disjoint")
            seen |= set(cyc)
        minima = [c[0] for c in self.cycles]
        want = sorted(minima, reverse=self.order is MinimaOrder.DECREASING)
        if minima != want:
            raise BadSupport(f"cycle minima {minima} not in {self.order.value} order")

    def minima(self) -> set[int]:
        return {c[0] for c in self.cycles}

    def __str__(self) -> str:
        return format_cycles(self)


def canonical_cycle(cycle: Sequence[int]) -> Word:
    """Rotate a cycle so that it starts with its minimum."""
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


def make_cycle_form(cycles: Iterable[Sequence[int]], order: MinimaOrder = MinimaOrder.INCREASING) -> CycleForm:
    cyc = [canonical_cycle(c) for c in cycles]
    cyc.sort(key=lambda c: c[0], reverse=order is MinimaOrder.DECREASING)
    return CycleForm(tuple(cyc), order)


def to_cycles(perm: Sequence[int], order: MinimaOrder = MinimaOrder.INCREASING) -> CycleForm:
    seen = [False] * (len(perm) + 1)
    cycles = []
    for start in range(1, len(perm) + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x - 1]
        cycles.append(tuple(cyc))
    return make_cycle_form(cycles, order)


def from_cycles(form: CycleForm | Iterable[Sequence[int]]) -> Word:
    cycles = form.cycles if isinstance(form, CycleForm) else tuple(tuple(c) for c in form)
    support = [x for c in cycles for x in c]
    if sorted(support) != list(range(1, len(support) + 1)):
        raise BadSupport(f"cycle support {sorted(support)} is not 1..{len(support)}")
    perm = [0] * len(support)
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a - 1] = b
    return tuple(perm)


def cycle_count(perm: Sequence[int]) -> int:
    return len(to_cycles(perm).cycles)


def cycle_minima(perm: Sequence[int]) -> set[int]:
    return to_cycles(perm).minima()


def format_cycles(form: CycleForm | Iterable[Sequence[int]]) -> str:
    cycles = form.cycles if isinstance(form, CycleForm) else form
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


def parse_cycles(text: str, order: MinimaOrder | None = None) -> CycleForm:
    """Parse ``"(5 9 11)(4)(1 6 2)"``; the minima order is inferred unless given."""
    if not text.strip():
        return CycleForm((), order or MinimaOrder.INCREASING)  # the empty permutation
    groups = re.findall(r"\(([^()]*)\)", text)
    if not groups or re.sub(r"\([^()]*\)|\s", "", text):
        raise ValueError(f"cannot parse cycles {text!r}")
    cycles = [parse_word(g) for g in groups]
    if order is None:
        minima = [c[0] for c in cycles]
        order = MinimaOrder.DECREASING if len(minima) > 1 and minima[0] > minima[1] else MinimaOrder.INCREASING
    return CycleForm(tuple(cycles), order)
