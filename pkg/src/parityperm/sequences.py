"""Seidel triangle, Genocchi numbers of both kinds, and tangent numbers.

All arithmetic is exact and bounded to the unsigned 64-bit range; anything
that would leave it raises :class:`Overflow` instead of silently growing.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import InexactDivision, NotDivisible, RangeError, checked

# Largest row count whose every entry fits in 64 bits (verified in tests).
MAX_SEIDEL_ROWS = 30


@lru_cache(maxsize=None)
def _seidel_rows(rows: int) -> tuple[tuple[int, ...], ...]:
    table: list[tuple[int, ...]] = [(1,)]
    for m in range(2, rows + 1):
        prev = table[-1]
        width = (m + 1) // 2
        above = list(prev) + [0] * (width - len(prev))
        row = [0] * width
        if m % 2 == 0:
            # right to left: S[m,k] = S[m-1,k] + S[m,k+1]
            acc = 0
            for k in range(width - 1, -1, -1):
                acc = checked(above[k] + acc)
                row[k] = acc
        else:
            # left to right: S[m,k] = S[m-1,k] + S[m,k-1]
            acc = 0
            for k in range(width):
                acc = checked(above[k] + acc)
                row[k] = acc
        table.append(tuple(row))
    return tuple(table)


def seidel(rows: int) -> tuple[tuple[int, ...], ...]:
    """The first ``rows`` rows of the Seidel triangle; row m has ceil(m/2) entries."""
    if rows < 1:
        raise RangeError("need at least one row")
    return _seidel_rows(rows)


def seidel_entry(m: int, k: int) -> int:
    """S[m,k], zero outside 1 <= k <= ceil(m/2)."""
    if m < 1:
        raise RangeError(f"row {m} does not exist")
    if not 1 <= k <= (m + 1) // 2:
        return 0
    return seidel(m)[m - 1][k - 1]


def genocchi(n: int) -> int:
    """g_n = S[2n, n]: 1, 1, 3, 17, 155, 2073, ..."""
    if n < 1:
        raise RangeError("genocchi numbers start at n = 1")
    return seidel_entry(2 * n, n)


def median_genocchi(n: int) -> int:
    """h_n = S[2n+2, 1]: 1, 2, 8, 56, 608, 9440, ..."""
    if n < 0:
        raise RangeError("median genocchi numbers start at n = 0")
    return seidel_entry(2 * n + 2, 1)


def check_two_genocchi_identity(n: int) -> bool:
    """h_n == sum_j (-1)^j C(n+1, 2j+1) g_{n+1-j}, j = 0..floor(n/2)."""
    total = sum((-1) ** j * comb(n + 1, 2 * j + 1) * genocchi(n + 1 - j) for j in range(n // 2 + 1))
    return total == median_genocchi(n)


def tangent_numbers(upto_index: int) -> dict[int, int]:
    """Map 2k+1 -> T_{2k+1} for every odd index up to ``upto_index``.

    Uses the boustrophedon (Entringer) transform: the last entry of row m is
    the zigzag number E_m, and E_m = T_m for odd m.
    """
    out: dict[int, int] = {}
    row = [1]
    for m in range(1, upto_index + 1):
        new = [0]
        for x in reversed(row):
            new.append(checked(new[-1] + x))
        row = new
        if m % 2 == 1:
            out[m] = row[-1]
    return out


def genocchi_from_tangent(n: int) -> int:
    """g_{n+1} computed as (n+1) T_{2n+1} / 4^n."""
    if n < 0:
        raise RangeError("n must be nonnegative")
    t = tangent_numbers(2 * n + 1)[2 * n + 1]
    num = checked((n + 1) * t)
    q, r = divmod(num, 4**n)
    if r:
        raise InexactDivision(f"(n+1)T_(2n+1) not divisible by 4^n at n={n}")
    return q


def normalized_median(n: int) -> int:
    """h_n / 2^n: 1, 1, 2, 7, 38, 295, ..."""
    q, r = divmod(median_genocchi(n), 2**n)
    if r:
        raise NotDivisible(f"h_{n} is not divisible by 2^{n}")
    return q


def seidel_reflection_recursion_check(n: int, k: int) -> bool:
    """S[2n, n-k] == S[2n, n+1-k] + sum_{i=k}^{n-1} S[2n-2, n-i]."""
    if n < 2 or not 0 <= k <= n - 1:
        raise RangeError(f"(n, k) = ({n}, {k}) outside 2 <= n, 0 <= k < n")
    rhs = seidel_entry(2 * n, n + 1 - k) + sum(seidel_entry(2 * n - 2, n - i) for i in range(k, n))
    return seidel_entry(2 * n, n - k) == rhs
