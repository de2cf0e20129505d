from math import comb, factorial

import pytest

from parityperm import sequences as N
from parityperm.errors import Overflow, RangeError

from oracles import seidel_oracle

G = [None, 1, 1, 3, 17, 155, 2073]
H = [1, 2, 8, 56, 608, 9440]


def test_table_rows():
    tri = N.seidel(10)
    assert tri[0] == (1,)
    assert tri[6] == (8, 14, 17, 17)
    assert tri[9] == (608, 552, 448, 310, 155)
    assert N.seidel_entry(7, 3) == 17 == N.seidel_entry(7, 2) + N.seidel_entry(6, 3)


def test_seidel_against_recurrence_oracle():
    S = seidel_oracle(30)
    tri = N.seidel(30)
    for m, row in enumerate(tri, start=1):
        assert row == tuple(S[(m, k)] for k in range(1, (m + 1) // 2 + 1))


def test_seidel_entry_zero_outside():
    assert N.seidel_entry(5, 0) == 0
    assert N.seidel_entry(5, 4) == 0
    with pytest.raises(RangeError):
        N.seidel(0)


def test_overflow_beyond_guaranteed_range():
    N.seidel(N.MAX_SEIDEL_ROWS)
    with pytest.raises(Overflow):
        N.seidel(N.MAX_SEIDEL_ROWS + 10)


@pytest.mark.parametrize("n", range(1, 7))
def test_genocchi(n):
    assert N.genocchi(n) == G[n]


@pytest.mark.parametrize("n", range(0, 6))
def test_median_genocchi(n):
    assert N.median_genocchi(n) == H[n]


@pytest.mark.parametrize("n", range(0, 9))
def test_two_genocchi_identity(n):
    assert N.check_two_genocchi_identity(n)


def test_two_genocchi_identity_by_hand():
    # h_2 = C(3,1) g_3 - C(3,3) g_2
    assert comb(3, 1) * G[3] - comb(3, 3) * G[2] == 8 == N.median_genocchi(2)


def test_tangent_numbers_against_series():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    series = sympy.series(sympy.tan(x), x, 0, 22).removeO()
    got = N.tangent_numbers(21)
    for m in range(1, 22, 2):
        assert got[m] == series.coeff(x, m) * factorial(m)
    assert [got[m] for m in (1, 3, 5, 7)] == [1, 2, 16, 272]


@pytest.mark.parametrize("n", range(0, 10))
def test_genocchi_from_tangent(n):
    assert N.genocchi_from_tangent(n) == N.genocchi(n + 1)


def test_genocchi_from_tangent_worked():
    assert 4 * 272 // 2**6 == 17 == N.genocchi_from_tangent(3)
    assert N.genocchi_from_tangent(0) == 1


@pytest.mark.parametrize("n", range(1, 14))
def test_genocchi_odd(n):
    assert N.genocchi(n) % 2 == 1


@pytest.mark.parametrize("n, q", list(enumerate([1, 1, 2, 7, 38, 295])))
def test_normalized_median(n, q):
    assert N.normalized_median(n) == q


@pytest.mark.parametrize("n", range(0, 14))
def test_median_divisible(n):
    assert N.median_genocchi(n) % 2**n == 0


@pytest.mark.parametrize("n, k", [(4, 1), (2, 1), (5, 4), (10, 0), (10, 9)])
def test_reflection_recursion(n, k):
    assert N.seidel_reflection_recursion_check(n, k)


def test_reflection_recursion_range():
    with pytest.raises(RangeError):
        N.seidel_reflection_recursion_check(3, 3)
