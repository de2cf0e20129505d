import itertools

import pytest

from parityperm import perm as P
from parityperm.errors import BadSupport, DuplicateLetter, NonPositiveLetter

from oracles import cycles as oracle_cycles, perms


def test_validate_word():
    assert P.validate_word([3, 1, 4, 2]) == (3, 1, 4, 2)
    assert P.validate_word([]) == ()
    with pytest.raises(DuplicateLetter):
        P.validate_word([1, 1])
    with pytest.raises(NonPositiveLetter):
        P.validate_word([0, 1])


def test_as_permutation_rejects_gaps():
    with pytest.raises(BadSupport):
        P.as_permutation([1, 3])


@pytest.mark.parametrize("text, word", [
    ("3142", (3, 1, 4, 2)),
    ("6 5 10 1", (6, 5, 10, 1)),
    ("6,5,10", (6, 5, 10)),
    ("", ()),
])
def test_parse_word(text, word):
    assert P.parse_word(text) == word


@pytest.mark.parametrize("word, red", [
    ((4, 3, 5), (2, 1, 3)),
    ((2, 1, 6, 5), (2, 1, 4, 3)),
    ((1, 2, 3), (1, 2, 3)),
])
def test_reduced_form(word, red):
    assert P.reduced_form(word) == red


def test_inverse_example():
    inv = P.inverse((3, 2, 4, 1, 6, 5))
    assert P.format_cycles(P.to_cycles(inv, P.MinimaOrder.DECREASING)) == "(5 6)(2)(1 4 3)"
    assert P.inverse((2, 1)) == (2, 1)
    assert P.inverse((1, 2, 3)) == (1, 2, 3)


def test_reverse():
    assert P.reverse((1, 4, 3, 2)) == (2, 3, 4, 1)
    assert P.reverse(()) == ()


@pytest.mark.parametrize("word, kind, expected", [
    ((1, 4, 3, 2), "oO", False),
    ((1, 4, 3, 2), "eE", False),
    ((1, 4, 3, 2), "eO", False),
    ((1, 2), "oE", True),
    ((2, 1, 3, 4), "eO", False),
    ((2, 1), "Eo", True),
    ((3, 1), "Oo", True),
])
def test_consecutive_patterns(word, kind, expected):
    assert P.contains_parity_pattern(word, kind) is expected


@pytest.mark.parametrize("word, kind, d, expected", [
    ((2, 1, 3, 4), "eO", 1, True),
    ((2, 1, 3, 4), "eO", 0, False),
    ((2, 1, 3, 4), "eO", None, True),
    ((1, 4, 3, 2), "Ee", None, True),
    ((1, 4, 3, 2), "Ee", 1, True),
    ((1, 2), "Oo", None, False),
])
def test_generalized_patterns(word, kind, d, expected):
    assert P.contains_generalized(word, kind, d) is expected


def test_drops():
    p = (3, 2, 4, 1, 6, 5)
    assert P.drops(p) == P.even_odd_drops(p) == {(4, 1), (6, 5)}
    assert P.drops((1, 2, 3)) == set()
    assert P.drops((2, 1)) == P.even_odd_drops((2, 1)) == {(2, 1)}


@pytest.mark.parametrize("word, minima", [
    ((5, 6, 2, 1, 4, 3), [5, 2, 1]),
    ((4, 3, 2, 1), [4, 3, 2, 1]),
    ((1, 2, 3), [1]),
])
def test_left_to_right_minima(word, minima):
    assert P.left_to_right_minima(word) == minima


def test_from_cycles_example():
    form = P.parse_cycles("(5 9 11 12 8 7 10)(4)(3)(1 6 2)")
    assert P.from_cycles(form) == (6, 1, 3, 4, 9, 2, 10, 7, 11, 5, 12, 8)
    assert P.format_cycles(P.to_cycles((1, 2, 3))) == "(1)(2)(3)"


def test_cycle_form_rejects_bad_support():
    with pytest.raises(BadSupport):
        P.from_cycles([(1, 3)])


def test_maximal_parity_factors():
    assert P.maximal_parity_factors((2, 4, 1, 3)) == [("e", (2, 4)), ("o", (1, 3))]
    assert P.maximal_parity_factors((5, 3, 1)) == [("o", (5, 3, 1))]
    w = (6, 5, 10, 1, 2, 18, 7, 8, 3, 4, 14, 11, 12, 9, 15, 16, 13, 17)
    factors = P.maximal_parity_factors(w)
    assert tuple(x for _, f in factors for x in f) == w
    assert all(a != b for (a, _), (b, _) in zip(factors, factors[1:]))


def test_reorder_ascending():
    assert P.reorder_ascending((7, 15)) == (7, 15)
    assert P.reorder_ascending((15, 7)) == (7, 15)
    assert P.reorder_ascending((11, 7)) == (7, 11)


@pytest.mark.parametrize("m", range(0, 8))
def test_inverse_and_cycles_round_trip(m):
    for p in perms(m):
        assert P.inverse(P.inverse(p)) == p
        for order in P.MinimaOrder:
            form = P.to_cycles(p, order)
            assert P.from_cycles(form) == p
        assert sorted(P.to_cycles(p).cycles) == sorted(P.canonical_cycle(c) for c in oracle_cycles(p))


@pytest.mark.parametrize("m", range(0, 7))
def test_distance_zero_matches_consecutive(m):
    for p in perms(m):
        for kind in P.GENERALIZED_PATTERNS:
            assert P.contains_generalized(p, kind, 0) == P.contains_parity_pattern(p, kind)


def test_reduce_preserves_order():
    for w in itertools.permutations((2, 7, 30, 11), 4):
        r = P.reduced_form(w)
        assert P.reduced_form(r) == r
        assert all((w[i] < w[j]) == (r[i] < r[j]) for i in range(4) for j in range(4))
