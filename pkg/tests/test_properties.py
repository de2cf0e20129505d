from hypothesis import given, settings, strategies as st

from parityperm import arrangement as A
from parityperm import bijections as B
from parityperm import perm as P
from parityperm.families import LABELING_FAMILIES, is_member
from parityperm.labelings import label


def permutations(min_size=0, max_size=9):
    return st.integers(min_size, max_size).flatmap(lambda m: st.permutations(list(range(1, m + 1)))).map(tuple)


def even_permutations(min_half=1, max_half=7):
    return st.integers(min_half, max_half).flatmap(lambda n: st.permutations(list(range(1, 2 * n + 1)))).map(tuple)


words = st.lists(st.integers(1, 60), unique=True, max_size=10).map(tuple)


@given(words)
def test_reduce_keeps_relative_order(w):
    r = P.reduced_form(w)
    assert sorted(r) == list(range(1, len(w) + 1))
    assert P.reduced_form(r) == r
    assert all((w[i] < w[j]) == (r[i] < r[j]) for i in range(len(w)) for j in range(len(w)))


@given(permutations())
def test_inverse_and_cycles(p):
    assert P.inverse(P.inverse(p)) == p
    for order in P.MinimaOrder:
        form = P.to_cycles(p, order)
        assert P.from_cycles(form) == p
        assert P.parse_cycles(P.format_cycles(form), order) == form
    assert P.even_odd_drops(p) <= P.drops(p)


@given(permutations())
def test_word_text_round_trip(p):
    assert P.parse_word(P.format_word(p)) == p


@given(even_permutations())
def test_region_text_round_trip(p):
    r = A.region_of(p)
    assert A.parse_region(A.format_region(r)) == r
    assert A.compatible(p, r)


@settings(max_examples=60, deadline=None)
@given(even_permutations(1, 8))
def test_labelings_on_random_regions(p):
    r = A.region_of(p)
    for fam in LABELING_FAMILIES:
        q = label(fam, r)
        assert is_member(fam, q)
        assert A.region_of(q) == r


@settings(max_examples=60, deadline=None)
@given(even_permutations(1, 8))
def test_label_is_identity_on_members(p):
    # a member labels its own region
    for fam in LABELING_FAMILIES:
        if is_member(fam, p):
            assert label(fam, A.region_of(p)) == p


@settings(max_examples=80, deadline=None)
@given(even_permutations(1, 8))
def test_psi_and_vartheta_on_members(p):
    if is_member("gi", p):
        assert B.psi(B.psi_inv(p)) == p
        q = B.vartheta(p)
        assert is_member("dperm", q)
        assert B.vartheta_inv(q) == p
    if is_member("dperm", p):
        assert B.vartheta(B.vartheta_inv(p)) == p
