import random

import pytest

from parityperm import arrangement as A
from parityperm import perm as P
from parityperm.acceptance import K18_IMAGES, K18_STAGES
from parityperm.errors import NotRealizable
from parityperm.families import LABELING_FAMILIES, FamilyId, enumerate_family, is_member
from parityperm.labelings import (
    LABELINGS,
    Labels,
    bad_pairs,
    label,
    label_all,
    lambda1,
    lambda2,
    lambda3,
    lambda4,
    oracle_label,
    stages,
)

R1 = A.parse_region("n=1;-")
R2 = A.parse_region("n=1;+")
K18 = A.example_k18()


def test_dimension_one():
    assert lambda1(R1) == (1, 2) and lambda1(R2) == (2, 1)
    assert label_all(R1) == Labels((1, 2), (1, 2), (1, 2), (1, 2))
    assert label_all(R2) == Labels((2, 1), (2, 1), (2, 1), (2, 1))


@pytest.mark.parametrize("family", LABELING_FAMILIES)
def test_k18_images(family):
    assert P.format_word(label(family, K18)) == K18_IMAGES[family]


def test_k18_intermediate_stages():
    assert P.format_word(stages("gi", K18)[3]) == "7 6 5 1 8 3 4 2"
    assert P.format_word(stages("gii", K18)[3]) == "7 6 5 1 2 8 3 4"
    for fam in (FamilyId.GI, FamilyId.GII):
        got = [P.format_word(w) for w in stages(fam, K18)[:8]]
        assert got == list(K18_STAGES[fam])


def test_k18_penultimate_stages():
    assert P.format_word(stages("giii", K18)[-2]) == "15 6 5 10 1 7 8 3 14 11 12 9 16 13 4 2"
    assert P.format_word(P.shift(stages("giv", K18)[-2], 2)) == "6 5 10 18 7 8 3 4 14 11 12 9 15 16 13 17"


def test_k18_bad_pairs():
    r4 = A.proj(A.proj(A.proj(A.proj(A.proj(K18)))))
    assert r4.n == 4
    pairs = {(b.i, b.j) for b in bad_pairs((6, 5, 3, 1, 4, 2), r4)}
    assert pairs == {(3, 1)}
    pen = stages("giii", K18)[-2]
    assert {(b.i, b.j) for b in bad_pairs(pen, K18)} == {(15, 5), (15, 1)}


def test_no_bad_pairs_without_odd_inversions():
    r = A.region_of((1, 3, 5, 2, 4, 6))
    assert bad_pairs((1, 3, 2, 4), r) == []


def test_bad_flavor():
    with pytest.raises(ValueError):
        bad_pairs((1, 2), R1, "both")


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("family", LABELING_FAMILIES)
def test_labeling_is_a_bijection(family, n):
    lam = LABELINGS[family]
    images = {}
    for r in A.enumerate_regions(n):
        p = lam(r)
        assert is_member(family, p)
        assert A.compatible(p, r)
        assert A.region_of(p) == r
        images[p] = r
    assert set(images) == set(enumerate_family(family, 2 * n))


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("family", LABELING_FAMILIES)
def test_matches_linear_extension_oracle(family, n):
    for r in A.enumerate_regions(n):
        assert label(family, r) == oracle_label(family, r)


@pytest.mark.parametrize("family", LABELING_FAMILIES)
def test_random_larger_regions(family):
    # no brute-force region list at n >= 5, so sample orders and check the image
    rng = random.Random(20240917)
    for n in (5, 6, 7):
        for _ in range(150):
            order = list(range(1, 2 * n + 1))
            rng.shuffle(order)
            r = A.region_from_order(order)
            p = label(family, r)
            assert is_member(family, p)
            assert A.region_of(p) == r


def test_stage_lengths():
    for fam in LABELING_FAMILIES:
        assert [len(w) for w in stages(fam, K18)] == list(range(2, 19, 2))


def test_rejects_unrealizable():
    import itertools

    bad = next(
        A.Region(3, s) for s in itertools.product((True, False), repeat=6) if not A.is_realizable(A.Region(3, s))
    )
    with pytest.raises(NotRealizable):
        lambda2(bad)


def test_no_labeling_for_other_families():
    with pytest.raises(ValueError):
        label("d1", R1)
    with pytest.raises(ValueError):
        oracle_label("x", R1)


def test_lambda3_lambda4_small():
    assert lambda3(R2) == (2, 1)
    assert lambda4(R1) == (1, 2)
