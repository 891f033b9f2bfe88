import pytest
from hypothesis import given, settings, strategies as st

from additive_bases.errors import DomainError, IntegerOverflowError
from additive_bases.intset import INT64_MAX, IntSet, Interval, dilate, translate
from additive_bases.sumset import (
    ell,
    ell_sharp,
    h_fold_sumset,
    longest_run_in_mask,
    naive_sumset,
    profile,
)
from oracles import naive_ell, naive_ell_sharp
from oracles import naive_sumset as plain_sumset

small_sets = st.sets(st.integers(-12, 12), min_size=1, max_size=6).map(IntSet.of)
hs = st.integers(1, 5)


@pytest.mark.parametrize(
    "A, h, expected",
    [
        ("{0,1}", 2, "{0,1,2}"),
        ("{0,1,3}", 3, "{0,1,2,3,4,5,6,7,9}"),
        ("{-1,1}", 2, "{-2,0,2}"),
    ],
)
def test_sumset_examples(A, h, expected):
    assert h_fold_sumset(A, h) == IntSet.parse(expected)


def test_sumset_example_matches_oracle():
    assert list(h_fold_sumset("{0,1,3}", 3)) == plain_sumset((0, 1, 3), 3)


@pytest.mark.parametrize("A, h, expected", [("{0,2}", 5, 0), ("{0,1,3}", 3, 7), ("{1,2}", 2, None)])
def test_ell_examples(A, h, expected):
    assert ell(A, h) == expected


def test_ell_sharp_examples():
    assert ell_sharp("{0,1,3}", 3) == (7, Interval(0, 7))
    assert ell_sharp("{0,2,4}", 2) is None
    assert ell_sharp("{10,11}", 2) == (2, Interval(20, 22))


def test_profile_examples():
    p = profile("{0,1}", 2)
    assert p.sums == IntSet([0, 1, 2]) and p.ell == 2 and p.ell_sharp == 2
    assert p.ell_sharp_witness == Interval(0, 2)
    assert profile("{0,1}", 7).ell == 7
    p = profile("{3}", 4)
    assert p.sums == IntSet([12]) and p.ell is None and p.ell_sharp is None


def test_leftmost_witness_on_ties():
    # 2A = [0,2] ∪ [10,12] ∪ [20,22]
    p = profile("{0,1,10,11}", 2)
    assert p.ell_sharp == 2 and p.ell_sharp_witness == Interval(0, 2)
    assert profile("{0,1,100,101}", 1).ell_sharp_witness == Interval(0, 1)


def test_errors():
    with pytest.raises(DomainError):
        h_fold_sumset(IntSet(), 2)
    with pytest.raises(DomainError):
        h_fold_sumset("{1}", 0)
    with pytest.raises(IntegerOverflowError):
        h_fold_sumset(IntSet([0, INT64_MAX // 2]), 3)


def test_sparse_fallback_agrees():
    A = IntSet([-625, -125, -25, -5, 5, 26, 127])
    assert h_fold_sumset(A, 3, dense_width_cap=8) == h_fold_sumset(A, 3)


def test_longest_run_mask_helper():
    assert longest_run_in_mask(0b0111011) == (3, 3)
    assert longest_run_in_mask(0b1101110) == (3, 1)
    assert longest_run_in_mask(0) == (0, -1)


@settings(max_examples=300)
@given(small_sets, hs)
def test_kernel_matches_naive(A, h):
    assert list(h_fold_sumset(A, h)) == plain_sumset(tuple(A), h)
    assert naive_sumset(A, h) == h_fold_sumset(A, h)


@settings(max_examples=200)
@given(small_sets, hs)
def test_statistics_match_oracle(A, h):
    p = profile(A, h)
    assert p.ell == naive_ell(tuple(A), h)
    want = naive_ell_sharp(tuple(A), h)
    got = None if p.ell_sharp is None else (p.ell_sharp, p.ell_sharp_witness.lo)
    assert got == want


@settings(max_examples=200)
@given(small_sets, hs)
def test_profile_invariants(A, h):
    p = profile(A, h)
    assert len(p.sums) <= p.size_bound
    assert p.sums[0] == h * A[0] and p.sums[-1] == h * A[-1]
    if p.ell is not None:
        assert all(x in p.sums for x in range(p.ell + 1)) and p.ell + 1 not in p.sums
    assert (p.ell_sharp is not None) == any(r.length >= 1 for r in p.runs)


@given(small_sets, hs, st.integers(-30, 30))
def test_translation_covariance(A, h, t):
    assert h_fold_sumset(translate(A, t), h) == translate(h_fold_sumset(A, h), h * t)
    a, b = ell_sharp(translate(A, t), h), ell_sharp(A, h)
    assert (a is None) == (b is None)
    if a is not None:
        assert a[0] == b[0] and a[1].lo == b[1].lo + h * t


@given(small_sets, small_sets, hs)
def test_monotone_under_superset(A, B, h):
    U = IntSet.of(set(A) | set(B))
    assert set(h_fold_sumset(A, h)) <= set(h_fold_sumset(U, h))
    ea, eu = ell(A, h), ell(U, h)
    if ea is not None:
        assert eu is not None and eu >= ea
    sa, su = ell_sharp(A, h), ell_sharp(U, h)
    if sa is not None:
        assert su is not None and su[0] >= sa[0]


@given(small_sets, hs, st.integers(-4, 4))
def test_dilation(A, h, c):
    assert h_fold_sumset(dilate(A, c), h) == dilate(h_fold_sumset(A, h), c)
