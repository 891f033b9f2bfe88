from itertools import combinations

import pytest

from additive_bases.config import Budget
from additive_bases.errors import BudgetExceededError, DomainError
from additive_bases.extremal import (
    Certificate,
    ExtremalResult,
    check_diameter_bound,
    completion_bound,
    k_dual,
    m_basis,
    m_sharp,
    n_basis,
    n_sharp,
    strictness_scan,
    walk_chains,
)
from additive_bases.intset import IntSet, Interval, diameter
from additive_bases.sumset import ell, ell_sharp
from oracles import brute_k_dual, brute_n, naive_ell, naive_ell_sharp


def test_n_basis_examples():
    r = n_basis(3, 3)
    assert r.value == 7 and r.witness == IntSet([0, 1, 3]) and r.certificate is Certificate.EXACT
    assert n_basis(5, 4).value == 35
    assert n_basis(7, 4).value == 69
    for h in range(1, 8):
        r = n_basis(h, 2)
        assert r.value == h and r.witness == IntSet([0, 1])


@pytest.mark.parametrize("h, k", [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (4, 3), (1, 4)])
def test_n_basis_matches_brute_force(h, k):
    top = 2 * (n_basis(h, k).value + 2)
    assert n_basis(h, k).value == brute_n(h, k, top)


def test_n_basis_witness_is_lexicographically_smallest():
    for h, k in [(2, 3), (2, 4), (3, 3), (3, 4)]:
        r = n_basis(h, k)
        best = min(
            A for A in ((0,) + rest for rest in combinations(range(1, r.value + 2), k - 1)) if naive_ell(A, h) == r.value
        )
        assert tuple(r.witness) == best


def test_n_h_of_one_is_zero():
    # a single element a gives hA = {ha}: ell is 0 (A = {0})
    for h in range(1, 6):
        assert n_basis(h, 1).value == 0


@pytest.mark.parametrize("h", [2, 3, 4])
def test_completion_bound_admissible(h):
    k = 4
    top = n_basis(h, k).value + 1
    for prefix, value in walk_chains(h, k - 1):
        r = k - len(prefix)
        best = max(
            naive_ell(prefix + rest, h)
            for rest in combinations(range(prefix[-1] + 1, top + 1), r)
        ) if top - prefix[-1] >= r else -1
        assert best <= completion_bound(h, k, value, r)


def test_n_sharp_examples():
    r = n_sharp(2, 2, 4)
    assert r.value == 2 and r.witness == IntSet([0, 1]) and r.certificate is Certificate.LOWER_BOUND
    assert n_sharp(3, 3, 10).value >= 7
    for h, k in [(2, 3), (3, 3), (2, 4)]:
        assert n_sharp(h, k, 12).value >= n_basis(h, k).value


def test_n_sharp_matches_oracle():
    want = max(r[0] for rest in combinations(range(1, 9), 2) if (r := naive_ell_sharp((0,) + rest, 2)))
    assert n_sharp(2, 3, 8).value == want


def test_sharp_rejects_k1():
    with pytest.raises(DomainError):
        n_sharp(3, 1, 4)


def test_m_sharp_equals_n_sharp_and_normalizes():
    for h in (2, 3):
        for k in (2, 3):
            a, b = n_sharp(h, k, 7), m_sharp(h, k, 7)
            assert a.value == b.value
            r = b.search_bound["normalized_run_start"]
            assert 0 <= r < h
            L, run = ell_sharp(IntSet(b.search_bound["normalized_witness"]), h)
            assert L == b.value and run.lo == r
    assert m_sharp(2, 2, 4).value == 2
    for k in range(2, 5):
        assert m_sharp(1, k, k).value == k - 1


def test_m_basis_examples():
    r = m_basis(2, 3, Interval(-4, 4))
    assert r.value >= 4 and r.certificate is Certificate.LOWER_BOUND
    for h in range(1, 5):
        assert m_basis(h, 1, Interval(-1, 1)).value == 0
    assert m_basis(3, 3, Interval(-7, 7)).value >= 7


def test_m_basis_matches_oracle():
    want = max(v for A in combinations(range(-4, 5), 3) if (v := naive_ell(A, 2)) is not None)
    r = m_basis(2, 3, Interval(-4, 4))
    assert r.value == want and ell(r.witness, 2) == want


@pytest.mark.parametrize("h, n, k", [(2, 6, 4), (2, 4, 3), (3, 0, 1), (2, 0, 1)])
def test_k_dual_examples(h, n, k):
    r = k_dual(h, n)
    assert r.value == k and r.certificate is Certificate.EXACT
    assert r.revalidate()


@pytest.mark.parametrize("h, n", [(2, n) for n in range(0, 13)] + [(3, n) for n in range(0, 10)])
def test_k_dual_matches_brute(h, n):
    k, A = brute_k_dual(h, n)
    r = k_dual(h, n)
    assert r.value == k and tuple(r.witness) == A


def test_duality_consistency():
    for h in (2, 3):
        for k in range(1, 5):
            assert k_dual(h, n_basis(h, k).value).value <= k


def test_strictness_scan_values():
    assert strictness_scan(3, 4) == [(1, 0), (2, 3), (3, 7), (4, 15)]
    assert strictness_scan(4, 4)[2:] == [(3, 10), (4, 26)]
    assert strictness_scan(6, 4)[2:] == [(3, 18), (4, 52)]


def test_strictness_for_bounded_kinds():
    for h in (2, 3):
        ns = [n_sharp(h, k, 10).value for k in range(2, 5)]
        ms = [m_basis(h, k, Interval(-4, 10)).value for k in range(1, 5)]
        assert ns == sorted(set(ns)) and ms == sorted(set(ms))


def test_witness_validity_and_roundtrip():
    results = [n_basis(3, 4), n_sharp(2, 3, 6), m_basis(2, 3, Interval(-3, 5)), m_sharp(2, 3, 6), k_dual(2, 7)]
    for r in results:
        assert r.revalidate()
        assert ExtremalResult.from_record(r.to_record()) == r


def test_tampered_witness_fails_revalidation():
    r = n_basis(3, 3)
    bad = ExtremalResult.from_record(dict(r.to_record(), witness=[0, 1, 4]))
    assert not bad.revalidate()


def test_diameter_bound_on_witnesses():
    for h, k in [(2, 4), (3, 5), (5, 3)]:
        r = n_basis(h, k)
        assert check_diameter_bound(r) and diameter(r.witness) <= r.value


def test_budget_error():
    with pytest.raises(BudgetExceededError):
        n_basis(3, 6, Budget(10))
