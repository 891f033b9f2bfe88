import pytest

from additive_bases.constructions import (
    assemble,
    blocks,
    build_interval_2basis,
    division_normalize,
    normalize_translation,
    shift_to_nonneg,
    verify_construction,
)
from additive_bases.errors import DomainError, VerificationError
from additive_bases.intset import IntSet, Interval, isolated_elements, translate
from additive_bases.sumset import ell, ell_sharp, h_fold_sumset
from oracles import naive_sumset


@pytest.mark.parametrize("c, n, d, interval", [(0, 1, 2, (0, 1)), (3, 2, 2, (3, 5)), (-5, 1, 3, (-5, -4))])
def test_build_examples(c, n, d, interval):
    A, spec = build_interval_2basis(c, n, d)
    assert len(A) == 2 * n + 2
    assert spec.g == spec.delta + 1 and spec.a_seq[0] >= d
    cert = verify_construction(A, c, n, d)
    assert cert.all_pass, cert.counterexamples
    sums = set(naive_sumset(tuple(A), 2))
    assert set(range(interval[0], interval[1] + 1)) <= sums


def test_block_decomposition():
    for c, n, d in [(0, 1, 2), (3, 2, 2), (-2, 3, 4)]:
        A, spec = build_interval_2basis(c, n, d)
        b0, b1, b2 = blocks(c, n, spec.a_seq)
        assert h_fold_sumset(A, 2) == IntSet.of(set(b0) | set(b1) | set(b2))


def test_verify_examples():
    cert = verify_construction("{0,1}", 0, 3, 2)
    assert not cert.property_i
    cert = verify_construction("{0,1,2}", 0, 4, 2)
    assert cert.property_i and cert.property_ii and cert.property_iii and cert.all_pass


def test_verify_detects_close_exterior():
    # 2A = {0,1,2,5,6,10}: 5 and 6 are adjacent outside [0,2]
    cert = verify_construction("{0,1,5}", 0, 2, 2)
    assert cert.property_i and not cert.property_ii and not cert.exterior_isolated
    assert any(p["property"] == "ii" for p in cert.counterexamples)


def test_tampered_construction_fails():
    A, _ = build_interval_2basis(0, 2, 3)
    tampered = IntSet(A.elements[1:])
    assert not verify_construction(tampered, 0, 2, 3).all_pass


def test_assemble_checks_length():
    with pytest.raises(DomainError):
        assemble(0, 2, [5, 25])


def test_build_domain():
    with pytest.raises(DomainError):
        build_interval_2basis(0, 0, 2)
    with pytest.raises(DomainError):
        build_interval_2basis(0, 1, 1)


def test_small_g_sequence_rejected_by_separation():
    # the textbook Δ = 3 cannot separate level-3 sums of powers of 4 at gap 3 from a_0 = 4 < d = 5
    from additive_bases.separation import check_level

    assert check_level([4, 16, 64], 3, 3)
    assert not check_level([4, 16, 64, 256], 4, 3)


@pytest.mark.parametrize("c, h, c0, r", [(20, 2, 10, 0), (5, 2, 2, 1), (-7, 3, -3, 2)])
def test_division_normalize(c, h, c0, r):
    assert division_normalize(c, h) == (c0, r)


def test_normalize_translation_example():
    A, r = normalize_translation("{10,11}", 2)
    assert A == IntSet([0, 1]) and r == 0
    with pytest.raises(DomainError):
        normalize_translation("{0,2,4}", 2)


@pytest.mark.parametrize("A", ["{10,11}", "{-9,-8,-2}", "{3,7,8,20}", "{-5,0,1,3}"])
@pytest.mark.parametrize("h", [2, 3, 4])
def test_normalize_translation_properties(A, h):
    out, r = normalize_translation(A, h)
    L0, _ = ell_sharp(A, h)
    L1, run = ell_sharp(out, h)
    assert L0 == L1 and run.lo == r and 0 <= r < h


@pytest.mark.parametrize("A, out, a0", [("{-3,0,2}", "{0,3,5}", 3), ("{0,4}", "{0,4}", 0), ("{-1}", "{0}", 1)])
def test_shift_to_nonneg(A, out, a0):
    assert shift_to_nonneg(A) == (IntSet.parse(out), a0)


@pytest.mark.parametrize("A", ["{-3,0,2}", "{-4,-3,-1,5}", "{-2,-1,0,1}"])
def test_shift_preserves_statistics(A, h=3):
    B, a0 = shift_to_nonneg(A)
    assert ell_sharp(A, h)[0] == ell_sharp(B, h)[0]
    assert h_fold_sumset(B, h) == translate(h_fold_sumset(A, h), h * a0)


def test_actual_isolation_on_built_set():
    A, _ = build_interval_2basis(2, 3, 4)
    sums = h_fold_sumset(A, 2)
    outside = IntSet(x for x in sums if x not in Interval(2, 5))
    assert set(isolated_elements(sums)) == set(outside)
    assert ell("{0,1}", 2) == 2
