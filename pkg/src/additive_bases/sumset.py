"""h-fold sumsets and their interval statistics.

The dense kernel stores ``hA`` as a Python integer whose bit ``i`` stands for
the sum ``offset + i`` with ``offset = h * min(A)``. It is built by adding one
copy of ``A`` at a time (a shifted OR per element). When the range
``h * diam(A)`` is wider than ``dense_width_cap`` bits the kernel falls back to
merging sorted sets, which keeps geometric sets with enormous gaps tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

from .config import DEFAULT_DENSE_WIDTH_CAP
from .errors import DomainError
from .intset import (
    IntSet,
    Interval,
    as_intset,
    check_int64,
    maximal_runs,
    require_nonempty,
)


def _check_h(h: int) -> None:
    if h < 1:
        raise DomainError(f"h must be a positive integer, got {h}")


def _check_range(A: IntSet, h: int) -> None:
    check_int64(h * A[0])
    check_int64(h * A[-1])


def sumset_mask(elements, h: int) -> tuple[int, int]:
    """Return ``(offset, mask)`` for ``hA``; no range or type checks.

    ``elements`` must be sorted ascending and nonempty.
    """
    lo = elements[0]
    shifts = [a - lo for a in elements]
    base = 0
    for s in shifts:
        base |= 1 << s
    acc = base
    for _ in range(h - 1):
        nxt = 0
        for s in shifts:
            nxt |= acc << s
        acc = nxt
    return h * lo, acc


def mask_to_list(offset: int, mask: int) -> list[int]:
    if mask == 0:
        return []
    raw = np.frombuffer(mask.to_bytes((mask.bit_length() + 7) // 8, "little"), dtype=np.uint8)
    bits = np.unpackbits(raw, bitorder="little")
    return (np.flatnonzero(bits) + offset).tolist()


def ell_from_mask(offset: int, mask: int) -> Optional[int]:
    """Largest ``n`` with ``[0, n]`` inside the masked set, or None if 0 is absent."""
    if offset > 0:
        return None
    m = mask >> -offset
    if not m & 1:
        return None
    return (m ^ (m + 1)).bit_length() - 2


def longest_run_in_mask(mask: int) -> tuple[int, int]:
    """Return ``(count, start_bit)`` of the leftmost longest run of set bits.

    ``count`` is the number of integers in the run (interval length + 1).
    """
    if mask == 0:
        return 0, -1
    count = 0
    x = mask
    last = x
    while x:
        last = x
        x &= x >> 1
        count += 1
    return count, (last & -last).bit_length() - 1


def ell_sharp_from_mask(offset: int, mask: int) -> Optional[tuple[int, int]]:
    """``(length, start)`` of the leftmost longest run of length >= 1, else None."""
    count, start = longest_run_in_mask(mask)
    if count < 2:
        return None
    return count - 1, offset + start


def _sparse_sumset(elements, h: int) -> list[int]:
    acc = set(elements)
    for _ in range(h - 1):
        acc = {s + a for s in acc for a in elements}
    return sorted(acc)


def h_fold_sumset(A, h: int, *, dense_width_cap: int = DEFAULT_DENSE_WIDTH_CAP) -> IntSet:
    """All sums of exactly ``h`` not necessarily distinct elements of ``A``.

    >>> str(h_fold_sumset("{0,1,3}", 3))
    '{0,1,2,3,4,5,6,7,9}'
    """
    A = as_intset(A)
    require_nonempty(A)
    _check_h(h)
    _check_range(A, h)
    width = h * (A[-1] - A[0]) + 1
    if width <= dense_width_cap:
        offset, mask = sumset_mask(A.elements, h)
        return IntSet(mask_to_list(offset, mask))
    return IntSet(_sparse_sumset(A.elements, h))


def naive_sumset(A, h: int) -> IntSet:
    """Reference enumeration over every ordered h-tuple; exponential, for testing."""
    from itertools import product

    A = as_intset(A)
    require_nonempty(A)
    _check_h(h)
    return IntSet.of(sum(t) for t in product(A.elements, repeat=h))


def ell_of_sums(sums: IntSet) -> Optional[int]:
    from bisect import bisect_left

    elems = sums.elements
    i = bisect_left(elems, 0)
    if i == len(elems) or elems[i] != 0:
        return None
    # elems[i + j] - j is nondecreasing in j; find the last j where it is 0
    lo, hi = 0, len(elems) - 1 - i
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if elems[i + mid] == mid:
            lo = mid
        else:
            hi = mid - 1
    return lo


def ell_sharp_of_runs(runs: list[Interval]) -> Optional[Interval]:
    best = None
    for r in runs:
        if r.length >= 1 and (best is None or r.length > best.length):
            best = r
    return best


def ell(A, h: int, *, dense_width_cap: int = DEFAULT_DENSE_WIDTH_CAP) -> Optional[int]:
    """Largest ``n`` with ``[0, n]`` contained in ``hA``; None when ``0`` is not in ``hA``."""
    return ell_of_sums(h_fold_sumset(A, h, dense_width_cap=dense_width_cap))


def ell_sharp(A, h: int, *, dense_width_cap: int = DEFAULT_DENSE_WIDTH_CAP) -> Optional[tuple[int, Interval]]:
    """Length of the longest interval in ``hA`` and the leftmost run attaining it.

    None when every element of ``hA`` is isolated.
    """
    sums = h_fold_sumset(A, h, dense_width_cap=dense_width_cap)
    best = ell_sharp_of_runs(maximal_runs(sums))
    return None if best is None else (best.length, best)


@dataclass(frozen=True)
class SumsetProfile:
    h: int
    base: IntSet
    sums: IntSet
    runs: tuple[Interval, ...]
    ell: Optional[int]
    ell_sharp: Optional[int]
    ell_sharp_witness: Optional[Interval]

    @property
    def size_bound(self) -> int:
        return comb(len(self.base) + self.h - 1, self.h)

    def to_record(self) -> dict:
        return {
            "h": self.h,
            "set": list(self.base),
            "sums": list(self.sums),
            "runs": [r.to_list() for r in self.runs],
            "ell": self.ell,
            "ell_sharp": self.ell_sharp,
            "ell_sharp_witness": None if self.ell_sharp_witness is None else self.ell_sharp_witness.to_list(),
        }


def profile(A, h: int, *, dense_width_cap: int = DEFAULT_DENSE_WIDTH_CAP) -> SumsetProfile:
    A = as_intset(A)
    sums = h_fold_sumset(A, h, dense_width_cap=dense_width_cap)
    runs = tuple(maximal_runs(sums))
    best = ell_sharp_of_runs(list(runs))
    return SumsetProfile(
        h=h,
        base=A,
        sums=sums,
        runs=runs,
        ell=ell_of_sums(sums),
        ell_sharp=None if best is None else best.length,
        ell_sharp_witness=best,
    )
