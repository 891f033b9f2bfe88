"""Δ-separated sumsets: B_h checks, level-H checks, subset-sum checks.

Multisets are enumerated as sorted index tuples ``r_1 <= ... <= r_h`` into
the sorted set, so two multisets are distinct exactly when their tuples
differ somewhere. Every check sorts the candidate sums and scans adjacent
gaps. The closest pair of distinct entries is always adjacent in that order,
so the scan is exact. The reported violation is the first offending adjacent
pair in ascending ``(sum, level, tuple)`` order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Optional, Union

from .errors import BudgetExceededError, DomainError
from .intset import IntSet, as_intset, check_int64, require_nonempty

DEFAULT_TERM_CAP = 2_000_000
DEFAULT_SUBSET_CAP = 20


class Mode(str, Enum):
    MULTISET_LEVEL = "MultisetLevel"
    SUBSET_SUM_LEMMA = "SubsetSumLemma"


INFINITE = "Infinite"


@dataclass(frozen=True)
class Violation:
    first: tuple[int, ...]
    second: tuple[int, ...]
    first_sum: int
    second_sum: int

    @property
    def gap(self) -> int:
        return abs(self.first_sum - self.second_sum)

    def recheck(self, A: IntSet) -> bool:
        """Recompute both sums from the index tuples."""
        return sum(A[i] for i in self.first) == self.first_sum and sum(A[i] for i in self.second) == self.second_sum

    def to_record(self, A: Optional[IntSet] = None) -> dict:
        rec = {
            "first": list(self.first),
            "second": list(self.second),
            "first_sum": self.first_sum,
            "second_sum": self.second_sum,
            "gap": self.gap,
        }
        if A is not None:
            rec["first_elements"] = [A[i] for i in self.first]
            rec["second_elements"] = [A[i] for i in self.second]
        return rec


@dataclass(frozen=True)
class SeparationReport:
    passed: bool
    violation: Optional[Violation] = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.passed

    def to_record(self, A: Optional[IntSet] = None) -> dict:
        return {
            "pass": self.passed,
            "checked": self.checked,
            "violation": None if self.violation is None else self.violation.to_record(A),
        }


@dataclass(frozen=True)
class SeparationQuery:
    set: IntSet
    delta: int
    level: Union[int, str]
    mode: Mode = Mode.MULTISET_LEVEL

    def __post_init__(self):
        if self.delta < 1:
            raise DomainError("delta must be at least 1")
        if self.level != INFINITE and (not isinstance(self.level, int) or self.level < 1):
            raise DomainError("level must be a positive integer or 'Infinite'")


def _scan(entries, delta: int) -> SeparationReport:
    """``entries`` are ``(sum, key)`` pairs with pairwise distinct keys."""
    entries.sort()
    for (s1, key1), (s2, key2) in zip(entries, entries[1:]):
        if s2 - s1 < delta:
            return SeparationReport(False, Violation(key1[-1], key2[-1], s1, s2), len(entries))
    return SeparationReport(True, None, len(entries))


def _prepare(A, delta: int) -> IntSet:
    A = as_intset(A)
    require_nonempty(A)
    if delta < 1:
        raise DomainError("delta must be at least 1")
    return A


def _multiset_entries(A: IntSet, h: int, cap: int):
    k = len(A)
    if comb(k + h - 1, h) > cap:
        raise BudgetExceededError(f"{comb(k + h - 1, h)} {h}-fold multisets exceed the cap of {cap}")
    check_int64(h * A[-1])
    check_int64(h * A[0])
    return [(sum(A[i] for i in t), (h, t)) for t in combinations_with_replacement(range(k), h)]


def check_bh(A, h: int, delta: int, *, cap: int = DEFAULT_TERM_CAP) -> SeparationReport:
    """Whether distinct h-multisets of ``A`` have sums at least ``delta`` apart."""
    A = _prepare(A, delta)
    if h < 1:
        raise DomainError("h must be positive")
    return _scan(_multiset_entries(A, h, cap), delta)


def check_level(A, H: int, delta: int, *, cap: int = DEFAULT_TERM_CAP) -> SeparationReport:
    """``delta``-separation of level ``H``: within every ``hA`` and across ``h1A, h2A``.

    All multisets of size ``1..H`` go into one sorted scan. Entries of
    different sizes are compared whatever their sums, which matches the
    cross-level condition on all ``u1 in h1A`` and ``u2 in h2A``.
    """
    A = _prepare(A, delta)
    if H < 1:
        raise DomainError("H must be positive")
    total = sum(comb(len(A) + h - 1, h) for h in range(1, H + 1))
    if total > cap:
        raise BudgetExceededError(f"{total} multisets exceed the cap of {cap}")
    entries = []
    for h in range(1, H + 1):
        entries.extend(_multiset_entries(A, h, cap))
    return _scan(entries, delta)


def check_subset_sums(A, delta: int, *, cap: int = DEFAULT_SUBSET_CAP) -> SeparationReport:
    """Whether all ``2^|A|`` subset sums (empty subset included) are ``delta`` apart."""
    A = _prepare(A, delta)
    if len(A) > cap:
        raise BudgetExceededError(f"|A| = {len(A)} exceeds the subset-sum cap of {cap}")
    check_int64(sum(a for a in A if a > 0))
    check_int64(sum(a for a in A if a < 0))
    entries = [(0, (0, ()))]
    for r in range(1, len(A) + 1):
        entries.extend((sum(A[i] for i in t), (r, t)) for t in combinations(range(len(A)), r))
    return _scan(entries, delta)


def check_distinct_bh(A, h: int, delta: int, *, cap: int = DEFAULT_TERM_CAP) -> SeparationReport:
    """``check_bh`` restricted to h-subsets with distinct indices."""
    A = _prepare(A, delta)
    if comb(len(A), h) > cap:
        raise BudgetExceededError(f"{comb(len(A), h)} {h}-subsets exceed the cap of {cap}")
    entries = [(sum(A[i] for i in t), (h, t)) for t in combinations(range(len(A)), h)]
    return _scan(entries, delta)


def check_separation(query: SeparationQuery) -> SeparationReport:
    """Dispatch on ``query.mode``.

    The subset-sum mode ignores ``level`` (it is the level-infinity reading).
    A multiset query at level ``Infinite`` is refused: it never terminates.
    """
    if query.mode is Mode.SUBSET_SUM_LEMMA:
        return check_subset_sums(query.set, query.delta)
    if query.level == INFINITE:
        raise DomainError("multiset separation of infinite level is not finitely checkable")
    return check_level(query.set, query.level, query.delta)


def compare_modes(A, H: int, delta: int) -> dict:
    """Run the multiset level-H check and the subset-sum check side by side."""
    A = as_intset(A)
    multiset = check_level(A, H, delta)
    subset = check_subset_sums(A, delta)
    return {
        "set": list(A),
        "H": H,
        "delta": delta,
        "multiset_level": multiset.to_record(A),
        "subset_sums": subset.to_record(A),
        "discrepancy": multiset.passed != subset.passed,
    }


def geometric_set(g: int, count: int) -> IntSet:
    """``{g, g^2, ..., g^count}``."""
    if g < 2:
        raise DomainError("g must be at least 2")
    if count < 1:
        raise DomainError("count must be positive")
    return IntSet(check_int64(g**i) for i in range(1, count + 1))
