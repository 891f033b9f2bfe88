"""Finite integer sets, runs and the checked 64-bit arithmetic they rely on."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, IntegerOverflowError, SetParseError

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def check_int64(value: int) -> int:
    """Return ``value`` unchanged, or raise if it does not fit in int64."""
    if value < INT64_MIN or value > INT64_MAX:
        raise IntegerOverflowError(f"{value} is outside the signed 64-bit range")
    return value


class GroundSet(str, Enum):
    NONNEGATIVES = "N0"
    ALL_INTEGERS = "Z"


@dataclass(frozen=True, order=True)
class Interval:
    """Closed integer interval ``[lo, hi]``.

    Length-0 intervals (``lo == hi``) are allowed so that singleton runs and
    ``ell == 0`` have a representation.
    """

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError(f"interval lower end {self.lo} exceeds upper end {self.hi}")

    @property
    def length(self) -> int:
        return self.hi - self.lo

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"

    def to_list(self) -> list[int]:
        return [self.lo, self.hi]


class IntSet(Sequence[int]):
    """Immutable, strictly increasing tuple of int64 values.

    The constructor is strict: unsorted or duplicated input raises
    ``SetParseError`` instead of being normalised. Use ``IntSet.of`` to build
    from an arbitrary iterable.
    """

    __slots__ = ("_elements",)

    def __init__(self, elements: Iterable[int] = ()):
        elems = tuple(int(x) for x in elements)
        for a, b in zip(elems, elems[1:]):
            if a >= b:
                kind = "duplicate" if a == b else "unsorted"
                raise SetParseError(f"{kind} elements {a}, {b}; sets must be strictly increasing")
        for x in elems[:1] + elems[-1:]:
            check_int64(x)
        self._elements = elems

    @classmethod
    def of(cls, elements: Iterable[int]) -> "IntSet":
        """Build from any iterable, sorting and deduplicating."""
        return cls(sorted(set(elements)))

    @classmethod
    def parse(cls, text: str) -> "IntSet":
        """Parse the literal ``"{a1,a2,...}"`` (braces optional, whitespace ignored)."""
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        elif "{" in body or "}" in body:
            raise SetParseError(f"unbalanced braces in set literal {text!r}")
        body = body.strip()
        if not body:
            return cls(())
        parts = [p.strip() for p in body.split(",")]
        if not all(re.fullmatch(r"[+-]?\d+", p) for p in parts):
            raise SetParseError(f"malformed set literal {text!r}")
        return cls(int(p) for p in parts)

    @property
    def elements(self) -> tuple[int, ...]:
        return self._elements

    def __len__(self) -> int:
        return len(self._elements)

    def __getitem__(self, i):
        return self._elements[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self._elements)

    def __contains__(self, x: object) -> bool:
        from bisect import bisect_left

        if not isinstance(x, int):
            return False
        i = bisect_left(self._elements, x)
        return i < len(self._elements) and self._elements[i] == x

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntSet):
            return self._elements == other._elements
        if isinstance(other, (set, frozenset)):
            return set(self._elements) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._elements)

    def __lt__(self, other: "IntSet") -> bool:
        return self._elements < other._elements

    def __repr__(self) -> str:
        return f"IntSet({list(self._elements)})"

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self._elements)) + "}"

    def min(self) -> int:
        require_nonempty(self)
        return self._elements[0]

    def max(self) -> int:
        require_nonempty(self)
        return self._elements[-1]

    def issubset(self, other: "IntSet") -> bool:
        return set(self._elements) <= set(other._elements)

    def difference(self, other: Iterable[int]) -> "IntSet":
        drop = set(other)
        return IntSet(x for x in self._elements if x not in drop)


def as_intset(A) -> IntSet:
    """Coerce a set literal, IntSet, or iterable of ints into an ``IntSet``.

    Strings go through the strict parser; Python sets are sorted; other
    sequences must already be strictly increasing.
    """
    if isinstance(A, IntSet):
        return A
    if isinstance(A, str):
        return IntSet.parse(A)
    if isinstance(A, (set, frozenset)):
        return IntSet.of(A)
    return IntSet(A)


def require_nonempty(A: IntSet) -> None:
    if len(A) == 0:
        raise DomainError("operation requires a nonempty set")


def diameter(A) -> int:
    A = as_intset(A)
    require_nonempty(A)
    return A[-1] - A[0]


def maximal_runs(S) -> list[Interval]:
    """Split ``S`` into maximal runs of consecutive integers, left to right."""
    S = as_intset(S)
    require_nonempty(S)
    runs = []
    start = prev = S[0]
    for x in S.elements[1:]:
        if x != prev + 1:
            runs.append(Interval(start, prev))
            start = x
        prev = x
    runs.append(Interval(start, prev))
    return runs


def isolated_elements(S) -> IntSet:
    """Elements of ``S`` with neither predecessor nor successor in ``S``."""
    return IntSet(r.lo for r in maximal_runs(S) if r.length == 0)


def translate(A, t: int) -> IntSet:
    A = as_intset(A)
    if len(A):
        check_int64(A[0] + t)
        check_int64(A[-1] + t)
    return IntSet(a + t for a in A)


def dilate(A, c: int) -> IntSet:
    """``{c*a : a in A}``; ``c`` may be negative or zero."""
    A = as_intset(A)
    for a in A.elements[:1] + A.elements[-1:]:
        check_int64(a * c)
    return IntSet.of(a * c for a in A)
