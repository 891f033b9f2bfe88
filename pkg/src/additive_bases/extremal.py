"""The extremal functions n_h, n#_h, m_h, m#_h and the dual k_h(n).

Exact searches over nonnegative sets walk *admissible chains*
``0 = a_1 < a_2 < ... < a_k`` with ``a_{i+1} <= ell(a_1..a_i) + 1``. Any set
breaking that condition has the same ``ell`` as its longest admissible
prefix: every later element exceeds ``ell + 1``, so ``ell + 1`` stays
unreachable. Optimizers of size ``k`` are therefore admissible chains (a
shorter prefix would tie ``n_h(k)`` with some ``n_h(j)``, ``j < k``, which
strict monotonicity rules out), and the same argument covers minimal
``k_h(n)`` witnesses. Preorder DFS with ascending children visits chains in
lexicographic order, so the first optimizer found is the lexicographically
smallest one.

Signed and interval variants have no completeness theorem; they take an
explicit window or diameter bound and report ``LowerBound``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import comb
from typing import Optional

from .config import Budget, as_budget
from .errors import DomainError, PropertyViolationError
from .intset import IntSet, Interval, diameter
from .sumset import ell_from_mask, ell_sharp_from_mask, profile, sumset_mask


class Certificate(str, Enum):
    EXACT = "Exact"
    LOWER_BOUND = "LowerBound"


KINDS = ("n", "n_sharp", "m", "m_sharp", "k_dual")


@dataclass(frozen=True)
class ExtremalResult:
    kind: str
    h: int
    k_or_n: int
    value: int
    witness: IntSet
    certificate: Certificate
    search_bound: dict = field(default_factory=dict)

    @property
    def explored(self) -> int:
        """Scalar size of the explored space, used to rank LowerBound results."""
        return int(self.search_bound.get("explored", 0))

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "h": self.h,
            "k_or_n": self.k_or_n,
            "value": self.value,
            "witness": list(self.witness),
            "certificate": self.certificate.value,
            "search_bound": dict(self.search_bound),
        }

    @classmethod
    def from_record(cls, rec: dict) -> "ExtremalResult":
        return cls(
            kind=rec["kind"],
            h=int(rec["h"]),
            k_or_n=int(rec["k_or_n"]),
            value=int(rec["value"]),
            witness=IntSet(rec["witness"]),
            certificate=Certificate(rec["certificate"]),
            search_bound=dict(rec["search_bound"]),
        )

    def revalidate(self) -> bool:
        """Recompute the witness' statistic through the sumset engine."""
        return witness_attains(self.kind, self.h, self.k_or_n, self.value, self.witness)


def witness_attains(kind: str, h: int, k_or_n: int, value: int, witness: IntSet) -> bool:
    if len(witness) == 0:
        return False
    prof = profile(witness, h)
    if kind in ("n", "m"):
        if len(witness) != k_or_n:
            return False
        if kind == "n" and witness[0] < 0:
            return False
        return prof.ell == value
    if kind in ("n_sharp", "m_sharp"):
        if len(witness) != k_or_n:
            return False
        if kind == "n_sharp" and witness[0] < 0:
            return False
        return prof.ell_sharp == value
    if kind == "k_dual":
        return len(witness) == value and witness[0] >= 0 and witness[-1] <= k_or_n and (
            prof.ell is not None and prof.ell >= k_or_n
        )
    raise DomainError(f"unknown extremal kind {kind!r}")


def _check_hk(h: int, k: int) -> None:
    if h < 1 or k < 1:
        raise DomainError(f"h and k must be positive, got h={h}, k={k}")


def sumset_size_bound(h: int, k: int) -> int:
    """``|hA| <= C(k + h - 1, h)`` for ``|A| = k``."""
    return comb(k + h - 1, h)


def completion_bound(h: int, k: int, ell: int, remaining: int) -> int:
    """Upper bound on ``ell`` after adding ``remaining`` more chain elements.

    Each new element ``x`` satisfies ``x <= ell + 1`` and the new ``ell`` is at
    most ``max(hA') = h * x``, so ``ell`` grows at most as ``ell -> h(ell + 1)``.
    The global count ``|hA| <= C(k+h-1, h)`` caps everything.
    """
    cap = sumset_size_bound(h, k) - 1
    for _ in range(remaining):
        ell = h * (ell + 1)
        if ell >= cap:
            return cap
    return min(ell, cap)


class _ChainState:
    """Masks of ``jA`` for ``j = 0..h`` restricted to bits below ``width``.

    Truncation is harmless over N0: a sum below the cut only uses summands
    below the cut.
    """

    __slots__ = ("h", "trim", "masks")

    def __init__(self, h: int, trim: int, masks: tuple[int, ...]):
        self.h = h
        self.trim = trim
        self.masks = masks

    @classmethod
    def start(cls, h: int, width: int) -> "_ChainState":
        # A = {0}: every jA is {0}
        return cls(h, (1 << width) - 1, (1,) * (h + 1))

    def extend(self, x: int) -> "_ChainState":
        old = self.masks
        new = [1]
        for j in range(1, self.h + 1):
            acc = 0
            for i in range(j + 1):
                acc |= old[j - i] << (i * x)
            new.append(acc & self.trim)
        return _ChainState(self.h, self.trim, tuple(new))

    @property
    def ell(self) -> int:
        return ell_from_mask(0, self.masks[self.h])


def walk_chains(h: int, k: int, budget: Optional[Budget] = None, max_element: Optional[int] = None):
    """Yield ``(elements, ell)`` for every admissible chain of size ``1..k``.

    Order is lexicographic in the element tuple.
    """
    _check_hk(h, k)
    budget = as_budget(budget)
    width = sumset_size_bound(h, k) + 1
    limit = max_element

    def rec(elems, state, ell):
        yield elems, ell
        if len(elems) == k:
            return
        top = ell + 1 if limit is None else min(ell + 1, limit)
        for x in range(elems[-1] + 1, top + 1):
            budget.charge()
            nxt = state.extend(x)
            yield from rec(elems + (x,), nxt, nxt.ell)

    budget.charge()
    yield from rec((0,), _ChainState.start(h, width), 0)


def n_basis(h: int, k: int, budget=None) -> ExtremalResult:
    """Exact ``n_h(k)``: branch and bound over admissible chains."""
    _check_hk(h, k)
    budget = as_budget(budget)
    width = sumset_size_bound(h, k) + 1
    best = -1
    best_set: tuple[int, ...] = ()
    nodes = 0

    def rec(elems, state, ell):
        nonlocal best, best_set, nodes
        nodes += 1
        if len(elems) == k:
            if ell > best:
                best, best_set = ell, elems
            return
        if completion_bound(h, k, ell, k - len(elems)) <= best:
            return
        for x in range(elems[-1] + 1, ell + 2):
            budget.charge()
            nxt = state.extend(x)
            rec(elems + (x,), nxt, nxt.ell)

    budget.charge()
    rec((0,), _ChainState.start(h, width), 0)
    return ExtremalResult(
        kind="n",
        h=h,
        k_or_n=k,
        value=best,
        witness=IntSet(best_set),
        certificate=Certificate.EXACT,
        search_bound={"space": "admissible chains over N0", "nodes": nodes, "explored": nodes},
    )


def _range_search(h, sets, statistic, budget):
    """Maximise ``statistic(offset, mask)`` over ``sets``; first maximiser wins."""
    best = None
    best_set = None
    count = 0
    for elems in sets:
        budget.charge()
        count += 1
        offset, mask = sumset_mask(elems, h)
        v = statistic(offset, mask)
        if v is not None and (best is None or v > best):
            best, best_set = v, elems
    return best, best_set, count


def _sharp_length(offset, mask):
    r = ell_sharp_from_mask(offset, mask)
    return None if r is None else r[0]


def _anchored_sets(k: int, max_element: int):
    """Sets ``{0} + (k-1 elements of [1, max_element])`` in lexicographic order."""
    for rest in combinations(range(1, max_element + 1), k - 1):
        yield (0,) + rest


def n_sharp(h: int, k: int, max_element: int, budget=None) -> ExtremalResult:
    """Max ``ell#`` over ``A`` in ``[0, max_element]`` with ``min(A) = 0``, ``|A| = k``.

    Always ``LowerBound``: no theorem bounds the diameter of optimizers.
    """
    _check_hk(h, k)
    if max_element < k - 1:
        raise DomainError(f"max_element must be at least k - 1 = {k - 1}")
    budget = as_budget(budget)
    best, best_set, count = _range_search(h, _anchored_sets(k, max_element), _sharp_length, budget)
    if best is None:
        raise DomainError(f"no {k}-element set has an interval in its {h}-fold sumset")
    return ExtremalResult(
        kind="n_sharp",
        h=h,
        k_or_n=k,
        value=best,
        witness=IntSet(best_set),
        certificate=Certificate.LOWER_BOUND,
        search_bound={"space": "min(A)=0, A in [0,M]", "max_element": max_element, "sets": count, "explored": max_element},
    )


def _signed_sets(k: int, max_element: int):
    """Every ``A`` with ``min(A)`` in ``[-M, 0]`` and ``diam(A) <= M``, lexicographically."""
    for lo in range(-max_element, 1):
        for rest in combinations(range(lo + 1, lo + max_element + 1), k - 1):
            yield (lo,) + rest


def m_sharp(h: int, k: int, max_element: int, budget=None) -> ExtremalResult:
    """Max ``ell#`` over signed sets of diameter at most ``max_element``.

    Every translate with ``min(A)`` in ``[-M, 0]`` is scored directly, so the
    agreement with ``n_sharp`` on equal bounds is computed, not assumed. The
    witness is also reported after normalising its best run to start in
    ``[0, h - 1]``.
    """
    from .constructions import normalize_translation

    _check_hk(h, k)
    if max_element < k - 1:
        raise DomainError(f"max_element must be at least k - 1 = {k - 1}")
    budget = as_budget(budget)
    best, best_set, count = _range_search(h, _signed_sets(k, max_element), _sharp_length, budget)
    if best is None:
        raise DomainError(f"no {k}-element set has an interval in its {h}-fold sumset")
    witness = IntSet(best_set)
    normalized, r = normalize_translation(witness, h)
    return ExtremalResult(
        kind="m_sharp",
        h=h,
        k_or_n=k,
        value=best,
        witness=witness,
        certificate=Certificate.LOWER_BOUND,
        search_bound={
            "space": "min(A) in [-M,0], diam(A) <= M",
            "max_element": max_element,
            "sets": count,
            "explored": max_element,
            "normalized_witness": list(normalized),
            "normalized_run_start": r,
        },
    )


def m_basis(h: int, k: int, window: Interval, budget=None) -> ExtremalResult:
    """Max ``ell_h`` over ``k``-subsets of ``window`` whose sumset contains 0."""
    _check_hk(h, k)
    if not (window.lo <= 0 <= window.hi):
        raise DomainError("window must contain 0")
    if window.length + 1 < k:
        raise DomainError("window holds fewer than k integers")
    budget = as_budget(budget)
    sets = combinations(range(window.lo, window.hi + 1), k)
    best, best_set, count = _range_search(h, sets, ell_from_mask, budget)
    return ExtremalResult(
        kind="m",
        h=h,
        k_or_n=k,
        value=best,
        witness=IntSet(best_set),
        certificate=Certificate.LOWER_BOUND,
        search_bound={"space": "k-subsets of window", "window": window.to_list(), "sets": count, "explored": window.length},
    )


def k_dual(h: int, n: int, budget=None) -> ExtremalResult:
    """Smallest ``k`` with ``[0, n]`` inside ``hA`` for some ``A`` in ``[0, n]``."""
    if h < 1 or n < 0:
        raise DomainError(f"need h >= 1 and n >= 0, got h={h}, n={n}")
    budget = as_budget(budget)
    width = n + 1
    nodes = 0

    def rec(elems, state, ell, k):
        nonlocal nodes
        nodes += 1
        if ell >= n:
            return elems if len(elems) == k else None
        if len(elems) == k or completion_bound(h, k, ell, k - len(elems)) < n:
            return None
        for x in range(elems[-1] + 1, min(ell + 1, n) + 1):
            budget.charge()
            nxt = state.extend(x)
            found = rec(elems + (x,), nxt, nxt.ell, k)
            if found is not None:
                return found
        return None

    for k in range(1, n + 2):
        budget.charge()
        found = rec((0,), _ChainState.start(h, width), 0, k)
        if found is not None:
            return ExtremalResult(
                kind="k_dual",
                h=h,
                k_or_n=n,
                value=k,
                witness=IntSet(found),
                certificate=Certificate.EXACT,
                search_bound={"space": "admissible chains in [0,n]", "nodes": nodes, "explored": nodes},
            )
    raise AssertionError("unreachable: [0, n] itself is an h-basis for n")


def count_bases(h: int, n: int, budget=None) -> int:
    """Number of subsets ``A`` of ``[0, n]`` with ``[0, n]`` inside ``hA``.

    Each qualifying set has a unique shortest prefix reaching ``ell >= n``,
    and that prefix is an admissible chain; every set of the remaining larger
    elements may be added freely.
    """
    if h < 1 or n < 0:
        raise DomainError(f"need h >= 1 and n >= 0, got h={h}, n={n}")
    budget = as_budget(budget)
    width = n + 1
    total = 0

    def rec(elems, state, ell):
        nonlocal total
        if ell >= n:
            total += 1 << (n - elems[-1])
            return
        for x in range(elems[-1] + 1, min(ell + 1, n) + 1):
            budget.charge()
            nxt = state.extend(x)
            rec(elems + (x,), nxt, nxt.ell)

    budget.charge()
    rec((0,), _ChainState.start(h, width), 0)
    return total


def strictness_scan(h: int, k_max: int, budget=None) -> list[tuple[int, int]]:
    if k_max < 2:
        raise DomainError("k_max must be at least 2")
    budget = as_budget(budget)
    values = [(k, n_basis(h, k, budget).value) for k in range(1, k_max + 1)]
    for (k0, v0), (k1, v1) in zip(values, values[1:]):
        if v1 <= v0:
            raise PropertyViolationError(f"n_{h}({k1}) = {v1} does not exceed n_{h}({k0}) = {v0}")
    return values


def check_diameter_bound(result: ExtremalResult) -> bool:
    """``diam(A) <= n_h(k)`` for exact ``n`` witnesses."""
    if result.kind != "n" or result.certificate is not Certificate.EXACT:
        raise DomainError("diameter bound applies to exact n_basis results")
    return diameter(result.witness) <= result.value
