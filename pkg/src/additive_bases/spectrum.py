"""Achievable-length spectra ``L_{X,h}(k)`` and their interval variant.

Over N0 the spectrum is certified. ``ell_h(A)`` depends only on
``A ∩ [0, ell_h(A) + 1]``, and ``ell_h(A) <= n_h(k)`` whenever ``|A| <= k``.
Sets of size below ``k`` are padded by one far-away element without changing
``ell``. So the spectrum equals the set of ``ell`` values of admissible chains
of size at most ``k``. ``method="exhaustive"`` instead scores every ``A`` in
``[0, n_h(k) + 1]`` with ``0 in A`` and ``|A| <= k``; the two routes share
nothing but the sumset bit tricks.

Windows over Z give uncertified lower approximations only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .config import as_budget
from .errors import BudgetExceededError, DomainError
from .extremal import count_bases, n_basis, walk_chains  # noqa: F401  (count_bases re-exported)
from .intset import GroundSet, IntSet, Interval, maximal_runs
from .sumset import ell_from_mask, ell_sharp_from_mask, sumset_mask


@dataclass(frozen=True)
class Spectrum:
    ground: GroundSet
    h: int
    k: int
    values: IntSet
    certified: bool
    enumeration_bound: int
    window: Optional[Interval] = None
    sharp: bool = False

    def to_record(self) -> dict:
        return {
            "ground": self.ground.value,
            "h": self.h,
            "k": self.k,
            "values": list(self.values),
            "certified": self.certified,
            "enumeration_bound": self.enumeration_bound,
            "window": None if self.window is None else self.window.to_list(),
            "sharp": self.sharp,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Spectrum":
        return cls(
            ground=GroundSet(rec["ground"]),
            h=int(rec["h"]),
            k=int(rec["k"]),
            values=IntSet(rec["values"]),
            certified=bool(rec["certified"]),
            enumeration_bound=int(rec["enumeration_bound"]),
            window=None if rec.get("window") is None else Interval(*rec["window"]),
            sharp=bool(rec.get("sharp", False)),
        )

    def compact(self) -> str:
        return format_compact(self.values)


# runs at least this long print as "[a,b]"
COMPACT_RUN_LENGTH = 6


def format_compact(values) -> str:
    """Render like ``{0,3,6,7} ∪ [9,24]``: long runs become intervals."""
    values = IntSet.of(values) if not isinstance(values, IntSet) else values
    if len(values) == 0:
        return "{}"
    loose: list[int] = []
    pieces: list[str] = []
    for run in maximal_runs(values):
        if run.length >= COMPACT_RUN_LENGTH:
            if loose:
                pieces.append("{" + ",".join(map(str, loose)) + "}")
                loose = []
            pieces.append(f"[{run.lo},{run.hi}]")
        else:
            loose.extend(run)
    if loose:
        pieces.append("{" + ",".join(map(str, loose)) + "}")
    return " ∪ ".join(pieces)


def parse_compact(text: str) -> IntSet:
    """Inverse of ``format_compact``; accepts ``∪`` or ``U`` as the union sign."""
    out: set[int] = set()
    for piece in text.replace("∪", "U").split("U"):
        piece = piece.strip()
        if piece.startswith("["):
            lo, hi = (int(x) for x in piece.strip("[]").split(","))
            out.update(range(lo, hi + 1))
        else:
            out.update(IntSet.parse(piece))
    return IntSet.of(out)


def _check(h: int, k: int) -> None:
    if h < 1 or k < 1:
        raise DomainError(f"h and k must be positive, got h={h}, k={k}")


def spectrum_nonneg(h: int, k: int, budget=None, method: str = "chains") -> Spectrum:
    """Exact ``L_{N0,h}(k)``.

    Raises ``BudgetExceededError`` with an uncertified partial spectrum when
    the budget runs out.
    """
    _check(h, k)
    budget = as_budget(budget)
    found: set[int] = set()
    if method == "chains":
        bound_holder = [0]

        def run():
            for elems, value in walk_chains(h, k, budget):
                found.add(value)
                if elems[-1] > bound_holder[0]:
                    bound_holder[0] = elems[-1]

        _guarded(run, found, GroundSet.NONNEGATIVES, h, k, lambda: bound_holder[0])
        bound = bound_holder[0]
    elif method == "exhaustive":
        top = n_basis(h, k, budget).value + 1

        def run():
            for size in range(0, k):
                for rest in combinations(range(1, top + 1), size):
                    budget.charge()
                    offset, mask = sumset_mask((0,) + rest, h)
                    found.add(ell_from_mask(offset, mask))

        _guarded(run, found, GroundSet.NONNEGATIVES, h, k, lambda: top)
        bound = top
    else:
        raise DomainError(f"unknown method {method!r}")
    return Spectrum(GroundSet.NONNEGATIVES, h, k, IntSet.of(found), True, bound)


def _guarded(run, found, ground, h, k, bound, window=None, sharp=False):
    try:
        run()
    except BudgetExceededError as exc:
        exc.partial = Spectrum(ground, h, k, IntSet.of(found), False, bound(), window, sharp)
        raise


def spectrum_int(h: int, k: int, window: Interval, budget=None) -> Spectrum:
    """``{ell_h(A) : A ⊆ window, |A| = k, 0 in hA}``; a lower approximation of ``L_{Z,h}(k)``."""
    _check(h, k)
    if not (window.lo <= 0 <= window.hi):
        raise DomainError("window must contain 0")
    budget = as_budget(budget)
    found: set[int] = set()

    def run():
        for elems in combinations(range(window.lo, window.hi + 1), k):
            budget.charge()
            v = ell_from_mask(*sumset_mask(elems, h))
            if v is not None:
                found.add(v)

    _guarded(run, found, GroundSet.ALL_INTEGERS, h, k, lambda: window.hi, window)
    return Spectrum(GroundSet.ALL_INTEGERS, h, k, IntSet.of(found), False, window.hi, window)


def spectrum_sharp(h: int, k: int, bound: int, budget=None) -> Spectrum:
    """``{ell#_h(A) : A ⊆ [0, bound], |A| = k}`` over sets whose sumset has an interval.

    ``ell#`` is translation invariant and every subset of ``[0, bound]``
    translates to one with minimum 0 still inside ``[0, bound]``, so only
    sets containing 0 are scored.
    """
    _check(h, k)
    if bound < 1:
        raise DomainError("bound must be positive")
    budget = as_budget(budget)
    found: set[int] = set()

    def run():
        for rest in combinations(range(1, bound + 1), k - 1):
            budget.charge()
            r = ell_sharp_from_mask(*sumset_mask((0,) + rest, h))
            if r is not None:
                found.add(r[0])

    _guarded(run, found, GroundSet.NONNEGATIVES, h, k, lambda: bound, Interval(0, bound), True)
    return Spectrum(GroundSet.NONNEGATIVES, h, k, IntSet.of(found), False, bound, Interval(0, bound), True)
