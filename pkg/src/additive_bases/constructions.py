"""Interval 2-bases whose sumset has one interval and an isolated exterior.

For ``n >= 1`` and ``d >= 2`` the set

    A = {c + j + a_j : j in [0, n]}  ∪  {-a_j : j in [0, n]}

with a fast-growing, well-separated sequence ``a_j = g^(j+1)`` satisfies
``[c, c+n] ⊆ 2A``. Every other element of ``2A`` lies at distance at least
``d`` from all its neighbours, so ``ell#_2(A) = n``. ``verify_construction``
checks all of this from ``A`` alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, VerificationError
from .intset import IntSet, Interval, as_intset, check_int64, isolated_elements, require_nonempty, translate
from .separation import check_level, check_subset_sums
from .sumset import h_fold_sumset, profile


@dataclass(frozen=True)
class ConstructionSpec:
    c: int
    n: int
    d: int
    delta: int
    g: int
    a_seq: tuple[int, ...]

    def to_record(self) -> dict:
        return {"c": self.c, "n": self.n, "d": self.d, "delta": self.delta, "g": self.g, "a_seq": list(self.a_seq)}


@dataclass
class ConstructionCertificate:
    property_i: bool
    property_ii: bool
    property_iii: bool
    exterior_isolated: bool
    counterexamples: list = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return self.property_i and self.property_ii and self.property_iii and self.exterior_isolated

    def to_record(self) -> dict:
        return {
            "property_i": self.property_i,
            "property_ii": self.property_ii,
            "property_iii": self.property_iii,
            "exterior_isolated": self.exterior_isolated,
            "all_pass": self.all_pass,
            "counterexamples": list(self.counterexamples),
        }


def separation_parameter(c: int, n: int, d: int) -> int:
    return max(4, 2 * abs(c) + d + 2 * n)


def assemble(c: int, n: int, a_seq) -> IntSet:
    """``{c + j + a_j} ∪ {-a_j}`` for ``j = 0..n``."""
    a_seq = list(a_seq)
    if len(a_seq) != n + 1:
        raise DomainError(f"need n + 1 = {n + 1} sequence terms, got {len(a_seq)}")
    return IntSet.of([check_int64(c + j + a) for j, a in enumerate(a_seq)] + [-a for a in a_seq])


def build_interval_2basis(c: int, n: int, d: int) -> tuple[IntSet, ConstructionSpec]:
    """Build ``A`` with ``|A| = 2n + 2`` and ``[c, c+n]`` the only interval of ``2A``.

    The sequence is ``a_j = g^(j+1)`` with ``g = delta + 1`` and
    ``delta = max(4, 2|c| + d + 2n)``. Before assembly the sequence must pass
    the growth conditions and both separation checks at ``delta``; otherwise
    ``VerificationError`` is raised and nothing is returned.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    if d < 2:
        raise DomainError("d must be at least 2")
    delta = separation_parameter(c, n, d)
    g = delta + 1
    a_seq = tuple(check_int64(g ** (j + 1)) for j in range(n + 1))
    # 2A reaches 2 * (c + n + a_n) and -2 * a_n
    check_int64(2 * (abs(c) + n + a_seq[-1]))

    problems = []
    if a_seq[0] < d:
        problems.append(f"a_0 = {a_seq[0]} < d = {d}")
    for j in range(1, n + 1):
        if a_seq[j] <= 2 * a_seq[j - 1] + abs(c) + n:
            problems.append(f"a_{j} = {a_seq[j]} violates the growth inequality")
    if not check_level(a_seq, 3, delta):
        problems.append(f"sequence is not {delta}-separated of level 3")
    if not check_subset_sums(a_seq, delta):
        problems.append(f"sequence subset sums are not {delta}-separated")
    if problems:
        raise VerificationError("construction preconditions failed", problems)

    A = assemble(c, n, a_seq)
    if len(A) != 2 * n + 2:
        raise VerificationError(f"assembled set has {len(A)} elements, expected {2 * n + 2}")
    return A, ConstructionSpec(c, n, d, delta, g, a_seq)


def blocks(c: int, n: int, a_seq) -> tuple[IntSet, IntSet, IntSet]:
    """The three pieces of ``2A``: mixed, positive-positive, negative-negative sums."""
    idx = range(n + 1)
    b0 = IntSet.of(c + j + a_seq[j] - a_seq[i] for i in idx for j in idx)
    b1 = IntSet.of(2 * c + i + j + a_seq[i] + a_seq[j] for i in idx for j in idx)
    b2 = IntSet.of(-a_seq[i] - a_seq[j] for i in idx for j in idx)
    return b0, b1, b2


def verify_construction(A, c: int, n: int, d: int) -> ConstructionCertificate:
    """Recompute the three properties and exterior isolation from ``A``.

    (i) ``[c, c+n] ⊆ 2A``; (ii) every ``x`` in ``2A`` outside ``[c, c+n]`` is
    at least ``d`` from every other element; (iii) ``ell#_2(A) = n`` and the
    leftmost longest run is exactly ``[c, c+n]``.
    """
    A = as_intset(A)
    require_nonempty(A)
    target = Interval(c, c + n)
    sums = h_fold_sumset(A, 2)
    members = set(sums)
    problems: list[dict] = []

    missing = [x for x in target if x not in members]
    prop_i = not missing
    if missing:
        problems.append({"property": "i", "missing": missing[:20]})

    # the nearest other element of 2A is always an adjacent one
    prop_ii = True
    elems = sums.elements
    for x, y in zip(elems, elems[1:]):
        if (x not in target or y not in target) and y - x < d:
            prop_ii = False
            problems.append({"property": "ii", "pair": [x, y], "gap": y - x})

    prof = profile(A, 2)
    prop_iii = prof.ell_sharp == n and prof.ell_sharp_witness == target
    if not prop_iii:
        problems.append(
            {
                "property": "iii",
                "ell_sharp": prof.ell_sharp,
                "witness": None if prof.ell_sharp_witness is None else prof.ell_sharp_witness.to_list(),
            }
        )

    exterior = IntSet(x for x in elems if x not in target)
    if len(exterior):
        lonely = set(isolated_elements(sums))
        crowded = [x for x in exterior if x not in lonely]
    else:
        crowded = []
    if crowded:
        problems.append({"property": "isolation", "not_isolated": crowded[:20]})

    return ConstructionCertificate(prop_i, prop_ii, prop_iii, not crowded, problems)


def division_normalize(c: int, h: int) -> tuple[int, int]:
    """``c = h*c0 + r`` with ``r`` in ``[0, h-1]`` (floor division)."""
    if h < 1:
        raise DomainError("h must be positive")
    return divmod(c, h)


def normalize_translation(A, h: int) -> tuple[IntSet, int]:
    """Translate ``A`` so its sumset's leftmost longest run starts in ``[0, h-1]``."""
    prof = profile(A, h)
    if prof.ell_sharp is None:
        raise DomainError(f"{h}-fold sumset of {prof.base} contains no interval")
    c0, r = division_normalize(prof.ell_sharp_witness.lo, h)
    return translate(prof.base, -c0), r


def shift_to_nonneg(A) -> tuple[IntSet, int]:
    """Translate by ``a0 = max(0, -min(A))`` so that the minimum is nonnegative."""
    A = as_intset(A)
    require_nonempty(A)
    a0 = max(0, -A[0])
    return translate(A, a0), a0
