"""The twelve published spectra L_{N0,h}(k) and their regeneration."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .config import as_budget
from .intset import IntSet
from .spectrum import format_compact, parse_compact, spectrum_nonneg

# transcribed verbatim from the published listing
PUBLISHED_TABLES: dict[tuple[int, int], str] = {
    (3, 3): "{0,3,6,7}",
    (3, 4): "{0,3,6,7,9,10,11,12,14,15}",
    (3, 5): "{0,3,6,7} ∪ [9,24]",
    (3, 6): "{0,3,6,7} ∪ [9,36]",
    (4, 3): "{0,4,8,10}",
    (4, 4): "{0,4,8,10,12,14,15,16,17,18,20,22,23,24,26}",
    (5, 3): "{0,5,10,13,14}",
    (5, 4): "{0,5,10,13,14,15} ∪ [18,29]",
    (6, 3): "{0,6,12,16,18}",
    (6, 4): "{0,6,12,16,18,22,23,24,26,27,28,29}",
    (7, 3): "{0,7,14,19,22,23}",
    (7, 4): "{0,7,14,19,21,22,23,26,27,28}",
}


@dataclass(frozen=True)
class TableComparison:
    h: int
    k: int
    expected: str
    computed: str
    missing: tuple[int, ...]
    extra: tuple[int, ...]

    @property
    def match(self) -> bool:
        return not self.missing and not self.extra and self.expected == self.computed

    def to_record(self) -> dict:
        return {
            "h": self.h,
            "k": self.k,
            "expected": self.expected,
            "computed": self.computed,
            "match": self.match,
            "missing": list(self.missing),
            "extra": list(self.extra),
        }


def load_expected(path) -> dict[tuple[int, int], str]:
    """Read ``{"h,k": "<compact set>", ...}`` from a JSON file."""
    raw = json.loads(Path(path).read_text())
    out = {}
    for key, text in raw.items():
        h, k = (int(x) for x in key.split(","))
        out[(h, k)] = text
    return out


def compare_table(h: int, k: int, expected: str, computed: IntSet) -> TableComparison:
    want = set(parse_compact(expected))
    got = set(computed)
    return TableComparison(
        h=h,
        k=k,
        expected=expected,
        computed=format_compact(computed),
        missing=tuple(sorted(want - got)),
        extra=tuple(sorted(got - want)),
    )


def regenerate_tables(
    h: Optional[int] = None,
    expected: Optional[dict[tuple[int, int], str]] = None,
    budget=None,
) -> list[TableComparison]:
    expected = PUBLISHED_TABLES if expected is None else expected
    budget = as_budget(budget)
    out = []
    for (hh, kk), text in sorted(expected.items()):
        if h is not None and hh != h:
            continue
        out.append(compare_table(hh, kk, text, spectrum_nonneg(hh, kk, budget).values))
    return out
