"""Run-wide knobs: evaluation budget, dense kernel width, cache location."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import BudgetExceededError, DomainError

DEFAULT_BUDGET = 10**9
DEFAULT_DENSE_WIDTH_CAP = 1 << 26
CACHE_ENV_VAR = "ADDITIVE_BASES_CACHE"
OUTPUT_FORMATS = ("json", "csv", "table")


class Budget:
    """Counter of profile evaluations with a hard cap.

    One budget may be threaded through several searches so that a whole CLI
    run shares a single limit.
    """

    def __init__(self, limit: int = DEFAULT_BUDGET):
        if limit < 1:
            raise DomainError("budget must be positive")
        self.limit = limit
        self.used = 0

    def charge(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceededError(f"evaluation budget of {self.limit} exceeded")

    @property
    def remaining(self) -> int:
        return max(0, self.limit - self.used)

    def __repr__(self) -> str:
        return f"Budget(used={self.used}, limit={self.limit})"


def as_budget(budget) -> Budget:
    if budget is None:
        return Budget()
    if isinstance(budget, Budget):
        return budget
    return Budget(int(budget))


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "additive_bases"


@dataclass
class RunConfig:
    budget: int = DEFAULT_BUDGET
    dense_width_cap: int = DEFAULT_DENSE_WIDTH_CAP
    cache_dir: Path = field(default_factory=default_cache_dir)
    parallelism: int = 1
    output_format: str = "json"

    def __post_init__(self):
        for name in ("budget", "dense_width_cap", "parallelism"):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be positive")
        if self.output_format not in OUTPUT_FORMATS:
            raise DomainError(f"output_format must be one of {OUTPUT_FORMATS}")
        self.cache_dir = Path(self.cache_dir)
