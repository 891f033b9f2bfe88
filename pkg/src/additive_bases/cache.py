"""Canonical JSON records and the on-disk result cache.

Layout: ``<cache_dir>/<kind>/<h>/<k>/<digest>.json``, one file per key. The
full key string is stored inside the file; the digest only keeps filenames
short. Writes take a per-key lock file and replace atomically.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Optional

from filelock import FileLock

from . import __version__


def canonical_json(record) -> str:
    """Sorted keys, two-space indent, trailing newline: byte-stable output."""
    return json.dumps(record, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def make_key(kind: str, **params) -> str:
    parts = [kind] + [f"{name}={params[name]}" for name in sorted(params)]
    parts.append(f"version={__version__}")
    return "|".join(parts)


@dataclass
class CacheEntry:
    key: str
    payload: dict
    created_at: str
    tool_version: str

    def to_record(self) -> dict:
        return {
            "key": self.key,
            "payload": self.payload,
            "created_at": self.created_at,
            "tool_version": self.tool_version,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "CacheEntry":
        return cls(rec["key"], rec["payload"], rec["created_at"], rec["tool_version"])


def _rank(payload: dict) -> tuple[int, int]:
    """Order used to decide whether a new payload may replace an old one."""
    exact = payload.get("certificate", "Exact") == "Exact" and payload.get("certified", True)
    explored = int(payload.get("search_bound", {}).get("explored", payload.get("enumeration_bound", 0)))
    return int(bool(exact)), explored


class ResultCache:
    def __init__(self, root):
        self.root = Path(root)

    def path_for(self, key: str, kind: str, h, k) -> Path:
        digest = hashlib.sha256(key.encode()).hexdigest()[:24]
        return self.root / kind / str(h) / str(k) / f"{digest}.json"

    def get(self, key: str, kind: str, h, k, validate: Optional[Callable[[dict], bool]] = None) -> Optional[dict]:
        """Return the cached payload, or None if missing, foreign, or invalid.

        Entries that fail ``validate`` are deleted so the caller recomputes.
        """
        path = self.path_for(key, kind, h, k)
        try:
            entry = CacheEntry.from_record(json.loads(path.read_text()))
        except (OSError, ValueError, KeyError):
            return None
        if entry.key != key:
            return None
        if validate is not None and not validate(entry.payload):
            self.evict(key, kind, h, k)
            return None
        return entry.payload

    def put(self, key: str, kind: str, h, k, payload: dict) -> bool:
        """Store ``payload`` unless an existing entry ranks at least as high.

        A LowerBound entry only gives way to an Exact one or to one with a
        larger explored bound. Returns whether the file was written.
        """
        path = self.path_for(key, kind, h, k)
        path.parent.mkdir(parents=True, exist_ok=True)
        with FileLock(str(path) + ".lock"):
            existing = self.get(key, kind, h, k)
            if existing is not None and existing != payload and _rank(payload) <= _rank(existing):
                return False
            entry = CacheEntry(key, payload, datetime.now(timezone.utc).isoformat(), __version__)
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                fh.write(canonical_json(entry.to_record()))
            os.replace(tmp, path)
        return True

    def evict(self, key: str, kind: str, h, k) -> None:
        try:
            self.path_for(key, kind, h, k).unlink()
        except FileNotFoundError:
            pass
