"""Memo of representation results with sampled audits and optional JSON persistence."""

import json
import os
import threading
from pathlib import Path
from typing import Dict, Optional, Tuple

import numpy as np

from ..config import settings
from ..models.octsum import OctSum, OctWitness
from ..utils.error_utils import CacheAuditError
from ..utils.log_utils import engine_logger, log_cache
from .octsum import represents

Entry = Optional[Tuple[int, ...]]


class ResultCache:
    """
    Map (canonical sum, n) to the witness returned by `represents` (None when not represented).

    A fraction of hits is recomputed from scratch and must match. The
    persisted file carries the engine version and is discarded on mismatch.
    """

    def __init__(
        self,
        path: Optional[Path] = None,
        audit_rate: Optional[float] = None,
        seed: Optional[int] = None,
        engine_version: Optional[str] = None,
    ):
        self.path = Path(path) if path is not None else None
        self.audit_rate = settings.CACHE_AUDIT_RATE if audit_rate is None else audit_rate
        self.engine_version = engine_version or settings.ENGINE_VERSION
        self._rng = np.random.default_rng(settings.AUDIT_SEED if seed is None else seed)
        self._entries: Dict[str, Entry] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        self.audits = 0

        if self.path is not None:
            self.load()

    @staticmethod
    def key(s: OctSum, n: int) -> str:
        return f"{s.key}|{n}"

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, s: OctSum, n: int) -> Tuple[bool, Entry]:
        with self._lock:
            k = self.key(s, n)
            if k in self._entries:
                return True, self._entries[k]
            return False, None

    def put(self, s: OctSum, n: int, value: Entry) -> None:
        """Store a result; a different value already stored under the key is an error."""
        with self._lock:
            k = self.key(s, n)
            if k in self._entries and self._entries[k] != value:
                raise CacheAuditError(f"conflicting cache writes for {k}: {self._entries[k]} vs {value}")
            self._entries[k] = value

    def represents(self, s: OctSum, n: int) -> Optional[OctWitness]:
        """
        Cached `represents`.

        Args:
            s: Sum of generalized octagonal numbers
            n: Non-negative integer

        Returns:
            OctWitness or None, identical to a fresh call
        """
        found, value = self.get(s, n)
        if found:
            self.hits += 1
            with self._lock:
                sampled = self._rng.random() < self.audit_rate
            if sampled:
                self._audit(s, n, value)
            return None if value is None else OctWitness(xs=value)

        self.misses += 1
        witness = represents(s, n)
        self.put(s, n, None if witness is None else witness.xs)
        return witness

    def _audit(self, s: OctSum, n: int, value: Entry) -> None:
        self.audits += 1
        fresh = represents(s, n)
        fresh_value = None if fresh is None else fresh.xs
        if fresh_value != value:
            log_cache(engine_logger, "audit_failed", {"key": self.key(s, n)})
            raise CacheAuditError(f"cached {value} for {self.key(s, n)} but search gives {fresh_value}")

    def load(self) -> None:
        """Read the cache file; a missing file or another engine version leaves the cache empty."""
        if self.path is None or not self.path.is_file():
            return
        with open(self.path, "r", encoding="utf-8") as f:
            data = json.load(f)

        if data.get("engine_version") != self.engine_version:
            log_cache(engine_logger, "invalidated", {"path": str(self.path), "found": data.get("engine_version")})
            return

        with self._lock:
            for k, value in data.get("entries", {}).items():
                self._entries[k] = None if value is None else tuple(value)
        log_cache(engine_logger, "loaded", {"path": str(self.path), "entries": len(self._entries)})

    def save(self) -> None:
        """Write the cache file, if a path is configured."""
        if self.path is None:
            return
        os.makedirs(self.path.parent, exist_ok=True)
        with self._lock:
            entries = {k: None if v is None else list(v) for k, v in self._entries.items()}
        data = {"engine_version": self.engine_version, "entries": entries}
        with open(self.path, "w", encoding="utf-8") as f:
            json.dump(data, f, sort_keys=True)
        log_cache(engine_logger, "saved", {"path": str(self.path), "entries": len(entries)})

    def stats(self) -> Dict[str, int]:
        return {"entries": len(self), "hits": self.hits, "misses": self.misses, "audits": self.audits}
