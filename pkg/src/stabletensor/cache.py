"""Append-only JSON-lines store of computed decompositions."""

from __future__ import annotations

import json
import logging
import os
import threading
from dataclasses import dataclass
from pathlib import Path

from .engine import ENGINE_TAG, ORACLE_TAG, tensor_stable_range
from .errors import InputError
from .oracle import Decomposition, tensor_oracle
from .rootsystem import GroupFamily, Kind
from .serialize import SCHEMA_VERSION

log = logging.getLogger(__name__)

ENV_VAR = "STABLETENSOR_CACHE"


@dataclass(frozen=True)
class CacheRecord:
    family: str
    rank: int
    lhs: tuple
    rhs: tuple
    result: tuple  # ((weight, mult), ...) in descending weight order
    engine: str
    schema_version: int = SCHEMA_VERSION

    @property
    def key(self):
        return (self.family, self.rank, self.lhs, self.rhs)

    @classmethod
    def from_decomposition(cls, dec: Decomposition) -> CacheRecord:
        if dec.family is None:
            raise InputError("stable decompositions are not cached")
        return cls(
            family=dec.family.kind.value,
            rank=dec.family.rank,
            lhs=tuple(dec.lhs),
            rhs=tuple(dec.rhs),
            result=tuple((tuple(w), m) for w, m in dec.items()),
            engine=dec.engine,
        )

    def to_decomposition(self) -> Decomposition:
        return Decomposition(
            GroupFamily(Kind.parse(self.family), self.rank),
            dict(self.result),
            engine=self.engine,
            lhs=self.lhs,
            rhs=self.rhs,
        ).checked()

    def to_json(self) -> str:
        doc = {
            "family": self.family,
            "rank": self.rank,
            "lhs": list(self.lhs),
            "rhs": list(self.rhs),
            "result": [[list(w), m] for w, m in self.result],
            "engine": self.engine,
            "schema_version": self.schema_version,
        }
        return json.dumps(doc, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> CacheRecord:
        doc = json.loads(line)
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
        result = tuple((tuple(int(x) for x in w), int(m)) for w, m in doc["result"])
        if any(m < 1 for _, m in result):
            raise ValueError("multiplicities must be positive")
        if list(result) != sorted(result, reverse=True):
            raise ValueError("result weights are not in descending order")
        return cls(
            family=Kind.parse(doc["family"]).value,
            rank=int(doc["rank"]),
            lhs=tuple(int(x) for x in doc["lhs"]),
            rhs=tuple(int(x) for x in doc["rhs"]),
            result=result,
            engine=str(doc["engine"]),
        )


def replay(record: CacheRecord) -> Decomposition:
    """Recompute a cached record with the engine that produced it."""
    family = GroupFamily(Kind.parse(record.family), record.rank)
    if record.engine == ORACLE_TAG:
        return tensor_oracle(family, record.lhs, record.rhs)
    if record.engine == ENGINE_TAG:
        return tensor_stable_range(family, record.lhs, record.rhs, memo=None)
    raise InputError(f"unknown engine tag {record.engine!r}")


class CoefficientCache:
    """Records keyed on (family, rank, lhs, rhs). Corrupt lines are skipped."""

    def __init__(self, path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._records: dict | None = None

    @classmethod
    def resolve(cls, cli_path=None) -> CoefficientCache | None:
        """The environment variable wins over ``--cache``; neither means no cache."""
        path = os.environ.get(ENV_VAR) or cli_path
        return cls(path) if path else None

    def _load(self) -> dict:
        if self._records is not None:
            return self._records
        records = {}
        if self.path.exists():
            with self.path.open(encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, 1):
                    if not line.strip():
                        continue
                    try:
                        rec = CacheRecord.from_json(line)
                    except (ValueError, KeyError, TypeError, InputError) as exc:
                        log.warning("%s:%d: skipping corrupt cache line (%s)", self.path, lineno, exc)
                        continue
                    records.setdefault(rec.key, rec)
        self._records = records
        return records

    def records(self) -> list[CacheRecord]:
        return list(self._load().values())

    def get(self, kind, rank, lhs, rhs) -> CacheRecord | None:
        return self._load().get((Kind.parse(kind).value, rank, tuple(lhs), tuple(rhs)))

    def put(self, dec: Decomposition) -> CacheRecord:
        rec = CacheRecord.from_decomposition(dec)
        with self._lock:
            records = self._load()
            if rec.key in records:
                return records[rec.key]
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(rec.to_json() + "\n")
            records[rec.key] = rec
        return rec

    def __len__(self):
        return len(self._load())
