"""Append-only JSONL cache of search results.

Records are keyed by (problem, params, tool_version); entries written
by other tool versions are ignored, never deleted. A cached witness is
re-verified on read, so a hit can never change a result.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from . import __version__
from .rulers import Ruler, is_complete
from .search import SearchRecord
from .words import PartialWord, borders


def _verify(record: SearchRecord) -> bool:
    from .twod import Ruler2D, is_complete_2d

    witness = record.witness
    if isinstance(witness, Ruler):
        return is_complete(witness) and len(witness) == record.value
    if isinstance(witness, PartialWord):
        return borders(witness).is_unbordered and witness.hole_count == record.value
    if isinstance(witness, Ruler2D):
        return is_complete_2d(witness) and len(witness) == record.value
    return False


def _record_from_json(obj: dict) -> SearchRecord:
    from .twod import Ruler2D

    kind = obj["witness_kind"]
    if kind == "ruler":
        witness: object = Ruler.parse(obj["witness"])
    elif kind == "word":
        witness = PartialWord.parse(obj["witness"])
    elif kind == "ruler2d":
        witness = Ruler2D.parse(obj["witness"])
    else:
        raise ValueError(f"unknown witness kind {kind!r}")
    return SearchRecord(
        problem=obj["problem"], params=tuple(obj["params"]), value=obj["value"],
        witness=witness, nodes_expanded=obj.get("nodes", 0),
        elapsed=obj.get("elapsed", 0.0), optimal=obj["optimal"])


class ResultCache:
    """One JSONL file; lookups only trust optimal, verified records."""

    def __init__(self, path):
        self.path = Path(path)

    def lookup(self, problem: str, params: tuple) -> Optional[SearchRecord]:
        if not self.path.exists():
            return None
        found = None
        for line in self.path.read_text().splitlines():
            if not line.strip():
                continue
            obj = json.loads(line)
            if obj.get("tool_version") != __version__:
                continue
            if obj.get("problem") == problem and tuple(obj.get("params", ())) == params:
                found = obj  # last write wins
        if found is None:
            return None
        record = _record_from_json(found)
        if not record.optimal or not _verify(record):
            return None
        return record

    def store(self, record: SearchRecord) -> None:
        obj = record.to_json_dict()
        obj["tool_version"] = __version__
        obj["nodes"] = record.nodes_expanded
        obj["elapsed"] = round(record.elapsed, 6)
        with self.path.open("a") as fh:
            fh.write(json.dumps(obj, sort_keys=True) + "\n")
