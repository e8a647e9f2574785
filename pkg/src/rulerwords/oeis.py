"""Ingestion of OEIS-style b-files and comparison against exact search.

A b-file is a text file of "index value" lines ('#' starts a comment).
The bundled table lists the known minimum mark counts of complete
rulers by length; compare_table checks every entry the exact search can
reach within budget, and any disagreement is a release-blocking
failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .search import Budget, min_marks


class ParseError(ValueError):
    """Malformed b-file line; the message carries the line number."""


@dataclass(frozen=True)
class OeisTable:
    """Contiguous integer sequence: entries[offset + i] for i = 0.."""

    entries: dict
    offset: int

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __contains__(self, index: int) -> bool:
        return index in self.entries

    @property
    def last_index(self) -> int:
        return self.offset + len(self.entries) - 1


def ingest_bfile(path, offset_override: Optional[int] = None) -> OeisTable:
    """Parse a b-file; the offset defaults to the first index present."""
    entries = {}
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"{path}:{lineno}: expected 'index value', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"{path}:{lineno}: non-integer field in {raw!r}") from None
        if value <= 0:
            raise ParseError(f"{path}:{lineno}: values must be positive, got {value}")
        if index in entries:
            raise ParseError(f"{path}:{lineno}: duplicate index {index}")
        entries[index] = value
    if entries:
        indices = sorted(entries)
        if indices != list(range(indices[0], indices[-1] + 1)):
            raise ParseError(f"{path}: indices are not contiguous")
        offset = indices[0]
    else:
        offset = 0
    if offset_override is not None:
        shifted = {offset_override + (i - offset): v for i, v in entries.items()}
        entries, offset = shifted, offset_override
    return OeisTable(entries, offset)


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    expected: int
    computed: Optional[int]
    verdict: str  # match | mismatch | not_computed


@dataclass(frozen=True)
class ComparisonReport:
    rows: tuple

    @property
    def mismatches(self) -> tuple:
        return tuple(r for r in self.rows if r.verdict == "mismatch")

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare_table(table: OeisTable, max_n: int,
                  budget_nodes_per_n: Optional[int] = None) -> ComparisonReport:
    """Verdict per table index up to max_n: match, mismatch, or
    not_computed when the per-index budget ran out."""
    rows = []
    for n in sorted(table.entries):
        if n > max_n:
            break
        rec = min_marks(n, Budget(max_nodes=budget_nodes_per_n))
        if not rec.optimal:
            rows.append(ComparisonRow(n, table[n], None, "not_computed"))
        elif rec.value == table[n]:
            rows.append(ComparisonRow(n, table[n], rec.value, "match"))
        else:
            rows.append(ComparisonRow(n, table[n], rec.value, "mismatch"))
    return ComparisonReport(tuple(rows))
