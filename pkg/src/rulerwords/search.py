"""Exact searches: minimal rulers, maximal-hole words, 2D minimal rulers.

The core is a pruned depth-first search over mark sets with distances
tracked in a bit vector. Pruning: (a) a pair bound (the marks still to
be placed cannot cover more new distances than the pairs they form),
(b) reflection symmetry (only rulers lexicographically no greater than
their mirror image are explored), (c) incremental distance masks.

All searches are deterministic: witnesses are canonical (the
lexicographically smallest optimum) and results do not depend on worker
count. Budgets bound nodes and wall clock; an exhausted budget yields a
result flagged non-optimal instead of an error.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .rulers import IncompleteRuler, Ruler, is_complete
from .words import Alphabet, PartialWord, borders


class Infeasible(ValueError):
    """The problem instance has no feasible solution at all."""


@dataclass
class Budget:
    """Node and wall-clock limits shared across one search call."""

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None
    nodes: int = 0
    started: float = field(default_factory=time.monotonic)
    exhausted: bool = False

    def spend(self) -> bool:
        """Count one node; False once either limit is exceeded."""
        if self.exhausted:
            return False
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            self.exhausted = True
        elif self.max_seconds is not None and (self.nodes & 0xFFF) == 0:
            if time.monotonic() - self.started > self.max_seconds:
                self.exhausted = True
        return not self.exhausted

    def limits(self) -> tuple:
        return (self.max_nodes, self.max_seconds)


@dataclass(frozen=True)
class SearchRecord:
    """Result of one exact search: optimal value, canonical witness, stats."""

    problem: str
    params: tuple
    value: int
    witness: object
    nodes_expanded: int
    elapsed: float
    optimal: bool

    def witness_text(self) -> str:
        from . import twod

        if isinstance(self.witness, Ruler):
            return self.witness.text()
        if isinstance(self.witness, PartialWord):
            return self.witness.text()
        if isinstance(self.witness, twod.Ruler2D):
            return self.witness.text()
        raise TypeError(f"unknown witness type {type(self.witness)!r}")

    def witness_kind(self) -> str:
        from . import twod

        if isinstance(self.witness, Ruler):
            return "ruler"
        if isinstance(self.witness, PartialWord):
            return "word"
        if isinstance(self.witness, twod.Ruler2D):
            return "ruler2d"
        raise TypeError(f"unknown witness type {type(self.witness)!r}")

    def to_json_dict(self) -> dict:
        """Canonical JSON form: deterministic fields only (no timings)."""
        return {
            "problem": self.problem,
            "params": list(self.params),
            "value": self.value,
            "witness": self.witness_text(),
            "witness_kind": self.witness_kind(),
            "optimal": self.optimal,
        }


def _pair_bound_start(distances: int) -> int:
    """Smallest m with C(m, 2) >= distances."""
    m = 1
    while m * (m - 1) // 2 < distances:
        m += 1
    return m


def _iter_rulers_fixed_m(n: int, m: int, budget: Budget,
                         first_lo: int = 1, first_hi: Optional[int] = None) -> Iterator[tuple]:
    """Complete rulers of length n with exactly m marks, in lex order.

    Only canonical rulers (lex <= their reflection) are produced. The
    first interior mark can be restricted to [first_lo, first_hi] for
    branch-parallel exploration. Stops early when the budget runs out;
    the caller must inspect budget.exhausted.
    """
    if n == 0:
        if m == 1:
            yield (0,)
        return
    if m < 2 or m > n + 1:
        return
    target = (1 << (n + 1)) - 1
    interior = m - 2
    base_covered = 1 | (1 << n)
    if interior == 0:
        if base_covered == target:
            yield (0, n)
        return

    def dfs(chosen: list, covered: int, missing: int, remaining: int,
            lo: int, hi: int) -> Iterator[tuple]:
        # chosen is [0, n, interiors...] with every interior < lo <= hi < n
        missing_mask = target & ~covered
        dmax = missing_mask.bit_length() - 1
        if dmax > hi - lo:
            # no future pair spans dmax, so some future mark must land on
            # q + dmax (above a chosen mark) or n - dmax (below the end)
            if not (lo <= n - dmax <= hi
                    or any(lo <= q + dmax <= hi for q in chosen if q != n)):
                return
        if remaining == 1:
            # the last mark must realize dmax, so only q + dmax and
            # n - dmax are candidates (any position works when nothing
            # is missing)
            if missing == 0:
                cands = range(lo, hi + 1)
            else:
                cands = sorted({q + dmax for q in chosen if q != n} | {n - dmax})
            for p in cands:
                if not (lo <= p <= hi):
                    continue
                if not budget.spend():
                    return
                newbits = 0
                for q in chosen:
                    newbits |= 1 << abs(p - q)
                if covered | newbits == target:
                    marks = tuple(sorted(chosen + [p]))
                    # the interval pruning lets boundary ties through, so
                    # canonicality still needs the exact comparison
                    if marks <= tuple(sorted(n - q for q in marks)):
                        yield marks
            return
        low_bits = 0
        for q in chosen:
            if q != n:
                low_bits |= 1 << (lo - q)
        for p in range(lo, hi + 1):
            if not budget.spend():
                return
            newbits = low_bits | (1 << (n - p))
            low_bits <<= 1
            miss2 = missing - (newbits & ~covered).bit_count()
            rem2 = remaining - 1
            placed2 = len(chosen) + 1
            if miss2 > rem2 * placed2 + rem2 * (rem2 - 1) // 2:
                continue
            chosen.append(p)
            yield from dfs(chosen, covered | newbits, miss2, rem2, p + 1, hi)
            chosen.pop()

    missing0 = target.bit_count() - base_covered.bit_count()
    hi0 = n - 1 if first_hi is None else min(first_hi, n - 1)
    for first in range(first_lo, hi0 + 1):
        if budget.exhausted:
            return
        newbits = (1 << first) | (1 << (n - first))
        miss1 = missing0 - (newbits & ~base_covered).bit_count()
        rem1 = interior - 1
        if miss1 > rem1 * 3 + rem1 * (rem1 - 1) // 2:
            continue
        # reflection: marks beyond n - first would make the mirror image
        # lexicographically smaller
        hi = n - first
        if rem1 == 0:
            if miss1 == 0 and first <= hi:
                yield (0, first, n)
            continue
        yield from dfs([0, n, first], base_covered | newbits, miss1, rem1, first + 1, hi)


def _branch_first_ruler(args: tuple) -> tuple:
    """Worker task: lex-min complete ruler whose first interior mark is
    `first`; returns (marks or None, truncated, nodes)."""
    n, m, first, max_nodes, max_seconds = args
    budget = Budget(max_nodes=max_nodes, max_seconds=max_seconds)
    found = None
    for marks in _iter_rulers_fixed_m(n, m, budget, first_lo=first, first_hi=first):
        found = marks
        break
    return found, budget.exhausted, budget.nodes


def min_marks(n: int, budget: Optional[Budget] = None, workers: int = 1) -> SearchRecord:
    """Exact minimum mark count of a complete length-n ruler.

    Iterates the mark count upward from the pair bound; the witness is
    the lexicographically smallest optimal ruler. With workers > 1 the
    top-level branches (first interior mark) run in separate processes;
    each branch then gets its own copy of the budget limits.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    budget = budget or Budget()
    t0 = time.monotonic()
    if n == 0:
        return SearchRecord("m1", (n,), 1, Ruler((0,)), 0, time.monotonic() - t0, True)
    truncated = False
    for m in range(max(2, _pair_bound_start(n)), n + 2):
        found: Optional[tuple] = None
        if workers > 1 and m > 2 and not budget.exhausted:
            tasks = [(n, m, first, budget.max_nodes, budget.max_seconds)
                     for first in range(1, n)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for marks, br_trunc, br_nodes in pool.map(_branch_first_ruler, tasks, chunksize=1):
                    budget.nodes += br_nodes
                    if marks is not None and found is None:
                        found = marks
                        if br_trunc:
                            truncated = True
                        break
                    if br_trunc:
                        truncated = True
        else:
            for marks in _iter_rulers_fixed_m(n, m, budget):
                found = marks
                break
            truncated = truncated or budget.exhausted
        if found is not None:
            return SearchRecord("m1", (n,), len(found), Ruler(found),
                                budget.nodes, time.monotonic() - t0, not truncated)
        if budget.exhausted:
            # upper-bound fallback: the full ruler is always complete
            full = tuple(range(n + 1))
            return SearchRecord("m1", (n,), n + 1, Ruler(full),
                                budget.nodes, time.monotonic() - t0, False)
    raise AssertionError(f"no complete ruler found up to m = n + 1 for n = {n}")


def letter_assignment(ruler: Ruler, k: int, budget: Optional[Budget] = None) -> Optional[list]:
    """A k-letter coloring of the marks such that every distance 1..n is
    measured by some pair of differently-colored marks, or None.

    Backtracks over marks in position order, colors tried in ascending
    order with new colors introduced in order, so a feasible result is
    the lexicographically smallest coloring. A distance with all pairs
    decided and none differing fails the branch immediately.
    """
    if not is_complete(ruler):
        raise IncompleteRuler(f"ruler {ruler.marks} is not complete")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    budget = budget or Budget()
    marks = ruler.marks
    m = len(marks)
    n = ruler.length
    if n == 0:
        return [0]
    pairs_ending_at: list = [[] for _ in range(m)]  # (earlier index, distance)
    undecided = [0] * (n + 1)
    for j in range(m):
        for i in range(j):
            d = marks[j] - marks[i]
            pairs_ending_at[j].append((i, d))
            undecided[d] += 1
    sat = [0] * (n + 1)
    colors = [-1] * m

    def assign(t: int, max_used: int) -> bool:
        if t == m:
            return True
        for c in range(0, min(max_used + 1, k - 1) + 1):
            if not budget.spend():
                return False
            colors[t] = c
            dead = False
            touched = []
            for i, d in pairs_ending_at[t]:
                undecided[d] -= 1
                if colors[i] != c:
                    sat[d] += 1
                touched.append((i, d))
                if undecided[d] == 0 and sat[d] == 0:
                    dead = True
            if not dead and assign(t + 1, max(max_used, c)):
                return True
            for i, d in touched:
                undecided[d] += 1
                if colors[i] != c:
                    sat[d] -= 1
            colors[t] = -1
        return False

    if assign(0, -1):
        return list(colors)
    return None


def _word_from_coloring(ruler: Ruler, coloring: Sequence[int], k: int) -> PartialWord:
    symbols: list = [None] * (ruler.length + 1)
    for mark, c in zip(ruler.marks, coloring):
        symbols[mark] = c
    return PartialWord(tuple(symbols), Alphabet(k))


def max_holes(n: int, k: int, budget: Optional[Budget] = None) -> SearchRecord:
    """Exact maximum hole count of an unbordered length-n word over k letters.

    An unbordered word is exactly a complete ruler (its domain, length
    n-1) plus a coloring in which every distance is measured by a
    differing-letter pair; so mark counts are tried upward and the first
    colorable complete ruler is optimal. Witness: the lexicographically
    smallest such ruler with its smallest coloring.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n, k >= 1, got n={n} k={k}")
    budget = budget or Budget()
    t0 = time.monotonic()
    if n == 1:
        word = PartialWord((0,), Alphabet(k))
        return SearchRecord("hbk", (n, k), 0, word, 0, time.monotonic() - t0, True)
    if k == 1:
        raise Infeasible(f"no unbordered word of length {n} >= 2 over one letter")
    truncated = False
    for m in range(_pair_bound_start(n - 1), n + 1):
        for marks in _iter_rulers_fixed_m(n - 1, m, budget):
            coloring = letter_assignment(Ruler(marks), k, budget)
            if coloring is None and budget.exhausted:
                break  # ran dry mid-coloring: infeasibility not established
            if coloring is not None:
                word = _word_from_coloring(Ruler(marks), coloring, k)
                if not borders(word).is_unbordered:
                    raise AssertionError(f"colored witness for (n={n}, k={k}) is bordered")
                return SearchRecord("hbk", (n, k), n - m, word,
                                    budget.nodes, time.monotonic() - t0, not truncated)
        if budget.exhausted:
            truncated = True
            break
    if truncated:
        # any-letters fallback: one block word, zero holes
        word = PartialWord(tuple([0] * (n - 1) + [1]), Alphabet(k))
        return SearchRecord("hbk", (n, k), 0, word, budget.nodes,
                            time.monotonic() - t0, False)
    raise AssertionError(f"search exhausted without witness for (n={n}, k={k})")


def max_holes_inf(n: int, budget: Optional[Budget] = None, workers: int = 1) -> SearchRecord:
    """Maximum holes with no alphabet restriction: n - min_marks(n-1),
    witnessed by the all-distinct-letters word of the minimal ruler."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    budget = budget or Budget()
    t0 = time.monotonic()
    from .words import word_from_ruler

    rec = min_marks(n - 1, budget, workers=workers)
    word = word_from_ruler(rec.witness)
    return SearchRecord("hbinf", (n,), n - rec.value, word,
                        rec.nodes_expanded, time.monotonic() - t0, rec.optimal)


@dataclass(frozen=True)
class MonotonicityRow:
    n: int
    value: Optional[int]  # None when the budget ran out
    violates: bool  # value(n) > value(n-1) + 1 with both known


@dataclass(frozen=True)
class MonotonicityReport:
    k: int
    rows: tuple

    @property
    def violations(self) -> tuple:
        return tuple(r for r in self.rows if r.violates)


def hb3_monotonicity_experiment(max_n: int, budget_nodes_per_row: Optional[int] = None,
                                k: int = 3) -> MonotonicityReport:
    """Tabulates the 3-letter hole maximum for n <= max_n and flags any n
    where it grows by more than 1 in one step. An experiment, not a
    proof: rows beyond the per-row budget are reported as unknown."""
    rows = []
    prev: Optional[int] = None
    for n in range(1, max_n + 1):
        rec = max_holes(n, k, Budget(max_nodes=budget_nodes_per_row))
        value = rec.value if rec.optimal else None
        violates = prev is not None and value is not None and value > prev + 1
        rows.append(MonotonicityRow(n, value, violates))
        prev = value
    return MonotonicityReport(k, tuple(rows))


def min_marks_2d(w: int, h: int, budget: Optional[Budget] = None,
                 max_cells: int = 24) -> SearchRecord:
    """Exact minimum mark count of a complete (w, h) grid ruler.

    Exhaustive over mark sets in row-major lex order with the pair bound
    (C(t, 2) >= 2wh - w - h) and incremental vector coverage; intended
    for tiny grids only, guarded by max_cells.
    """
    from .bounds import needed_pairs_2d
    from .twod import Ruler2D

    if w < 1 or h < 1:
        raise ValueError(f"need w, h >= 1, got {w}x{h}")
    if w * h > max_cells:
        raise ValueError(f"grid {w}x{h} exceeds the exact-search guard of {max_cells} cells")
    budget = budget or Budget()
    t0 = time.monotonic()
    cells = [(x, y) for y in range(h) for x in range(w)]
    needed = needed_pairs_2d(w, h)
    span = 2 * h - 1

    def vid(dx: int, dy: int) -> int:
        if dx < 0 or (dx == 0 and dy < 0):
            dx, dy = -dx, -dy
        return dx * span + dy + h - 1

    zero_vid = vid(0, 0)

    def dfs(chosen: list, covered: int, missing: int, remaining: int, lo: int) -> Optional[list]:
        for ci in range(lo, len(cells)):
            if not budget.spend():
                return None
            x, y = cells[ci]
            newbits = 0
            for qx, qy in chosen:
                newbits |= 1 << vid(x - qx, y - qy)
            miss2 = missing - (newbits & ~covered).bit_count()
            rem2 = remaining - 1
            placed2 = len(chosen) + 1
            if miss2 > rem2 * placed2 + rem2 * (rem2 - 1) // 2:
                continue
            if rem2 == 0:
                if miss2 == 0:
                    return chosen + [(x, y)]
                continue
            chosen.append((x, y))
            got = dfs(chosen, covered | newbits, miss2, rem2, ci + 1)
            chosen.pop()
            if got is not None:
                return got
        return None

    truncated = False
    for t in range(max(1, _pair_bound_start(needed)), w * h + 1):
        if t == 1:
            if needed == 0:
                marks = [(0, 0)]
            else:
                continue
        else:
            marks = dfs([], 1 << zero_vid, needed, t, 0)
        truncated = truncated or budget.exhausted
        if marks is not None:
            return SearchRecord("m2", (w, h), t, Ruler2D(w, h, frozenset(marks)),
                                budget.nodes, time.monotonic() - t0, not truncated)
        if budget.exhausted:
            full = Ruler2D(w, h, frozenset(cells))
            return SearchRecord("m2", (w, h), w * h, full,
                                budget.nodes, time.monotonic() - t0, False)
    raise AssertionError(f"full grid should always be complete for {w}x{h}")
