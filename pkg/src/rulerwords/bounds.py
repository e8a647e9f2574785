"""Closed-form and numerically optimized bounds, 1D and 2D.

Real-valued bounds are reported unrounded; integer-usable forms always
round toward validity (ceil on lower bounds, floor on upper bounds).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

# Trigonometric lower-bound optimizer: dense grid then golden-section
# refinement on the best bracket.
LEECH_GRID_POINTS = 100_000
LEECH_DELTA_TOL = 1e-9

_GOLDEN = (math.sqrt(5) - 1) / 2


def _leech_objective(delta: float, n: int) -> float:
    val = 2 * n + 1 - math.sin(delta) / math.sin(delta / (2 * n + 1))
    return max(val, 0.0)


def leech_lower(n: int) -> float:
    """max over delta in (0, 2*pi) of sqrt(2n+1 - sin(delta)/sin(delta/(2n+1))).

    Lower bound on the minimum mark count of a length-n complete ruler;
    strictly above sqrt(2.43 * n). The landscape is not assumed
    unimodal: a dense grid locates the best bracket, golden-section
    refines it to LEECH_DELTA_TOL.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    grid = np.linspace(0.0, 2 * math.pi, LEECH_GRID_POINTS + 2)[1:-1]
    vals = 2 * n + 1 - np.sin(grid) / np.sin(grid / (2 * n + 1))
    best = int(np.argmax(vals))
    lo = grid[best - 1] if best > 0 else grid[0] / 2
    hi = grid[best + 1] if best < len(grid) - 1 else (grid[-1] + 2 * math.pi) / 2
    # golden-section maximization of the (locally smooth) objective
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = _leech_objective(c, n)
    fd = _leech_objective(d, n)
    while b - a > LEECH_DELTA_TOL:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = _leech_objective(c, n)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = _leech_objective(d, n)
    return math.sqrt(max(fc, fd, float(vals[best])))


def wichmann_upper(n: int) -> float:
    """sqrt(3n) + 4: marks achievable by the covering construction."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return math.sqrt(3 * n) + 4


def hb_upper_turan(n: int, k: int) -> float:
    """n - sqrt(2k/(k-1) * (n-1)): hole-count upper bound over k letters."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    return n - math.sqrt(2 * k / (k - 1) * (n - 1))


def hb_upper_243(n: int) -> float:
    """n - sqrt(2.43(n-1)): alphabet-independent hole-count upper bound.

    Beats the Turan-style bound iff k >= 6 (2k/(k-1) <= 2.43 <=> k >= 5.65).
    """
    return n - math.sqrt(2.43 * (n - 1))


def hb3_lower(n: int) -> int:
    """n - ceil(2*sqrt(n+3)) + 2: holes achievable over 3 letters.

    Exact integer arithmetic; may be negative for tiny n.
    """
    t = math.isqrt(4 * (n + 3))
    if t * t < 4 * (n + 3):
        t += 1
    return n - t + 2


def hb4_lower(n: int) -> float:
    """n - sqrt(3n-3) - 4: holes achievable over 4 letters (witnessed)."""
    return n - math.sqrt(3 * n - 3) - 4


def needed_pairs_2d(w: int, h: int) -> int:
    """Number of vector classes a (w, h) grid ruler must measure with
    pairwise distinct mark pairs: 2wh - w - h."""
    return 2 * w * h - w - h


def m2_lower(w: int, h: int) -> float:
    """sqrt(4wh - 2(w+h) + 1/4) + 1/2, from C(t, 2) >= 2wh - w - h."""
    return math.sqrt(4 * w * h - 2 * (w + h) + 0.25) + 0.5


def hb2d_upper(w: int, h: int, k: int) -> float:
    """wh - sqrt(2k/(k-1) * (2wh - w - h)): 2D hole-count upper bound."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    return w * h - math.sqrt(2 * k / (k - 1) * needed_pairs_2d(w, h))


@dataclass(frozen=True)
class BoundReport:
    """Lower/upper bound pair for one problem instance."""

    n: int
    m: Optional[int]
    k: Optional[int]
    lower: float
    upper: float
    lower_source: str
    upper_source: str

    @property
    def lower_int(self) -> int:
        return math.ceil(self.lower)

    @property
    def upper_int(self) -> int:
        return math.floor(self.upper)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "lower": self.lower,
            "upper": self.upper,
            "lower_int": self.lower_int,
            "upper_int": self.upper_int,
            "lower_source": self.lower_source,
            "upper_source": self.upper_source,
        }


def min_marks_bounds(n: int) -> BoundReport:
    """Sandwich for the minimum mark count of a length-n complete ruler."""
    return BoundReport(
        n=n, m=None, k=None,
        lower=leech_lower(n), upper=wichmann_upper(n),
        lower_source="trig-optimized", upper_source="sqrt(3n)+4",
    )


def max_holes_bounds(n: int, k: int) -> BoundReport:
    """Sandwich for the hole maximum of unbordered length-n words over k letters."""
    if k >= 4:
        lower: float = hb4_lower(n)
        lower_source = "4-letter construction"
    elif k == 3:
        lower = hb3_lower(n)
        lower_source = "3-letter construction"
    else:
        lower = float(n - 2 * math.sqrt(n - 1)) if n >= 1 else 0.0
        lower_source = "binary closed form"
    upper = min(hb_upper_turan(n, k), hb_upper_243(n))
    upper_source = "min(turan, 2.43)"
    return BoundReport(n=n, m=None, k=k, lower=lower, upper=upper,
                       lower_source=lower_source, upper_source=upper_source)


def m2_bounds(w: int, h: int, realized_upper: Optional[int] = None) -> BoundReport:
    """Sandwich for the 2D minimum mark count.

    The upper side has no closed-form constant, so the realized count of
    the grid construction is reported when supplied (and +inf otherwise).
    """
    upper = float(realized_upper) if realized_upper is not None else math.inf
    return BoundReport(
        n=w, m=h, k=None,
        lower=m2_lower(w, h), upper=upper,
        lower_source="pair counting", upper_source="realized construction",
    )
