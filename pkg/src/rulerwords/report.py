"""Report generation: CSV tables with matplotlib figures next to them.

Each report writes one delimited file and one PNG into the output
directory and returns the paths. Figures use the Agg backend so reports
work headless.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from . import bounds
from .rulers import Ruler
from .search import hb3_monotonicity_experiment
from .twod import Ruler2D, binary_word_2d, construct_2d


def _ensure_dir(outdir) -> Path:
    path = Path(outdir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def bounds_report(n_max: int, outdir, step: int = 1) -> dict:
    """Mark-count and hole-count bounds for n = 2..n_max: CSV + figure."""
    out = _ensure_dir(outdir)
    ns = list(range(2, n_max + 1, step))
    rows = []
    for n in ns:
        rows.append({
            "n": n,
            "marks_lower": bounds.leech_lower(n),
            "marks_upper": bounds.wichmann_upper(n),
            "holes_lower_4letters": bounds.hb4_lower(n),
            "holes_lower_3letters": bounds.hb3_lower(n),
            "holes_upper": bounds.hb_upper_243(n),
        })
    csv_path = out / "bounds.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    arr = {key: np.array([r[key] for r in rows]) for key in rows[0]}
    ax1.plot(arr["n"], arr["marks_lower"], label="lower (trig-optimized)")
    ax1.plot(arr["n"], arr["marks_upper"], label="upper (sqrt(3n)+4)")
    ax1.set_xlabel("ruler length n")
    ax1.set_ylabel("marks")
    ax1.set_title("complete-ruler mark bounds")
    ax1.legend()
    ax2.plot(arr["n"], arr["holes_lower_4letters"], label="lower, 4 letters")
    ax2.plot(arr["n"], arr["holes_lower_3letters"], label="lower, 3 letters")
    ax2.plot(arr["n"], arr["holes_upper"], label="upper (any alphabet)")
    ax2.set_xlabel("word length n")
    ax2.set_ylabel("holes")
    ax2.set_title("unbordered-word hole bounds")
    ax2.legend()
    fig.tight_layout()
    png_path = out / "bounds.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return {"csv": csv_path, "png": png_path}


def ruler_figure(ruler: Ruler, outdir, name: str = "ruler") -> dict:
    """Tick diagram of a 1D ruler plus its marks as CSV."""
    out = _ensure_dir(outdir)
    csv_path = out / f"{name}.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["mark"])
        for m in ruler.marks:
            writer.writerow([m])
    fig, ax = plt.subplots(figsize=(max(4, ruler.length / 6), 1.4))
    ax.hlines(0, 0, ruler.length, color="black", lw=1)
    for m in ruler.marks:
        ax.vlines(m, 0, 1, color="tab:blue", lw=2)
        ax.text(m, 1.08, str(m), ha="center", fontsize=7)
    ax.set_ylim(-0.3, 1.5)
    ax.set_xlim(-0.5, ruler.length + 0.5)
    ax.axis("off")
    png_path = out / f"{name}.png"
    fig.savefig(png_path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return {"csv": csv_path, "png": png_path}


def grid_figure(ruler: Ruler2D, outdir, name: str = "ruler2d") -> dict:
    """Cell plot of a 2D ruler plus its text form alongside."""
    out = _ensure_dir(outdir)
    txt_path = out / f"{name}.txt"
    txt_path.write_text(ruler.text() + "\n")
    grid = np.zeros((ruler.height, ruler.width))
    for (x, y) in ruler.marks:
        grid[y, x] = 1
    fig, ax = plt.subplots(figsize=(ruler.width / 4, ruler.height / 4))
    ax.imshow(grid, cmap="Greys", origin="lower")
    ax.set_xticks(range(0, ruler.width, max(1, ruler.width // 10)))
    ax.set_yticks(range(0, ruler.height, max(1, ruler.height // 10)))
    png_path = out / f"{name}.png"
    fig.savefig(png_path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return {"txt": txt_path, "png": png_path}


def _sweep_task(args: tuple) -> dict:
    w, h, words = args
    if words:
        built = binary_word_2d(w, h)
        count = built.letters
        repairs = built.repair_marks
    else:
        count = len(construct_2d(w, h))
        repairs = 0
    return {"w": w, "h": h, "count": count, "repairs": repairs}


def sweep_rows_2d(sizes: Sequence, words: bool = False, workers: int = 1) -> list:
    """Mark (or letter) counts over (w, h) sizes, deterministic order."""
    tasks = [(w, h, words) for (w, h) in sizes]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_task, tasks, chunksize=8))
    else:
        rows = [_sweep_task(t) for t in tasks]
    return sorted(rows, key=lambda r: (r["w"], r["h"]))


def fit_envelope(rows: Sequence, c_cap: Optional[float] = None) -> dict:
    """Fit count <= 2*sqrt(2)*sqrt(wh) + c*(sqrt(w)+sqrt(h)) + c' over rows.

    Least squares on the excess over the leading term gives c (clamped
    into [0, c_cap]); c' is then raised until no row violates the bound,
    so the reported pair is a true envelope, not just a trend.
    """
    excess = np.array([r["count"] - 2 * math.sqrt(2) * math.sqrt(r["w"] * r["h"])
                       for r in rows])
    root_sum = np.array([math.sqrt(r["w"]) + math.sqrt(r["h"]) for r in rows])
    design = np.column_stack([root_sum, np.ones_like(root_sum)])
    (c, _c0), *_ = np.linalg.lstsq(design, excess, rcond=None)
    c = max(0.0, float(c))
    if c_cap is not None:
        c = min(c, c_cap)
    cprime = float(np.max(excess - c * root_sum))
    return {"c": c, "c_prime": max(0.0, cprime)}


def sweep2d_report(lo: int, hi: int, outdir, words: bool = False,
                   workers: int = 1) -> dict:
    """Construction sweep over all (w, h) in [lo, hi]^2: CSV, figure, fit."""
    out = _ensure_dir(outdir)
    sizes = [(w, h) for w in range(lo, hi + 1) for h in range(lo, hi + 1)]
    rows = sweep_rows_2d(sizes, words=words, workers=workers)
    fit = fit_envelope(rows)
    stem = "binary_word_sweep" if words else "ruler_sweep"
    csv_path = out / f"{stem}.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=["w", "h", "count", "repairs"])
        writer.writeheader()
        writer.writerows(rows)

    area = np.array([r["w"] * r["h"] for r in rows], dtype=float)
    counts = np.array([r["count"] for r in rows], dtype=float)
    xs = np.linspace(area.min(), area.max(), 200)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter(area, counts, s=6, alpha=0.4, label="realized")
    ax.plot(xs, 2 * math.sqrt(2) * np.sqrt(xs), "k--", label="2*sqrt(2)*sqrt(area)")
    ax.set_xlabel("grid area")
    ax.set_ylabel("letters" if words else "marks")
    ax.set_title(f"{stem}: c={fit['c']:.2f}, c'={fit['c_prime']:.2f}")
    ax.legend()
    fig.tight_layout()
    png_path = out / f"{stem}.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return {"csv": csv_path, "png": png_path, "fit": fit, "rows": rows}


def hb3_report(max_n: int, outdir, budget_nodes: Optional[int] = None) -> dict:
    """Monotonicity experiment table for the 3-letter hole maximum."""
    out = _ensure_dir(outdir)
    report = hb3_monotonicity_experiment(max_n, budget_nodes)
    csv_path = out / "hb3_monotonicity.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "max_holes_3letters", "violates_step_bound"])
        for row in report.rows:
            writer.writerow([row.n, "" if row.value is None else row.value,
                             "yes" if row.violates else "no"])
    known = [(r.n, r.value) for r in report.rows if r.value is not None]
    fig, ax = plt.subplots(figsize=(6, 4))
    if known:
        ns, vals = zip(*known)
        ax.step(ns, vals, where="post", label="3-letter hole maximum")
        ax.plot(ns, [n - math.sqrt(2.43 * (n - 1)) for n in ns], "k--",
                label="upper bound")
    ax.set_xlabel("word length n")
    ax.set_ylabel("holes")
    ax.legend()
    fig.tight_layout()
    png_path = out / "hb3_monotonicity.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return {"csv": csv_path, "png": png_path, "report": report}
