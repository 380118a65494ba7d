"""Matplotlib figures: merging-path diagrams, ratio traces and count heat maps.

Output is byte-for-byte reproducible for a fixed matplotlib version: the SVG
hash salt is pinned and the date stamp is dropped from file metadata.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .core import SequenceLike, Step, as_sequence, merging_path  # noqa: E402
from .tables import Grid  # noqa: E402

__all__ = ["plot_grid", "plot_ratio_trace", "render_path", "save_figure"]

BOUNCE_COLOR = "#1f4fd8"
STEP_COLOR = "black"
DIAGONAL_COLOR = "0.55"

_RC = {
    "svg.hashsalt": "trafficmerge",
    "svg.fonttype": "none",
    "font.size": 10,
    "axes.linewidth": 0.8,
}


def save_figure(fig, path: str | Path, fmt: str | None = None) -> Path:
    path = Path(path)
    fmt = fmt or path.suffix.lstrip(".") or "svg"
    metadata = {"Date": None} if fmt == "svg" else ({"CreationDate": None} if fmt == "pdf" else None)
    with matplotlib.rc_context(_RC):
        fig.savefig(path, format=fmt, metadata=metadata)
    plt.close(fig)
    return path


def render_path(b: SequenceLike, path: str | Path, fmt: str | None = None, unit: float = 0.45) -> Path:
    """Draw the merging path of ``b`` on its lattice, bounces highlighted.

    Each step is its own line artist with a gid (``step-<car>`` or
    ``bounce-<car>``) so the SVG can be inspected structurally.
    """
    seq = as_sequence(b)
    mp = merging_path(seq)
    points = mp.points()
    n, m = points[-1]
    side = max(n, m, 1)
    with matplotlib.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(unit * (side + 1) + 0.6, unit * (side + 1) + 0.6))
        ax.set_xlim(-0.3, side + 0.3)
        ax.set_ylim(-0.3, side + 0.3)
        ax.set_aspect("equal")
        ax.set_xticks(range(side + 1))
        ax.set_yticks(range(side + 1))
        ax.grid(True, color="0.85", linewidth=0.6)
        ax.set_axisbelow(True)
        ax.set_xlabel("left lane")
        ax.set_ylabel("right lane")
        ax.set_title(str(seq) if len(seq) else "(empty)", fontsize=9)
        (diag,) = ax.plot([0, side], [0, side], color=DIAGONAL_COLOR, linestyle="--", linewidth=0.8)
        diag.set_gid("diagonal")
        for car, (step, start, end) in enumerate(zip(mp.steps, points, points[1:]), start=1):
            bounce = step is Step.UP_BOUNCE
            (line,) = ax.plot(
                [start[0], end[0]],
                [start[1], end[1]],
                color=BOUNCE_COLOR if bounce else STEP_COLOR,
                linewidth=3.2 if bounce else 1.8,
                solid_capstyle="round",
            )
            line.set_gid(f"{'bounce' if bounce else 'step'}-{car}")
        fig.tight_layout()
    return save_figure(fig, path, fmt)


def plot_ratio_trace(
    traces: dict[str, Sequence[tuple[int, float]]],
    path: str | Path,
    limits: dict[str, float] | None = None,
    fmt: str | None = None,
) -> Path:
    """Plot ``E/length`` against length for one or more rules."""
    with matplotlib.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(6.0, 3.8))
        for label, trace in traces.items():
            xs = [x for x, _ in trace]
            ys = [float(y) for _, y in trace]
            ax.plot(xs, ys, marker="." if len(xs) < 60 else None, linewidth=1.2, label=label)
            if limits and label in limits:
                ax.axhline(limits[label], color="0.5", linestyle=":", linewidth=0.9)
        ax.set_xlabel("number of cars")
        ax.set_ylabel("expected right lane / cars")
        ax.legend(frameon=False)
        fig.tight_layout()
    return save_figure(fig, path, fmt)


def plot_grid(grid: Grid, path: str | Path, fmt: str | None = None, log: bool = True) -> Path:
    """Heat map of a numeric table; empty cells are left blank."""
    numeric = [row[_label_width(grid) :] for row in grid.rows]
    values = [[math.nan if v is None else (math.log10(v + 1) if log else v) for v in row] for row in numeric]
    cols = grid.header[_label_width(grid) :]
    with matplotlib.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(0.55 * len(cols) + 1.5, 0.4 * len(values) + 1.2))
        ax.imshow(values, cmap="Blues", aspect="auto")
        for r, row in enumerate(numeric):
            for c, v in enumerate(row):
                if v is not None:
                    ax.text(c, r, str(v), ha="center", va="center", fontsize=6)
        ax.set_xticks(range(len(cols)), cols, fontsize=7)
        ax.set_yticks(range(len(values)), [_row_label(grid, row) for row in grid.rows], fontsize=7)
        ax.set_title(grid.title, fontsize=9)
        fig.tight_layout()
    return save_figure(fig, path, fmt)


def _label_width(grid: Grid) -> int:
    return sum(1 for h in grid.header if not h.startswith(("n=", "k=")))


def _row_label(grid: Grid, row) -> str:
    width = _label_width(grid)
    return ", ".join(f"{h}={v}" for h, v in zip(grid.header[:width], row[:width]))
