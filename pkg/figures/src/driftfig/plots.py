"""The four figure kinds.

Colors follow the source material the run artifacts mimic: black for the
max norm, magenta for L2, cyan for L1, purple ramps for controlled
paths and the mean-flow line, blue streamlines with red stagnation
crosses.  Every plot function takes a FigureSpec, writes spec.out and
returns the matplotlib Figure (handy for inspection in tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from . import io

KINDS = ("curves", "heatmap", "paths", "meanflow")


@dataclass(frozen=True)
class FigureSpec:
    run_dir: str
    kind: str
    out: str
    fmt: str | None = None
    dpi: int = 150

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.dpi <= 0:
            raise ValueError(f"dpi must be positive, got {self.dpi}")


def _save(fig, spec):
    fig.tight_layout()
    fig.savefig(spec.out, dpi=spec.dpi, format=spec.fmt)
    return fig


def wrap_segments(positions):
    """Positions folded into the unit square, with NaN rows inserted
    wherever folding tears the path, so line plots show no seam jumps."""
    wrapped = np.asarray(positions) % 1.0
    if len(wrapped) < 2:
        return wrapped
    jumps = np.any(np.abs(np.diff(wrapped, axis=0)) > 0.5, axis=1)
    pieces = []
    last = 0
    for i in np.flatnonzero(jumps):
        pieces.append(wrapped[last : i + 1])
        pieces.append(np.full((1, 2), np.nan))
        last = i + 1
    pieces.append(wrapped[last:])
    return np.vstack(pieces)


def plot_curves(spec):
    curve = io.load_curve(Path(spec.run_dir) / "curve.csv")
    zeta = curve["zeta"]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    marker = "o" if len(zeta) == 1 else None
    ax.plot(zeta, curve["max"], color="black", marker=marker, label="max")
    ax.plot(zeta, curve["l2"], color="magenta", marker=marker, label="L2")
    ax.plot(zeta, curve["l1"], color="cyan", marker=marker, label="L1")
    escaped = np.flatnonzero(curve["escaped"])
    if escaped.size:
        ax.axvline(zeta[escaped[0]], color="black", linestyle=":", label="critical ζ")
    ax.set_xlabel("control magnitude ζ")
    ax.set_ylabel("posterior variance norm")
    ax.legend()
    return _save(fig, spec)


def plot_heatmap(spec):
    run = Path(spec.run_dir)
    done = io.cells(run)
    if not done:
        raise ValueError(f"no completed cells under {run}")
    zeta, cell = done[0]
    xs, ys, var = io.load_scalar_grid(cell / "variance.csv", "var_u")
    _, positions = io.load_path(cell / "path.csv")

    fig, ax = plt.subplots(figsize=(7.0, 3.8))
    mesh = ax.pcolormesh(xs, ys, var, shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="posterior variance of u")
    seg = wrap_segments(positions)
    ax.plot(seg[:, 0], seg[:, 1], color="white", linewidth=1.2, label="drifter path")
    ax.set_xlim(xs[0], xs[-1])
    ax.set_ylim(ys[0], ys[-1])
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title(f"ζ = {zeta:g}")
    ax.legend(loc="upper right")
    return _save(fig, spec)


def _streamline_levels(psi, separatrix):
    levels = np.linspace(psi.min(), psi.max(), 15)
    if separatrix is not None and psi.min() < separatrix < psi.max():
        levels[np.argmin(np.abs(levels - separatrix))] = separatrix
    return np.unique(levels)


def plot_paths(spec):
    run = Path(spec.run_dir)
    io.load_config(run)  # fail early when pointed at a non-run directory
    xs, ys, psi = io.load_scalar_grid(run / "truth" / "psi_grid.csv", "psi")
    stag = io.load_stagnation(run / "truth" / "stagnation_points.json")

    fig, ax = plt.subplots(figsize=(7.0, 3.8))
    ax.contour(xs, ys, psi, levels=_streamline_levels(psi, stag.get("separatrix_level")),
               colors="blue", linewidths=0.7)
    done = io.cells(run)
    ramp = plt.get_cmap("Purples")
    for rank, (zeta, cell) in enumerate(done):
        _, positions = io.load_path(cell / "path.csv")
        seg = wrap_segments(positions)
        shade = 0.35 + 0.6 * (rank / max(len(done) - 1, 1))
        ax.plot(seg[:, 0], seg[:, 1], color=ramp(shade), linewidth=1.3, label=f"ζ = {zeta:g}")
    for p in stag["points"]:
        ax.plot(p["x"], p["y"], marker="x", color="red", markersize=8, linestyle="none")
    ax.set_xlim(xs[0], xs[-1])
    ax.set_ylim(ys[0], ys[-1])
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    if done:
        ax.legend(loc="upper right", fontsize="small")
    return _save(fig, spec)


def plot_meanflow(spec):
    curve = io.load_curve(Path(spec.run_dir) / "curve.csv")
    if curve["zeta"].size == 0:
        raise ValueError(f"{Path(spec.run_dir) / 'curve.csv'} has no rows")
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(curve["zeta"], curve["mean_flow_mag"], color="purple", label="mean |v| along path")
    ax.plot(curve["zeta"], curve["zeta"], color="black", linestyle="--", label="ζ")
    ax.set_xlabel("control magnitude ζ")
    ax.set_ylabel("flow magnitude")
    ax.legend()
    return _save(fig, spec)


_PLOTTERS = {
    "curves": plot_curves,
    "heatmap": plot_heatmap,
    "paths": plot_paths,
    "meanflow": plot_meanflow,
}


def render(spec):
    return _PLOTTERS[spec.kind](spec)
