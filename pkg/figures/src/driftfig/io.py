"""Readers for run-directory artifacts.

File formats are the ones documented by the experiment CLI: headed CSV
for curves, grids and paths, JSON for configs, cells and stagnation
points.  All loaders validate shape and required columns and raise
ValueError with the offending path in the message.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

CURVE_COLUMNS = ("zeta", "max", "l1", "l2", "escaped", "mean_flow_mag")


def _read_csv(path):
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"missing artifact {path}")
    with open(path, newline="") as f:
        rows = list(csv.reader(f))
    if not rows:
        raise ValueError(f"{path} is empty")
    return rows[0], rows[1:]


def load_curve(path):
    """curve.csv as a dict of arrays keyed by column name."""
    header, rows = _read_csv(path)
    missing = [c for c in CURVE_COLUMNS if c not in header]
    if missing:
        raise ValueError(f"{path} missing column(s) {missing}")
    data = np.array([[float(v) for v in row] for row in rows])
    if rows and data.shape[1] != len(header):
        raise ValueError(f"{path} has ragged rows")
    out = {c: data[:, header.index(c)] if rows else np.empty(0) for c in CURVE_COLUMNS}
    out["escaped"] = out["escaped"].astype(bool)
    return out


def load_scalar_grid(path, column):
    """A gridded scalar CSV (columns x,y,<column>) as (xs, ys, values).

    values has shape (len(ys), len(xs)); the file must cover the full
    tensor grid exactly once.
    """
    header, rows = _read_csv(path)
    if header[:2] != ["x", "y"] or column not in header:
        raise ValueError(f"{path} must have columns x,y,{column}")
    ci = header.index(column)
    data = np.array([[float(row[0]), float(row[1]), float(row[ci])] for row in rows])
    xs = np.unique(data[:, 0])
    ys = np.unique(data[:, 1])
    if len(rows) != len(xs) * len(ys):
        raise ValueError(f"{path}: {len(rows)} rows do not fill a {len(ys)}x{len(xs)} grid")
    values = np.full((len(ys), len(xs)), np.nan)
    ix = np.searchsorted(xs, data[:, 0])
    iy = np.searchsorted(ys, data[:, 1])
    values[iy, ix] = data[:, 2]
    if np.isnan(values).any():
        raise ValueError(f"{path} does not cover the full tensor grid")
    return xs, ys, values


def load_path(path):
    """path.csv as (times, positions), positions of shape (n, 2)."""
    header, rows = _read_csv(path)
    if header != ["t", "x", "y"]:
        raise ValueError(f"{path} must have columns t,x,y")
    data = np.array([[float(v) for v in row] for row in rows])
    return data[:, 0], data[:, 1:]


def load_stagnation(path):
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"missing artifact {path}")
    with open(path) as f:
        d = json.load(f)
    if "points" not in d:
        raise ValueError(f"{path} has no 'points' entry")
    return d


def load_config(run_dir):
    path = Path(run_dir) / "config.json"
    if not path.exists():
        raise FileNotFoundError(f"missing config {path}; not a run directory?")
    with open(path) as f:
        return json.load(f)


def cells(run_dir):
    """Completed cells as a list of (zeta, cell_dir), ordered by zeta."""
    root = Path(run_dir) / "cells"
    found = []
    if root.is_dir():
        for d in sorted(root.iterdir()):
            marker = d / "cell.json"
            if marker.exists():
                with open(marker) as f:
                    found.append((float(json.load(f)["zeta"]), d))
    found.sort(key=lambda t: t[0])
    return found
