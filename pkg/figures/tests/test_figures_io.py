import numpy as np
import pytest

from driftfig import io


def test_load_curve_columns_and_types(tiny_run):
    curve = io.load_curve(tiny_run / "curve.csv")
    assert list(curve["zeta"]) == [0.0, 2.0]
    assert curve["escaped"].dtype == bool
    assert np.all(curve["l2"] > 0) and np.all(curve["max"] >= curve["l2"] * 0)


def test_load_curve_missing_column(tmp_path):
    bad = tmp_path / "curve.csv"
    bad.write_text("zeta,max,l1,l2,escaped\n0,1,1,1,0\n")
    with pytest.raises(ValueError, match="missing column.*mean_flow_mag"):
        io.load_curve(bad)


def test_load_scalar_grid_shape_and_order(tiny_run):
    xs, ys, var = io.load_scalar_grid(tiny_run / "cells" / "zeta_00" / "variance.csv", "var_u")
    assert var.shape == (len(ys), len(xs)) == (4, 8)
    assert np.all(np.diff(xs) > 0) and np.all(np.diff(ys) > 0)
    assert np.all(var >= 0)


def test_load_scalar_grid_rejects_holes(tiny_run, tmp_path):
    lines = (tiny_run / "cells" / "zeta_00" / "variance.csv").read_text().splitlines()
    bad = tmp_path / "variance.csv"
    bad.write_text("\n".join(lines[:-1]) + "\n")
    with pytest.raises(ValueError, match="grid"):
        io.load_scalar_grid(bad, "var_u")


def test_load_path_and_stagnation(tiny_run):
    times, positions = io.load_path(tiny_run / "truth" / "path.csv")
    assert positions.shape == (len(times), 2)
    assert times[0] == 0.0 and np.all(np.diff(times) > 0)
    stag = io.load_stagnation(tiny_run / "truth" / "stagnation_points.json")
    kinds = {p["kind"] for p in stag["points"]}
    assert kinds == {"elliptic", "hyperbolic"}
    assert stag["separatrix_level"] == 0.0


def test_cells_ordered_by_zeta(tiny_run):
    found = io.cells(tiny_run)
    assert [z for z, _ in found] == [0.0, 2.0]
    assert all(d.is_dir() for _, d in found)


def test_missing_artifacts_raise(tmp_path):
    with pytest.raises(FileNotFoundError, match="missing artifact"):
        io.load_curve(tmp_path / "curve.csv")
    with pytest.raises(FileNotFoundError, match="config"):
        io.load_config(tmp_path)
    assert io.cells(tmp_path) == []
