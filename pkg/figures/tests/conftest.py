import json
import subprocess

import matplotlib.pyplot as plt
import pytest


@pytest.fixture(autouse=True)
def close_figures():
    yield
    plt.close("all")


@pytest.fixture(scope="session")
def tiny_run(tmp_path_factory):
    """A small but complete run directory, produced through the solver CLI."""
    root = tmp_path_factory.mktemp("figrun")
    out = root / "run"
    cfg = {
        "prior": {"N": 2},
        "schedule": {"n_obs": 4, "dt_obs": 0.2, "dt_int": 0.005},
        "chain": {"n_steps": 300, "burn_in": 100, "thin": 5},
        "grid": {"nx": 8, "ny": 4},
        "sigma": 0.05,
        "zeta_grid": [0.0, 2.0],
        "master_seed": 7,
    }
    cfg_file = root / "cfg.json"
    cfg_file.write_text(json.dumps(cfg))
    proc = subprocess.run(
        ["driftlab", "sweep", "--control", "zonal", "--config", str(cfg_file), "--out", str(out)],
        capture_output=True, text=True, timeout=600,
    )
    assert proc.returncode == 0, proc.stderr
    return out
