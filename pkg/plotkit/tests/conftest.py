import subprocess
import sys

import pytest


@pytest.fixture(scope="session")
def derived_dir(tmp_path_factory):
    """Derived CSVs for the 17-crossing sweep, produced via the primary CLI."""
    base = tmp_path_factory.mktemp("sweep17")
    results = base / "results.csv"
    plots = base / "derived"
    subprocess.run(
        [sys.executable, "-m", "twobridge.cli", "sweep",
         "--max-crossings", "17", "--out", str(results)],
        check=True, capture_output=True)
    subprocess.run(
        [sys.executable, "-m", "twobridge.cli", "plot-data",
         "--in", str(results), "--out", str(plots)],
        check=True, capture_output=True)
    return plots
