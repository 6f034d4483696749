"""Shared fixtures: a small experiment campaign rendered through the CLI."""

import subprocess

import pytest


@pytest.fixture(scope="session")
def campaign(tmp_path_factory):
    """Run a small netslice campaign once and return its output directory."""
    out = tmp_path_factory.mktemp("campaign")
    subprocess.run(
        ["netslice", "experiment", "--out", str(out), "--master-seed", "7",
         "--replications", "3", "--walks", "20", "--workers", "1"],
        check=True, capture_output=True, text=True)
    return out


@pytest.fixture()
def hist_csv(tmp_path):
    path = tmp_path / "hist.csv"
    path.write_text("bin_low,bin_high,mean,std\n0,25,4.5,1\n25,50,2,0.5\n")
    return path


@pytest.fixture()
def scatter_csv(tmp_path):
    path = tmp_path / "points.csv"
    path.write_text("# seed=1\nn,m\n1,99\n25,60\n3,10\n")
    return path
