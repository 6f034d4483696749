"""Figure rendering: files are produced, errors abort before any output."""

import json

import pytest

from plotkit import figures, schemas


def test_plot_hist_single_panel(hist_csv, tmp_path):
    out = tmp_path / "h.png"
    figures.plot_hist([hist_csv], out)
    assert out.stat().st_size > 0


def test_plot_hist_empty_csv_leaves_no_image(tmp_path):
    bad = tmp_path / "empty.csv"
    bad.write_text("bin_low,bin_high,mean,std\n")
    out = tmp_path / "h.png"
    with pytest.raises(schemas.SchemaError):
        figures.plot_hist([bad], out)
    assert not out.exists()


def test_plot_hist_three_panel_overlay(hist_csv, tmp_path):
    out = tmp_path / "h3.png"
    figures.plot_hist([hist_csv, hist_csv, hist_csv], out)
    assert out.exists()


def test_plot_hist_deterministic_bytes(hist_csv, tmp_path):
    a, b = tmp_path / "a.png", tmp_path / "b.png"
    figures.plot_hist([hist_csv], a)
    figures.plot_hist([hist_csv], b)
    assert a.read_bytes() == b.read_bytes()


def test_plot_scatter_default_cut(scatter_csv, tmp_path):
    out = tmp_path / "s.png"
    figures.plot_scatter_triangle([scatter_csv], out)
    assert out.stat().st_size > 0


def test_plot_scatter_cut_changes_figure(scatter_csv, tmp_path):
    a, b = tmp_path / "a.png", tmp_path / "b.png"
    figures.plot_scatter_triangle([scatter_csv], a, cut=10)
    figures.plot_scatter_triangle([scatter_csv], b, cut=40)
    assert a.read_bytes() != b.read_bytes()


def _write_dendro(tmp_path, axis="size"):
    doc = {
        "meta": {"axis": axis, "n": 3},
        "nodes": [
            {"id": 0, "parent": None, "size": 3, "children": [1, 2],
             "truncated": False, "x": 0.75, "y0": 3, "y1": 3},
            {"id": 1, "parent": 0, "size": 1, "children": [],
             "truncated": False, "x": 0.0, "y0": 3, "y1": 1},
            {"id": 2, "parent": 0, "size": 2, "children": [3, 4],
             "truncated": False, "x": 1.5, "y0": 3, "y1": 2},
            {"id": 3, "parent": 2, "size": 1, "children": [],
             "truncated": False, "x": 1.0, "y0": 2, "y1": 1},
            {"id": 4, "parent": 2, "size": 1, "children": [],
             "truncated": True, "x": 2.0, "y0": 2, "y1": 1},
        ],
    }
    path = tmp_path / f"dendro_{axis}.json"
    path.write_text(json.dumps(doc))
    return path


def test_plot_dendrogram_size_axis(tmp_path):
    out = tmp_path / "d.png"
    figures.plot_dendrogram(_write_dendro(tmp_path), out, axis="size")
    assert out.stat().st_size > 0


def test_plot_dendrogram_axis_mismatch(tmp_path):
    out = tmp_path / "d.png"
    with pytest.raises(schemas.SchemaError, match="'axis'"):
        figures.plot_dendrogram(_write_dendro(tmp_path, axis="time"), out, axis="size")
    assert not out.exists()


def test_plot_dendrogram_two_leaves(tmp_path):
    doc = {
        "meta": {"axis": "time", "n": 2},
        "nodes": [
            {"id": 0, "parent": None, "size": 2, "children": [1, 2],
             "truncated": False, "x": 0.5, "y0": 0, "y1": 1},
            {"id": 1, "parent": 0, "size": 1, "children": [],
             "truncated": False, "x": 0.0, "y0": 1, "y1": 1},
            {"id": 2, "parent": 0, "size": 1, "children": [],
             "truncated": False, "x": 1.0, "y0": 1, "y1": 1},
        ],
    }
    path = tmp_path / "d.json"
    path.write_text(json.dumps(doc))
    out = tmp_path / "d.png"
    figures.plot_dendrogram(path, out)
    assert out.exists()
