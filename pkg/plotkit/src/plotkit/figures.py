"""Render the three figure families from parsed netslice outputs.

All functions validate their inputs before any drawing happens, draw into a
fresh Figure under a pinned rc style (so identical inputs give identical
image bytes), save to the requested path and return that path.
"""

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from plotkit import schemas

STYLE = {
    "figure.dpi": 100,
    "savefig.dpi": 100,
    "font.family": "DejaVu Sans",
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "lines.linewidth": 1.2,
    "svg.hashsalt": "plotkit",
}

_COLORS = ["#1f6fb4", "#d95f02", "#2a9d50", "#7b5aa6"]


def _label_for(path) -> str:
    """Panel label from the file's parent directory (the model name)."""
    parent = os.path.basename(os.path.dirname(os.path.abspath(path)))
    return parent or os.path.basename(path)


def _save(fig, out_path):
    fig.savefig(out_path, metadata={"Software": "plotkit"})
    plt.close(fig)
    return out_path


def plot_hist(in_paths, out_path):
    """Mean-per-bin histogram with a +/- std band, one panel per input."""
    tables = [(path, schemas.read_hist_csv(path)) for path in in_paths]
    with plt.rc_context(STYLE):
        fig, axes = plt.subplots(1, len(tables), figsize=(3.2 * len(tables), 2.8),
                                 squeeze=False, sharey=True)
        for (path, table), ax, color in zip(tables, axes[0], _COLORS):
            centers = [(lo + hi) / 2 for lo, hi in zip(table.bin_low, table.bin_high)]
            widths = [hi - lo for lo, hi in zip(table.bin_low, table.bin_high)]
            ax.bar(centers, table.mean, width=widths, color=color, alpha=0.55,
                   edgecolor=color)
            lo_band = [mu - sd for mu, sd in zip(table.mean, table.std)]
            hi_band = [mu + sd for mu, sd in zip(table.mean, table.std)]
            ax.fill_between(centers, lo_band, hi_band, color=color, alpha=0.25,
                            linewidth=0, label="±1 std")
            ax.set_title(_label_for(path))
            ax.set_xlabel("value")
        axes[0][0].set_ylabel("mean count per replication")
        fig.tight_layout()
        return _save(fig, out_path)


def plot_scatter_triangle(in_paths, out_path, cut=None):
    """Split sizes (n, m) inside the feasible triangle with the region cut.

    The triangle has corners (1, 1), (1, N-1) and (N/2, N/2); the dashed
    vertical line marks the cut (default N/4).  The mean is drawn as a
    cross-hair whose horizontal arm is the std magnified 5x.
    """
    sets = [(path, schemas.read_scatter_csv(path)) for path in in_paths]
    total = max(n + m for _, points in sets for n, m in points)
    if cut is None:
        cut = total / 4
    with plt.rc_context(STYLE):
        fig, axes = plt.subplots(1, len(sets), figsize=(3.2 * len(sets), 3.0),
                                 squeeze=False, sharey=True)
        for (path, points), ax, color in zip(sets, axes[0], _COLORS):
            ax.plot([1, 1, total / 2, 1], [1, total - 1, total / 2, 1],
                    color="black", linewidth=1.0)
            ax.axvline(cut, color="black", linestyle="--", linewidth=1.0)
            xs = [n for n, _ in points]
            ys = [m for _, m in points]
            ax.plot(xs, ys, ".", color=color, markersize=3, alpha=0.5)
            mean_n = sum(xs) / len(xs)
            mean_m = sum(ys) / len(ys)
            std_n = (sum((x - mean_n) ** 2 for x in xs) / len(xs)) ** 0.5
            std_m = (sum((y - mean_m) ** 2 for y in ys) / len(ys)) ** 0.5
            ax.errorbar([mean_n], [mean_m], xerr=[5 * std_n], yerr=[std_m],
                        color="red", capsize=3, linewidth=1.4)
            ax.set_title(_label_for(path))
            ax.set_xlabel("n (smaller part)")
        axes[0][0].set_ylabel("m (larger part)")
        fig.tight_layout()
        return _save(fig, out_path)


def plot_dendrogram(in_path, out_path, axis=None):
    """Split hierarchy on the size or time axis, leaves labelled c<id>.

    `axis` (``"size"`` or ``"time"``) is checked against the file's own
    metadata when given; the leaf order is whatever the layout in the file
    says, so both axis renderings of one run line up.
    """
    dendro = schemas.read_dendrogram_json(in_path)
    file_axis = dendro["meta"]["axis"]
    if axis is not None and axis != file_axis:
        raise schemas.SchemaError(
            f"{in_path}: meta key 'axis' is {file_axis!r}, expected {axis!r}")
    nodes = {node["id"]: node for node in dendro["nodes"]}
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6.0, 3.2))
        for node in dendro["nodes"]:
            ax.plot([node["x"], node["x"]], [node["y0"], node["y1"]],
                    color="#1f6fb4")
            if node["children"]:
                xs = [nodes[c]["x"] for c in node["children"]]
                ax.plot([min(xs), max(xs)], [node["y1"], node["y1"]],
                        color="#1f6fb4")
            if node["truncated"]:
                ax.plot([node["x"]], [node["y1"]], "x", color="red", markersize=5)
        order = schemas.leaf_order(dendro)
        ax.set_xticks([nodes[i]["x"] for i in order])
        ax.set_xticklabels([f"c{i}" for i in order], rotation=90, fontsize=6)
        if file_axis == "size":
            ax.set_ylabel("component size")
        else:
            ax.set_ylabel("tick")
            ax.invert_yaxis()
        ax.grid(axis="x", alpha=0.0)
        fig.tight_layout()
        return _save(fig, out_path)
