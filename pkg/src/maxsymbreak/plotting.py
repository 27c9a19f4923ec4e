"""Figure rendering for benchmark reports.

Renders a two-panel comparison (solve time and node count, with and
without symmetry breaking) next to the delimited benchmark output.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bench import BenchRecord


def plot_bench(records: list[BenchRecord], path: str) -> str:
    """Render the benchmark comparison to an image file; returns the path."""
    records = [r for r in records if r.error is None]
    names = [r.name for r in records]
    x = range(len(records))
    width = 0.38

    fig, (ax_time, ax_nodes) = plt.subplots(1, 2, figsize=(max(7.0, 1.6 * len(records) + 4), 4.0))

    ax_time.bar([i - width / 2 for i in x], [r.orig_time for r in records], width, label="original")
    ax_time.bar([i + width / 2 for i in x], [r.sbp_time for r in records], width, label="with SBPs")
    ax_time.set_ylabel("time (s)")
    ax_time.set_title("solve time")

    ax_nodes.bar(
        [i - width / 2 for i in x], [max(r.orig_nodes, 1) for r in records], width, label="original"
    )
    ax_nodes.bar(
        [i + width / 2 for i in x], [max(r.sbp_nodes, 1) for r in records], width, label="with SBPs"
    )
    ax_nodes.set_yscale("log")
    ax_nodes.set_ylabel("decision nodes")
    ax_nodes.set_title("search nodes")

    for ax in (ax_time, ax_nodes):
        ax.set_xticks(list(x))
        ax.set_xticklabels(names, rotation=30, ha="right", fontsize=8)
        ax.legend(fontsize=8)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
