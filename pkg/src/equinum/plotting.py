"""Figures for equivalence reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .equivalence import DEFINITIONS, EquivalenceReport  # noqa: E402


def plot_report(report: EquivalenceReport, path) -> None:
    """Write a two-panel figure: correspondence vs bijection counts per size,
    and the agreement grid over all size pairs."""
    n = report.max_size
    sizes = np.arange(n + 1)
    fig, (ax_counts, ax_grid) = plt.subplots(1, 2, figsize=(10, 4.2))

    width = 0.38
    ax_counts.bar(sizes - width / 2, report.phi_counts, width, label="correspondences", color="#1f77b4")
    ax_counts.bar(sizes + width / 2, report.bijection_counts, width, label="bijections", color="#ff7f0e")
    ax_counts.set_yscale("log")
    ax_counts.set_xticks(sizes)
    ax_counts.set_xlabel("concept size n")
    ax_counts.set_ylabel("count")
    ax_counts.set_title("valid combinations per size")
    ax_counts.legend(frameon=False)

    grid = np.zeros((n + 1, n + 1))
    for cell in report.cells:
        if not cell.agrees:
            grid[cell.size_f, cell.size_g] = -1
        elif cell.verdicts["cardinality"]:
            grid[cell.size_f, cell.size_g] = 1
    cmap = matplotlib.colors.ListedColormap(["#d62728", "#f0f0f0", "#2ca02c"])
    ax_grid.imshow(grid, cmap=cmap, vmin=-1, vmax=1, origin="lower")
    ax_grid.set_xticks(sizes)
    ax_grid.set_yticks(sizes)
    ax_grid.set_xlabel("|G|")
    ax_grid.set_ylabel("|F|")
    ax_grid.set_title(f"{len(DEFINITIONS)} definitions, {len(report.discrepancies)} discrepancies")

    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
