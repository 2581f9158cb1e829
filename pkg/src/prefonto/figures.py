"""Chart rendering for the report outputs.

matplotlib is imported lazily and pointed at the Agg backend, so nothing
here needs a display and the import cost is only paid when a chart is
actually requested.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .analytics import Matrix, YearHistogram
from .model import local_name


def _plt():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def plot_year_histogram(hist: YearHistogram, path: str) -> None:
    """Bar chart of publications per year; unknown years get their own bar."""
    plt = _plt()
    labels = [str(year) for year, _ in hist.counts]
    values = [n for _, n in hist.counts]
    if hist.unknown:
        labels.append("unknown")
        values.append(hist.unknown)
    fig, ax = plt.subplots(figsize=(max(6, len(labels) * 0.45), 4))
    ax.bar(range(len(values)), values, color="#476d9e")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=90, fontsize=8)
    ax.set_ylabel("methods")
    ax.set_title(f"publications per year: {local_name(hist.cls)}")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_ranking(pairs: Sequence[Tuple[str, int]], path: str,
                 value_label: str) -> None:
    """Horizontal bars for a ranked (iri, score) listing, best at the top."""
    plt = _plt()
    names = [local_name(iri) for iri, _ in pairs]
    values = [score for _, score in pairs]
    fig, ax = plt.subplots(figsize=(7, max(2.5, len(names) * 0.4)))
    ax.barh(range(len(names)), values, color="#8c5b3f")
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel(value_label)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_matrix(matrix: Matrix, path: str) -> None:
    """Heatmap of cell populations with the counts printed in the cells."""
    plt = _plt()
    rows: List[List[int]] = [[len(cell) for cell in row] for row in matrix.cells]
    fig, ax = plt.subplots(
        figsize=(1.6 * len(matrix.column_labels) + 3,
                 0.5 * len(matrix.row_labels) + 2))
    image = ax.imshow(rows, cmap="YlGn", aspect="auto")
    ax.set_xticks(range(len(matrix.column_labels)))
    ax.set_xticklabels(matrix.column_labels, rotation=20, ha="right", fontsize=8)
    ax.set_yticks(range(len(matrix.row_labels)))
    ax.set_yticklabels(matrix.row_labels, fontsize=8)
    for i, row in enumerate(rows):
        for j, count in enumerate(row):
            ax.text(j, i, str(count), ha="center", va="center", fontsize=8)
    fig.colorbar(image, ax=ax, label="methods")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
