"""Figure rendering for simulation reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .simulation import SimRecord


def plot_error_comparison(records: list[SimRecord], path, title: str = "") -> None:
    """Violin plot of log10 parameter errors, coloured vs uncoloured fit.

    Replicates whose fit failed (no MLE) are dropped from the respective
    distribution.
    """
    rdag = [r.rdag_error for r in records if r.rdag_error is not None]
    dag = [r.dag_error for r in records if r.dag_error is not None]

    fig, ax = plt.subplots(figsize=(6, 4))
    data, labels = [], []
    for values, name in ((rdag, "coloured"), (dag, "uncoloured")):
        if values:
            data.append(values)
            labels.append(f"{name} (n={len(values)})")
    if data:
        parts = ax.violinplot(data, showmedians=True)
        for body, colour in zip(parts["bodies"], ("tab:blue", "tab:orange")):
            body.set_facecolor(colour)
        ax.set_xticks(np.arange(1, len(data) + 1))
        ax.set_xticklabels(labels)
    ax.set_ylabel("log10 parameter error")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
