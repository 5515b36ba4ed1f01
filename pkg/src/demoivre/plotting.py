"""Figure rendering for CLI reports: zero constellations in the complex plane."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def plot_zero_set(
    zeros: list[complex],
    path: str,
    title: str = "",
    reconstructed: list[complex] | None = None,
) -> str:
    """Scatter the zeros (and optional reconstructed overlay) to an image file."""
    fig, ax = plt.subplots(figsize=(6.4, 6.4))
    xs = [z.real for z in zeros]
    ys = [z.imag for z in zeros]
    ax.scatter(xs, ys, s=60, facecolors="none", edgecolors="tab:blue", label="zeros")
    for k, z in enumerate(zeros):
        ax.annotate(str(k), (z.real, z.imag), textcoords="offset points", xytext=(6, 4), fontsize=8)
    if reconstructed is not None:
        ax.scatter(
            [z.real for z in reconstructed],
            [z.imag for z in reconstructed],
            s=24,
            marker="x",
            color="tab:red",
            label="reconstructed",
        )
        ax.legend(loc="best")
    ax.axhline(0.0, color="gray", lw=0.6)
    ax.axvline(0.0, color="gray", lw=0.6)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_aspect("equal", adjustable="datalim")
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
