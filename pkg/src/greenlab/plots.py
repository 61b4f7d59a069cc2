"""Matplotlib figure rendering for the CLI report paths (files only, Agg)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

# constant metadata keeps PNG bytes reproducible across runs
_META = {"Software": "greenlab"}


def save_sweep_figure(report, path) -> None:
    """Bifurcation diagram: F of every branch against beta, events marked."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for br in report.branches:
        betas = br.betas
        values = [pt.F for pt in br.points]
        ax.plot(betas, values, lw=1.2, label=f"branch {br.branch_id}")
    for ev in report.bifurcations:
        ax.axvline(ev.beta, color="k", ls=":", lw=0.8)
        ax.annotate(ev.kind, (ev.beta, ax.get_ylim()[1]), fontsize=7,
                    rotation=90, va="top", ha="right")
    for cat in report.catastrophes:
        ax.axvline(cat.beta, color="r", ls="--", lw=0.8)
    if report.endpoint_candidates:
        ax.plot([c.beta for c in report.endpoint_candidates],
                [c.F for c in report.endpoint_candidates],
                "k.", ms=4, label="beta=1 candidates")
    ax.set_xlabel(r"$\beta$")
    ax.set_ylabel("free energy at critical points")
    if len(report.branches) <= 12:
        ax.legend(fontsize=7, loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata=_META)
    plt.close(fig)


def save_matrix_figure(M, path, title: str | None = None) -> None:
    """Heatmap of an integer matrix (Green function / Laplacian)."""
    A = np.asarray([[float(x) for x in row] for row in np.asarray(M)])
    fig, ax = plt.subplots(figsize=(4.8, 4.2))
    im = ax.imshow(A, cmap="RdBu_r", interpolation="nearest")
    fig.colorbar(im, ax=ax, shrink=0.85)
    if title:
        ax.set_title(title, fontsize=9)
    ax.set_xticks([])
    ax.set_yticks([])
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata=_META)
    plt.close(fig)


def save_spectra_figure(spectra, path) -> None:
    """Per-block Hodge spectra as stacked stem rows."""
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    for k, eigs in enumerate(spectra):
        eigs = np.asarray(eigs)
        ax.plot(eigs, np.full(len(eigs), k), "|", ms=14, label=f"L_{k}")
    ax.set_yticks(range(len(spectra)))
    ax.set_yticklabels([f"L_{k}" for k in range(len(spectra))])
    ax.set_xlabel("eigenvalue")
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata=_META)
    plt.close(fig)
