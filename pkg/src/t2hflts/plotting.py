"""Matplotlib figures written straight to files (no display needed)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .it2 import SampledFOU  # noqa: E402


def _fou(ax, fou: SampledFOU, label: str | None = None, color=None):
    line, = ax.plot(fou.grid, fou.upper, lw=1.2, color=color, label=label)
    ax.fill_between(fou.grid, fou.lower, fou.upper, alpha=0.25, color=line.get_color(), lw=0)
    ax.plot(fou.grid, fou.lower, lw=0.8, ls="--", color=line.get_color())


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_sets(named: list[tuple[str, SampledFOU]], path, title: str = "") -> Path:
    """Overlay several footprints on one axis."""
    fig, ax = plt.subplots(figsize=(6, 3.5))
    for name, fou in named:
        _fou(ax, fou, name)
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1.05)
    ax.set_xlabel("x")
    ax.set_ylabel("membership")
    if title:
        ax.set_title(title)
    if len(named) > 1:
        ax.legend(fontsize=7, ncol=min(len(named), 5))
    return _save(fig, path)


def plot_term_set(lts, path, n: int = 1001) -> Path:
    return plot_sets([(t.label, t.semantics.sample(n)) for t in lts.terms], path, "term set")


def plot_aggregates(result, path) -> Path:
    """One panel per DMR with the aggregated footprint of every alternative."""
    if result.aggregates is None:
        raise ValueError("result carries no aggregated sets")
    p = len(result.dmrs)
    fig, axes = plt.subplots(p, 1, figsize=(6, 2.4 * p), sharex=True, squeeze=False)
    for ax, dmr, row in zip(axes[:, 0], result.dmrs, result.aggregates):
        for alt, fou in zip(result.alternatives, row):
            _fou(ax, fou, alt)
        ax.set_ylim(0, 1.05)
        ax.set_title(dmr, fontsize=9)
    axes[0, 0].legend(fontsize=7, ncol=len(result.alternatives))
    axes[-1, 0].set_xlabel("x")
    return _save(fig, path)


def plot_scores(result, path) -> Path:
    names = [s["alternative"] for s in result.scores]
    vals = [s["score"] for s in result.scores]
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.bar(names, vals, color="tab:blue")
    ax.set_ylabel("score")
    return _save(fig, path)


def plot_sweep(rows: list[dict], path, title: str = "") -> Path:
    ks = [r["k"] for r in rows]
    fig, ax = plt.subplots(figsize=(5, 3.2))
    for key, label in (("e_f", "fuzzy"), ("e_h", "hesitant"), ("e_c", "comprehensive"), ("beta", "beta")):
        ax.plot(ks, [r[key] for r in rows], marker="o", ms=3, label=label)
    ax.set_xlabel("k")
    ax.set_ylabel("entropy")
    if title:
        ax.set_title(title)
    ax.legend(fontsize=7)
    return _save(fig, path)
