"""File-rendered figures accompanying the text reports.

Kept separate from the computational modules; matplotlib is imported lazily
so library use never touches a plotting backend.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_bound_crossing(report, path: str | Path) -> Path:
    """Horizontal-bar summary of a bound report's crossing points.

    One bar per inequality branch at its largest satisfying Z (log scale),
    with the documented cap, when present, as a reference line.
    """
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 3.5))
    names = [c.name for c in report.crossings]
    values = [max(float(c.z_star), 1.0) for c in report.crossings]
    colors = [
        "tab:red" if c.name == report.branch else "tab:blue" for c in report.crossings
    ]
    ax.barh(names, values, color=colors, alpha=0.75)
    ax.set_xscale("log")
    for value, name in zip(values, names):
        ax.annotate(
            f"{value:.4g}",
            (value, name),
            textcoords="offset points",
            xytext=(4, -3),
            fontsize=8,
        )
    if report.cap is not None:
        ax.axvline(
            float(report.cap),
            color="tab:green",
            ls="--",
            lw=1.2,
            label=f"documented cap {float(report.cap):.3g}",
        )
        ax.legend(fontsize=8, loc="lower right")
    ax.set_xlabel("largest Z satisfying the inequality")
    ax.set_title(f"{report.name} (binding branch: {report.branch})")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_findings(findings: Iterable, path: str | Path) -> Path:
    """Scatter of findings by basic-form bases, colored by classification."""
    plt = _pyplot()
    from .families import parse_set

    groups: dict[str, list[tuple[int, int, int]]] = {}
    for finding in findings:
        basic = parse_set(finding.key)
        label = finding.classification.split("(")[0]
        groups.setdefault(label, []).append(
            (basic.inst.a, basic.inst.b, basic.n_count)
        )
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label, rows in sorted(groups.items()):
        xs = [row[0] for row in rows]
        ys = [row[1] for row in rows]
        sizes = [25 * row[2] for row in rows]
        ax.scatter(xs, ys, s=sizes, alpha=0.6, label=f"{label} ({len(rows)})")
    ax.set_xlabel("basic-form a")
    ax.set_ylabel("basic-form b")
    ax.set_title("Search findings by family basic form")
    if groups:
        ax.legend(fontsize=8)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
