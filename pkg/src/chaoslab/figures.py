"""Figure rendering for reports.

Purely presentational: every verdict is decided on exact rationals before a
figure is drawn, and rendering converts to float only at the last moment.
Each report maps to one PNG named after its command.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .reports import Report, _decimal


def _n_of(instance: str) -> int | None:
    if instance.startswith("n="):
        try:
            return int(instance[2:])
        except ValueError:
            return None
    return None


def render_report_figure(report: Report, out_dir: str | Path) -> Path:
    """Render the report to ``<out_dir>/<command>.png`` and return the path."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{report.command}.png"
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    if report.command in ("converge", "residual", "freeness"):
        _render_gap_curve(report, ax)
    elif report.command == "crossval":
        _render_crossval(report, ax)
    else:
        _render_bars(report, ax)
    ax.set_title(f"{report.command}: {report.verdict}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _render_gap_curve(report: Report, ax) -> None:
    xs, ys = [], []
    for row in report.rows:
        n = _n_of(row.instance)
        gap = _decimal(row.gap)
        if row.error is None and n is not None and gap is not None:
            xs.append(n)
            ys.append(gap)
    ax.plot(xs, ys, marker="o", color="tab:blue")
    ax.axhline(0.0, color="gray", linewidth=0.8)
    ax.set_xlabel("n")
    ax.set_ylabel("|gap|")
    ax.grid(True, alpha=0.3)


def _render_crossval(report: Report, ax) -> None:
    counts = [int(row.values.get("nc2", 0)) for row in report.rows]
    ax.plot(range(len(counts)), counts, ".", markersize=3, color="tab:blue")
    ax.set_xlabel("composition index")
    ax.set_ylabel("noncrossing pairing count")
    if counts and max(counts) > 10:
        ax.set_yscale("symlog")
    ax.grid(True, alpha=0.3)


def _render_bars(report: Report, ax) -> None:
    labels, heights = [], []
    for row in report.rows:
        value = next((v for v in row.values.values() if _decimal(v) is not None), None)
        labels.append(row.instance)
        heights.append(_decimal(value) if value is not None else 0.0)
    if not labels:
        labels, heights = ["(empty)"], [0.0]
    ax.bar(range(len(labels)), heights, color="tab:blue")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=7)
    ax.set_ylabel("value")
    ax.grid(True, axis="y", alpha=0.3)
