"""Matplotlib figures written by the report command.

Static raster companions to the report table: the case-by-case overlay
(attack against each countermeasure), the combined-mitigation overlay,
and a coverage bar chart for the evaluated combinations. The precise,
byte-stable vector rendering lives in polyrisk.render; these figures are
for quick visual reading of a report directory.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .combine import EvaluationReport
from .contribution import ContributionProfile
from .geometry import polygon_vertices
from .render import (
    ATTACK_COLOR,
    COMBINED_COLOR,
    COUNTERMEASURE_COLORS,
    REFERENCE_COLOR,
    default_color,
)

FIG_SIZE = (6.0, 6.0)
FIG_DPI = 110


def _closed(points: list[tuple[float, float]]) -> tuple[list[float], list[float]]:
    pts = points + [points[0]]
    return [p[0] for p in pts], [p[1] for p in pts]


def _radar_frame(ax, dimensions: tuple[str, ...]) -> None:
    reference = ContributionProfile("reference", dimensions, (100.0,) * len(dimensions))
    ref_pts = list(polygon_vertices(reference))
    xs, ys = _closed(ref_pts)
    ax.plot(xs, ys, linestyle="--", linewidth=1, color=REFERENCE_COLOR)
    for (x, y), name in zip(ref_pts, dimensions):
        ax.plot([0, x], [0, y], linewidth=0.8, color="#cccccc", zorder=0)
        ax.annotate(name, (x * 1.12, y * 1.12), ha="center", va="center", fontsize=9)
    ax.set_aspect("equal")
    ax.set_xlim(-140, 140)
    ax.set_ylim(-140, 140)
    ax.axis("off")


def _draw_profile(ax, profile: ContributionProfile, color: str, label: str) -> None:
    pts = list(polygon_vertices(profile))
    if profile.n <= 2:
        pts.insert(0, (0.0, 0.0))
    xs, ys = _closed(pts)
    ax.fill(xs, ys, color=color, alpha=0.25)
    ax.plot(xs, ys, color=color, linewidth=2, label=label)


def _overlay_figure(
    path: Path,
    dimensions: tuple[str, ...],
    layers: list[tuple[ContributionProfile, str, str]],
    title: str,
) -> None:
    fig, ax = plt.subplots(figsize=FIG_SIZE, dpi=FIG_DPI)
    _radar_frame(ax, dimensions)
    for profile, color, label in layers:
        _draw_profile(ax, profile, color, label)
    ax.set_title(title)
    ax.legend(loc="lower left", fontsize=8, framealpha=0.9)
    fig.savefig(path, format="png")
    plt.close(fig)


def save_report_figures(report: EvaluationReport, outdir: str | Path) -> list[Path]:
    """Write the report's figures into outdir; returns the files written."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    attacks = [r for r in report.rows if r.kind == "attack"]
    singles = [r for r in report.rows if r.kind == "countermeasure"]
    combos = [r for r in report.rows if r.kind == "combination"]
    others = [r for r in report.rows if r.kind not in ("system", "attack", "countermeasure", "combination")]

    layers = []
    for row in attacks:
        layers.append((row.profile, ATTACK_COLOR, row.name))
    for i, row in enumerate(singles):
        layers.append((row.profile, default_color("countermeasure", i), row.name))
    for i, row in enumerate(others):
        color = COUNTERMEASURE_COLORS[(len(singles) + i) % len(COUNTERMEASURE_COLORS)]
        layers.append((row.profile, color, row.name))
    if layers:
        path = outdir / "case_by_case.png"
        _overlay_figure(path, report.dimensions, layers, "Case by case impact")
        written.append(path)

    if attacks and combos:
        widest = max(combos, key=lambda r: len(r.name))
        path = outdir / "combined_mitigation.png"
        _overlay_figure(
            path,
            report.dimensions,
            [
                (attacks[0].profile, ATTACK_COLOR, attacks[0].name),
                (widest.profile, COMBINED_COLOR, widest.name),
            ],
            "Combined mitigation",
        )
        written.append(path)

    covered = [r for r in report.rows if r.coverage is not None]
    if covered:
        covered = sorted(covered, key=lambda r: r.coverage)
        fig, ax = plt.subplots(figsize=(7.0, 0.5 * len(covered) + 1.5), dpi=FIG_DPI)
        ax.barh(
            [r.name for r in covered],
            [r.coverage for r in covered],
            color=[COMBINED_COLOR if r.kind == "combination" else ATTACK_COLOR for r in covered],
        )
        ax.set_xlabel("coverage of attack area (%)")
        ax.set_xlim(0, 100)
        for i, r in enumerate(covered):
            ax.text(r.coverage + 1, i, f"{r.coverage:.1f}", va="center", fontsize=8)
        fig.tight_layout()
        path = outdir / "coverage.png"
        fig.savefig(path, format="png")
        plt.close(fig)
        written.append(path)

    return written
