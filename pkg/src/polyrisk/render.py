"""Deterministic SVG rendering of profile polygons on a shared axis system.

Output is plain SVG 1.1 text with fixed 2-decimal coordinates, no ids and
no timestamps: the same spec always yields the same bytes, so images can
be golden-tested byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .contribution import ContributionProfile
from .errors import ProfileMismatchError
from .geometry import impact_area, perimeter, polygon_vertices

# Figure palette: attack blue, countermeasures red/green/grey, unions yellow.
ATTACK_COLOR = "#2a6fbb"
COUNTERMEASURE_COLORS = ("#c0392b", "#2e8b57", "#7f8c8d")
COMBINED_COLOR = "#e0b020"
REFERENCE_COLOR = "#999999"
AXIS_COLOR = "#bbbbbb"
TEXT_COLOR = "#333333"

DEFAULT_CANVAS = 600
# Fractions of the canvas: radius of the 100% reference, label offset.
_RADIUS_FRACTION = 0.36
_LABEL_FRACTION = 0.40


@dataclass(frozen=True)
class RenderEntry:
    """One profile layer: geometry plus stroke/fill styling."""

    profile: ContributionProfile
    stroke: str
    fill: str
    opacity: float = 0.35


@dataclass(frozen=True)
class RenderSpec:
    """Everything needed to draw one overlay image."""

    entries: tuple[RenderEntry, ...]
    size: int = DEFAULT_CANVAS
    axis_labels: bool = True
    show_zero_axes: bool = False

    def __post_init__(self):
        if self.size <= 0:
            raise ValueError(f"canvas size must be > 0, got {self.size}")


def default_color(kind: str, index: int = 0) -> str:
    """House color for an event kind; countermeasures cycle a small palette."""
    if kind == "attack":
        return ATTACK_COLOR
    if kind == "countermeasure":
        return COUNTERMEASURE_COLORS[index % len(COUNTERMEASURE_COLORS)]
    if kind == "combination":
        return COMBINED_COLOR
    return REFERENCE_COLOR


def spec_for(
    profiles: list[ContributionProfile],
    colors: dict[str, str] | None = None,
    kinds: dict[str, str] | None = None,
    size: int = DEFAULT_CANVAS,
    axis_labels: bool = True,
    show_zero_axes: bool = False,
) -> RenderSpec:
    """Build a RenderSpec with house colors, honoring per-event overrides."""
    entries = []
    cm_index = 0
    for p in profiles:
        kind = (kinds or {}).get(p.event, "countermeasure")
        color = (colors or {}).get(p.event)
        if color is None:
            color = default_color(kind, cm_index)
        if kind == "countermeasure":
            cm_index += 1
        entries.append(RenderEntry(profile=p, stroke=color, fill=color))
    return RenderSpec(
        entries=tuple(entries),
        size=size,
        axis_labels=axis_labels,
        show_zero_axes=show_zero_axes,
    )


def _fmt(value: float) -> str:
    # fixed 2-decimal output; normalize negative zero so output is stable
    text = f"{value:.2f}"
    return "0.00" if text == "-0.00" else text


def render_svg(spec: RenderSpec) -> str:
    """Render the overlay to SVG text (identical bytes for identical specs).

    Axes are rays from the center with the all-100 reference polygon as a
    dashed outline; each profile is one closed <path>. Axes on which every
    drawn profile contributes 0 are hidden unless show_zero_axes is set,
    but hidden axes keep their vertex (at the origin) in every path.
    """
    if not spec.entries:
        raise ValueError("render spec has no profiles to draw")
    profiles = [e.profile for e in spec.entries]
    dims = profiles[0].dimensions
    for p in profiles[1:]:
        if p.dimensions != dims:
            raise ProfileMismatchError(
                f"profile '{p.event}' covers dimensions {p.dimensions}, expected {dims}"
            )

    size = spec.size
    center = size / 2.0
    scale = size * _RADIUS_FRACTION / 100.0

    def to_px(point: tuple[float, float]) -> tuple[str, str]:
        x, y = point
        return _fmt(center + x * scale), _fmt(center - y * scale)

    reference = ContributionProfile("reference", dims, (100.0,) * len(dims))
    ref_pts = polygon_vertices(reference)

    lines: list[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="#ffffff"/>',
    ]

    # dashed 100% reference outline
    ref_points = " ".join(",".join(to_px(p)) for p in ref_pts)
    lines.append(
        f'<polygon points="{ref_points}" fill="none" stroke="{REFERENCE_COLOR}" '
        f'stroke-width="1" stroke-dasharray="6 4"/>'
    )

    # axis rays; an axis disappears when every profile is zero on it
    angles = (90.0, 0.0) if len(dims) == 2 else None
    for i, dim in enumerate(dims):
        if not spec.show_zero_axes and all(p.contributions[i] == 0.0 for p in profiles):
            continue
        ex, ey = to_px(ref_pts[i])
        lines.append(
            f'<line x1="{_fmt(center)}" y1="{_fmt(center)}" x2="{ex}" y2="{ey}" '
            f'stroke="{AXIS_COLOR}" stroke-width="1"/>'
        )
        if spec.axis_labels:
            if angles is not None:
                angle = angles[i]
            else:
                angle = (90.0 - i * 360.0 / len(dims)) % 360.0
            rad = math.radians(angle)
            label_r = size * _LABEL_FRACTION
            lx = _fmt(center + label_r * math.cos(rad))
            ly = _fmt(center - label_r * math.sin(rad))
            lines.append(
                f'<text x="{lx}" y="{ly}" font-size="12" fill="{TEXT_COLOR}" '
                f'text-anchor="middle">{escape(dim)}</text>'
            )

    # profile polygons; one- and two-axis figures close through the origin
    for entry in spec.entries:
        pts = [to_px(p) for p in polygon_vertices(entry.profile)]
        if entry.profile.n <= 2:
            pts.insert(0, (_fmt(center), _fmt(center)))
        d = "M " + " L ".join(f"{x} {y}" for x, y in pts) + " Z"
        lines.append(
            f'<path d="{d}" fill="{entry.fill}" fill-opacity="{entry.opacity}" '
            f'stroke="{entry.stroke}" stroke-width="2"/>'
        )

    # legend: swatch plus name with perimeter and impact area
    for idx, entry in enumerate(spec.entries):
        y = 18 + idx * 18
        lines.append(
            f'<rect x="10" y="{y - 10}" width="12" height="12" fill="{entry.stroke}"/>'
        )
        label = (
            f"{entry.profile.event}  P={_fmt(perimeter(entry.profile))}  "
            f"A={_fmt(impact_area(entry.profile))}"
        )
        lines.append(
            f'<text x="28" y="{y}" font-size="12" fill="{TEXT_COLOR}">{escape(label)}</text>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
