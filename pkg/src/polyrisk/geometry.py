"""Polygon construction and metrics over contribution profiles.

Profiles are plotted on n axes radiating from a common origin, equally
spaced by 360/n degrees, first axis pointing straight up, proceeding
clockwise. Each contribution is a distance along its axis; connecting
adjacent endpoints closes the polygon.

Two area figures are computed side by side:

* impact_area: half the wrapped sum of adjacent contribution products,
  sum(c_i * c_{i+1}) / 2. This is the model's impact magnitude, the
  number every comparison uses. It equals the true enclosed area only
  when the axes are orthogonal (n = 4).
* geometric_area: the shoelace area of the actual vertices, i.e. the
  true enclosed area. Always <= impact_area, with equality exactly at
  n = 4; kept as a diagnostic so the divergence is visible.

One axis degenerates to a line segment; two axes are drawn orthogonal
(not 180 degrees apart) so the figure closes into a right triangle whose
legs are the two contributions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .contribution import ContributionProfile

# Relative tolerance for the contribution equalities behind shape labels.
# Shapes are labels, not metrics; strict closeness suffices.
SHAPE_REL_TOL = 1e-9


class ShapeClass(Enum):
    LINE_SEGMENT = "line-segment"
    RIGHT_ISOSCELES_TRIANGLE = "right-isosceles-triangle"
    RIGHT_SCALENE_TRIANGLE = "right-scalene-triangle"
    EQUILATERAL_TRIANGLE = "equilateral-triangle"
    ISOSCELES_TRIANGLE = "isosceles-triangle"
    SCALENE_TRIANGLE = "scalene-triangle"
    SQUARE = "square"
    KITE = "kite"
    RHOMBOID = "rhomboid"
    GENERAL_QUADRILATERAL = "general-quadrilateral"
    REGULAR_NGON = "regular-n-gon"
    IRREGULAR_NGON = "irregular-n-gon"


@dataclass(frozen=True)
class PolygonInstance:
    """A profile realized as a polygon, with all derived metrics attached."""

    profile: ContributionProfile
    n: int
    vertices: tuple[tuple[float, float], ...]
    perimeter: float
    impact_area: float
    geometric_area: float
    shape_class: ShapeClass


def axis_angles(n: int) -> tuple[float, ...]:
    """Axis directions in degrees: 90, then clockwise steps of 360/n.

    Angles are normalized to (-180, 180]. For n=4 this yields the four
    compass quarter turns 90, 0, -90, 180.
    """
    if n < 1:
        raise ValueError(f"axis count must be >= 1, got {n}")
    step = 360.0 / n
    angles = []
    for i in range(n):
        a = (90.0 - i * step) % 360.0
        if a > 180.0:
            a -= 360.0
        angles.append(180.0 if a == -180.0 else a)
    return tuple(angles)


def polygon_vertices(profile: ContributionProfile) -> tuple[tuple[float, float], ...]:
    """Axis endpoints (c * cos a, c * sin a) for each dimension, in order.

    Two-dimension profiles use orthogonal axes (90 and 0 degrees) so the
    figure closes into the right triangle; all other counts use the
    uniform 360/n spacing from axis_angles.
    """
    n = profile.n
    angles = (90.0, 0.0) if n == 2 else axis_angles(n)
    return tuple(
        (c * math.cos(math.radians(a)), c * math.sin(math.radians(a)))
        for c, a in zip(profile.contributions, angles)
    )


def edge_length(a: float, b: float, n: int) -> float:
    """Length of the polygon side joining two adjacent axis endpoints.

    Law of cosines with the 360/n axis separation:
    sqrt(a^2 + b^2 - 2ab cos(360/n)).
    """
    if n < 2:
        raise ValueError(f"edge length needs at least 2 axes, got n={n}")
    if a < 0 or b < 0:
        raise ValueError(f"contributions must be >= 0, got ({a}, {b})")
    sep = 2.0 * math.pi / n
    # clamp float dust when a ~= b and the separation is small
    return math.sqrt(max(0.0, a * a + b * b - 2.0 * a * b * math.cos(sep)))


def perimeter(profile: ContributionProfile) -> float:
    """Perimeter of a profile's polygon.

    n=1: the segment length (the single contribution). n=2: both legs
    plus the hypotenuse between the two orthogonal axes. n>=3: sum of
    edge lengths over adjacent pairs, wrapping last to first.
    """
    c = profile.contributions
    n = profile.n
    if n == 1:
        return c[0]
    if n == 2:
        return c[0] + c[1] + edge_length(c[0], c[1], 4)
    return sum(edge_length(c[i], c[(i + 1) % n], n) for i in range(n))


def irregular_perimeter(edges: list[float] | tuple[float, ...]) -> float:
    """Perimeter from explicitly known edge lengths: their plain sum."""
    edges = tuple(edges)
    if any(e < 0 for e in edges):
        raise ValueError(f"edge lengths must be >= 0, got {edges}")
    return sum(edges)


def regular_perimeter(n: int, r: float) -> float:
    """Perimeter of a regular n-gon of circumradius r: 2 n r sin(180/n)."""
    if n < 3:
        raise ValueError(f"regular polygon needs n >= 3, got {n}")
    if r <= 0:
        raise ValueError(f"radius must be > 0, got {r}")
    return 2.0 * n * r * math.sin(math.pi / n)


def equilateral_perimeter(n: int, edge: float) -> float:
    """Perimeter of an equilateral n-gon with known edge length: n * edge."""
    if n < 3:
        raise ValueError(f"equilateral polygon needs n >= 3, got {n}")
    if edge < 0:
        raise ValueError(f"edge length must be >= 0, got {edge}")
    return n * edge


def apothem(n: int, r: float) -> float:
    """Center-to-edge-midpoint distance of a regular n-gon: r cos(180/n)."""
    if n < 3:
        raise ValueError(f"regular polygon needs n >= 3, got {n}")
    if r <= 0:
        raise ValueError(f"radius must be > 0, got {r}")
    return r * math.cos(math.pi / n)


def regular_area(perimeter: float, apothem: float) -> float:
    """Area of a regular polygon: perimeter times apothem over two."""
    if perimeter < 0 or apothem < 0:
        raise ValueError("perimeter and apothem must be >= 0")
    return perimeter * apothem / 2.0


def impact_area(profile: ContributionProfile) -> float:
    """Impact area: half the wrapped sum of adjacent contribution products.

    For a single axis the figure is a segment and the area is 0. For two
    axes the single adjacent pair is counted once (the right triangle's
    area c0*c1/2), not twice as a blind wraparound would.
    """
    c = profile.contributions
    n = profile.n
    if n == 1:
        return 0.0
    if n == 2:
        return c[0] * c[1] / 2.0
    return sum(c[i] * c[(i + 1) % n] for i in range(n)) / 2.0


def geometric_area(profile: ContributionProfile) -> float:
    """True enclosed (shoelace) area of the constructed vertices.

    Defined for n >= 3. Equals impact_area times sin(360/n), so the two
    agree exactly at n = 4 and geometric_area is smaller otherwise.
    """
    if profile.n < 3:
        raise ValueError(f"geometric area needs n >= 3 axes, got {profile.n}")
    pts = polygon_vertices(profile)
    n = len(pts)
    acc = 0.0
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        acc += x0 * y1 - x1 * y0
    return abs(acc) / 2.0


def _close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=SHAPE_REL_TOL, abs_tol=1e-12)


def classify_instance(profile: ContributionProfile) -> ShapeClass:
    """Shape label implied by the contribution equalities.

    n=2 compares the two legs; n=3 counts equal sides; n=4 distinguishes
    square (all equal), kite (one diagonal pair equal), rhomboid (both
    diagonal pairs equal, adjacent unequal); n>=5 is regular or irregular.
    """
    c = profile.contributions
    n = profile.n
    if n == 1:
        return ShapeClass.LINE_SEGMENT
    if n == 2:
        return (
            ShapeClass.RIGHT_ISOSCELES_TRIANGLE
            if _close(c[0], c[1])
            else ShapeClass.RIGHT_SCALENE_TRIANGLE
        )
    all_equal = all(_close(c[0], ci) for ci in c[1:])
    if n == 3:
        if all_equal:
            return ShapeClass.EQUILATERAL_TRIANGLE
        if _close(c[0], c[1]) or _close(c[1], c[2]) or _close(c[0], c[2]):
            return ShapeClass.ISOSCELES_TRIANGLE
        return ShapeClass.SCALENE_TRIANGLE
    if n == 4:
        if all_equal:
            return ShapeClass.SQUARE
        diag02 = _close(c[0], c[2])
        diag13 = _close(c[1], c[3])
        if diag02 and diag13:
            return ShapeClass.RHOMBOID
        if diag02 or diag13:
            return ShapeClass.KITE
        return ShapeClass.GENERAL_QUADRILATERAL
    return ShapeClass.REGULAR_NGON if all_equal else ShapeClass.IRREGULAR_NGON


def polygon_instance(profile: ContributionProfile) -> PolygonInstance:
    """Realize a profile as a polygon with every metric computed.

    geometric_area is extended below three axes with the true enclosed
    area of the drawn figure: 0 for a segment, the right triangle's area
    for two axes (where it coincides with impact_area).
    """
    n = profile.n
    if n >= 3:
        true_area = geometric_area(profile)
    elif n == 2:
        true_area = profile.contributions[0] * profile.contributions[1] / 2.0
    else:
        true_area = 0.0
    return PolygonInstance(
        profile=profile,
        n=n,
        vertices=polygon_vertices(profile),
        perimeter=perimeter(profile),
        impact_area=impact_area(profile),
        geometric_area=true_area,
        shape_class=classify_instance(profile),
    )
