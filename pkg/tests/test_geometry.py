import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyrisk import (
    ContributionProfile,
    ShapeClass,
    axis_angles,
    classify_instance,
    edge_length,
    equilateral_perimeter,
    geometric_area,
    irregular_perimeter,
    impact_area,
    perimeter,
    polygon_instance,
    polygon_vertices,
    regular_area,
    regular_perimeter,
)
from polyrisk.geometry import apothem


def prof(*values, name="p"):
    return ContributionProfile(name, tuple(f"d{i}" for i in range(len(values))), values)


# Frozen from the brute-force evaluator on the case study inputs.
A1 = prof(100.0, 55.445544554455445, 21.92982456140351, 52.63157894736842, name="A1")
A1_PERIMETER = 343.9897152177462
A1_AREA = 6588.912353839261
C1 = prof(100.0, 0.0, 60.526315789473685, 31.578947368421055, name="C1")
C1_PERIMETER = 333.66305587496913


class TestAxisAngles:
    def test_four_axes_are_quarter_turns(self):
        assert axis_angles(4) == (90.0, 0.0, -90.0, 180.0)

    def test_single_axis_points_up(self):
        assert axis_angles(1) == (90.0,)

    def test_five_axes_spacing(self):
        angles = axis_angles(5)
        assert angles[0] == 90.0
        for a, b in zip(angles, angles[1:]):
            step = (a - b) % 360.0
            assert step == pytest.approx(72.0)

    def test_zero_axes_rejected(self):
        with pytest.raises(ValueError):
            axis_angles(0)


class TestEdgeLength:
    def test_case_study_first_edge(self):
        # hypotenuse between the 100% user axis and the 55.45% channel axis
        assert edge_length(100.0, 100 * 112 / 202, 4) == pytest.approx(114.34, abs=0.01)

    def test_square_diagonal(self):
        assert edge_length(100.0, 100.0, 4) == pytest.approx(100 * math.sqrt(2), rel=1e-12)

    def test_degenerate_edge_to_origin(self):
        for x in (0.0, 17.5, 100.0):
            assert edge_length(x, 0.0, 4) == pytest.approx(x, rel=1e-12)
            assert edge_length(x, 0.0, 7) == pytest.approx(x, rel=1e-12)

    def test_triangle_inequality(self):
        rng = random.Random(5)
        for _ in range(500):
            a, b = rng.uniform(0, 100), rng.uniform(0, 100)
            n = rng.randint(2, 12)
            length = edge_length(a, b, n)
            assert abs(a - b) - 1e-9 <= length <= a + b + 1e-9

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            edge_length(1.0, 1.0, 1)
        with pytest.raises(ValueError):
            edge_length(-1.0, 1.0, 4)


class TestPerimeter:
    def test_a1(self):
        assert perimeter(A1) == pytest.approx(A1_PERIMETER, rel=1e-12)
        assert perimeter(A1) == pytest.approx(343.99, abs=0.01)

    def test_c1_with_zero_vertex(self):
        assert perimeter(C1) == pytest.approx(C1_PERIMETER, rel=1e-12)
        assert perimeter(C1) == pytest.approx(333.66, abs=0.01)

    def test_single_dimension_is_a_segment(self):
        assert perimeter(prof(50.0)) == 50.0

    def test_two_dimensions_close_a_right_triangle(self):
        p = perimeter(prof(30.0, 40.0))
        assert p == pytest.approx(30 + 40 + 50, rel=1e-12)

    def test_rotation_invariance(self):
        rng = random.Random(13)
        for _ in range(200):
            values = [rng.uniform(0, 100) for _ in range(rng.randint(3, 9))]
            rolled = values[1:] + values[:1]
            assert perimeter(prof(*rolled)) == pytest.approx(perimeter(prof(*values)), rel=1e-9)

    def test_reversal_invariance(self):
        rng = random.Random(14)
        for _ in range(200):
            values = [rng.uniform(0, 100) for _ in range(rng.randint(3, 9))]
            assert perimeter(prof(*reversed(values))) == pytest.approx(
                perimeter(prof(*values)), rel=1e-9
            )


class TestRegularShapes:
    def test_pentagon_radius_10(self):
        assert regular_perimeter(5, 10) == pytest.approx(58.78, abs=0.01)

    def test_square_radius_100_matches_system_row(self):
        assert regular_perimeter(4, 100) == pytest.approx(565.6854249492379, rel=1e-12)

    def test_unit_triangle(self):
        assert regular_perimeter(3, 1) == pytest.approx(3 * math.sqrt(3), rel=1e-12)

    def test_needs_three_sides(self):
        with pytest.raises(ValueError):
            regular_perimeter(2, 10)

    def test_equilateral_hexagon(self):
        assert equilateral_perimeter(6, 10) == 60

    def test_equilateral_zero_edge(self):
        assert equilateral_perimeter(5, 0) == 0

    def test_irregular_pentagon_edge_sum(self):
        assert irregular_perimeter((10, 25, 10, 45, 20)) == 110

    def test_pentagon_area_via_apothem(self):
        p = regular_perimeter(5, 10)
        a = apothem(5, 10)
        assert a == pytest.approx(8.090169943749475, rel=1e-12)
        assert regular_area(p, a) == pytest.approx(237.7641290737884, rel=1e-12)

    def test_square_area_cross_check(self):
        # R=100 square: perimeter * apothem / 2 recovers the all-100 area
        assert regular_area(regular_perimeter(4, 100), apothem(4, 100)) == pytest.approx(
            20000.0, rel=1e-9
        )

    def test_zero_apothem(self):
        assert regular_area(123.0, 0.0) == 0.0


class TestPaperArea:
    def test_quadrilateral_product_expansion(self):
        # (60*60 + 60*80 + 80*40 + 40*60) / 2
        assert impact_area(prof(60.0, 60.0, 80.0, 40.0)) == 7000.0

    def test_a1(self):
        assert impact_area(A1) == pytest.approx(A1_AREA, rel=1e-12)
        assert impact_area(A1) == pytest.approx(6588.91, abs=0.01)

    def test_all_100_square(self):
        assert impact_area(prof(100.0, 100.0, 100.0, 100.0)) == 20000.0

    def test_line_segment_has_no_area(self):
        assert impact_area(prof(42.0)) == 0.0

    def test_two_axes_single_pair(self):
        # the right triangle's area, the adjacent pair counted once
        assert impact_area(prof(30.0, 40.0)) == 600.0


class TestGeometricArea:
    def test_equals_impact_area_at_four_axes(self):
        rng = random.Random(21)
        for _ in range(300):
            p = prof(*(rng.uniform(0, 100) for _ in range(4)))
            assert geometric_area(p) == pytest.approx(impact_area(p), rel=1e-9, abs=1e-9)

    def test_equilateral_triangle_closed_form(self):
        # (3/2) * 100^2 * sin(120)
        assert geometric_area(prof(100.0, 100.0, 100.0)) == pytest.approx(
            12990.38105676658, rel=1e-12
        )

    def test_adjacent_zeros_collapse(self):
        assert geometric_area(prof(0.0, 0.0, 55.0)) == pytest.approx(0.0, abs=1e-9)

    def test_needs_three_axes(self):
        with pytest.raises(ValueError):
            geometric_area(prof(10.0, 20.0))

    def test_never_exceeds_impact_area(self):
        rng = random.Random(22)
        for _ in range(500):
            n = rng.randint(3, 10)
            p = prof(*(rng.uniform(0, 100) for _ in range(n)))
            geom, paper = geometric_area(p), impact_area(p)
            assert geom <= paper + 1e-9
            if n != 4 and paper > 0:
                assert geom < paper


@settings(max_examples=300)
@given(
    st.lists(st.floats(0.0, 10.0, allow_nan=False), min_size=1, max_size=9),
    st.floats(0.1, 10.0, allow_nan=False),
)
def test_scaling_laws(values, k):
    base = prof(*values)
    scaled = prof(*(v * k for v in values))
    assert perimeter(scaled) == pytest.approx(k * perimeter(base), rel=1e-9, abs=1e-9)
    assert impact_area(scaled) == pytest.approx(k * k * impact_area(base), rel=1e-9, abs=1e-9)
    if len(values) >= 3:
        assert geometric_area(scaled) == pytest.approx(
            k * k * geometric_area(base), rel=1e-9, abs=1e-9
        )


class TestVertices:
    def test_four_axes_on_the_compass(self):
        pts = polygon_vertices(prof(100.0, 50.0, 25.0, 10.0))
        assert pts[0] == pytest.approx((0.0, 100.0), abs=1e-9)
        assert pts[1] == pytest.approx((50.0, 0.0), abs=1e-9)
        assert pts[2] == pytest.approx((0.0, -25.0), abs=1e-9)
        assert pts[3] == pytest.approx((-10.0, 0.0), abs=1e-9)

    def test_two_axes_are_orthogonal(self):
        pts = polygon_vertices(prof(70.0, 30.0))
        assert pts[0] == pytest.approx((0.0, 70.0), abs=1e-9)
        assert pts[1] == pytest.approx((30.0, 0.0), abs=1e-9)

    def test_zero_contribution_sits_at_origin(self):
        pts = polygon_vertices(C1)
        assert pts[1] == pytest.approx((0.0, 0.0), abs=1e-12)


class TestClassification:
    @pytest.mark.parametrize("values,expected", [
        ((50.0,), ShapeClass.LINE_SEGMENT),
        ((70.0, 70.0), ShapeClass.RIGHT_ISOSCELES_TRIANGLE),
        ((40.0, 70.0), ShapeClass.RIGHT_SCALENE_TRIANGLE),
        ((70.0, 70.0, 70.0), ShapeClass.EQUILATERAL_TRIANGLE),
        ((40.0, 70.0, 40.0), ShapeClass.ISOSCELES_TRIANGLE),
        ((40.0, 70.0, 60.0), ShapeClass.SCALENE_TRIANGLE),
        ((40.0, 40.0, 40.0, 40.0), ShapeClass.SQUARE),
        ((40.0, 10.0, 40.0, 70.0), ShapeClass.KITE),
        ((10.0, 40.0, 70.0, 40.0), ShapeClass.KITE),
        ((40.0, 90.0, 40.0, 90.0), ShapeClass.RHOMBOID),
        ((40.0, 90.0, 30.0, 20.0), ShapeClass.GENERAL_QUADRILATERAL),
        ((60.0, 60.0, 60.0, 60.0, 60.0), ShapeClass.REGULAR_NGON),
        ((60.0, 60.0, 60.0, 60.0, 61.0), ShapeClass.IRREGULAR_NGON),
    ])
    def test_taxonomy(self, values, expected):
        assert classify_instance(prof(*values)) is expected

    def test_tolerance_is_tight(self):
        assert classify_instance(prof(70.0, 70.0 * (1 + 1e-12))) is (
            ShapeClass.RIGHT_ISOSCELES_TRIANGLE
        )
        assert classify_instance(prof(70.0, 70.0 * (1 + 1e-6))) is (
            ShapeClass.RIGHT_SCALENE_TRIANGLE
        )


class TestPolygonInstance:
    def test_all_metrics_attached(self):
        inst = polygon_instance(A1)
        assert inst.n == 4
        assert inst.perimeter == perimeter(A1)
        assert inst.impact_area == impact_area(A1)
        assert inst.geometric_area == pytest.approx(impact_area(A1), rel=1e-12)
        assert inst.shape_class is ShapeClass.GENERAL_QUADRILATERAL
        assert inst.vertices == polygon_vertices(A1)

    def test_segment_instance(self):
        inst = polygon_instance(prof(50.0))
        assert inst.perimeter == 50.0
        assert inst.impact_area == 0.0
        assert inst.geometric_area == 0.0

    def test_right_triangle_instance(self):
        inst = polygon_instance(prof(30.0, 40.0))
        assert inst.geometric_area == 600.0
        assert inst.impact_area == 600.0
