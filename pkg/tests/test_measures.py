"""Unit tests for angle measures on the unit circle."""
import math
import pytest
from pathlib import Path
import sys

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

CATALOG = Path(__file__).parent.parent / "catalog"
SQRT3_2 = math.sqrt(3.0) / 2.0


def _plane(name):
    from src.norm_core import load_plane
    return load_plane(CATALOG / f"{name}.json")


class TestBuildMeasure:
    """Tests for measure construction and normalization."""

    def test_euclidean_densities_are_uniform(self):
        """Test that every normalized kind has density 1 in the Euclidean plane."""
        from src.measures import build_measure

        plane = _plane("euclidean")
        for kind in ("arc_length", "sector_area", "antinorm_arc", "dekster_normalized"):
            measure = build_measure(plane, kind, n_quad=256)
            assert measure.total == pytest.approx(2 * math.pi)
            for theta in (0.0, 0.7, 2.9, 5.1):
                assert measure.density(theta) == pytest.approx(1.0), kind

    def test_normalized_total(self):
        """Test that normalized kinds have total mass 2 pi on polygons."""
        from src.measures import build_measure, measure_arc

        measure = build_measure(_plane("irregular_hexagon"), "arc_length")
        assert measure.total == 2 * math.pi
        assert measure_arc(measure, 0.0, 2 * math.pi) == pytest.approx(2 * math.pi, abs=1e-9)

    def test_unknown_kind(self):
        """Test that unknown kinds raise ValueError."""
        from src.measures import build_measure

        with pytest.raises(ValueError):
            build_measure(_plane("euclidean"), "holmes_thompson")

    def test_quadrature_minimum(self):
        """Test that too few subdivisions raise QuadratureError."""
        from src.errors import QuadratureError
        from src.measures import build_measure

        with pytest.raises(QuadratureError):
            build_measure(_plane("lp4"), "arc_length", n_quad=16)
        with pytest.raises(QuadratureError):
            build_measure(_plane("lp4"), "dekster_raw", n_quad=128)

    def test_density_table(self):
        """Test equally spaced density samples."""
        from src.measures import build_measure, density_table

        rows = density_table(build_measure(_plane("lp4"), "sector_area"), 8)
        assert len(rows) == 8
        assert rows[2][0] == pytest.approx(math.pi / 2)
        assert all(value > 0 for _, value in rows)
        with pytest.raises(ValueError):
            density_table(build_measure(_plane("lp4"), "sector_area"), 0)


class TestDeksterTau:
    """Tests for the total Dekster measure."""

    def test_euclidean(self):
        """Test tau = 2 pi in the Euclidean plane."""
        from src.measures import dekster_tau

        assert dekster_tau(_plane("euclidean")) == pytest.approx(2 * math.pi, abs=1e-9)

    def test_square(self):
        """Test tau = 8 ln 2 for the square, given as lp-infinity and as a polygon."""
        from src.measures import dekster_tau

        for name in ("lpinf", "square"):
            assert dekster_tau(_plane(name)) == pytest.approx(8 * math.log(2), abs=1e-8), name

    def test_hexagon_below_two_pi(self):
        """Test that the regular hexagon has tau < 2 pi."""
        from src.measures import dekster_tau

        assert dekster_tau(_plane("hexagon")) < 2 * math.pi

    def test_ling_bounds(self):
        """Test sqrt(2 pi) <= tau <= 8 on every catalog plane."""
        from src.measures import dekster_tau
        from src.norm_core import load_plane

        for path in sorted(CATALOG.glob("*.json")):
            tau = dekster_tau(load_plane(path))
            assert math.sqrt(2 * math.pi) <= tau <= 8 + 1e-6, path.stem


class TestMeasureAngles:
    """Tests for measure arcs, ang_mu and triangle angle sums."""

    def test_measure_arc(self):
        """Test Euclidean and hexagon arcs."""
        from src.measures import build_measure, measure_arc

        euclidean = build_measure(_plane("euclidean"), "arc_length")
        assert measure_arc(euclidean, 0.0, math.pi / 3) == pytest.approx(math.pi / 3)

        hexagon = build_measure(_plane("hexagon"), "arc_length")
        assert measure_arc(hexagon, 0.0, math.pi / 3) == pytest.approx(math.pi / 3, abs=1e-9)
        assert measure_arc(hexagon, 5 * math.pi / 3, 2 * math.pi) == pytest.approx(math.pi / 3, abs=1e-9)

    def test_ang_mu(self):
        """Test equal, antipodal and hexagon-vertex directions."""
        from src.measures import ang_mu, build_measure
        from src.norm_core import Vec2

        measure = build_measure(_plane("hexagon"), "arc_length")
        assert ang_mu(measure, Vec2(1, 1), Vec2(2, 2)) == 0.0
        assert ang_mu(measure, Vec2(1, 1), Vec2(-3, -3)) == math.pi
        assert ang_mu(measure, Vec2(1, 0), Vec2(0.5, SQRT3_2)) == pytest.approx(math.pi / 3, abs=1e-9)
        assert ang_mu(measure, Vec2(0.5, SQRT3_2), Vec2(1, 0)) == pytest.approx(math.pi / 3, abs=1e-9)

    def test_triangle_angle_sum(self):
        """Test that triangle angles sum to pi for centrally symmetric measures."""
        from src.measures import build_measure, triangle_angle_sum
        from src.norm_core import Vec2

        a, b, c = Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)
        assert triangle_angle_sum(build_measure(_plane("euclidean"), "arc_length"), a, b, c) == pytest.approx(math.pi)

        a, b, c = Vec2(0.2, -0.4), Vec2(1.7, 0.3), Vec2(-0.5, 1.1)
        for name, kind in (("hexagon", "arc_length"), ("lp4", "antinorm_arc"), ("octagon", "dekster_normalized")):
            measure = build_measure(_plane(name), kind, n_quad=256)
            assert triangle_angle_sum(measure, a, b, c) == pytest.approx(math.pi, abs=1e-6), name

    def test_seeded_triangles(self):
        """Test arc-length and sector-area angle sums on 100 seeded triangles per plane."""
        from src.measures import build_measure, triangle_angle_sum
        from src.norm_core import Vec2

        rng = np.random.default_rng(6)
        triangles = []
        while len(triangles) < 100:
            a, b, c = (Vec2(*rng.uniform(-2.0, 2.0, 2)) for _ in range(3))
            if abs((b - a).cross(c - a)) > 1e-2:
                triangles.append((a, b, c))
        for name in ("euclidean", "lp4", "hexagon"):
            for kind in ("arc_length", "sector_area"):
                measure = build_measure(_plane(name), kind)
                for a, b, c in triangles:
                    assert triangle_angle_sum(measure, a, b, c) == pytest.approx(math.pi, abs=1e-6), (name, kind)

    def test_arc_additivity(self):
        """Test that arcs add over concatenation, including across the 0 direction."""
        from src.measures import build_measure, measure_arc

        rng = np.random.default_rng(8)
        for name, kind in (("lp4", "arc_length"), ("hexagon", "sector_area"), ("irregular_hexagon", "arc_length")):
            measure = build_measure(_plane(name), kind)
            for _ in range(25):
                t1 = float(rng.uniform(0.0, 2 * math.pi))
                t2, t3 = sorted(t1 + rng.uniform(0.0, 2 * math.pi, 2))
                split = measure_arc(measure, t1, t2) + measure_arc(measure, t2, t3)
                assert split == pytest.approx(measure_arc(measure, t1, t3), abs=1e-9), name

    def test_ang_mu_continuity(self):
        """Test that ang_mu changes by less as the step along the unit circle halves."""
        from src.measures import ang_mu, build_measure
        from src.norm_core import Vec2

        plane = _plane("lp4")
        measure = build_measure(plane, "arc_length")
        x0 = Vec2(1.0, 0.2)
        for theta in (0.9, 2.4, math.pi / 2):
            p = plane.unit_circle_point(theta)
            gaps = [
                abs(ang_mu(measure, x0, plane.unit_circle_point(theta + 1e-2 / 2 ** k)) - ang_mu(measure, x0, p))
                for k in range(6)
            ]
            assert all(b < a for a, b in zip(gaps, gaps[1:])), theta
            assert gaps[-1] < 1e-3

    def test_degenerate_triangle(self):
        """Test that collinear vertices raise DependentVectorsError."""
        from src.errors import DependentVectorsError
        from src.measures import build_measure, triangle_angle_sum
        from src.norm_core import Vec2

        measure = build_measure(_plane("euclidean"), "arc_length")
        with pytest.raises(DependentVectorsError):
            triangle_angle_sum(measure, Vec2(0, 0), Vec2(1, 1), Vec2(2, 2))


class TestDensityRatios:
    """Tests for equiframed and antinorm proportionality checks."""

    def test_equiframed(self):
        """Test equiframed circles against an irregular hexagon."""
        from src.measures import equiframed_ratio

        assert equiframed_ratio(_plane("euclidean")).proportional(1e-9)
        assert equiframed_ratio(_plane("square")).proportional(1e-9)
        assert equiframed_ratio(_plane("hexagon")).proportional(1e-9)
        assert equiframed_ratio(_plane("irregular_hexagon")).spread > 1 + 1e-3

    def test_antinorm_proportional_everywhere(self):
        """Test that sector area and antinorm arc length are proportional in every plane."""
        from src.measures import antinorm_proportionality

        for name in ("euclidean", "lp4", "hexagon", "irregular_hexagon", "lp1_5"):
            ratio = antinorm_proportionality(_plane(name))
            assert ratio.proportional(1e-4), name
            assert ratio.min_ratio == pytest.approx(0.5, rel=1e-4)

    def test_sample_minimum(self):
        """Test that fewer than 64 samples are rejected."""
        from src.measures import equiframed_ratio

        with pytest.raises(ValueError):
            equiframed_ratio(_plane("lp4"), n_samples=10)
