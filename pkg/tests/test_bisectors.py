"""Unit tests for angular bisectors."""
import math
import pytest
from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).parent.parent))

CATALOG = Path(__file__).parent.parent / "catalog"
SQRT3_2 = math.sqrt(3.0) / 2.0


def _plane(name):
    from src.norm_core import load_plane
    return load_plane(CATALOG / f"{name}.json")


def _direction_gap(u, v):
    from src.angles import ang_euclid_ref
    return ang_euclid_ref(u, v)


class TestBusemann:
    """Tests for the Busemann bisector."""

    def test_examples(self):
        """Test the diagonal in the Euclidean and l4 planes."""
        from src.bisectors import busemann_bisector
        from src.norm_core import Vec2

        ray = busemann_bisector(_plane("euclidean"), Vec2(1, 0), Vec2(0, 1))
        assert ray.direction.as_tuple() == pytest.approx((math.sqrt(0.5), math.sqrt(0.5)))
        ray = busemann_bisector(_plane("lp4"), Vec2(1, 0), Vec2(0, 1))
        assert ray.direction.as_tuple() == pytest.approx((2 ** -0.25, 2 ** -0.25))
        assert not ray.ambiguous

    def test_dependent_vectors(self):
        """Test that dependent vectors raise DependentVectorsError."""
        from src.bisectors import busemann_bisector
        from src.errors import DependentVectorsError
        from src.norm_core import Vec2

        with pytest.raises(DependentVectorsError):
            busemann_bisector(_plane("lp4"), Vec2(1, 1), Vec2(-2, -2))


class TestGlogovskii:
    """Tests for the Glogovskii bisector."""

    def test_euclidean_matches_busemann(self):
        """Test that the two bisectors coincide in the Euclidean plane."""
        from src.bisectors import busemann_bisector, glogovskii_bisector
        from src.norm_core import Vec2

        plane = _plane("euclidean")
        x, y = Vec2(1, 0), Vec2.from_angle(2.0)
        gap = _direction_gap(glogovskii_bisector(plane, x, y).direction, busemann_bisector(plane, x, y).direction)
        assert gap <= 1e-9

    def test_lp4_symmetric_pair(self):
        """Test that coordinate symmetry forces the diagonal in l4."""
        from src.bisectors import glogovskii_bisector
        from src.norm_core import Vec2

        ray = glogovskii_bisector(_plane("lp4"), Vec2(1, 0), Vec2(0, 1))
        assert ray.direction.as_tuple() == pytest.approx((2 ** -0.25, 2 ** -0.25))

    def test_lp4_differs_from_busemann(self):
        """Test that the bisectors separate in the non-Radon l4 plane."""
        from src.bisectors import busemann_bisector, glogovskii_bisector, distance_to_ray
        from src.norm_core import Vec2

        plane = _plane("lp4")
        x, y = Vec2(1, 0), Vec2.from_angle(2.0)
        ray = glogovskii_bisector(plane, x, y)
        assert _direction_gap(ray.direction, busemann_bisector(plane, x, y).direction) > 1e-4
        assert distance_to_ray(plane, ray.direction, x) == pytest.approx(distance_to_ray(plane, ray.direction, y), abs=1e-9)

    def test_scaling_invariance(self):
        """Test that positive rescaling of the legs keeps the bisector."""
        from src.bisectors import glogovskii_bisector
        from src.norm_core import Vec2

        plane = _plane("lp4")
        x, y = Vec2(1, 0.2), Vec2(-0.4, 1)
        base = glogovskii_bisector(plane, x, y).direction
        scaled = glogovskii_bisector(plane, x * 3.0, y * 0.25).direction
        assert _direction_gap(base, scaled) <= 1e-8


class TestMeasureAndDafBisectors:
    """Tests for the measure-based and D-A-F bisectors."""

    def test_measure_euclidean(self):
        """Test the arc-length bisector in the Euclidean plane."""
        from src.bisectors import measure_bisector
        from src.measures import build_measure
        from src.norm_core import Vec2

        measure = build_measure(_plane("euclidean"), "arc_length")
        ray = measure_bisector(measure, Vec2(1, 0), Vec2(0, 1))
        assert ray.direction.angle() == pytest.approx(math.pi / 4, abs=1e-9)

    def test_measure_hexagon_edge(self):
        """Test that the hexagon arc-length bisector of two vertices hits the edge midpoint."""
        from src.bisectors import measure_bisector
        from src.measures import build_measure
        from src.norm_core import Vec2

        measure = build_measure(_plane("hexagon"), "arc_length")
        ray = measure_bisector(measure, Vec2(1, 0), Vec2(0.5, SQRT3_2))
        assert ray.direction.as_tuple() == pytest.approx((0.75, SQRT3_2 / 2), abs=1e-8)

    def test_daf_euclidean(self):
        """Test the D-A-F bisector in the Euclidean plane."""
        from src.bisectors import daf_bisector
        from src.norm_core import Vec2

        ray = daf_bisector(_plane("euclidean"), Vec2(2, 0), Vec2(0, 1))
        assert ray.direction.angle() == pytest.approx(math.pi / 4, abs=1e-9)

    def test_daf_equal_angles(self):
        """Test that the D-A-F bisector makes equal D-A-F angles with both legs."""
        from src.angles import ang_daf
        from src.bisectors import daf_bisector
        from src.norm_core import Vec2

        plane = _plane("lp4")
        x, y = Vec2(1, 0), Vec2.from_angle(2.0)
        z = daf_bisector(plane, x, y).direction
        assert ang_daf(plane, x, z) == pytest.approx(ang_daf(plane, y, z), abs=1e-9)


class TestRadonCoincidence:
    """Tests for the Busemann = Glogovskii check."""

    def test_radon_planes(self):
        """Test coincidence in inner-product planes."""
        from src.bisectors import radon_coincidence

        for name in ("euclidean", "inner_product"):
            result = radon_coincidence(_plane(name), n_pairs=12)
            assert result.coincide, name
            assert result.max_gap <= 1e-7

    def test_lp4(self):
        """Test that l4 yields a separating witness."""
        from src.bisectors import radon_coincidence

        result = radon_coincidence(_plane("lp4"), n_pairs=12)
        assert not result.coincide
        assert len(result.witness) == 2

    def test_pair_minimum(self):
        """Test that fewer than ten pairs are rejected."""
        from src.bisectors import radon_coincidence

        with pytest.raises(ValueError):
            radon_coincidence(_plane("euclidean"), n_pairs=4)


class TestMeasureBisectorSeparation:
    """Tests that the arc-length bisector of l4 is neither Busemann nor Glogovskii."""

    def test_lp4_arc_length(self):
        """Test that the arc-length bisector leaves both other bisectors by more than 1e-4."""
        from src.bisectors import busemann_bisector, glogovskii_bisector, measure_bisector
        from src.measures import build_measure
        from src.norm_core import Vec2

        plane = _plane("lp4")
        measure = build_measure(plane, "arc_length")
        x = Vec2(1, 0)
        busemann_gaps, glogovskii_gaps = [], []
        for theta in (0.5, 1.0, 2.0, 2.6):
            y = Vec2.from_angle(theta, 1.7)
            ray = measure_bisector(measure, x, y).direction
            busemann_gaps.append(_direction_gap(ray, busemann_bisector(plane, x, y).direction))
            glogovskii_gaps.append(_direction_gap(ray, glogovskii_bisector(plane, x, y).direction))
        assert max(busemann_gaps) > 1e-4
        assert max(glogovskii_gaps) > 1e-4

    def test_euclidean_arc_length(self):
        """Test that all three bisectors agree in the Euclidean plane."""
        from src.bisectors import busemann_bisector, glogovskii_bisector, measure_bisector
        from src.measures import build_measure
        from src.norm_core import Vec2

        plane = _plane("euclidean")
        measure = build_measure(plane, "arc_length")
        x, y = Vec2(1, 0), Vec2.from_angle(2.0, 1.7)
        ray = measure_bisector(measure, x, y).direction
        assert _direction_gap(ray, busemann_bisector(plane, x, y).direction) <= 1e-8
        assert _direction_gap(ray, glogovskii_bisector(plane, x, y).direction) <= 1e-8
