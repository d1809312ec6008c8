"""Unit tests for orthogonality types."""
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


class TestBirkhoff:
    """Tests for Birkhoff orthogonality."""

    def test_euclidean(self):
        """Test perpendicular vectors in the Euclidean plane."""
        from src.norm_core import Vec2
        from src.orthogonality import birkhoff

        result = birkhoff(_plane("euclidean"), Vec2(1, 0), Vec2(0, 1))
        assert result.residual == pytest.approx(0.0, abs=1e-12)
        assert result.orthogonal

    def test_lp4_not_orthogonal(self):
        """Test the residual 1 - 2^(-3/4) for (1,0), (1,1) in l4."""
        from src.norm_core import Vec2
        from src.orthogonality import birkhoff

        result = birkhoff(_plane("lp4"), Vec2(1, 0), Vec2(1, 1))
        assert result.residual == pytest.approx(1 - 2 ** -0.75, abs=1e-9)
        assert not result.orthogonal

    def test_lp4_axes(self):
        """Test that the axes are Birkhoff orthogonal in l4."""
        from src.norm_core import Vec2
        from src.orthogonality import birkhoff

        result = birkhoff(_plane("lp4"), Vec2(1, 0), Vec2(0, 1))
        assert result.residual == pytest.approx(0.0, abs=1e-12)
        assert result.orthogonal

    def test_zero_vector(self):
        """Test that Birkhoff orthogonality needs nonzero vectors."""
        from src.errors import ZeroVectorError
        from src.norm_core import ZERO, Vec2
        from src.orthogonality import birkhoff

        with pytest.raises(ZeroVectorError):
            birkhoff(_plane("lp4"), Vec2(1, 0), ZERO)

    def test_birkhoff_normal(self):
        """Test that birkhoff_normal returns a Birkhoff-orthogonal unit vector."""
        from src.norm_core import Vec2
        from src.orthogonality import birkhoff, birkhoff_normal

        for name in ("lp4", "hexagon", "irregular_hexagon"):
            plane = _plane(name)
            x = Vec2(0.8, 0.35)
            y = birkhoff_normal(plane, x)
            assert plane.gauge(y) == pytest.approx(1.0)
            assert birkhoff(plane, x, y).orthogonal


class TestNormIdentities:
    """Tests for isosceles, Pythagorean, Singer, Roberts and D-A-F orthogonality."""

    def test_isosceles(self):
        """Test isosceles residuals."""
        from src.norm_core import ZERO, Vec2
        from src.orthogonality import isosceles

        assert isosceles(_plane("lp4"), Vec2(1, 2), ZERO).residual == 0.0
        assert isosceles(_plane("euclidean"), Vec2(1, 0), Vec2(0, 2)).orthogonal
        result = isosceles(_plane("hexagon"), Vec2(1, 0), Vec2(0.5, SQRT3_2))
        assert result.residual == pytest.approx(1.0)
        assert not result.orthogonal

    def test_pythagorean(self):
        """Test Pythagorean residuals."""
        from src.norm_core import Vec2
        from src.orthogonality import pythagorean

        assert pythagorean(_plane("euclidean"), Vec2(1, 0), Vec2(0, 1)).residual == pytest.approx(0.0, abs=1e-12)
        assert pythagorean(_plane("hexagon"), Vec2(1, 0), Vec2(0.5, SQRT3_2)).residual == pytest.approx(1.0)
        assert pythagorean(_plane("lp1"), Vec2(1, 0), Vec2(0, 1)).residual == pytest.approx(-2.0)

    def test_singer(self):
        """Test Singer orthogonality, including the zero vector."""
        from src.norm_core import ZERO, Vec2
        from src.orthogonality import singer

        assert singer(_plane("lp4"), ZERO, Vec2(1, 1)).orthogonal
        assert singer(_plane("euclidean"), Vec2(2, 0), Vec2(0, 3)).residual == pytest.approx(0.0, abs=1e-12)
        result = singer(_plane("lp4"), Vec2(1, 0), Vec2(1, 1))
        assert abs(result.residual) > 0.1
        assert not result.orthogonal

    def test_roberts(self):
        """Test Roberts orthogonality on the default t grid."""
        from src.norm_core import ZERO, Vec2
        from src.orthogonality import roberts

        assert roberts(_plane("euclidean"), Vec2(1, 0), Vec2(0, 1)).orthogonal
        assert roberts(_plane("lp4"), Vec2(1, 0), ZERO).residual == 0.0
        assert roberts(_plane("lp4"), Vec2(1, 0), Vec2(1, 1)).residual > 0.0
        with pytest.raises(ValueError):
            roberts(_plane("lp4"), Vec2(1, 0), Vec2(0, 1), t_grid=[])

    def test_daf(self):
        """Test D-A-F residuals."""
        from src.norm_core import Vec2
        from src.orthogonality import daf_orthogonal

        assert daf_orthogonal(_plane("euclidean"), Vec2(1, 0), Vec2(0, 1)).orthogonal
        assert daf_orthogonal(_plane("hexagon"), Vec2(1, 0), Vec2(0.5, SQRT3_2)).residual == pytest.approx(
            1.0 - math.sqrt(2.0)
        )
        assert daf_orthogonal(_plane("lp1"), Vec2(1, 0), Vec2(0, 1)).residual == pytest.approx(2.0 - math.sqrt(2.0))

    def test_daf_homogeneous_in_octagon(self):
        """Test that D-A-F orthogonality of the regular octagon survives scaling and sign flips."""
        import numpy as np
        from src.orthogonality import daf_orthogonal
        from src.search import find_root

        plane = _plane("octagon")
        rng = np.random.default_rng(12)
        scalars = (0.5, 2.0, -0.5, -2.0)
        for _ in range(200):
            theta = float(rng.uniform(0.0, 2 * math.pi))
            rx, ry = rng.uniform(0.3, 3.0, 2)
            xh = plane.unit_circle_point(theta)
            phi = find_root(lambda t: plane.gauge(xh - plane.unit_circle_point(theta + t)) - math.sqrt(2.0),
                            0.0, math.pi)
            x, y = xh * rx, plane.unit_circle_point(theta + phi) * ry
            assert daf_orthogonal(plane, x, y, tol=1e-9).orthogonal
            for a in scalars:
                for b in scalars:
                    assert daf_orthogonal(plane, x * a, y * b, tol=1e-6).orthogonal, (theta, a, b)


class TestSemiInnerProduct:
    """Tests for the g-based orthogonality types."""

    def test_euclidean(self):
        """Test that all three g residuals vanish for perpendicular vectors."""
        from src.norm_core import Vec2
        from src.orthogonality import g_isosceles, g_orthogonal, g_symmetric

        plane = _plane("euclidean")
        x, y = Vec2(1, 0), Vec2(0, 1)
        for predicate in (g_orthogonal, g_symmetric, g_isosceles):
            assert predicate(plane, x, y).residual == pytest.approx(0.0, abs=1e-15)

    def test_lp1_kink(self):
        """Test that one-sided derivatives average to zero at an l1 vertex."""
        from src.norm_core import Vec2
        from src.orthogonality import g_orthogonal

        assert g_orthogonal(_plane("lp1"), Vec2(1, 0), Vec2(0, 1)).residual == pytest.approx(0.0, abs=1e-15)

    def test_lp4(self):
        """Test g((1,0), (1,1)) = 1 in l4."""
        from src.norm_core import Vec2
        from src.orthogonality import g_orthogonal

        result = g_orthogonal(_plane("lp4"), Vec2(1, 0), Vec2(1, 1))
        assert result.residual == pytest.approx(1.0)
        assert not result.orthogonal


class TestLeftNormal:
    """Tests for the left Birkhoff normal."""

    def test_euclidean(self):
        """Test the quarter turn in the Euclidean plane."""
        from src.norm_core import Vec2
        from src.orthogonality import left_normal

        plane = _plane("euclidean")
        u = left_normal(plane, Vec2(0, 1))
        assert (u.x, u.y) == pytest.approx((-1.0, 0.0), abs=1e-9)
        u = left_normal(plane, Vec2(1, 0))
        assert (u.x, u.y) == pytest.approx((0.0, 1.0), abs=1e-9)

    def test_lp4(self):
        """Test that b(y) is a unit vector Birkhoff orthogonal to y on its positive side."""
        from src.norm_core import Vec2, det_form
        from src.orthogonality import birkhoff, left_normal

        plane = _plane("lp4")
        y = Vec2(1, 1) / 2 ** 0.25
        u = left_normal(plane, y)
        assert plane.gauge(u) == pytest.approx(1.0)
        assert det_form(y, u) > 0
        assert birkhoff(plane, u, y).residual <= 1e-9

    def test_requires_strict_convexity(self):
        """Test that polygonal planes raise ConvexityError."""
        from src.errors import ConvexityError
        from src.norm_core import Vec2
        from src.orthogonality import left_normal

        with pytest.raises(ConvexityError):
            left_normal(_plane("square"), Vec2(1, 0))


class TestDispatch:
    """Tests for the orthogonality dispatcher and the symmetry check."""

    def test_every_type(self):
        """Test that every type evaluates through the dispatcher."""
        from src.norm_core import Vec2
        from src.orthogonality import ORTHOGONALITY_TYPES, orthogonality

        plane = _plane("euclidean")
        for kind in ORTHOGONALITY_TYPES:
            assert orthogonality(plane, kind, Vec2(2, 0), Vec2(0, 2)).orthogonal, kind

    def test_unknown_type(self):
        """Test that unknown types raise ValueError."""
        from src.norm_core import Vec2
        from src.orthogonality import orthogonality

        with pytest.raises(ValueError):
            orthogonality(_plane("euclidean"), "james", Vec2(1, 0), Vec2(0, 1))

    def test_tolerance_override(self):
        """Test that a loose tolerance changes the verdict."""
        from src.norm_core import Vec2
        from src.orthogonality import orthogonality

        result = orthogonality(_plane("hexagon"), "isosceles", Vec2(1, 0), Vec2(0.5, SQRT3_2), tol=2.0)
        assert result.orthogonal
        assert result.tol == 2.0

    def test_birkhoff_symmetry(self):
        """Test symmetry in the Euclidean plane and asymmetry in l4."""
        from src.orthogonality import birkhoff_symmetry

        assert birkhoff_symmetry(_plane("euclidean"), n_samples=32).symmetric
        check = birkhoff_symmetry(_plane("lp4"), n_samples=32)
        assert not check.symmetric
        assert check.max_residual > 1e-3
