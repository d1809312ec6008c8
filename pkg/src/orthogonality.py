"""Orthogonality relations of normed planes as residual-based predicates."""

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .config import DEFAULT_TOL, ROBERTS_EXPONENTS, SEARCH_TOL
from .errors import ConvexityError
from .functionals import g_functional
from .norm_core import NormedPlane, Vec2, require_nonzero
from .search import find_root, golden_section

SQRT2 = math.sqrt(2.0)

ORTHOGONALITY_TYPES = [
    "birkhoff", "isosceles", "pythagorean", "singer", "roberts",
    "daf", "g", "g_symmetric", "g_isosceles",
]

# Logarithmic grid {+-2^k}; Roberts orthogonality quantifies over all t
ROBERTS_GRID = tuple(s * 2.0 ** k for k in ROBERTS_EXPONENTS for s in (1.0, -1.0))


@dataclass(frozen=True)
class OrthoResult:
    """Signed defect of an orthogonality identity and the verdict at tol."""

    residual: float
    orthogonal: bool
    tol: float


def _two_sided(residual: float, tol: float) -> OrthoResult:
    return OrthoResult(residual=residual, orthogonal=abs(residual) <= tol, tol=tol)


def min_along_line(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    """inf_t ||x + t y|| by golden-section search on [-2||x||/||y||, 2||x||/||y||]."""
    bound = 2.0 * plane.gauge(x) / plane.gauge(y)
    _, f_min = golden_section(lambda t: plane.gauge(x + y * t), -bound, bound)
    # t = 0 is always a candidate, so the residual below is never negative
    return min(f_min, plane.gauge(x))


def birkhoff(plane: NormedPlane, x: Vec2, y: Vec2, tol: float = SEARCH_TOL) -> OrthoResult:
    """x -|B y  iff  ||x + t y|| >= ||x|| for all t."""
    require_nonzero(x, y)
    residual = plane.gauge(x) - min_along_line(plane, x, y)
    return OrthoResult(residual=residual, orthogonal=residual <= tol, tol=tol)


def isosceles(plane: NormedPlane, x: Vec2, y: Vec2, tol: float = DEFAULT_TOL) -> OrthoResult:
    """x -|I y  iff  ||x + y|| = ||x - y||."""
    return _two_sided(plane.gauge(x + y) - plane.gauge(x - y), tol)


def pythagorean(plane: NormedPlane, x: Vec2, y: Vec2, tol: float = DEFAULT_TOL) -> OrthoResult:
    """x -|P y  iff  ||x||^2 + ||y||^2 = ||x - y||^2."""
    residual = plane.gauge(x) ** 2 + plane.gauge(y) ** 2 - plane.gauge(x - y) ** 2
    return _two_sided(residual, tol)


def singer(plane: NormedPlane, x: Vec2, y: Vec2, tol: float = DEFAULT_TOL) -> OrthoResult:
    """Isosceles orthogonality of the normalized vectors; zero vectors are orthogonal to all."""
    gx, gy = plane.gauge(x), plane.gauge(y)
    if gx * gy == 0.0:
        return OrthoResult(residual=0.0, orthogonal=True, tol=tol)
    xh, yh = x / gx, y / gy
    return _two_sided(plane.gauge(xh - yh) - plane.gauge(xh + yh), tol)


def roberts(
    plane: NormedPlane,
    x: Vec2,
    y: Vec2,
    t_grid: Optional[Iterable[float]] = None,
    tol: float = DEFAULT_TOL,
) -> OrthoResult:
    """||x + t y|| = ||x - t y|| checked on a finite t grid (sound but incomplete)."""
    t_grid = ROBERTS_GRID if t_grid is None else tuple(t_grid)
    if not t_grid:
        raise ValueError("t_grid must be nonempty")
    residual = max(abs(plane.gauge(x + y * t) - plane.gauge(x - y * t)) for t in t_grid)
    return OrthoResult(residual=residual, orthogonal=residual <= tol, tol=tol)


def daf_orthogonal(plane: NormedPlane, x: Vec2, y: Vec2, tol: float = DEFAULT_TOL) -> OrthoResult:
    """||x/||x|| - y/||y|| || = sqrt(2); zero vectors are orthogonal to all."""
    gx, gy = plane.gauge(x), plane.gauge(y)
    if gx * gy == 0.0:
        return OrthoResult(residual=0.0, orthogonal=True, tol=tol)
    return _two_sided(plane.gauge(x / gx - y / gy) - SQRT2, tol)


def g_orthogonal(plane: NormedPlane, x: Vec2, y: Vec2, tol: float = DEFAULT_TOL) -> OrthoResult:
    """g(x, y) = 0."""
    return _two_sided(g_functional(plane, x, y), tol)


def g_symmetric(plane: NormedPlane, x: Vec2, y: Vec2, tol: float = DEFAULT_TOL) -> OrthoResult:
    """g(x, y) + g(y, x) = 0."""
    return _two_sided(g_functional(plane, x, y) + g_functional(plane, y, x), tol)


def g_isosceles(plane: NormedPlane, x: Vec2, y: Vec2, tol: float = DEFAULT_TOL) -> OrthoResult:
    """||x||^2 g(x, y) + ||y||^2 g(y, x) = 0."""
    residual = plane.gauge(x) ** 2 * g_functional(plane, x, y) + plane.gauge(y) ** 2 * g_functional(plane, y, x)
    return _two_sided(residual, tol)


def left_normal(plane: NormedPlane, y: Vec2) -> Vec2:
    """The unit vector b(y) with b(y) -|B y and [y, b(y)] > 0.

    Walks the unit-circle arc on the positive side of y. The right derivative
    of t -> ||u + t y|| at u = gamma(theta_y + phi) is positive at phi = 0,
    negative at phi = pi, and (by strict convexity) changes sign once.
    """
    if not plane.strictly_convex:
        raise ConvexityError("left_normal requires a strictly convex plane")
    require_nonzero(y)
    theta = y.angle()

    def slope(phi: float) -> float:
        return plane.one_sided_derivative(plane.unit_circle_point(theta + phi), y)

    phi = find_root(slope, 0.0, math.pi, what="left normal")
    return plane.unit_circle_point(theta + phi)


def birkhoff_normal(plane: NormedPlane, x: Vec2) -> Vec2:
    """A unit direction y with x -|B y, parallel to a supporting line at x/||x||."""
    return plane.normalize(plane.normal(x).rot90())


def orthogonality(plane: NormedPlane, kind: str, x: Vec2, y: Vec2, tol: Optional[float] = None) -> OrthoResult:
    """Dispatch to one of the orthogonality predicates by name."""
    if kind not in ORTHOGONALITY_TYPES:
        raise ValueError(f"unknown orthogonality type {kind!r}; expected one of {ORTHOGONALITY_TYPES}")
    predicate = {
        "birkhoff": birkhoff,
        "isosceles": isosceles,
        "pythagorean": pythagorean,
        "singer": singer,
        "daf": daf_orthogonal,
        "g": g_orthogonal,
        "g_symmetric": g_symmetric,
        "g_isosceles": g_isosceles,
    }.get(kind)
    if kind == "roberts":
        return roberts(plane, x, y, tol=DEFAULT_TOL if tol is None else tol)
    if tol is None:
        return predicate(plane, x, y)
    return predicate(plane, x, y, tol)


@dataclass(frozen=True)
class SymmetryCheck:
    """Worst Birkhoff residual of (y, x) over sampled pairs with x -|B y."""

    symmetric: bool
    max_residual: float
    witness: Tuple[Vec2, Vec2]


def birkhoff_symmetry(plane: NormedPlane, n_samples: int = 256, tol: float = SEARCH_TOL) -> SymmetryCheck:
    """Check whether Birkhoff orthogonality is symmetric on sampled unit vectors."""
    worst, witness = -math.inf, None
    for px, py in plane.unit_circle_points(n_samples):
        x = Vec2(px, py)
        y = birkhoff_normal(plane, x)
        residual = birkhoff(plane, y, x).residual
        if residual > worst:
            worst, witness = residual, (x, y)
    return SymmetryCheck(symmetric=worst <= tol, max_residual=worst, witness=witness)
