"""
Angle measures on the unit circle of a normed plane.

A measure is stored as a density with respect to the Euclidean angle of the
direction, so it has no atoms and is positive wherever the density is.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, List, Sequence, Tuple

from rich.console import Console
from scipy.integrate import quad

from .config import MIN_DEKSTER_QUAD, MIN_QUAD, QUAD_ACCEPT_TOL, QUAD_TOL, QUIET
from .errors import DependentVectorsError, QuadratureError
from .norm_core import TWO_PI, NormedPlane, Vec2, det_form, require_nonzero

console = Console(stderr=True, quiet=QUIET)

MEASURE_KINDS = ["arc_length", "sector_area", "antinorm_arc", "dekster_raw", "dekster_normalized"]


def unit_circle_tangent(plane: NormedPlane, theta: float) -> Vec2:
    """
    d/dtheta of gamma(theta) = u(theta) / ||u(theta)||, u = (cos, sin).

    Uses the right derivative of the gauge along u', so polygons get the
    exact tangent of the edge leaving gamma(theta).
    """
    u = Vec2(math.cos(theta), math.sin(theta))
    du = u.rot90()
    g = plane.gauge(u)
    gamma = u / g
    slope = plane.one_sided_derivative(u, du)
    return (du - gamma * slope) / g


def _arc_length_density(plane: NormedPlane, theta: float) -> float:
    return plane.gauge(unit_circle_tangent(plane, theta))


def _sector_area_density(plane: NormedPlane, theta: float) -> float:
    gamma = plane.unit_circle_point(theta)
    return 0.5 * det_form(gamma, unit_circle_tangent(plane, theta))


def _antinorm_arc_density(plane: NormedPlane, theta: float) -> float:
    return plane.antinorm(unit_circle_tangent(plane, theta))


def _dekster_density(plane: NormedPlane, theta: float) -> float:
    # 2 r / b with r = 1/||u|| and b = 2 h(rot90 u)
    u = Vec2(math.cos(theta), math.sin(theta))
    return 1.0 / (plane.gauge(u) * plane.support(u.rot90()))


RAW_DENSITIES = {
    "arc_length": _arc_length_density,
    "sector_area": _sector_area_density,
    "antinorm_arc": _antinorm_arc_density,
    "dekster_raw": _dekster_density,
    "dekster_normalized": _dekster_density,
}


def _breaks_inside(breaks: Sequence[float], a: float, b: float) -> List[float]:
    """All 2*pi-translates of the break angles strictly inside (a, b)."""
    margin = 1e-12 * max(1.0, abs(a), abs(b))
    inside = set()
    for t in breaks:
        k = math.ceil((a - t) / TWO_PI)
        s = t + k * TWO_PI
        while s < b:
            if a + margin < s < b - margin:
                inside.add(s)
            s += TWO_PI
    return sorted(inside)


def integrate_density(
    density: Callable[[float], float],
    a: float,
    b: float,
    breaks: Sequence[float] = (),
    n_quad: int = MIN_QUAD,
) -> float:
    """Adaptive Gauss-Kronrod integral of density over [a, b], split at breaks.

    Raises:
        QuadratureError: if the error estimate stays above QUAD_ACCEPT_TOL
    """
    if b <= a:
        return 0.0
    options = dict(limit=n_quad, epsabs=QUAD_TOL, epsrel=QUAD_TOL, full_output=1)
    points = _breaks_inside(breaks, a, b)
    if points:
        options["points"] = points
    out = quad(density, a, b, **options)
    value, abserr = out[0], out[1]
    if len(out) > 3 and abserr > QUAD_ACCEPT_TOL * max(1.0, abs(value)):
        raise QuadratureError(f"quadrature on [{a:.6g}, {b:.6g}] did not converge (error {abserr:.3g}): {out[3]}")
    return value


@dataclass(frozen=True)
class AngleMeasure:
    """A measure on the unit circle given by a density over Euclidean angle."""

    plane: NormedPlane
    kind: str
    scale: float
    total: float
    n_quad: int
    raw_density: Callable[[NormedPlane, float], float] = field(repr=False)

    def density(self, theta: float) -> float:
        return self.scale * self.raw_density(self.plane, theta % TWO_PI)


def build_measure(plane: NormedPlane, kind: str, n_quad: int = MIN_QUAD) -> AngleMeasure:
    """
    Build one of the angle measures of a plane.

    Every kind except dekster_raw is scaled to total mass 2*pi; dekster_raw
    keeps its own total, the Dekster constant tau.

    Raises:
        ValueError: for an unknown kind
        QuadratureError: if n_quad is below the minimum or quadrature fails
    """
    if kind not in RAW_DENSITIES:
        raise ValueError(f"unknown measure kind {kind!r}; expected one of {MEASURE_KINDS}")
    minimum = MIN_DEKSTER_QUAD if kind.startswith("dekster") else MIN_QUAD
    if n_quad < minimum:
        raise QuadratureError(f"n_quad must be at least {minimum} for {kind}, got {n_quad}")

    raw = RAW_DENSITIES[kind]
    raw_total = integrate_density(lambda t: raw(plane, t), 0.0, TWO_PI, plane.break_angles(), n_quad)
    if kind == "dekster_raw":
        scale, total = 1.0, raw_total
    else:
        scale, total = TWO_PI / raw_total, TWO_PI
    console.print(f"[dim]Built {kind} measure on {plane.name} (raw mass {raw_total:.9g})[/]")
    return AngleMeasure(plane=plane, kind=kind, scale=scale, total=total, n_quad=n_quad, raw_density=raw)


def measure_arc(measure: AngleMeasure, theta1: float, theta2: float) -> float:
    """Measure of the arc swept counterclockwise from theta1 to theta2."""
    length = (theta2 - theta1) % TWO_PI
    if length == 0.0 and theta2 != theta1:
        length = TWO_PI
    return integrate_density(
        measure.density, theta1, theta1 + length, measure.plane.break_angles(), measure.n_quad
    )


def ang_mu(measure: AngleMeasure, x: Vec2, y: Vec2) -> float:
    """Measure of the arc of directions in the cone {a x + b y : a, b >= 0}."""
    require_nonzero(x, y)
    cross = x.cross(y)
    if abs(cross) <= 1e-15 * x.length() * y.length():
        return 0.0 if x.dot(y) > 0 else math.pi
    if cross > 0:
        return measure_arc(measure, x.angle(), y.angle())
    return measure_arc(measure, y.angle(), x.angle())


def measure_angle_function(measure: AngleMeasure) -> Callable[[Vec2, Vec2], float]:
    """ang_mu bound to a measure, usable wherever an angle function is expected."""
    return lambda x, y: ang_mu(measure, x, y)


def triangle_angle_sum(measure: AngleMeasure, a: Vec2, b: Vec2, c: Vec2) -> float:
    """Sum of the measure angles at the three vertices of triangle abc."""
    span = max((b - a).length(), (c - a).length(), (c - b).length())
    if abs(det_form(b - a, c - a)) <= 1e-12 * span * span:
        raise DependentVectorsError(f"degenerate triangle {a.as_tuple()}, {b.as_tuple()}, {c.as_tuple()}")
    return ang_mu(measure, b - a, c - a) + ang_mu(measure, a - b, c - b) + ang_mu(measure, a - c, b - c)


@dataclass(frozen=True)
class RatioRange:
    min_ratio: float
    max_ratio: float

    @property
    def spread(self) -> float:
        """max/min, 1.0 for proportional densities."""
        return self.max_ratio / self.min_ratio

    def proportional(self, tol: float) -> bool:
        return self.spread <= 1.0 + tol


def _density_ratio(plane: NormedPlane, num, den, n_samples: int) -> RatioRange:
    if n_samples < 64:
        raise ValueError(f"n_samples must be at least 64, got {n_samples}")
    ratios = [num(plane, t) / den(plane, t) for t in plane.sample_angles(n_samples)]
    return RatioRange(min_ratio=min(ratios), max_ratio=max(ratios))


def equiframed_ratio(plane: NormedPlane, n_samples: int = 720) -> RatioRange:
    """Range of sector-area density over arc-length density.

    Constant exactly when the unit circle is equiframed.
    """
    return _density_ratio(plane, _sector_area_density, _arc_length_density, n_samples)


def antinorm_proportionality(plane: NormedPlane, n_samples: int = 720) -> RatioRange:
    """Range of sector-area density over antinorm-arc density (constant in every plane)."""
    return _density_ratio(plane, _sector_area_density, _antinorm_arc_density, n_samples)


def dekster_tau(plane: NormedPlane, n_quad: int = MIN_DEKSTER_QUAD) -> float:
    """Total Dekster angular measure around a point."""
    return build_measure(plane, "dekster_raw", n_quad).total


def density_table(measure: AngleMeasure, n: int) -> List[Tuple[float, float]]:
    """(theta, density) at n equally spaced directions starting at 0."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return [(TWO_PI * k / n, measure.density(TWO_PI * k / n)) for k in range(n)]
