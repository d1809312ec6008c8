"""Scalar functionals behind the angle functions: sine, q, t*, t**, lambda and g."""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import DEFAULT_TOL
from .errors import ConvexityError, SearchError
from .norm_core import NormedPlane, Vec2, det_form, require_nonzero
from .search import find_root, golden_section, sign_bisection


@dataclass(frozen=True)
class StarPair:
    """Minimizer t* of t -> ||x - t y||, its partner t** and the minimum value."""

    t_star: float
    t_star_star: float
    min_value: float


def sine(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    """s(x, y) = inf_t ||x + t y|| / ||x||, via |[x, y]| / (||y||_a ||x||)."""
    require_nonzero(x, y)
    value = abs(det_form(x, y)) / (plane.antinorm(y) * plane.gauge(x))
    return min(value, 1.0)


def sine_by_minimization(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    """The same quantity as :func:`sine`, by direct line minimization."""
    require_nonzero(x, y)
    gx = plane.gauge(x)
    bound = 2.0 * gx / plane.gauge(y)
    _, f_min = golden_section(lambda t: plane.gauge(x + y * t), -bound, bound)
    return min(f_min, gx) / gx


def q_functional(
    plane: NormedPlane,
    x: Vec2,
    y: Vec2,
    n_samples: Optional[int] = None,
    tol: float = DEFAULT_TOL,
) -> float:
    """
    Reciprocal of the norm of the projection onto span{x} along y.

    With n_samples the operator norm is the maximum of ||proj(z)|| over
    n_samples unit vectors z; without, the supremum is taken exactly (it is
    attained where [z, y] is extremal, i.e. at the antinorm of y).

    Returns:
        0.0 for dependent x, y; otherwise a value in (0, 1].
    """
    require_nonzero(x, y)
    gx, gy = plane.gauge(x), plane.gauge(y)
    cross = det_form(x, y)
    if abs(cross) <= tol * gx * gy:
        return 0.0
    if n_samples is None:
        peak = plane.antinorm(y)
    else:
        if n_samples < 4:
            raise ValueError(f"n_samples must be at least 4, got {n_samples}")
        pts = plane.unit_circle_points(n_samples)
        # proj(z) = ([z, y] / [x, y]) x
        peak = float(np.max(np.abs(pts[:, 0] * y.y - pts[:, 1] * y.x)))
    return min(abs(cross) / (peak * gx), 1.0)


def _is_birkhoff_minimum(gx: float, min_value: float, tol: float) -> bool:
    return gx - min_value <= tol * gx


def star_pair(plane: NormedPlane, x: Vec2, y: Vec2, tol: float = 1e-15) -> StarPair:
    """
    Compute t* (the minimizer of ||x - t y||) and t** (the nonzero t with
    ||x - t y|| = ||x||, or 0 when x is Birkhoff orthogonal to y).

    t* comes from bisecting on the sign of the right derivative, which is
    exact for kinked gauges too; golden-section search is the fallback when
    the derivative never switches sign on the bracket.

    Args:
        tol: relative slack for declaring the minimum equal to ||x||

    Raises:
        ConvexityError: if the plane is not strictly convex
    """
    if not plane.strictly_convex:
        raise ConvexityError("t* and t** are only unique in strictly convex planes")
    require_nonzero(x, y)
    gx, gy = plane.gauge(x), plane.gauge(y)
    bound = 2.0 * gx / gy

    def objective(t: float) -> float:
        return plane.gauge(x - y * t)

    try:
        t_star = sign_bisection(
            lambda t: plane.one_sided_derivative(x - y * t, -y) > 0.0,
            -2.0 * bound,
            2.0 * bound,
        )
    except SearchError:
        t_star, _ = golden_section(objective, -bound, bound)
    min_value = objective(t_star)

    if t_star == 0.0 or _is_birkhoff_minimum(gx, min_value, tol):
        return StarPair(t_star=0.0, t_star_star=0.0, min_value=min(min_value, gx))

    far = math.copysign(1.5 * bound, t_star)
    t_star_star = find_root(lambda t: objective(t) - gx, t_star, far, what="t**")
    return StarPair(t_star=t_star, t_star_star=t_star_star, min_value=min_value)


def lambda_functional(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    """lambda(x, y) = min{|t*|, |t** - t*|}."""
    pair = star_pair(plane, x, y)
    return min(abs(pair.t_star), abs(pair.t_star_star - pair.t_star))


def g_functional(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    """
    The semi-inner product g(x, y) = (||x|| / 2) (tau_-(x, y) + tau_+(x, y)).

    tau_+ is the right derivative of t -> ||x + t y|| at 0 and tau_- the left
    one; both come from the plane's exact one-sided derivatives.
    """
    gx = plane.gauge(x)
    if gx == 0.0 or y.is_zero():
        return 0.0
    tau_plus = plane.one_sided_derivative(x, y)
    tau_minus = -plane.one_sided_derivative(x, -y)
    return 0.5 * gx * (tau_minus + tau_plus)


def quasi_inner_residual(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    """||x + y||^4 - ||x - y||^4 - 8 (||x||^2 g(x, y) + ||y||^2 g(y, x))."""
    lhs = plane.gauge(x + y) ** 4 - plane.gauge(x - y) ** 4
    rhs = 8.0 * (plane.gauge(x) ** 2 * g_functional(plane, x, y) + plane.gauge(y) ** 2 * g_functional(plane, y, x))
    return lhs - rhs
