"""Angle functions of a normed plane, each mapping a pair of nonzero vectors to [0, pi]."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence, Tuple

from .config import GUARD_BAND
from .errors import AngleDomainError
from .functionals import g_functional, q_functional, sine, star_pair
from .norm_core import NormedPlane, Vec2, det_form, require_nonzero
from .orthogonality import left_normal

WILSON_RATIOS = (0.5, 1.0, 2.0)


class AngleFn(str, Enum):
    """Tags of the available angle functions."""

    EUCLID_REF = "euclid_ref"
    P = "p"
    I = "i"  # noqa: E741
    THY = "thy"
    Q = "q"
    S = "s"
    B = "b"
    G = "g"
    GS = "gs"
    GI = "gi"
    DAF = "daf"
    WILSON = "wilson"
    MEASURE = "measure"


def _clamp(value: float, lo: float, hi: float, what: str) -> float:
    if value < lo - GUARD_BAND or value > hi + GUARD_BAND:
        raise AngleDomainError(f"{what} argument {value!r} outside [{lo}, {hi}]")
    return min(max(value, lo), hi)


def _arccos(value: float, what: str) -> float:
    return math.acos(_clamp(value, -1.0, 1.0, what))


def _arcsin(value: float, what: str) -> float:
    return math.asin(_clamp(value, -1.0, 1.0, what))


def ang_euclid_ref(x: Vec2, y: Vec2) -> float:
    """The Euclidean angle between x and y."""
    require_nonzero(x, y)
    return math.atan2(abs(x.cross(y)), x.dot(y))


def ang_p(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    """Cosine law: arccos((||x||^2 + ||y||^2 - ||x - y||^2) / (2 ||x|| ||y||))."""
    require_nonzero(x, y)
    gx, gy = plane.gauge(x), plane.gauge(y)
    return _arccos((gx * gx + gy * gy - plane.gauge(x - y) ** 2) / (2.0 * gx * gy), "ang_p")


def ang_i(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    """Polarization: arccos((||x + y||^2 - ||x - y||^2) / (4 ||x|| ||y||))."""
    require_nonzero(x, y)
    gx, gy = plane.gauge(x), plane.gauge(y)
    return _arccos((plane.gauge(x + y) ** 2 - plane.gauge(x - y) ** 2) / (4.0 * gx * gy), "ang_i")


def ang_thy(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    """Polarization of the normalized vectors."""
    require_nonzero(x, y)
    xh, yh = plane.normalize(x), plane.normalize(y)
    return _arccos(0.25 * (plane.gauge(xh + yh) ** 2 - plane.gauge(xh - yh) ** 2), "ang_thy")


def ang_q(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    """arcsin(q(x, y)), in [0, pi/2]."""
    return _arcsin(q_functional(plane, x, y), "ang_q")


def ang_s(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    """arcsin(s(x, y)) when [x, b(y)] >= 0, else pi - arcsin(s(x, y)).

    Needs a strictly convex plane for the left normal b(y).
    """
    s = _arcsin(sine(plane, x, y), "ang_s")
    if det_form(x, left_normal(plane, y)) >= 0.0:
        return s
    return math.pi - s


def ang_b(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    """arccos(lambda(x, y) ||y|| / ||x|| sgn(t**(x, y)))."""
    pair = star_pair(plane, x, y)
    lam = min(abs(pair.t_star), abs(pair.t_star_star - pair.t_star))
    sign = (pair.t_star_star > 0) - (pair.t_star_star < 0)
    return _arccos(lam * plane.gauge(y) / plane.gauge(x) * sign, "ang_b")


def ang_g(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    require_nonzero(x, y)
    return _arccos(g_functional(plane, x, y) / (plane.gauge(x) * plane.gauge(y)), "ang_g")


def ang_gs(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    require_nonzero(x, y)
    gxy = g_functional(plane, x, y) + g_functional(plane, y, x)
    return _arccos(gxy / (2.0 * plane.gauge(x) * plane.gauge(y)), "ang_gs")


def ang_gi(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    require_nonzero(x, y)
    gx, gy = plane.gauge(x), plane.gauge(y)
    num = gx * gx * g_functional(plane, x, y) + gy * gy * g_functional(plane, y, x)
    return _arccos(num / (gx * gy * (gx * gx + gy * gy)), "ang_gi")


def ang_daf(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    """Isosceles cosine law on the unit vectors: arccos(1 - ||x^ - y^||^2 / 2)."""
    require_nonzero(x, y)
    d = plane.gauge(plane.normalize(x) - plane.normalize(y))
    return _arccos(1.0 - 0.5 * d * d, "ang_daf")


@dataclass(frozen=True)
class WilsonScan:
    value_at_equal_ratio: float
    spread: float
    values: Tuple[float, ...]


def _three_point(plane: NormedPlane, xh: Vec2, yh: Vec2, r: float) -> float:
    return _arccos((r * r + 1.0 - plane.gauge(xh * r - yh) ** 2) / (2.0 * r), "wilson")


def wilson_scan(
    plane: NormedPlane,
    x: Vec2,
    y: Vec2,
    ratio_grid: Sequence[float] = WILSON_RATIOS,
) -> WilsonScan:
    """
    Three-point cosine-law angle at o for points r x^ and y^, scanned over r.

    The expression is invariant under scaling both points, so the limit as
    they approach o along their rays depends on the ratio r alone.

    Returns:
        WilsonScan with the value at r = 1 and the spread over ratio_grid
    """
    require_nonzero(x, y)
    ratios = tuple(ratio_grid)
    if not ratios or any(not r > 0 for r in ratios):
        raise ValueError("ratio_grid must be a nonempty sequence of positive ratios")
    xh, yh = plane.normalize(x), plane.normalize(y)
    values = tuple(_three_point(plane, xh, yh, r) for r in ratios)
    return WilsonScan(
        value_at_equal_ratio=_three_point(plane, xh, yh, 1.0),
        spread=max(values) - min(values),
        values=values,
    )


def ang_wilson(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    return wilson_scan(plane, x, y, (1.0,)).value_at_equal_ratio


ANGLE_FUNCTIONS = {
    AngleFn.EUCLID_REF: lambda plane, x, y: ang_euclid_ref(x, y),
    AngleFn.P: ang_p,
    AngleFn.I: ang_i,
    AngleFn.THY: ang_thy,
    AngleFn.Q: ang_q,
    AngleFn.S: ang_s,
    AngleFn.B: ang_b,
    AngleFn.G: ang_g,
    AngleFn.GS: ang_gs,
    AngleFn.GI: ang_gi,
    AngleFn.DAF: ang_daf,
    AngleFn.WILSON: ang_wilson,
}


def angle_function(
    plane: NormedPlane,
    fn,
    measure=None,
) -> Callable[[Vec2, Vec2], float]:
    """Bind an angle function to a plane, returning ang(x, y)."""
    fn = AngleFn(fn)
    if fn is AngleFn.MEASURE:
        if measure is None:
            raise ValueError("the measure angle needs an AngleMeasure")
        from .measures import measure_angle_function

        return measure_angle_function(measure)
    impl = ANGLE_FUNCTIONS[fn]
    return lambda x, y: impl(plane, x, y)


def angle(plane: NormedPlane, fn, x: Vec2, y: Vec2, measure: Optional[object] = None) -> float:
    """Evaluate the angle function tagged fn at (x, y)."""
    return angle_function(plane, fn, measure)(x, y)
