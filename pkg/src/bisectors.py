"""Angular bisectors: Busemann, Glogovskii, measure-based and D-A-F."""

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from .angles import ang_daf, ang_euclid_ref
from .errors import DependentVectorsError, SearchError
from .measures import AngleMeasure, measure_arc
from .norm_core import SAMPLE_OFFSET, NormedPlane, Vec2, require_nonzero
from .search import find_root, golden_section, sign_changes

BISECTOR_KINDS = ["busemann", "glogovskii", "measure", "daf"]
GLOGOVSKII_GRID = 64


@dataclass(frozen=True)
class Ray:
    """The ray from o through a unit direction.

    ``ambiguous`` is set when the construction found several candidate rays.
    """

    direction: Vec2
    ambiguous: bool = False


def _cone_arc(x: Vec2, y: Vec2) -> Tuple[float, float]:
    """Start angle and Euclidean length of the counterclockwise arc spanning cone{x, y}."""
    require_nonzero(x, y)
    cross = x.cross(y)
    if abs(cross) <= 1e-14 * x.length() * y.length():
        raise DependentVectorsError(f"bisector of dependent vectors {x.as_tuple()} and {y.as_tuple()}")
    first, second = (x, y) if cross > 0 else (y, x)
    start = first.angle()
    return start, (second.angle() - start) % (2.0 * math.pi)


def busemann_bisector(plane: NormedPlane, x: Vec2, y: Vec2) -> Ray:
    """Direction of the midpoint of the unit vectors x^ and y^."""
    _cone_arc(x, y)
    return Ray(plane.normalize(plane.normalize(x) + plane.normalize(y)))


def distance_to_ray(plane: NormedPlane, p: Vec2, u: Vec2) -> float:
    """min over s >= 0 of ||p - s u||."""
    bound = 2.0 * plane.gauge(p) / plane.gauge(u)
    if bound == 0.0:
        return 0.0
    _, f_min = golden_section(lambda s: plane.gauge(p - u * s), 0.0, bound)
    return f_min


def _root_on_arc(
    plane: NormedPlane,
    x: Vec2,
    y: Vec2,
    difference: Callable[[Vec2], float],
    what: str,
    preferred: Optional[Vec2] = None,
    tol: float = 1e-12,
) -> Ray:
    start, length = _cone_arc(x, y)

    def f(phi: float) -> float:
        return difference(plane.unit_circle_point(start + phi))

    if preferred is not None and abs(difference(preferred)) <= tol:
        return Ray(preferred)

    grid = [length * k / GLOGOVSKII_GRID for k in range(GLOGOVSKII_GRID + 1)]
    brackets = sign_changes(f, grid)
    if not brackets:
        raise SearchError(f"no sign change for the {what} bisector on the arc of length {length:.6g}")
    roots = [find_root(f, a, b, what=f"{what} bisector") for a, b in brackets]
    target = length / 2.0 if preferred is None else (preferred.angle() - start) % (2.0 * math.pi)
    best = min(roots, key=lambda phi: abs(phi - target))
    return Ray(plane.unit_circle_point(start + best), ambiguous=len(roots) > 1)


def glogovskii_bisector(plane: NormedPlane, x: Vec2, y: Vec2, tol: float = 1e-12) -> Ray:
    """
    The ray of points at equal distance from the rays through x and y.

    Several zeros can occur on flat pieces of polygonal circles; the one
    nearest the Busemann direction is returned with ``ambiguous`` set.
    """
    busemann = busemann_bisector(plane, x, y).direction

    def difference(p: Vec2) -> float:
        return distance_to_ray(plane, p, x) - distance_to_ray(plane, p, y)

    return _root_on_arc(plane, x, y, difference, "Glogovskii", preferred=busemann, tol=tol)


def measure_bisector(measure: AngleMeasure, x: Vec2, y: Vec2) -> Ray:
    """The direction splitting the cone arc into two halves of equal measure."""
    plane = measure.plane
    start, length = _cone_arc(x, y)
    half = 0.5 * measure_arc(measure, start, start + length)
    phi = find_root(lambda t: measure_arc(measure, start, start + t) - half, 0.0, length, what="measure bisector")
    return Ray(plane.unit_circle_point(start + phi))


def daf_bisector(plane: NormedPlane, x: Vec2, y: Vec2, tol: float = 1e-12) -> Ray:
    """The direction z in cone{x, y} with ang_daf(x, z) = ang_daf(y, z)."""

    def difference(z: Vec2) -> float:
        return ang_daf(plane, x, z) - ang_daf(plane, y, z)

    return _root_on_arc(plane, x, y, difference, "D-A-F", tol=tol)


@dataclass(frozen=True)
class Coincidence:
    coincide: bool
    max_gap: float
    witness: Tuple[Vec2, Vec2]


def coincidence_pairs(plane: NormedPlane, n_pairs: int):
    """Deterministic unit pairs spread over start directions and opening angles."""
    for k, theta in enumerate(plane.sample_angles(n_pairs)):
        opening = math.pi * (0.1 + 0.8 * ((k * SAMPLE_OFFSET + 0.5) % 1.0))
        yield plane.unit_circle_point(theta), plane.unit_circle_point(theta + opening)


def radon_coincidence(plane: NormedPlane, n_pairs: int = 24, tol: float = 1e-7) -> Coincidence:
    """Largest Euclidean angle between the Busemann and Glogovskii bisectors over sampled pairs."""
    if n_pairs < 10:
        raise ValueError(f"n_pairs must be at least 10, got {n_pairs}")
    worst, witness = -1.0, None
    for x, y in coincidence_pairs(plane, n_pairs):
        gap = ang_euclid_ref(
            busemann_bisector(plane, x, y).direction,
            glogovskii_bisector(plane, x, y).direction,
        )
        if gap > worst:
            worst, witness = gap, (x, y)
    return Coincidence(coincide=worst <= tol, max_gap=worst, witness=witness)
