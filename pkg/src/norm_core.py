"""Normed planes: gauges of centrally symmetric convex bodies.

A plane is described by a :class:`PlaneSpec` (euclidean, inner product, lp,
polygon or regular polygon) and evaluated through a :class:`NormedPlane`,
which owns an immutable gauge kernel built eagerly at construction.
"""

import json
import math
from bisect import bisect_right
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np
from rich.console import Console

from .config import FD_STEPS, QUIET
from .errors import PlaneSpecError, ZeroVectorError

console = Console(stderr=True, quiet=QUIET)

TWO_PI = 2.0 * math.pi

# Irrational phase for sample grids so no sample lands on a polygon vertex
SAMPLE_OFFSET = (3.0 - math.sqrt(5.0)) / 2.0

PLANE_KINDS = ["euclidean", "inner_product", "lp", "polygon", "regular_polygon"]


@dataclass(frozen=True, slots=True)
class Vec2:
    """A vector of the plane."""

    x: float
    y: float

    def __post_init__(self):
        x, y = float(self.x), float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"Vec2 components must be finite, got ({x}, {y})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "Vec2":
        return Vec2(self.x / s, self.y / s)

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> float:
        return self.x * other.y - self.y * other.x

    def rot90(self) -> "Vec2":
        return Vec2(-self.y, self.x)

    def length(self) -> float:
        """Euclidean length."""
        return math.hypot(self.x, self.y)

    def angle(self) -> float:
        """Euclidean direction angle in [0, 2*pi)."""
        return math.atan2(self.y, self.x) % TWO_PI

    def is_zero(self) -> bool:
        return self.x == 0.0 and self.y == 0.0

    def as_tuple(self) -> Tuple[float, float]:
        return (self.x, self.y)

    @classmethod
    def from_angle(cls, theta: float, radius: float = 1.0) -> "Vec2":
        return cls(radius * math.cos(theta), radius * math.sin(theta))

    @classmethod
    def parse(cls, text: str) -> "Vec2":
        """Parse ``"a,b"`` into a vector."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 2:
            raise ValueError(f"expected 'a,b', got {text!r}")
        return cls(float(parts[0]), float(parts[1]))


ZERO = Vec2(0.0, 0.0)


def det_form(u: Vec2, v: Vec2) -> float:
    """The fixed determinant form [u, v] = u.x*v.y - u.y*v.x."""
    return u.x * v.y - u.y * v.x


def require_nonzero(*vectors: Vec2):
    """Raise ZeroVectorError if any vector is zero."""
    for v in vectors:
        if v.is_zero():
            raise ZeroVectorError("operation requires nonzero vectors")


# ---------------------------------------------------------------------------
# Plane specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlaneSpec:
    """Declarative description of a two-dimensional norm."""

    kind: str
    p: Optional[float] = None
    matrix: Optional[Tuple[Tuple[float, float], Tuple[float, float]]] = None
    vertices: Optional[Tuple[Vec2, ...]] = None
    n: Optional[int] = None
    rotation: float = 0.0

    def __post_init__(self):
        if self.kind not in PLANE_KINDS:
            raise PlaneSpecError("type", f"unknown norm type {self.kind!r}; expected one of {PLANE_KINDS}")
        if self.kind == "lp":
            self._validate_p()
        elif self.kind == "inner_product":
            self._validate_matrix()
        elif self.kind == "polygon":
            _validate_polygon(self.vertices or ())
        elif self.kind == "regular_polygon":
            if not isinstance(self.n, int) or self.n < 4 or self.n % 2:
                raise PlaneSpecError("n", f"regular polygon needs an even integer n >= 4, got {self.n!r}")
            if not math.isfinite(self.rotation):
                raise PlaneSpecError("rotation", "rotation must be finite")

    def _validate_p(self):
        if self.p is None or math.isnan(self.p):
            raise PlaneSpecError("p", "lp norm requires p")
        if self.p < 1:
            raise PlaneSpecError("p", f"p must be >= 1, got {self.p}")

    def _validate_matrix(self):
        m = self.matrix
        if m is None or len(m) != 2 or any(len(row) != 2 for row in m):
            raise PlaneSpecError("matrix", "inner product requires a 2x2 matrix")
        (a, b), (b2, c) = m
        for i, row in enumerate(m):
            for j, value in enumerate(row):
                if not math.isfinite(value):
                    raise PlaneSpecError(f"matrix[{i}][{j}]", "entries must be finite")
        if abs(b - b2) > 1e-12 * max(1.0, abs(b), abs(b2)):
            raise PlaneSpecError("matrix[1][0]", "matrix must be symmetric")
        if a <= 0 or a * c - b * b <= 0:
            raise PlaneSpecError("matrix", "matrix must be positive definite")

    # -- constructors ---------------------------------------------------

    @classmethod
    def euclidean(cls) -> "PlaneSpec":
        return cls("euclidean")

    @classmethod
    def lp(cls, p: float) -> "PlaneSpec":
        return cls("lp", p=float(p))

    @classmethod
    def inner_product(cls, matrix: Sequence[Sequence[float]]) -> "PlaneSpec":
        return cls("inner_product", matrix=tuple(tuple(float(v) for v in row) for row in matrix))

    @classmethod
    def polygon(cls, vertices: Sequence[Union[Vec2, Sequence[float]]]) -> "PlaneSpec":
        return cls("polygon", vertices=tuple(_as_vec(v, f"vertices[{i}]") for i, v in enumerate(vertices)))

    @classmethod
    def regular_polygon(cls, n: int, rotation: float = 0.0) -> "PlaneSpec":
        return cls("regular_polygon", n=n, rotation=float(rotation))

    @classmethod
    def from_dict(cls, data: Dict) -> "PlaneSpec":
        """Build a spec from its JSON form, reporting errors by field path."""
        if not isinstance(data, dict):
            raise PlaneSpecError("$", "norm specification must be a JSON object")
        kind = data.get("type")
        if kind is None:
            raise PlaneSpecError("type", "missing norm type")

        if kind == "euclidean":
            return cls.euclidean()
        if kind == "lp":
            if "p" not in data:
                raise PlaneSpecError("p", "lp norm requires p")
            return cls.lp(_parse_p(data["p"]))
        if kind == "inner_product":
            matrix = data.get("matrix")
            if not isinstance(matrix, list) or len(matrix) != 2:
                raise PlaneSpecError("matrix", "expected [[a, b], [b, c]]")
            for i, row in enumerate(matrix):
                if not isinstance(row, list) or len(row) != 2:
                    raise PlaneSpecError(f"matrix[{i}]", "expected a row of two numbers")
                for j, value in enumerate(row):
                    if not isinstance(value, (int, float)) or isinstance(value, bool):
                        raise PlaneSpecError(f"matrix[{i}][{j}]", "expected a number")
            return cls.inner_product(matrix)
        if kind == "polygon":
            vertices = data.get("vertices")
            if not isinstance(vertices, list):
                raise PlaneSpecError("vertices", "expected a list of [x, y] pairs")
            return cls.polygon(vertices)
        if kind == "regular_polygon":
            n = data.get("n")
            if not isinstance(n, int) or isinstance(n, bool):
                raise PlaneSpecError("n", f"expected an integer, got {n!r}")
            rotation = data.get("rotation", 0.0)
            if not isinstance(rotation, (int, float)) or isinstance(rotation, bool):
                raise PlaneSpecError("rotation", "expected a number")
            return cls.regular_polygon(n, rotation)

        raise PlaneSpecError("type", f"unknown norm type {kind!r}; expected one of {PLANE_KINDS}")

    def to_dict(self) -> Dict:
        if self.kind == "lp":
            return {"type": "lp", "p": "inf" if math.isinf(self.p) else self.p}
        if self.kind == "inner_product":
            return {"type": "inner_product", "matrix": [list(row) for row in self.matrix]}
        if self.kind == "polygon":
            return {"type": "polygon", "vertices": [list(v.as_tuple()) for v in self.vertices]}
        if self.kind == "regular_polygon":
            return {"type": "regular_polygon", "n": self.n, "rotation": self.rotation}
        return {"type": "euclidean"}

    def polygon_vertices(self) -> Tuple[Vec2, ...]:
        """Counterclockwise vertices for polygonal specs."""
        if self.kind == "polygon":
            return self.vertices
        if self.kind == "regular_polygon":
            step = TWO_PI / self.n
            return tuple(Vec2.from_angle(self.rotation + k * step) for k in range(self.n))
        raise ValueError(f"{self.kind} norm has no vertices")


def _parse_p(value) -> float:
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "infinity"):
            return math.inf
        raise PlaneSpecError("p", f"expected a number or 'inf', got {value!r}")
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise PlaneSpecError("p", f"expected a number or 'inf', got {value!r}")
    return float(value)


def _as_vec(value, path: str) -> Vec2:
    if isinstance(value, Vec2):
        return value
    try:
        x, y = value
        return Vec2(float(x), float(y))
    except (TypeError, ValueError):
        raise PlaneSpecError(path, f"expected a finite [x, y] pair, got {value!r}")


def _validate_polygon(vertices: Tuple[Vec2, ...]):
    n = len(vertices)
    if n < 4 or n % 2:
        raise PlaneSpecError("vertices", f"a centrally symmetric polygon needs an even number >= 4 of vertices, got {n}")

    scale = max(v.length() for v in vertices)
    for i, v in enumerate(vertices):
        if not any((v + w).length() <= 1e-9 * scale for w in vertices):
            raise PlaneSpecError(f"vertices[{i}]", f"vertex {v.as_tuple()} has no opposite vertex")

    for i in range(n):
        a, b, c = vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]
        if det_form(b - a, c - b) <= 1e-12 * scale * scale:
            raise PlaneSpecError(
                f"vertices[{(i + 1) % n}]",
                "vertices must be in strictly convex position, counterclockwise",
            )
        if det_form(a, b) <= 0:
            raise PlaneSpecError(f"vertices[{(i + 1) % n}]", "origin must be interior; vertices must wind counterclockwise")

    # each step turns by less than pi, so one winding means the steps sum to 2 pi
    winding = sum(math.atan2(det_form(vertices[i], vertices[(i + 1) % n]), vertices[i].dot(vertices[(i + 1) % n]))
                  for i in range(n))
    if abs(winding - TWO_PI) > 1e-9:
        raise PlaneSpecError(
            "vertices",
            f"vertices must wind once around the origin, got {winding / TWO_PI:.3g} turns",
        )


# ---------------------------------------------------------------------------
# Gauge kernels
# ---------------------------------------------------------------------------

class GaugeKernel:
    """Gauge, support function and one-sided derivatives of one convex body."""

    strictly_convex = False
    smooth = False

    def gauge(self, x: float, y: float) -> float:
        raise NotImplementedError

    def gauge_array(self, pts: np.ndarray) -> np.ndarray:
        return np.array([self.gauge(px, py) for px, py in pts])

    def support(self, x: float, y: float) -> float:
        raise NotImplementedError

    def one_sided_derivative(self, p: Vec2, d: Vec2) -> float:
        return self.numeric_one_sided_derivative(p, d)

    def numeric_one_sided_derivative(self, p: Vec2, d: Vec2) -> float:
        """Forward difference quotients with Richardson extrapolation.

        Inputs are normalized first (D+ is 0-homogeneous in p and
        1-homogeneous in d), so the fixed steps suit any magnitude.
        """
        if p.is_zero():
            return self.gauge(d.x, d.y)
        gd = self.gauge(d.x, d.y)
        if gd == 0.0:
            return 0.0
        gp = self.gauge(p.x, p.y)
        ux, uy = p.x / gp, p.y / gp
        wx, wy = d.x / gd, d.y / gd
        h1, h2 = FD_STEPS
        q1 = (self.gauge(ux + h1 * wx, uy + h1 * wy) - 1.0) / h1
        q2 = (self.gauge(ux + h2 * wx, uy + h2 * wy) - 1.0) / h2
        # h2 = h1/2, so this cancels the O(h) term
        return gd * (q2 + (q2 - q1) * h2 / (h1 - h2))

    def normal(self, p: Vec2) -> Vec2:
        raise NotImplementedError

    def break_angles(self) -> Tuple[float, ...]:
        return ()


class InnerProductKernel(GaugeKernel):
    """sqrt(v^T M v); the identity matrix gives the Euclidean plane."""

    strictly_convex = True
    smooth = True

    def __init__(self, a: float, b: float, c: float, euclidean: bool = False):
        self.a, self.b, self.c = a, b, c
        self.det = a * c - b * b
        self.euclidean = euclidean

    def gauge(self, x, y):
        if self.euclidean:
            return math.hypot(x, y)
        return math.sqrt(max(self.a * x * x + 2.0 * self.b * x * y + self.c * y * y, 0.0))

    def gauge_array(self, pts):
        x, y = pts[:, 0], pts[:, 1]
        if self.euclidean:
            return np.hypot(x, y)
        return np.sqrt(np.maximum(self.a * x * x + 2.0 * self.b * x * y + self.c * y * y, 0.0))

    def support(self, x, y):
        if self.euclidean:
            return math.hypot(x, y)
        q = (self.c * x * x - 2.0 * self.b * x * y + self.a * y * y) / self.det
        return math.sqrt(max(q, 0.0))

    def one_sided_derivative(self, p, d):
        g = self.gauge(p.x, p.y)
        if g == 0.0:
            return self.gauge(d.x, d.y)
        pmd = self.a * p.x * d.x + self.b * (p.x * d.y + p.y * d.x) + self.c * p.y * d.y
        return pmd / g

    def normal(self, p):
        g = self.gauge(p.x, p.y)
        return Vec2((self.a * p.x + self.b * p.y) / g, (self.b * p.x + self.c * p.y) / g)


class LpKernel(GaugeKernel):
    """The lp norm (|x|^p + |y|^p)^(1/p), including p = 1 and p = inf."""

    def __init__(self, p: float):
        self.p = p
        self.strictly_convex = self.smooth = 1.0 < p < math.inf
        if p == 1.0:
            self.q = math.inf
        elif math.isinf(p):
            self.q = 1.0
        else:
            self.q = p / (p - 1.0)

    @staticmethod
    def _lp(x: float, y: float, p: float) -> float:
        ax, ay = abs(x), abs(y)
        if p == 1.0:
            return ax + ay
        m = max(ax, ay)
        if math.isinf(p) or m == 0.0:
            return m
        return m * ((ax / m) ** p + (ay / m) ** p) ** (1.0 / p)

    def gauge(self, x, y):
        return self._lp(x, y, self.p)

    def gauge_array(self, pts):
        a = np.abs(pts)
        if self.p == 1.0:
            return a.sum(axis=1)
        m = a.max(axis=1)
        if math.isinf(self.p):
            return m
        safe = np.where(m > 0, m, 1.0)
        return m * ((a / safe[:, None]) ** self.p).sum(axis=1) ** (1.0 / self.p)

    def support(self, x, y):
        return self._lp(x, y, self.q)

    def one_sided_derivative(self, p, d):
        if p.is_zero():
            return self.gauge(d.x, d.y)
        coords = ((p.x, d.x), (p.y, d.y))
        if self.p == 1.0:
            return sum((dc if pc > 0 else -dc) if pc != 0.0 else abs(dc) for pc, dc in coords)
        m = max(abs(p.x), abs(p.y))
        if math.isinf(self.p):
            return max((dc if pc > 0 else -dc) for pc, dc in coords if abs(pc) >= m * (1.0 - 1e-12))
        grad = self._gradient(p)
        return grad.x * d.x + grad.y * d.y

    def _gradient(self, p: Vec2) -> Vec2:
        m = max(abs(p.x), abs(p.y))
        ux, uy = p.x / m, p.y / m
        norm = self._lp(ux, uy, self.p)
        scale = norm ** (self.p - 1.0)
        return Vec2(
            math.copysign(abs(ux) ** (self.p - 1.0), ux) / scale,
            math.copysign(abs(uy) ** (self.p - 1.0), uy) / scale,
        )

    def normal(self, p):
        if self.p == 1.0:
            return Vec2(float(np.sign(p.x)), float(np.sign(p.y)))
        if math.isinf(self.p):
            if abs(p.x) >= abs(p.y):
                return Vec2(math.copysign(1.0, p.x), 0.0)
            return Vec2(0.0, math.copysign(1.0, p.y))
        return self._gradient(p)

    def break_angles(self):
        if not self.smooth:
            return tuple(k * math.pi / 4.0 for k in range(8))
        if self.p == 2.0:
            return ()
        # |t|^(p-1) in the gradient is not smooth on the axes
        return tuple(k * math.pi / 2.0 for k in range(4))


class PolygonKernel(GaugeKernel):
    """Gauge of a centrally symmetric polygon.

    Edge i runs from vertex i to vertex i+1 and carries the normal n_i with
    <n_i, v_i> = <n_i, v_{i+1}> = 1, so the gauge on the cone of that edge
    is the linear functional <n_i, .>.
    """

    def __init__(self, vertices: Sequence[Vec2]):
        angles = [v.angle() for v in vertices]
        start = angles.index(min(angles))
        self.vertices = tuple(vertices[start:]) + tuple(vertices[:start])
        self.angles = angles[start:] + angles[:start]
        self.angle_array = np.array(self.angles)

        count = len(self.vertices)
        normals = []
        for i in range(count):
            v, w = self.vertices[i], self.vertices[(i + 1) % count]
            det = det_form(v, w)
            normals.append(Vec2((w.y - v.y) / det, -(w.x - v.x) / det))
        self.normals = tuple(normals)
        self.normal_array = np.array([n.as_tuple() for n in normals])

    def _edge(self, x: float, y: float) -> int:
        theta = math.atan2(y, x) % TWO_PI
        return (bisect_right(self.angles, theta) - 1) % len(self.vertices)

    def gauge(self, x, y):
        if x == 0.0 and y == 0.0:
            return 0.0
        n = self.normals[self._edge(x, y)]
        return max(n.x * x + n.y * y, 0.0)

    def gauge_array(self, pts):
        theta = np.arctan2(pts[:, 1], pts[:, 0]) % TWO_PI
        idx = (np.searchsorted(self.angle_array, theta, side="right") - 1) % len(self.vertices)
        values = (self.normal_array[idx] * pts).sum(axis=1)
        return np.maximum(values, 0.0)

    def support(self, x, y):
        return max(v.x * x + v.y * y for v in self.vertices)

    def one_sided_derivative(self, p, d):
        if p.is_zero():
            return self.gauge(d.x, d.y)
        dots = [n.x * p.x + n.y * p.y for n in self.normals]
        g = max(dots)
        return max(
            n.x * d.x + n.y * d.y
            for n, value in zip(self.normals, dots)
            if value >= g - 1e-12 * abs(g)
        )

    def normal(self, p):
        return self.normals[self._edge(p.x, p.y)]

    def break_angles(self):
        found = set(self.angles)
        for n in self.normals:
            a = n.angle()
            found.update({a, (a + math.pi / 2.0) % TWO_PI, (a - math.pi / 2.0) % TWO_PI})
        return tuple(sorted(found))


def _build_kernel(spec: PlaneSpec) -> GaugeKernel:
    if spec.kind == "euclidean":
        return InnerProductKernel(1.0, 0.0, 1.0, euclidean=True)
    if spec.kind == "inner_product":
        (a, b), (_, c) = spec.matrix
        return InnerProductKernel(a, b, c)
    if spec.kind == "lp":
        return LpKernel(spec.p)
    return PolygonKernel(spec.polygon_vertices())


# ---------------------------------------------------------------------------
# Normed planes
# ---------------------------------------------------------------------------

class NormedPlane:
    """A Minkowski plane given by the gauge of its unit ball."""

    def __init__(self, spec: PlaneSpec):
        self.spec = spec
        self.kernel = _build_kernel(spec)
        self.strictly_convex = self.kernel.strictly_convex
        self.smooth = self.kernel.smooth

    def __repr__(self) -> str:
        return f"NormedPlane({self.spec.to_dict()})"

    @property
    def name(self) -> str:
        spec = self.spec
        if spec.kind == "lp":
            return f"lp{'inf' if math.isinf(spec.p) else format(spec.p, 'g')}"
        if spec.kind == "regular_polygon":
            return f"regular_{spec.n}gon"
        return spec.kind

    def gauge(self, v: Vec2) -> float:
        return self.kernel.gauge(v.x, v.y)

    def support(self, u: Vec2) -> float:
        require_nonzero(u)
        return self.kernel.support(u.x, u.y)

    def antinorm(self, v: Vec2) -> float:
        if v.is_zero():
            return 0.0
        return self.kernel.support(-v.y, v.x)

    def normalize(self, v: Vec2) -> Vec2:
        require_nonzero(v)
        return v / self.gauge(v)

    def unit_circle_point(self, theta: float) -> Vec2:
        c, s = math.cos(theta), math.sin(theta)
        g = self.kernel.gauge(c, s)
        return Vec2(c / g, s / g)

    def unit_circle_points(self, n: int, offset: float = SAMPLE_OFFSET) -> np.ndarray:
        """n unit vectors at Euclidean angles 2*pi*(k + offset)/n."""
        theta = TWO_PI * (np.arange(n) + offset) / n
        pts = np.column_stack([np.cos(theta), np.sin(theta)])
        return pts / self.kernel.gauge_array(pts)[:, None]

    def sample_angles(self, n: int, offset: float = SAMPLE_OFFSET) -> np.ndarray:
        return TWO_PI * (np.arange(n) + offset) / n

    def one_sided_derivative(self, p: Vec2, d: Vec2) -> float:
        """D+(p; d), the right derivative of t -> ||p + t d|| at t = 0."""
        return self.kernel.one_sided_derivative(p, d)

    def normal(self, p: Vec2) -> Vec2:
        """An outer normal functional at p/||p||; rot90 of it is Birkhoff-orthogonal to p."""
        require_nonzero(p)
        return self.kernel.normal(p)

    def break_angles(self) -> Tuple[float, ...]:
        return self.kernel.break_angles()


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------

def gauge(plane: NormedPlane, v: Vec2) -> float:
    """||v|| in the given plane."""
    return plane.gauge(v)


def unit_circle_point(plane: NormedPlane, theta: float) -> Vec2:
    """The point of the unit circle in Euclidean direction theta."""
    return plane.unit_circle_point(theta)


def support(plane: NormedPlane, u: Vec2) -> float:
    """Support function h_B(u) = sup{<u, x> : x in B}."""
    return plane.support(u)


def antinorm(plane: NormedPlane, v: Vec2) -> float:
    """||v||_a = sup{|[v, y]| : y in S}."""
    return plane.antinorm(v)


@dataclass(frozen=True)
class RadonCheck:
    is_radon: bool
    scale: float
    spread: float


def radon_check(plane: NormedPlane, n_samples: int = 720, tol: float = 1e-9) -> RadonCheck:
    """Test whether the antinorm is proportional to the norm on the unit circle."""
    if n_samples < 8:
        raise ValueError(f"n_samples must be at least 8, got {n_samples}")
    ratios = [plane.antinorm(Vec2(px, py)) for px, py in plane.unit_circle_points(n_samples)]
    scale = sum(ratios) / len(ratios)
    spread = max(ratios) - min(ratios)
    return RadonCheck(is_radon=spread <= tol * scale, scale=scale, spread=spread)


def make_plane(spec: Union[PlaneSpec, Dict]) -> NormedPlane:
    """Build a plane from a spec or its JSON dictionary."""
    if isinstance(spec, dict):
        spec = PlaneSpec.from_dict(spec)
    return NormedPlane(spec)


def load_plane(path: Union[str, Path]) -> NormedPlane:
    """Load a plane from a JSON norm specification file."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise PlaneSpecError("$", f"{path.name} is not valid JSON: {e}")
    return make_plane(data)
