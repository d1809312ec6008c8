"""
Numeric audits of angle-function axioms and characterization detectors.

Every audit searches a deterministic grid of vector pairs for the largest
violation of a law, refines the worst pair by coordinate ascent, and returns
a LawReport carrying the witness that reproduces the violation.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from .angles import ang_daf, ang_euclid_ref, ang_i, ang_p, ang_s, angle_function, wilson_scan
from .bisectors import radon_coincidence
from .config import DEFAULT_SEED, QUIET, SEARCH_TOL, WITNESS_GRID
from .errors import ConvexityError, DetectorDisagreement, MinkowskiError, SearchError
from .functionals import star_pair
from .measures import AngleMeasure, ang_mu
from .norm_core import SAMPLE_OFFSET, TWO_PI, NormedPlane, Vec2, radon_check
from .orthogonality import birkhoff_normal, birkhoff_symmetry
from .search import find_root, refine_maximum

console = Console(stderr=True, quiet=QUIET)

SCALAR_PAIRS = ((0.5, 2.0), (2.0, 3.7), (3.7, 0.5))
CONE_WEIGHTS = ((1.0, 1.0), (0.5, 2.0), (2.0, 0.5))
MAGNITUDES = (1.0, 2.0, 0.5)

NONDEGENERACY_EPS = 1e-6
CONTINUITY_STEP = 1e-2
CONTINUITY_HALVINGS = 6
CONGRUENCE_SHIFT = math.pi * SAMPLE_OFFSET

DETECTOR_TOL = 1e-6
FLATNESS_GAP = 0.1
COINCIDENCE_TOL = 1e-7

AXIOM_NAMES = {
    "axiom1": "continuity",
    "axiom2": "symmetry",
    "axiom3": "homogeneity",
    "axiom4": "additivity",
    "axiom5": "non-degeneracy",
    "axiom6": "parallelism",
    "axiom7": "supplementarity",
    "axiom8": "opposite invariance",
    "axiom9": "congruence (angles)",
    "axiom10": "congruence (sides)",
}

AngleCallable = Callable[[Vec2, Vec2], float]


@dataclass(frozen=True)
class LawReport:
    """Largest violation of one law over the sampled inputs."""

    law_id: str
    max_violation: float
    witness: Tuple[Vec2, ...]
    passed: bool
    n_samples: int
    tol: float

    def to_dict(self) -> Dict:
        return {
            "law_id": self.law_id,
            "max_violation": self.max_violation,
            "witness": [list(v.as_tuple()) for v in self.witness],
            "pass": self.passed,
            "n_samples": self.n_samples,
            "tol": self.tol,
        }


@dataclass(frozen=True)
class Sampler:
    """
    Deterministic pair sampler.

    Yields every ordered pair of distinct directions on a grid x grid
    lattice (magnitudes cycling through 1, 2 and 1/2 so ratio effects show
    up), followed by n_random pairs drawn from a generator seeded with seed.
    """

    grid: int = WITNESS_GRID
    seed: int = DEFAULT_SEED
    n_random: int = 16
    refine: bool = True

    def __post_init__(self):
        if self.grid < 4:
            raise ValueError(f"grid must be at least 4, got {self.grid}")
        if self.n_random < 0:
            raise ValueError(f"n_random must be non-negative, got {self.n_random}")

    def angles(self) -> np.ndarray:
        return TWO_PI * (np.arange(self.grid) + SAMPLE_OFFSET) / self.grid

    def vectors(self, plane: NormedPlane) -> List[Vec2]:
        return [plane.unit_circle_point(float(t)) for t in self.angles()]

    def parameters(self) -> Iterator[Tuple[float, float, float, float]]:
        """(theta_x, theta_y, r_x, r_y) for every sampled pair."""
        angles = self.angles()
        for i, tx in enumerate(angles):
            for j, ty in enumerate(angles):
                if i != j:
                    yield float(tx), float(ty), 1.0, MAGNITUDES[(i + j) % 3]
        rng = np.random.default_rng(self.seed)
        for _ in range(self.n_random):
            tx, ty = rng.uniform(0.0, TWO_PI, 2)
            rx, ry = np.exp(rng.uniform(-math.log(2.0), math.log(2.0), 2))
            yield float(tx), float(ty), float(rx), float(ry)

    def coarser(self, factor: int = 4) -> "Sampler":
        """A smaller sampler for expensive detectors.

        Keeps a share of the random pairs: a coarse grid alone can sit on
        the symmetry orbits of the unit ball and hide a violation.
        """
        return Sampler(
            grid=max(4, self.grid // factor),
            seed=self.seed,
            n_random=self.n_random // factor,
            refine=self.refine,
        )


def _pair(plane: NormedPlane, params: Tuple[float, float, float, float]) -> Tuple[Vec2, Vec2]:
    tx, ty, rx, ry = params
    return plane.unit_circle_point(tx) * rx, plane.unit_circle_point(ty) * ry


def _dependent(x: Vec2, y: Vec2) -> bool:
    return abs(x.cross(y)) <= 1e-12 * x.length() * y.length()


def worst_case(
    plane: NormedPlane,
    sampler: Sampler,
    violation: Callable[[Vec2, Vec2], float],
    tol: float,
    skip_dependent: bool = False,
) -> Tuple[float, Tuple[Vec2, Vec2], int]:
    """
    Maximize violation over the sampler's pairs.

    Ties keep the earliest pair. When the grid maximum exceeds tol and the
    sampler refines, the two directions are tuned by coordinate ascent; the
    magnitudes stay fixed.

    Returns:
        (max_violation, witness pair, number of evaluated pairs)

    Raises:
        SearchError: if the sampler yields no admissible pair
    """
    best, best_params, count = -math.inf, None, 0
    for params in sampler.parameters():
        x, y = _pair(plane, params)
        if skip_dependent and _dependent(x, y):
            continue
        value = violation(x, y)
        count += 1
        if value > best:
            best, best_params = value, params
    if best_params is None:
        raise SearchError("sampler produced no admissible pairs")

    if sampler.refine and best > tol:
        rx, ry = best_params[2], best_params[3]

        def objective(angles: Tuple[float, float]) -> float:
            x, y = _pair(plane, (angles[0], angles[1], rx, ry))
            if skip_dependent and _dependent(x, y):
                return -math.inf
            try:
                return violation(x, y)
            except MinkowskiError:
                return -math.inf

        step = math.pi / sampler.grid
        (tx, ty), best = refine_maximum(objective, best_params[:2], (step, step))
        best_params = (tx, ty, rx, ry)
    return best, _pair(plane, best_params), count


def _report(
    law_id: str,
    plane: NormedPlane,
    sampler: Sampler,
    violation: Callable[[Vec2, Vec2], float],
    tol: float,
    skip_dependent: bool = False,
) -> LawReport:
    value, witness, count = worst_case(plane, sampler, violation, tol, skip_dependent)
    return LawReport(law_id, value, witness, value <= tol, count, tol)


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------

def continuity_violation(ang: AngleCallable, x: Vec2, y: Vec2) -> float:
    """Change at the finest perturbation beyond what a shrinking modulus allows."""
    base = ang(x, y)
    delta = y.rot90()
    coarse = abs(ang(x, y + delta * CONTINUITY_STEP) - base)
    fine = abs(ang(x, y + delta * (CONTINUITY_STEP / 2 ** CONTINUITY_HALVINGS)) - base)
    return max(0.0, fine - coarse / 2 ** (CONTINUITY_HALVINGS / 2))


def symmetry_violation(ang: AngleCallable, x: Vec2, y: Vec2) -> float:
    return abs(ang(x, y) - ang(y, x))


def homogeneity_violation(ang: AngleCallable, x: Vec2, y: Vec2) -> float:
    base = ang(x, y)
    return max(abs(ang(x * a, y * b) - base) for a, b in SCALAR_PAIRS)


def additivity_violation(ang: AngleCallable, x: Vec2, y: Vec2) -> float:
    base = ang(x, y)
    return max(abs(ang(x, x * a + y * b) + ang(x * a + y * b, y) - base) for a, b in CONE_WEIGHTS)


def nondegeneracy_violation(ang: AngleCallable, x: Vec2, y: Vec2) -> float:
    """Relative shortfall below eps of the angle between independent vectors."""
    return max(0.0, NONDEGENERACY_EPS - ang(x, y)) / NONDEGENERACY_EPS


def parallelism_violation(ang: AngleCallable, x: Vec2, y: Vec2) -> float:
    return max(abs(ang(x, x * 2.0)), abs(ang(y, y * -0.5) - math.pi))


def supplementarity_violation(ang: AngleCallable, x: Vec2, y: Vec2) -> float:
    return abs(ang(x, y) + ang(y, -x) - math.pi)


def opposite_violation(ang: AngleCallable, x: Vec2, y: Vec2) -> float:
    return abs(ang(-x, -y) - ang(x, y))


AXIOM_CHECKS = {
    "axiom1": (continuity_violation, False),
    "axiom2": (symmetry_violation, False),
    "axiom3": (homogeneity_violation, False),
    "axiom4": (additivity_violation, True),
    "axiom5": (nondegeneracy_violation, True),
    "axiom6": (parallelism_violation, False),
    "axiom7": (supplementarity_violation, False),
    "axiom8": (opposite_violation, False),
}


def audit_axioms(
    plane: NormedPlane,
    fn,
    sampler: Optional[Sampler] = None,
    tol: float = SEARCH_TOL,
    measure: Optional[AngleMeasure] = None,
) -> List[LawReport]:
    """Audit the structural and positional axioms 1-8 for one angle function."""
    sampler = sampler or Sampler()
    ang = angle_function(plane, fn, measure)
    reports = []
    for law_id, (check, skip_dependent) in AXIOM_CHECKS.items():
        reports.append(_report(law_id, plane, sampler, lambda x, y: check(ang, x, y), tol, skip_dependent))
    return reports


def congruent_partner(plane: NormedPlane, ang: AngleCallable, x: Vec2, y: Vec2) -> Tuple[Vec2, Vec2]:
    """
    A pair (v, w) with ||v|| = ||x||, ||w|| = ||y|| and ang(v, w) = ang(x, y).

    v is x's unit direction turned by a fixed offset; w is found by bisection
    along the arc of the circle of radius ||y|| on the positive side of v.
    """
    target = ang(x, y)
    gx, gy = plane.gauge(x), plane.gauge(y)
    theta_v = x.angle() + CONGRUENCE_SHIFT
    v = plane.unit_circle_point(theta_v) * gx

    def mismatch(phi: float) -> float:
        return ang(v, plane.unit_circle_point(theta_v + phi) * gy) - target

    try:
        phi = find_root(mismatch, 0.0, math.pi, what="congruent partner")
    except SearchError as e:
        raise SearchError(f"no congruent partner for x={x.as_tuple()}, y={y.as_tuple()}: {e}")
    return v, plane.unit_circle_point(theta_v + phi) * gy


def audit_congruence(
    plane: NormedPlane,
    fn,
    sampler: Optional[Sampler] = None,
    tol: float = SEARCH_TOL,
    measure: Optional[AngleMeasure] = None,
) -> Tuple[LawReport, LawReport]:
    """Audit congruence properties 9 (angles) and 10 (sides).

    Raises:
        ConvexityError: the arc bisection needs a strictly convex plane
    """
    if not plane.strictly_convex:
        raise ConvexityError("congruence audits require a strictly convex plane")
    sampler = sampler or Sampler()
    ang = angle_function(plane, fn, measure)
    partner = lru_cache(maxsize=None)(lambda x, y: congruent_partner(plane, ang, x, y))

    def angle_gap(x: Vec2, y: Vec2) -> float:
        v, w = partner(x, y)
        return abs(ang(x - y, -y) - ang(v - w, -w))

    def side_gap(x: Vec2, y: Vec2) -> float:
        v, w = partner(x, y)
        return abs(plane.gauge(x - y) - plane.gauge(v - w))

    return (
        _report("axiom9", plane, sampler, angle_gap, tol, skip_dependent=True),
        _report("axiom10", plane, sampler, side_gap, tol, skip_dependent=True),
    )


# ---------------------------------------------------------------------------
# Characterization detectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DetectorResult:
    """One detector's verdict; verdict None means the detector does not apply."""

    name: str
    verdict: Optional[bool]
    value: float
    witness: Tuple[Vec2, ...] = ()

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "value": self.value,
            "witness": [list(v.as_tuple()) for v in self.witness],
        }


@dataclass(frozen=True)
class Characterization:
    plane: str
    strictly_convex: bool
    radon: bool
    euclidean: bool
    detectors: Dict[str, Tuple[DetectorResult, ...]]

    def to_dict(self) -> Dict:
        return {
            "plane": self.plane,
            "strictly_convex": self.strictly_convex,
            "radon": self.radon,
            "euclidean": self.euclidean,
            "detectors": {key: [d.to_dict() for d in results] for key, results in self.detectors.items()},
        }


def _agreed_verdict(plane: NormedPlane, prop: str, results: Tuple[DetectorResult, ...]) -> bool:
    verdicts = {r.verdict for r in results if r.verdict is not None}
    if len(verdicts) != 1:
        summary = ", ".join(f"{r.name}={r.verdict} ({r.value:.3g})" for r in results)
        raise DetectorDisagreement(f"{prop} detectors disagree on {plane.name}: {summary}")
    return verdicts.pop()


def _detector(name: str, plane: NormedPlane, sampler: Sampler, violation, skip_dependent=False) -> DetectorResult:
    value, witness, _ = worst_case(plane, sampler, violation, DETECTOR_TOL, skip_dependent)
    return DetectorResult(name, value <= DETECTOR_TOL, value, witness)


def _flatness_pairs(plane: NormedPlane, sampler: Sampler) -> Iterator[Tuple[float, float]]:
    """Direction pairs whose chord would lie on a flat piece of the unit circle.

    A sweep at a fixed gap finds wide segments. The quarter points of every
    interval between consecutive break angles find narrow ones, since each
    polygon edge lies between two break angles.
    """
    n = 8 * sampler.grid
    for theta in TWO_PI * (np.arange(n) + SAMPLE_OFFSET) / n:
        yield float(theta), float(theta) + FLATNESS_GAP
    breaks = list(plane.break_angles())
    if not breaks:
        return
    for a, b in zip(breaks, breaks[1:] + [breaks[0] + TWO_PI]):
        yield a + 0.25 * (b - a), a + 0.75 * (b - a)


def strict_convexity_detectors(plane: NormedPlane, sampler: Sampler) -> Tuple[DetectorResult, ...]:
    """
    Look for a segment on the unit circle.

    For unit p, q, ||p + q|| = 2 exactly when the chord lies on the circle;
    then ang_p(p + q, q) = 0 for independent vectors, the degeneracy witness
    of the cosine-law angle. The pairs come from _flatness_pairs.
    """
    worst, witness = math.inf, None
    for theta, phi in _flatness_pairs(plane, sampler):
        p = plane.unit_circle_point(theta)
        q = plane.unit_circle_point(phi)
        degenerate = ang_p(plane, p + q, q)
        if degenerate < worst:
            worst, witness = degenerate, (p + q, q)
    return (
        DetectorResult("ang_p degeneracy", worst > NONDEGENERACY_EPS, worst, witness),
        DetectorResult("declared", plane.strictly_convex, float(plane.strictly_convex)),
    )


def radon_detectors(plane: NormedPlane, sampler: Sampler) -> Tuple[DetectorResult, ...]:
    antinorm = radon_check(plane, n_samples=max(720, 8 * sampler.grid))
    results = [DetectorResult("antinorm ratio", antinorm.is_radon, antinorm.spread / antinorm.scale)]

    if plane.strictly_convex:
        results.append(_detector(
            "S-angle symmetry", plane, sampler.coarser(),
            lambda x, y: abs(ang_s(plane, x, y) - ang_s(plane, y, x)),
        ))
    else:
        symmetry = birkhoff_symmetry(plane, n_samples=4 * sampler.grid, tol=DETECTOR_TOL)
        results.append(DetectorResult("Birkhoff symmetry", symmetry.symmetric, symmetry.max_residual, symmetry.witness))

    coincidence = radon_coincidence(plane, n_pairs=max(10, sampler.grid // 2), tol=COINCIDENCE_TOL)
    results.append(DetectorResult("Busemann = Glogovskii", coincidence.coincide, coincidence.max_gap, coincidence.witness))
    return tuple(results)


def _star_ratio_violation(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    pair = star_pair(plane, x, y)
    return abs(pair.t_star - pair.t_star_star / 2.0) * plane.gauge(y) / plane.gauge(x)


def _parallelogram_residual(plane: NormedPlane, x: Vec2, y: Vec2) -> float:
    xh, yh = plane.normalize(x), plane.normalize(y)
    return abs(plane.gauge(xh + yh) ** 2 + plane.gauge(xh - yh) ** 2 - 4.0)


def euclidean_detectors(plane: NormedPlane, sampler: Sampler) -> Tuple[DetectorResult, ...]:
    results = [
        _detector("ang_p homogeneity", plane, sampler,
                  lambda x, y: homogeneity_violation(lambda u, v: ang_p(plane, u, v), x, y)),
        _detector("ang_i homogeneity", plane, sampler,
                  lambda x, y: homogeneity_violation(lambda u, v: ang_i(plane, u, v), x, y)),
        _detector("Wilson spread", plane, sampler, lambda x, y: wilson_scan(plane, x, y).spread),
    ]
    if plane.strictly_convex:
        results.append(_detector("t* = t**/2", plane, sampler.coarser(),
                                 lambda x, y: _star_ratio_violation(plane, x, y)))
    else:
        results.append(DetectorResult("t* = t**/2", None, math.nan))
    results.append(_detector("D-A-F weak supplementarity", plane, sampler,
                             lambda x, y: _parallelogram_residual(plane, x, y)))
    return tuple(results)


def characterization_suite(plane: NormedPlane, sampler: Optional[Sampler] = None) -> Characterization:
    """
    Decide strict convexity, the Radon property and the Euclidean property
    from independent detectors.

    Raises:
        DetectorDisagreement: if detectors for one property disagree
    """
    sampler = sampler or Sampler()
    detectors = {}
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        transient=True,
    ) as progress:
        for prop, run_detectors in (
            ("strictly_convex", strict_convexity_detectors),
            ("radon", radon_detectors),
            ("euclidean", euclidean_detectors),
        ):
            task = progress.add_task(f"{plane.name}: {prop} detectors...", total=None)
            detectors[prop] = run_detectors(plane, sampler)
            progress.remove_task(task)

    result = Characterization(
        plane=plane.name,
        strictly_convex=_agreed_verdict(plane, "strictly_convex", detectors["strictly_convex"]),
        radon=_agreed_verdict(plane, "radon", detectors["radon"]),
        euclidean=_agreed_verdict(plane, "euclidean", detectors["euclidean"]),
        detectors=detectors,
    )
    console.print(
        f"[bold green]✅ {plane.name}[/]: strictly convex={result.strictly_convex}, "
        f"Radon={result.radon}, Euclidean={result.euclidean}"
    )
    return result


# ---------------------------------------------------------------------------
# D-A-F, measure and dyadic probes
# ---------------------------------------------------------------------------

def _one_sided_report(
    law_id: str,
    plane: NormedPlane,
    sampler: Sampler,
    residual: Callable[[Vec2, Vec2], float],
    tol: float,
    skip_dependent: bool = False,
) -> LawReport:
    """A law of the form residual ~ 0, where ~ is one of <=, =, >= throughout.

    The violation is the smaller of the two one-sided maxima.
    """
    above, above_witness, count = worst_case(plane, sampler, residual, tol, skip_dependent)
    below, below_witness, _ = worst_case(plane, sampler, lambda x, y: -residual(x, y), tol, skip_dependent)
    above, below = max(above, 0.0), max(below, 0.0)
    if above <= below:
        return LawReport(law_id, above, above_witness, above <= tol, count, tol)
    return LawReport(law_id, below, below_witness, below <= tol, count, tol)


def daf_equivalence_probe(
    plane: NormedPlane,
    sampler: Optional[Sampler] = None,
    tol: float = 1e-9,
) -> List[LawReport]:
    """
    The four D-A-F angle properties that each characterize inner-product planes:
    weak supplementarity, weak additivity, the angle sum and the exterior angle.
    """
    sampler = sampler or Sampler()

    def ang(u: Vec2, v: Vec2) -> float:
        return ang_daf(plane, u, v)

    def supplementarity(x: Vec2, y: Vec2) -> float:
        return ang(x, y) + ang(-x, y) - math.pi

    def additivity(x: Vec2, y: Vec2) -> float:
        base = ang(x, y)
        residuals = [ang(x, x * a + y * b) + ang(x * a + y * b, y) - base for a, b in CONE_WEIGHTS]
        return max(residuals, key=abs)

    def angle_sum(x: Vec2, y: Vec2) -> float:
        return ang(x, y) + ang(-x, y - x) + ang(-y, x - y) - math.pi

    def exterior(x: Vec2, y: Vec2) -> float:
        return ang(x, y - x) - ang(x, y) - ang(x - y, -y)

    return [
        _one_sided_report("daf-weak-supplementarity", plane, sampler, supplementarity, tol),
        _one_sided_report("daf-weak-additivity", plane, sampler, additivity, tol, skip_dependent=True),
        _one_sided_report("daf-angle-sum", plane, sampler, angle_sum, tol, skip_dependent=True),
        _one_sided_report("daf-exterior-angle", plane, sampler, exterior, tol, skip_dependent=True),
    ]


def isosceles_partner(plane: NormedPlane, x: Vec2, radius: float = 1.0) -> Vec2:
    """The y with ||y|| = radius on the positive side of x and ||x + y|| = ||x - y||.

    The defect is positive at y = radius x^ and negative at y = -radius x^, so
    a partner exists for every radius.
    """
    if radius <= 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    theta = x.angle()

    def defect(phi: float) -> float:
        y = plane.unit_circle_point(theta + phi) * radius
        return plane.gauge(x + y) - plane.gauge(x - y)

    return plane.unit_circle_point(theta + find_root(defect, 0.0, math.pi, what="isosceles partner")) * radius


def measure_probes(
    plane: NormedPlane,
    measure: AngleMeasure,
    sampler: Optional[Sampler] = None,
    tol: float = SEARCH_TOL,
) -> List[LawReport]:
    """
    Properties an angle measure would need to be an I-, T- or B-measure.

    I-measure: equal base angles in isosceles triangles o, x, y with
    ||x|| = ||y||. T-measure: right angles at isosceles-orthogonal pairs, the
    partner of x taken on the circle of radius ||y|| so unequal norms are
    covered. B-measure: right angles at Birkhoff-orthogonal pairs.
    """
    sampler = sampler or Sampler()
    console.print(f"[bold blue]Measure probes:[/] {measure.kind} on {plane.name}")

    def base_angles(x: Vec2, y: Vec2) -> float:
        xh, yh = plane.normalize(x), plane.normalize(y)
        return abs(ang_mu(measure, -xh, yh - xh) - ang_mu(measure, -yh, xh - yh))

    def right_angle_gap(partner: Callable[[Vec2, Vec2], Vec2]) -> Callable[[Vec2, Vec2], float]:
        return lambda x, y: abs(ang_mu(measure, x, partner(x, y)) - math.pi / 2.0)

    return [
        _report("I-measure", plane, sampler.coarser(), base_angles, tol, skip_dependent=True),
        _report("T-measure", plane, sampler.coarser(),
                right_angle_gap(lambda x, y: isosceles_partner(plane, x, plane.gauge(y))), tol),
        _report("B-measure", plane, sampler.coarser(),
                right_angle_gap(lambda x, y: birkhoff_normal(plane, x)), tol),
    ]


def dyadic_probe(
    plane: NormedPlane,
    fn,
    sampler: Optional[Sampler] = None,
    tol: float = SEARCH_TOL,
    measure: Optional[AngleMeasure] = None,
    levels: Tuple[int, ...] = (1, 2),
) -> LawReport:
    """
    ang(x, y) = pi / 2^n  iff  the Euclidean angle is pi / 2^n, for each level n.

    Checks both directions: the angle function at Euclidean angle pi / 2^n,
    and the Euclidean angle where the angle function reaches pi / 2^n.
    """
    sampler = sampler or Sampler()
    ang = angle_function(plane, fn, measure)
    worst, witness, count = -math.inf, (), 0
    for x in sampler.vectors(plane):
        theta = x.angle()
        for n in levels:
            target = math.pi / 2 ** n
            y = Vec2.from_angle(theta + target)
            gaps = [(abs(ang(x, y) - target), (x, y))]

            def mismatch(phi: float) -> float:
                return ang(x, plane.unit_circle_point(theta + phi)) - target

            if mismatch(0.0) * mismatch(math.pi) < 0.0:
                z = plane.unit_circle_point(theta + find_root(mismatch, 0.0, math.pi, what="dyadic angle"))
                gaps.append((abs(ang_euclid_ref(x, z) - target), (x, z)))
            for gap, pair in gaps:
                count += 1
                if gap > worst:
                    worst, witness = gap, pair
    return LawReport("dyadic", worst, witness, worst <= tol, count, tol)


# ---------------------------------------------------------------------------
# Display
# ---------------------------------------------------------------------------

def display_reports(reports: List[LawReport], title: str = "Law audit"):
    """Print LawReports as a table on the diagnostics console."""
    table = Table(title=title, show_lines=False)
    table.add_column("Law", style="cyan")
    table.add_column("Name", style="white")
    table.add_column("Max violation", style="yellow", justify="right")
    table.add_column("Samples", style="magenta", justify="right")
    table.add_column("Result", justify="center")

    for report in reports:
        result = "[green]pass[/]" if report.passed else "[red]fail[/]"
        table.add_row(
            report.law_id,
            AXIOM_NAMES.get(report.law_id, ""),
            f"{report.max_violation:.3e}",
            str(report.n_samples),
            result,
        )

    console.print(table)


def display_characterization(result: Characterization):
    """Print every detector behind a characterization verdict."""
    table = Table(title=f"Characterization of {result.plane}", show_lines=True)
    table.add_column("Property", style="cyan")
    table.add_column("Detector", style="white")
    table.add_column("Value", style="yellow", justify="right")
    table.add_column("Verdict", style="green", justify="center")

    for prop, detectors in result.detectors.items():
        for detector in detectors:
            verdict = "n/a" if detector.verdict is None else str(detector.verdict)
            table.add_row(prop, detector.name, f"{detector.value:.3e}", verdict)

    console.print(table)
