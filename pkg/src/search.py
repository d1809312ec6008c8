"""One-dimensional search primitives: golden section, bracketing roots, refinement."""

import math
from typing import Callable, Sequence, Tuple

import numpy as np
from scipy.optimize import bisect, brentq

from .config import GOLDEN_MAX_ITER
from .errors import SearchError

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2
RTOL = 4 * np.finfo(float).eps


def golden_section(
    f: Callable[[float], float],
    a: float,
    b: float,
    max_iter: int = GOLDEN_MAX_ITER,
) -> Tuple[float, float]:
    """
    Golden-section search for the minimum of a unimodal f on [a, b].

    Stops after max_iter shrink steps or once the bracket stops shrinking in
    floating point. The endpoints are candidates too, so a minimum sitting on
    the boundary is returned exactly.

    Returns:
        (t_min, f_min)
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(max_iter):
        if h <= 4 * math.ulp(max(abs(a), abs(b), 1e-300)):
            break
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    best = min((yc, c), (yd, d), (f(a), a), (f(b), b))
    return best[1], best[0]


def sign_bisection(
    is_right_of_root: Callable[[float], bool],
    lo: float,
    hi: float,
) -> float:
    """Locate the switch point of a monotone predicate on [lo, hi].

    ``is_right_of_root(lo)`` must be False and ``is_right_of_root(hi)`` True.
    Works for step functions (one-sided derivatives of convex functions),
    where only the sign carries information.
    """
    if is_right_of_root(lo) or not is_right_of_root(hi):
        raise SearchError(f"predicate does not switch on [{lo}, {hi}]")
    xtol = 1e-16 * max(abs(lo), abs(hi), 1e-300)
    return bisect(lambda t: 1.0 if is_right_of_root(t) else -1.0, lo, hi, xtol=xtol, rtol=RTOL, maxiter=400)


def find_root(f: Callable[[float], float], lo: float, hi: float, what: str = "root") -> float:
    """Bracketed root of a continuous f, raising SearchError without a sign change."""
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise SearchError(f"no sign change for {what} on [{lo}, {hi}] (f = {f_lo:.3g}, {f_hi:.3g})")
    xtol = 1e-16 * max(abs(lo), abs(hi), 1e-300)
    return brentq(f, lo, hi, xtol=xtol, rtol=RTOL, maxiter=500)


def sign_changes(f: Callable[[float], float], grid: Sequence[float]) -> list:
    """Consecutive grid intervals (a, b) where f changes sign or vanishes at b."""
    values = [f(t) for t in grid]
    brackets = []
    for (a, fa), (b, fb) in zip(zip(grid, values), zip(grid[1:], values[1:])):
        if fa == 0.0 or (fa < 0) != (fb < 0):
            brackets.append((a, b))
    return brackets


def refine_maximum(
    objective: Callable[[Tuple[float, ...]], float],
    start: Tuple[float, ...],
    steps: Tuple[float, ...],
    rounds: int = 24,
) -> Tuple[Tuple[float, ...], float]:
    """Coordinate ascent on objective from start.

    Each round tries +/- step on every coordinate in order, keeps strict
    improvements, then halves the steps. Deterministic for a deterministic
    objective.
    """
    best = tuple(start)
    best_value = objective(best)
    steps = list(steps)
    for _ in range(rounds):
        for i in range(len(best)):
            for sign in (1.0, -1.0):
                trial = best[:i] + (best[i] + sign * steps[i],) + best[i + 1:]
                value = objective(trial)
                if value > best_value:
                    best, best_value = trial, value
        steps = [s / 2 for s in steps]
    return best, best_value
