"""Brute-force root locator, independent of the analytic machinery.

Used to validate classification and brackets: it evaluates the original
power form a**x + a**(-x) - x on a uniform grid, records every sign
change, and bisects each one down to tolerance.  It deliberately avoids
the cosh/log formulation, the classification logic, and every analytic
bound, so agreement with the solvers is meaningful evidence.

Tangent (double) roots produce no sign change and are invisible to the
scan; use min_scan for those (the function is convex, so the grid minimum
approximates the minimizer).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import BaseParameter
from .solvers import SolverConfig

__all__ = ["ScanResult", "scan_roots", "min_scan"]


@dataclass(frozen=True)
class ScanResult:
    """Sign-change intervals and their bisected roots from one grid scan."""

    sign_change_intervals: tuple[tuple[float, float], ...]
    refined_roots: tuple[float, ...]
    grid_size: int
    scan_range: tuple[float, float]


def _power_form(a: float, x: float) -> float:
    """Scalar a**x + a**(-x) - x with overflow saturating to +inf."""
    try:
        return a**x + a**-x - x
    except OverflowError:
        return math.inf


def scan_roots(
    base: BaseParameter,
    x_lo: float,
    x_hi: float,
    grid_size: int,
    config: SolverConfig | None = None,
) -> ScanResult:
    """Locate every simple root of f on [x_lo, x_hi] by grid + bisection.

    Evaluates the power form on a uniform grid of ``grid_size`` points,
    collects each adjacent pair with opposite signs, and bisects each pair
    to the configured relative width.  Grid points where f is exactly zero
    are reported as roots directly.  An empty result is valid (no roots in
    range, or only a tangency).
    """
    if base.a <= 0.0:
        raise ValueError("scan requires a > 0")
    if not x_lo < x_hi:
        raise ValueError(f"need x_lo < x_hi, got [{x_lo}, {x_hi}]")
    if grid_size < 2:
        raise ValueError("grid_size must be >= 2")
    cfg = config if config is not None else SolverConfig()

    a = base.a
    xs = np.linspace(x_lo, x_hi, grid_size)
    with np.errstate(over="ignore", under="ignore"):
        fv = np.power(a, xs) + np.power(a, -xs) - xs

    exact = [float(x) for x in xs[fv == 0.0]]
    signs = np.sign(fv)
    change = np.flatnonzero(signs[:-1] * signs[1:] < 0.0)
    intervals = [(float(xs[i]), float(xs[i + 1])) for i in change]

    roots = list(exact)
    for lo, hi in intervals:
        f_lo = _power_form(a, lo)
        for _ in range(cfg.max_iter):
            mid = 0.5 * (lo + hi)
            if hi - lo <= cfg.x_tol * max(1.0, abs(mid)) or mid == lo or mid == hi:
                break
            fm = _power_form(a, mid)
            if fm == 0.0:
                break
            if (fm > 0.0) == (f_lo > 0.0):
                lo, f_lo = mid, fm
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))

    return ScanResult(
        sign_change_intervals=tuple(intervals),
        refined_roots=tuple(sorted(roots)),
        grid_size=grid_size,
        scan_range=(float(x_lo), float(x_hi)),
    )


def min_scan(
    base: BaseParameter, x_lo: float, x_hi: float, grid_size: int
) -> tuple[float, float]:
    """Grid minimum of the power form: returns (x_at_min, f_min).

    The tangency check for bases at the edge of the critical interval:
    a double root shows up as |f_min| ~ 0 with no sign change.
    """
    if base.a <= 0.0:
        raise ValueError("scan requires a > 0")
    if not x_lo < x_hi:
        raise ValueError(f"need x_lo < x_hi, got [{x_lo}, {x_hi}]")
    if grid_size < 2:
        raise ValueError("grid_size must be >= 2")
    a = base.a
    xs = np.linspace(x_lo, x_hi, grid_size)
    with np.errstate(over="ignore", under="ignore"):
        fv = np.power(a, xs) + np.power(a, -xs) - xs
    i = int(np.argmin(fv))
    return float(xs[i]), float(fv[i])
