"""Root solvers: bracketed bisection, safeguarded Newton, and dispatch.

The safeguarded Newton iteration maintains a sign-change bracket and falls
back to a bisection step whenever a Newton step would leave the bracket,
the derivative degenerates, or progress is too slow.  Convexity of
f(x) = 2*cosh(x*ln a) - x guarantees at most one sign change inside each
analytic bracket, so the midpoint is a robust, reproducible seed.

Also houses the Lambert-W baseline for the simpler fixed-point family
a**x = x, solved in closed form as x = -W(-ln a)/ln(a) on the principal
branch.

All functions are pure; configs and reports are immutable values, so
concurrent solves over different bases are safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    BaseParameter,
    ClassificationTag,
    CriticalConstants,
    RootBracket,
    SolutionClassification,
    bounds_x2_refined,
    classify,
    critical_constants,
    f_derivative,
    f_value,
    x_star,
)

__all__ = [
    "SolverConfig",
    "RootResult",
    "SolveReport",
    "SolverError",
    "BracketError",
    "ConvergenceError",
    "bisect",
    "newton_refine",
    "solve_all",
    "lambert_w_principal",
    "solve_exp_fixed_point",
]

# Outward widening applied to each analytic (open-interval) bracket
# endpoint so a root sitting on the boundary still produces a numerical
# sign change.
_BRACKET_MARGIN = 1e-12


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances and budget for the iterative solvers.

    ``abs_tol`` is the absolute residual target |f(x)|; ``x_tol`` is the
    relative bracket-width target; ``max_iter`` caps iterations (generous:
    it exists to surface pathological bases near a = 1 as structured
    errors rather than silent bad roots).
    """

    abs_tol: float = 1e-12
    x_tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self) -> None:
        if self.abs_tol <= 0.0 or self.x_tol <= 0.0:
            raise ValueError("tolerances must be strictly positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


@dataclass(frozen=True)
class RootResult:
    """One solved root: location, signed residual f(x), iteration count,
    and the bracket that produced it (None for analytic shortcuts)."""

    x: float
    residual: float
    iterations: int
    bracket: RootBracket | None


@dataclass(frozen=True)
class SolveReport:
    """Full outcome of solve_all: classification, roots sorted ascending
    (two entries for the two-root regime, one for the analytic single-root
    cases, none when no root exists), and the constants used."""

    classification: SolutionClassification
    roots: tuple[RootResult, ...]
    constants_used: CriticalConstants


class SolverError(Exception):
    """Base class for structured solver failures."""


class BracketError(SolverError):
    """The bracket endpoints do not straddle a sign change.

    ``tangent_suspected`` distinguishes "the interior minimum sits at
    ~zero, this looks like a double root" from "no root in bracket".
    """

    def __init__(
        self,
        message: str,
        bracket: RootBracket,
        f_lo: float,
        f_hi: float,
        tangent_suspected: bool,
    ):
        super().__init__(message)
        self.bracket = bracket
        self.f_lo = f_lo
        self.f_hi = f_hi
        self.tangent_suspected = tangent_suspected


class ConvergenceError(SolverError):
    """Iteration budget exhausted (or progress stalled at machine
    resolution) before meeting the residual target; carries the best
    iterate seen."""

    def __init__(
        self,
        message: str,
        best_x: float,
        best_residual: float,
        iterations: int,
        bracket: RootBracket | None,
    ):
        super().__init__(message)
        self.best_x = best_x
        self.best_residual = best_residual
        self.iterations = iterations
        self.bracket = bracket


def _widened(bracket: RootBracket) -> tuple[float, float]:
    lo = bracket.lo - _BRACKET_MARGIN * max(1.0, abs(bracket.lo))
    hi = bracket.hi + _BRACKET_MARGIN * max(1.0, abs(bracket.hi))
    return lo, hi


def _raise_no_sign_change(
    base: BaseParameter,
    bracket: RootBracket,
    f_lo: float,
    f_hi: float,
    config: SolverConfig,
) -> None:
    # f is convex: both endpoints positive with an interior minimum near
    # zero is the signature of a (near-)double root, invisible to sign
    # tests.  Both endpoints negative cannot hide a tangency.
    tangent_suspected = False
    if f_lo > 0.0 and f_hi > 0.0 and base.a > 0.0 and base.ln_a != 0.0:
        probe = x_star(base)
        if not (bracket.lo < probe < bracket.hi):
            probe = bracket.midpoint
        tangent_suspected = abs(f_value(base, probe)) <= math.sqrt(config.abs_tol)
    kind = (
        "tangent root suspected (interior minimum ~ 0)"
        if tangent_suspected
        else "no root in bracket"
    )
    raise BracketError(
        f"f has the same sign at both endpoints of [{bracket.lo}, {bracket.hi}] "
        f"(f_lo={f_lo:.3e}, f_hi={f_hi:.3e}): {kind}",
        bracket,
        f_lo,
        f_hi,
        tangent_suspected,
    )


def bisect(
    base: BaseParameter, bracket: RootBracket, config: SolverConfig | None = None
) -> tuple[float, int]:
    """Bisection on a sign-change bracket; guaranteed convergence.

    Returns (x, iterations) with final bracket width <= x_tol*max(1, |x|).
    Raises BracketError when f does not change sign across the (slightly
    widened) bracket.
    """
    cfg = config if config is not None else SolverConfig()
    lo, hi = _widened(bracket)
    f_lo = f_value(base, lo)
    f_hi = f_value(base, hi)
    if f_lo == 0.0:
        return lo, 0
    if f_hi == 0.0:
        return hi, 0
    if (f_lo > 0.0) == (f_hi > 0.0):
        _raise_no_sign_change(base, bracket, f_lo, f_hi, cfg)

    iterations = 0
    while True:
        mid = 0.5 * (lo + hi)
        if hi - lo <= cfg.x_tol * max(1.0, abs(mid)) or mid == lo or mid == hi:
            return mid, iterations
        if iterations >= cfg.max_iter:
            raise ConvergenceError(
                f"bisection exceeded {cfg.max_iter} iterations on "
                f"[{bracket.lo}, {bracket.hi}]",
                mid,
                abs(f_value(base, mid)),
                iterations,
                bracket,
            )
        fm = f_value(base, mid)
        iterations += 1
        if fm == 0.0:
            return mid, iterations
        if (fm > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, fm
        else:
            hi, f_hi = mid, fm


def newton_refine(
    base: BaseParameter,
    seed: float,
    bracket: RootBracket,
    config: SolverConfig | None = None,
) -> tuple[float, int]:
    """Safeguarded Newton iteration inside a sign-change bracket.

    Any step that would leave the maintained bracket, meet a degenerate
    derivative (|f'| < 1e-300), or fail to halve the previous step falls
    back to one bisection step.  Succeeds when |f(x)| <= abs_tol; raises
    ConvergenceError carrying the best iterate if the budget runs out or
    the bracket collapses to machine resolution first.
    """
    cfg = config if config is not None else SolverConfig()
    if not (bracket.lo <= seed <= bracket.hi):
        raise ValueError(
            f"seed {seed!r} lies outside bracket [{bracket.lo}, {bracket.hi}]"
        )
    lo, hi = _widened(bracket)
    f_lo = f_value(base, lo)
    f_hi = f_value(base, hi)
    if f_lo == 0.0:
        return lo, 0
    if f_hi == 0.0:
        return hi, 0
    if (f_lo > 0.0) == (f_hi > 0.0):
        _raise_no_sign_change(base, bracket, f_lo, f_hi, cfg)

    # orient so f(xl) < 0 < f(xh)
    if f_lo < 0.0:
        xl, xh = lo, hi
    else:
        xl, xh = hi, lo

    x = float(seed)
    fx = f_value(base, x)
    dfx = f_derivative(base, x)
    best_x, best_f = x, abs(fx)
    step_prev = abs(hi - lo)
    step = step_prev
    iterations = 0

    while iterations < cfg.max_iter:
        if abs(fx) <= cfg.abs_tol:
            return x, iterations
        force_bisect = (
            not math.isfinite(fx)
            or not math.isfinite(dfx)
            or abs(dfx) < 1e-300
            or ((x - xh) * dfx - fx) * ((x - xl) * dfx - fx) > 0.0
            or abs(2.0 * fx) > abs(step_prev * dfx)
        )
        if force_bisect:
            step_prev = step
            step = abs(0.5 * (xh - xl))
            x_new = xl + 0.5 * (xh - xl)
            if x_new == xl or x_new == xh:
                break  # bracket at machine resolution
        else:
            step_prev = step
            step = abs(fx / dfx)
            x_new = x - fx / dfx
            if x_new == x:
                break
        x = x_new
        fx = f_value(base, x)
        dfx = f_derivative(base, x)
        iterations += 1
        if abs(fx) < best_f:
            best_x, best_f = x, abs(fx)
        if fx < 0.0:
            xl = x
        else:
            xh = x

    if best_f <= cfg.abs_tol:
        return best_x, iterations
    raise ConvergenceError(
        f"no iterate reached |f| <= {cfg.abs_tol:g} within {iterations} "
        f"iterations on [{bracket.lo}, {bracket.hi}] "
        f"(best x={best_x!r}, |f|={best_f:.3e})",
        best_x,
        best_f,
        iterations,
        bracket,
    )


def _second_root_bracket(
    base: BaseParameter, x1: float, initial: RootBracket
) -> RootBracket:
    """Pick the bracket for the second root once the first is solved.

    The refined interval is preferable when valid, but its lower endpoint
    1.5*x_star - x1/2 overshoots the root for bases with |ln a| below
    ~0.041 (the one-sided growth gap that justifies it vanishes near
    a = 1), so verify the sign there and fall back to the always-valid
    initial bracket.  Also falls back in the degenerate corner where the
    computed x1 rounds to exactly 2.0 (|ln a| ~< 1e-8).
    """
    if not (2.0 < x1 < initial.lo):
        return initial
    refined = bounds_x2_refined(base, x1)
    if f_value(base, refined.lo) < 0.0:
        return refined
    return initial


def solve_all(
    base: BaseParameter, config: SolverConfig | None = None
) -> SolveReport:
    """Classify the base and solve every root it implies.

    No-root bases return an empty report; unit/zero/tangent bases return
    their analytic root without iteration (the zero-base root is the
    conventional x = 0, with residual reported as nan since f is undefined
    at a = 0).  Two-root bases solve x1 on its universal bracket first,
    then x2 on the refined bracket that knowing x1 unlocks.  Solver
    failures propagate with the offending bracket attached.
    """
    cfg = config if config is not None else SolverConfig()
    constants = critical_constants()
    outcome = classify(base, constants)
    tag = outcome.tag

    if tag is ClassificationTag.NO_ROOT:
        roots: tuple[RootResult, ...] = ()
    elif tag is ClassificationTag.ZERO_BASE:
        roots = (RootResult(0.0, math.nan, 0, None),)
    elif tag is ClassificationTag.UNIT_BASE:
        roots = (RootResult(2.0, f_value(base, 2.0), 0, None),)
    elif tag is ClassificationTag.TANGENT_ROOT:
        x = constants.x_dagger
        residual = f_value(base, x)
        # double root: |f| scales with the square of the x-error, so the
        # acceptance bound here is sqrt(abs_tol), not abs_tol
        if abs(residual) > math.sqrt(cfg.abs_tol):
            raise ConvergenceError(
                f"tangent-root residual {residual:.3e} exceeds "
                f"sqrt(abs_tol)={math.sqrt(cfg.abs_tol):.3e}",
                x,
                abs(residual),
                0,
                None,
            )
        roots = (RootResult(x, residual, 0, None),)
    else:  # TWO_ROOTS
        assert outcome.brackets is not None
        b1, b2_initial = outcome.brackets
        x1, it1 = newton_refine(base, b1.midpoint, b1, cfg)
        b2 = _second_root_bracket(base, x1, b2_initial)
        x2, it2 = newton_refine(base, b2.midpoint, b2, cfg)
        roots = (
            RootResult(x1, f_value(base, x1), it1, b1),
            RootResult(x2, f_value(base, x2), it2, b2),
        )

    return SolveReport(classification=outcome, roots=roots, constants_used=constants)


def lambert_w_principal(z: float, config: SolverConfig | None = None) -> float:
    """Principal branch W(z) of the Lambert W function, for z >= -1/e.

    Halley iteration from a standard region-dependent initial guess:
    log-based for large z, a short Maclaurin series near 0, and the
    square-root expansion in p = sqrt(2(e*z + 1)) near the branch point
    -1/e.  Succeeds when |w*e**w - z| <= abs_tol (an absolute target,
    appropriate for |z| up to ~1e3; far beyond that the double-precision
    floor |e^w (1+w)| * ulp(w)/2 exceeds 1e-12).
    """
    cfg = config if config is not None else SolverConfig()
    z = float(z)
    if math.isnan(z):
        raise ValueError("z must be a real number, got nan")
    neg_em1 = -math.exp(-1.0)
    if z < neg_em1:
        if z >= neg_em1 * (1.0 + 4e-16):
            z = neg_em1  # within rounding of the branch point
        else:
            raise ValueError(f"z={z!r} is below -1/e; W(z) is complex there")
    if z == neg_em1:
        return -1.0

    if z > math.e:
        log_z = math.log(z)
        w = log_z - math.log(log_z)
    elif z > 0.5:
        w = math.log1p(z)
    elif z >= -0.25:
        w = z * (1.0 - z + 1.5 * z * z)
    else:
        p = math.sqrt(2.0 * max(0.0, math.e * z + 1.0))
        w = -1.0 + p - p * p / 3.0 + (11.0 / 72.0) * p * p * p

    for _ in range(cfg.max_iter):
        ew = math.exp(w)
        fw = w * ew - z
        if abs(fw) <= cfg.abs_tol:
            return max(w, -1.0)
        wp1 = w + 1.0
        denom = ew * wp1 - (w + 2.0) * fw / (2.0 * wp1)
        if denom == 0.0 or not math.isfinite(denom):
            denom = ew * wp1  # plain Newton fallback
        w -= fw / denom
    raise ConvergenceError(
        f"Halley iteration for W({z!r}) did not reach |residual| <= "
        f"{cfg.abs_tol:g} in {cfg.max_iter} iterations",
        w,
        abs(w * math.exp(w) - z),
        cfg.max_iter,
        None,
    )


def solve_exp_fixed_point(
    base: BaseParameter, config: SolverConfig | None = None
) -> float:
    """Solve a**x = x via the principal Lambert branch: x = -W(-ln a)/ln a.

    Defined for 0 < a <= e**(1/e) with a != 1 (for a > e**(1/e) the
    equation has no real solution on the principal branch; the second
    solution for 1 < a < e**(1/e), which lives on the W_{-1} branch, is
    out of scope).
    """
    if base.a == 0.0:
        raise ValueError("a must be positive")
    t = base.ln_a
    if t == 0.0:
        raise ValueError("the Lambert form -W(-ln a)/ln a is undefined at a = 1")
    inv_e = math.exp(-1.0)
    if t > inv_e * (1.0 + 4e-16):
        raise ValueError(
            f"a={base.a!r} exceeds e**(1/e) ~= {math.exp(inv_e):.8f}; "
            "a**x = x has no real solution on the principal branch"
        )
    w = lambert_w_principal(-t, config)
    return -w / t
