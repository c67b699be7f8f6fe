"""Parabolic line-search optimizers (1-D and gradient-direction n-D), forward
finite-difference gradients, and a Nelder-Mead baseline.

All optimizers treat the objective as expensive: every call is one quantum
experiment, known values are always passed in instead of re-measured, and the
returned value is the best *sampled* point (never an unverified model value).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np


@dataclass
class Objective:
    """A counted energy objective over a parameter vector.

    ``eval`` must be deterministic for fixed parameters (statevector
    simulation, no shot noise); ``cached_value`` optionally carries the
    already-measured (point, value) pair for the current center.
    """

    arity: int
    eval: Callable[[np.ndarray], float]
    cached_value: "Optional[tuple[np.ndarray, float]]" = None


@dataclass
class ParabolicConfig:
    delta_x_line: float = 0.1        # line-search sampling offset
    delta_x_grad: float = 1e-6       # forward-difference gradient offset
    max_refinements: int = 2         # total parabola fits per 1-D call
    refine_threshold: float = 3.0    # re-center when |x0 - c| exceeds this * delta_x
    curvature_floor: float = 1e-12   # minimum usable 3-point curvature
    second_pass: bool = False        # optional second gradient+line pass

    def __post_init__(self):
        if min(self.delta_x_line, self.delta_x_grad, self.refine_threshold,
               self.curvature_floor) <= 0:
            raise ValueError("parabolic parameters must be positive")
        if not 1 <= self.max_refinements <= 2:
            raise ValueError("max_refinements must be 1 or 2")


DEFAULT_CONFIG = ParabolicConfig()


@dataclass
class LineResult:
    x: float
    value: float
    evals: int
    flag: "str | None" = None   # "no-curvature" when the 3-point fit is flat/concave


@dataclass
class StepResult:
    x: np.ndarray
    value: float
    evals: int
    flag: "str | None" = None   # "stationary" | "budget"


def parabolic_1d(g: Callable[[float], float], center: float, g_center: float,
                 cfg: ParabolicConfig = DEFAULT_CONFIG) -> LineResult:
    """Three-point parabolic minimizer around a known center value.

    Samples g(center +- dx), places the vertex of the interpolating parabola,
    and measures g there. The vertex of the parabola through the three
    points carries a leading minus sign:

        x0 = center - (dx/2) * (g+ - g-) / (g+ + g- - 2*g_center)

    If the vertex lands further than refine_threshold*dx from the center the
    fit is repeated once, re-centered at the vertex. Returns the best
    evaluated point (the center's known value included), so the result is
    never worse than any sample. A flat or concave 3-point fit sets the
    "no-curvature" flag and falls back to the best sample.
    """
    dx = cfg.delta_x_line
    best_x, best_v = center, g_center
    evals = 0
    flag = None
    c, g_c = center, g_center
    for fit in range(cfg.max_refinements):
        g_p = g(c + dx)
        g_m = g(c - dx)
        evals += 2
        if g_p < best_v:
            best_x, best_v = c + dx, g_p
        if g_m < best_v:
            best_x, best_v = c - dx, g_m
        denom = g_p + g_m - 2.0 * g_c
        if denom < cfg.curvature_floor:
            flag = "no-curvature"
            break
        x0 = c - 0.5 * dx * (g_p - g_m) / denom
        g_0 = g(x0)
        evals += 1
        if g_0 < best_v:
            best_x, best_v = x0, g_0
        if abs(x0 - c) <= cfg.refine_threshold * dx:
            break
        c, g_c = x0, g_0
    return LineResult(best_x, best_v, evals, flag)


def finite_diff_gradient(f: Callable[[np.ndarray], float], kappa: np.ndarray,
                         f_kappa: float, delta: float) -> np.ndarray:
    """Forward-difference gradient; exactly one evaluation per component
    since f(kappa) is already known."""
    kappa = np.asarray(kappa, dtype=float)
    grad = np.empty(kappa.size)
    for comp in range(kappa.size):
        shifted = kappa.copy()
        shifted[comp] += delta
        grad[comp] = (f(shifted) - f_kappa) / delta
    return grad


GRADIENT_FLOOR = 1e-14


def parabolic_nd(f: Callable[[np.ndarray], float], kappa: np.ndarray,
                 f_kappa: float, cfg: ParabolicConfig = DEFAULT_CONFIG) -> StepResult:
    """One gradient-direction pass: measure the gradient at kappa (n evals),
    then run the 1-D parabolic minimizer along the normalized negative
    gradient with the known center value.

    Costs n+3 evaluations without refinement and never more than n+6 per
    pass. A vanishing gradient returns the center unchanged with the
    "stationary" flag. With ``second_pass`` enabled the whole step repeats
    once from the new point (the 2n+6 variant), which the adaptive loop does
    not need.
    """
    kappa = np.asarray(kappa, dtype=float)
    x, value = kappa, f_kappa
    evals = 0
    flag = None
    passes = 2 if cfg.second_pass else 1
    for _ in range(passes):
        grad = finite_diff_gradient(f, x, value, cfg.delta_x_grad)
        evals += grad.size
        norm = float(np.linalg.norm(grad))
        if norm < GRADIENT_FLOOR:
            flag = "stationary"
            break
        direction = grad / norm

        def h(t):
            return f(x - direction * t)

        line = parabolic_1d(h, 0.0, value, cfg)
        evals += line.evals
        x = x - direction * line.x
        value = line.value
    return StepResult(x, value, evals, flag)


@dataclass
class NelderMeadOptions:
    max_evals: "int | None" = None   # None: unlimited
    spread_tol: float = 1e-10        # stop when max-min simplex value < this
    step: float = 0.1                # initial vertex perturbation


def nelder_mead(f: Callable[[np.ndarray], float], x_init: np.ndarray,
                options: "NelderMeadOptions | None" = None,
                f_init: "float | None" = None) -> StepResult:
    """Standard simplex method (reflection 1, expansion 2, contraction 0.5,
    shrink 0.5) with counted evaluations.

    The initial simplex is x_init plus ``step``-perturbed vertices; a known
    f(x_init) can be passed to avoid re-measuring it. Returns the best vertex,
    flagged "budget" when the evaluation budget ran out first.
    """
    opts = options or NelderMeadOptions()
    x_init = np.asarray(x_init, dtype=float)
    n = x_init.size
    evals = 0
    budget = opts.max_evals if opts.max_evals is not None else float("inf")

    class _Budget(Exception):
        pass

    def ev(x):
        nonlocal evals
        if evals >= budget:
            raise _Budget()
        evals += 1
        return f(x)

    verts = [x_init.copy()]
    vals = [f_init if f_init is not None else None]
    for comp in range(n):
        v = x_init.copy()
        v[comp] += opts.step
        verts.append(v)
        vals.append(None)

    flag = None
    try:
        for m in range(n + 1):
            if vals[m] is None:
                vals[m] = ev(verts[m])
        verts = np.array(verts)
        vals = np.array(vals, dtype=float)
        while True:
            order = np.argsort(vals, kind="stable")
            verts, vals = verts[order], vals[order]
            if vals[-1] - vals[0] < opts.spread_tol:
                break
            centroid = verts[:-1].mean(axis=0)
            reflected = centroid + (centroid - verts[-1])
            f_r = ev(reflected)
            if vals[0] <= f_r < vals[-2]:
                verts[-1], vals[-1] = reflected, f_r
                continue
            if f_r < vals[0]:
                expanded = centroid + 2.0 * (centroid - verts[-1])
                f_e = ev(expanded)
                if f_e < f_r:
                    verts[-1], vals[-1] = expanded, f_e
                else:
                    verts[-1], vals[-1] = reflected, f_r
                continue
            contracted = centroid + 0.5 * (verts[-1] - centroid)
            f_c = ev(contracted)
            if f_c < vals[-1]:
                verts[-1], vals[-1] = contracted, f_c
                continue
            for m in range(1, n + 1):           # shrink toward the best vertex
                verts[m] = verts[0] + 0.5 * (verts[m] - verts[0])
                vals[m] = ev(verts[m])
    except _Budget:
        flag = "budget"
        verts = np.asarray(verts)
        vals = np.array([np.inf if v is None else v for v in vals], dtype=float)

    best = int(np.argmin(vals))
    return StepResult(np.array(verts[best]), float(vals[best]), evals, flag)
