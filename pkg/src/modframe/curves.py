"""Built-in analytic curve families with exact derivatives.

Each family supplies closed-form position and parameter-derivatives up to
order 4 (a :class:`Jet`), an exact speed function, and arc-length
reparametrization so the frame formulas can assume unit speed.  Finite
differences are never used here; they live in :mod:`modframe.numerics`
as the independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import numerics
from .errors import OutOfRange, TargetOutOfRange
from .numerics import DEFAULT_TOL, Tolerance, Vec3, vec

_RANGE_SLACK = 1e-9


@dataclass(frozen=True)
class CurveSpec:
    """An analytic curve family plus parameters and a parameter range.

    Build instances through the factory functions (:func:`helix`,
    :func:`circle`, ...) which validate parameters and choose ranges on
    which the curve is regular.
    """

    family: str
    params: tuple[float, ...]
    t_lo: float
    t_hi: float


@dataclass(frozen=True)
class Jet:
    """Position and first four parameter-derivatives at one point."""

    r: Vec3
    r1: Vec3
    r2: Vec3
    r3: Vec3
    r4: Vec3


def line() -> CurveSpec:
    return CurveSpec("line", (), 0.0, 1.0)


def circle(radius: float) -> CurveSpec:
    if radius <= 0:
        raise ValueError("circle radius must be positive")
    return CurveSpec("circle", (float(radius),), 0.0, 2.0 * math.pi)


def helix(a: float, b: float) -> CurveSpec:
    if a == 0 and b == 0:
        raise ValueError("helix needs (a, b) != (0, 0)")
    return CurveSpec("helix", (float(a), float(b)), 0.0, 2.0 * math.pi)


def twisted_cubic() -> CurveSpec:
    return CurveSpec("twisted_cubic", (), -1.0, 1.0)


def planar_cubic() -> CurveSpec:
    return CurveSpec("planar_cubic", (), -1.0, 1.0)


def salkowski(m: float) -> CurveSpec:
    """Constant-curvature (kappa = 1), non-constant-torsion family.

    The parametrization below places the principal normal on a circle of
    the unit sphere at constant angle to the z-axis, which forces
    kappa = 1 while tau = tan(c*t) varies.  m = +-1/sqrt(3) makes a
    frequency in the closed form vanish, and m = 0 collapses to a planar
    circle, so both are rejected.  The default range keeps the speed
    positive and tau bounded away from zero.
    """
    if m == 0.0:
        raise ValueError("salkowski m = 0 degenerates to constant torsion")
    if abs(abs(m) - 1.0 / math.sqrt(3.0)) < 1e-12:
        raise ValueError("salkowski m = +-1/sqrt(3) is excluded")
    c = m / math.sqrt(1.0 + m * m)
    u_max = math.pi / (2.0 * abs(c))
    return CurveSpec("salkowski", (float(m),), 0.1 * u_max, 0.9 * u_max)


def _salkowski_terms(m: float) -> list[list[tuple[float, float, float]]]:
    # Per component: cosine terms (amplitude, frequency, phase), so the
    # k-th derivative is sum A w^k cos(w t + phase + k pi/2) -- exact at
    # every order.
    c = m / math.sqrt(1.0 + m * m)
    a = 1.0 / math.sqrt(1.0 + m * m)
    w1 = 1.0 + 2.0 * c
    w2 = 1.0 - 2.0 * c
    half = -math.pi / 2.0
    x = [(-a / 2.0, 1.0, 0.0),
         (-a * (1.0 - c) / (4.0 * w1), w1, 0.0),
         (-a * (1.0 + c) / (4.0 * w2), w2, 0.0)]
    y = [(-a / 2.0, 1.0, half),
         (-a * (1.0 - c) / (4.0 * w1), w1, half),
         (-a * (1.0 + c) / (4.0 * w2), w2, half)]
    z = [(-a * a / (4.0 * c), 2.0 * c, 0.0)]
    return [x, y, z]


def _trig_eval(terms, t: float, order: int) -> float:
    shift = order * math.pi / 2.0
    return sum(A * w**order * math.cos(w * t + p + shift) for A, w, p in terms)


@lru_cache(maxsize=None)
def eval_jet(spec: CurveSpec, t: float) -> Jet:
    """Exact position and derivatives of the curve at parameter ``t``."""
    if not (spec.t_lo - _RANGE_SLACK <= t <= spec.t_hi + _RANGE_SLACK):
        raise OutOfRange(
            f"t = {t:g} outside [{spec.t_lo:g}, {spec.t_hi:g}] for {spec.family}"
        )
    zero = vec(0.0, 0.0, 0.0)
    if spec.family == "line":
        return Jet(vec(t, 0, 0), vec(1, 0, 0), zero, zero.copy(), zero.copy())
    if spec.family == "circle":
        (R,) = spec.params
        ct, st = math.cos(t), math.sin(t)
        return Jet(
            vec(R * ct, R * st, 0),
            vec(-R * st, R * ct, 0),
            vec(-R * ct, -R * st, 0),
            vec(R * st, -R * ct, 0),
            vec(R * ct, R * st, 0),
        )
    if spec.family == "helix":
        a, b = spec.params
        ct, st = math.cos(t), math.sin(t)
        return Jet(
            vec(a * ct, a * st, b * t),
            vec(-a * st, a * ct, b),
            vec(-a * ct, -a * st, 0),
            vec(a * st, -a * ct, 0),
            vec(a * ct, a * st, 0),
        )
    if spec.family == "twisted_cubic":
        return Jet(
            vec(t, t * t, t**3),
            vec(1, 2 * t, 3 * t * t),
            vec(0, 2, 6 * t),
            vec(0, 0, 6),
            zero,
        )
    if spec.family == "planar_cubic":
        # Curvature vanishes at t = 0: the isolated zero exercised by the
        # modified frame.
        return Jet(
            vec(t, t**3, 0),
            vec(1, 3 * t * t, 0),
            vec(0, 6 * t, 0),
            vec(0, 6, 0),
            zero,
        )
    if spec.family == "salkowski":
        terms = _salkowski_terms(spec.params[0])
        cols = [
            vec(*(_trig_eval(comp, t, k) for comp in terms)) for k in range(5)
        ]
        return Jet(*cols)
    raise ValueError(f"unknown curve family {spec.family!r}")


def speed(spec: CurveSpec, t: float) -> float:
    """Exact |dr/dt|; closed form per family (cheap inside quadrature)."""
    if spec.family == "line":
        return 1.0
    if spec.family == "circle":
        return spec.params[0]
    if spec.family == "helix":
        a, b = spec.params
        return math.hypot(a, b)
    if spec.family == "twisted_cubic":
        return math.sqrt(1.0 + 4.0 * t * t + 9.0 * t**4)
    if spec.family == "planar_cubic":
        return math.sqrt(1.0 + 9.0 * t**4)
    if spec.family == "salkowski":
        m = spec.params[0]
        c = m / math.sqrt(1.0 + m * m)
        a = 1.0 / math.sqrt(1.0 + m * m)
        return a * abs(math.cos(c * t))
    raise ValueError(f"unknown curve family {spec.family!r}")


def _constant_speed(spec: CurveSpec) -> float | None:
    if spec.family in ("line", "circle", "helix"):
        return speed(spec, spec.t_lo)
    return None


def arclength(spec: CurveSpec, t0: float, t1: float, tol: float = 1e-12) -> float:
    """Arc length of the curve between parameters t0 <= t1."""
    for t in (t0, t1):
        if not (spec.t_lo - _RANGE_SLACK <= t <= spec.t_hi + _RANGE_SLACK):
            raise OutOfRange(f"parameter {t:g} outside the declared range")
    v0 = _constant_speed(spec)
    if v0 is not None:
        return v0 * (t1 - t0)
    return numerics.integrate(lambda t: speed(spec, t), t0, t1, tol=tol)


@lru_cache(maxsize=None)
def total_arclength(spec: CurveSpec) -> float:
    return arclength(spec, spec.t_lo, spec.t_hi)


@lru_cache(maxsize=None)
def _arclength_table(spec: CurveSpec, panels: int = 256):
    # Cumulative lengths on a uniform grid, one Gauss-Legendre rule per
    # panel; essentially exact for these analytic speeds.
    nodes, weights = np.polynomial.legendre.leggauss(16)
    ts = np.linspace(spec.t_lo, spec.t_hi, panels + 1)
    cum = np.empty(panels + 1)
    cum[0] = 0.0
    for i in range(panels):
        a, b = ts[i], ts[i + 1]
        mid, half = 0.5 * (a + b), 0.5 * (b - a)
        vals = [speed(spec, mid + half * x) for x in nodes]
        cum[i + 1] = cum[i] + half * float(np.dot(weights, vals))
    return ts, cum, nodes, weights


@lru_cache(maxsize=None)
def at_arclength(spec: CurveSpec, s: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Parameter t with arclength(spec, t_lo, t) = s."""
    total = total_arclength(spec)
    if not (-tol.abs_tol <= s <= total + tol.abs_tol):
        raise TargetOutOfRange(f"arclength {s:g} outside [0, {total:g}]")
    v0 = _constant_speed(spec)
    if v0 is not None:
        return min(max(spec.t_lo + s / v0, spec.t_lo), spec.t_hi)
    ts, cum, nodes, weights = _arclength_table(spec)
    i = min(int(np.searchsorted(cum, s, side="right")) - 1, len(ts) - 2)
    i = max(i, 0)

    def local(t: float) -> float:
        mid, half = 0.5 * (ts[i] + t), 0.5 * (t - ts[i])
        vals = [speed(spec, mid + half * x) for x in nodes]
        return float(cum[i]) + half * float(np.dot(weights, vals))

    return numerics.invert_monotone(local, s, float(ts[i]), float(ts[i + 1]), tol=tol)


def position_at_arclength(spec: CurveSpec, s: float) -> Vec3:
    return eval_jet(spec, at_arclength(spec, s)).r


def arclength_grid(
    spec: CurveSpec, n: int, margin: float = 0.05
) -> np.ndarray:
    """Uniform interior arclength samples, keeping a margin off both ends
    so finite-difference stencils stay inside the declared range."""
    total = total_arclength(spec)
    return np.linspace(margin * total, (1.0 - margin) * total, n)


def frenet_arclength_grid(
    spec: CurveSpec, n: int, margin: float = 0.05, exclude_halfwidth: float = 1e-3
) -> np.ndarray:
    """Like :func:`arclength_grid` but drops samples whose parameter falls
    within ``exclude_halfwidth`` of a curvature zero (planar cubic at t=0)."""
    grid = arclength_grid(spec, n, margin)
    if spec.family != "planar_cubic":
        return grid
    keep = [s for s in grid if abs(at_arclength(spec, s)) > exclude_halfwidth]
    return np.array(keep)
