"""Error measurement for the operator families.

Centerpiece is the modulus of continuity omega(f; delta): the largest
oscillation of f over pairs of points at distance <= delta. It is
computed on a uniform grid with a linear-time sliding-window min/max scan
(monotone deques). Grid maxima under-estimate true suprema, so every
dominance check in this module carries an explicit slack of
omega(f; grid step).

On top of omega sit the sup-norm experiment quantities: the measured
sup-error of an operator against f, the distance between the shifted and
plain operators (bounded by omega of the maximal node displacement), the
two-term upper estimate

    omega(f; (alpha + beta)/(n + beta)) + c1 * omega(f; n**-0.5)

that must dominate the measured sup-error, and the fixed-degree
growing-beta experiment in which the operator collapses onto the single
value f(alpha/beta).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .operators import FunctionSpec, StancuParams, apply_operator_curve

__all__ = [
    "BoundConfig",
    "DEFAULT_CONFIG",
    "RatioFamily",
    "Theorem4Report",
    "corollary2_bound",
    "derive_c",
    "modulus_of_continuity",
    "operator_distance",
    "sup_error",
    "theorem4_experiment",
]

# Sharp absolute constant for the classical sup-norm estimate of the plain
# operator at step n**-1/2 (Sikkema's constant); configurable because only
# dominance is asserted, never this particular value.
DEFAULT_C1 = 1.0898873


@dataclass(frozen=True)
class BoundConfig:
    """Grid resolutions and the absolute constant of the two-term estimate."""

    c1: float = DEFAULT_C1
    mod_grid_size: int = 10001
    sup_grid_size: int = 1001

    def __post_init__(self):
        if not (self.c1 > 0.0):
            raise ValueError("c1 must be positive")
        if self.mod_grid_size < 101 or self.sup_grid_size < 101:
            raise ValueError("grid sizes must be >= 101")

    @property
    def mod_step(self) -> float:
        return 1.0 / (self.mod_grid_size - 1)

    @property
    def sup_step(self) -> float:
        return 1.0 / (self.sup_grid_size - 1)


DEFAULT_CONFIG = BoundConfig()


def modulus_of_continuity(f: FunctionSpec, delta: float, cfg: BoundConfig = DEFAULT_CONFIG) -> float:
    """omega(f; delta): max |f(x1) - f(x2)| over grid pairs with |x1 - x2| <= delta.

    Single pass with monotone deques: the answer is the largest
    (window max - window min) over all windows of w + 1 consecutive grid
    points, where w = floor(delta * (m - 1)) grid steps fit into delta.
    Monotone non-decreasing in delta and at most the global oscillation.
    """
    if not (delta > 0.0) or not math.isfinite(delta):
        raise ValueError("delta must be positive")
    m = cfg.mod_grid_size
    grid = np.linspace(0.0, 1.0, m)
    vals = np.asarray(f(grid), dtype=float).tolist()
    w = int(math.floor(delta * (m - 1)))
    if w <= 0:
        return 0.0
    length = min(w, m - 1) + 1
    maxq: deque[int] = deque()
    minq: deque[int] = deque()
    best = 0.0
    for i, v in enumerate(vals):
        while maxq and vals[maxq[-1]] <= v:
            maxq.pop()
        maxq.append(i)
        while minq and vals[minq[-1]] >= v:
            minq.pop()
        minq.append(i)
        lo = i - length + 1
        if maxq[0] < lo:
            maxq.popleft()
        if minq[0] < lo:
            minq.popleft()
        osc = vals[maxq[0]] - vals[minq[0]]
        if osc > best:
            best = osc
    return best


def grid_slack(f: FunctionSpec, cfg: BoundConfig = DEFAULT_CONFIG) -> float:
    """omega(f; one grid step): the slack grid maxima owe to true suprema."""
    return modulus_of_continuity(f, cfg.mod_step, cfg)


def sup_error(f: FunctionSpec, p: StancuParams, cfg: BoundConfig = DEFAULT_CONFIG) -> float:
    """Grid maximum of |operator value - f|, the uniform-norm proxy."""
    curve = apply_operator_curve(f, p, cfg.sup_grid_size)
    return float(np.abs(curve.values - np.asarray(f(curve.grid), dtype=float)).max())


def operator_distance(f: FunctionSpec, p: StancuParams, cfg: BoundConfig = DEFAULT_CONFIG) -> float:
    """Grid maximum of |shifted operator - plain operator| at the same degree.

    Every node moves by at most (alpha + beta)/(n + beta), so this is
    bounded by omega(f; (alpha + beta)/(n + beta)) plus grid slack.
    """
    shifted = apply_operator_curve(f, p, cfg.sup_grid_size)
    plain = apply_operator_curve(f, StancuParams(p.n, 0.0, 0.0), cfg.sup_grid_size)
    return float(np.abs(shifted.values - plain.values).max())


def corollary2_bound(f: FunctionSpec, p: StancuParams, cfg: BoundConfig = DEFAULT_CONFIG) -> float:
    """Two-term upper estimate omega(f; (a+b)/(n+b)) + c1 * omega(f; n**-0.5)."""
    shift = (p.alpha + p.beta) / (p.n + p.beta)
    term1 = modulus_of_continuity(f, shift, cfg) if shift > 0.0 else 0.0
    term2 = cfg.c1 * modulus_of_continuity(f, p.n ** -0.5, cfg)
    return term1 + term2


def derive_c(f: FunctionSpec, p: StancuParams, cfg: BoundConfig = DEFAULT_CONFIG) -> float:
    """Smallest c with two-term bound <= c * omega(f; n**-0.5) for these inputs.

    The 0/0 case of a constant function is defined as 0; a vanishing
    modulus under a nonzero bound reports math.inf (unbounded).
    """
    denom = modulus_of_continuity(f, p.n ** -0.5, cfg)
    num = corollary2_bound(f, p, cfg)
    if denom == 0.0:
        return 0.0 if num == 0.0 else math.inf
    return num / denom


@dataclass(frozen=True)
class RatioFamily:
    """Shift pairs (s * alpha0, s * beta0) along increasing scale factors.

    Requires 0 < alpha0 < beta0, so every level keeps the same ratio
    m = alpha0/beta0 strictly inside (0, 1) while beta grows without bound.
    """

    alpha0: float
    beta0: float
    scale_factors: tuple[float, ...]

    def __post_init__(self):
        if not (0.0 < self.alpha0 < self.beta0):
            raise ValueError("need 0 < alpha0 < beta0")
        s = tuple(float(v) for v in self.scale_factors)
        if len(s) == 0 or any(v <= 0.0 for v in s):
            raise ValueError("scale factors must be positive")
        if any(b <= a for a, b in zip(s, s[1:])):
            raise ValueError("scale factors must be strictly increasing")
        object.__setattr__(self, "scale_factors", s)
        m = self.alpha0 / self.beta0
        for a, b in self.levels():
            if abs(a / b - m) > 1e-12 * max(1.0, m):
                raise ValueError("scaled pair drifts off the common ratio")

    @property
    def ratio_m(self) -> float:
        return self.alpha0 / self.beta0

    def levels(self) -> list[tuple[float, float]]:
        return [(s * self.alpha0, s * self.beta0) for s in self.scale_factors]


@dataclass(frozen=True, eq=False)
class Theorem4Report:
    """Per-level distance of the operator from the single value f(m).

    ``distances[j]`` is the grid sup of |operator - f(m)| at level j;
    every node lies within 2n/(n + beta_j) of m, so each distance is
    bounded by omega(f; 2n/(n + beta_j)) plus grid slack, and the
    distances tend to 0 as the scale factors grow. Monotone decrease along
    the levels is reported but NOT guaranteed: compressing the nodes can
    transiently deepen the smoothed oscillation before the collapse wins.
    """

    ratio_m: float
    f_at_m: float
    levels: tuple[tuple[float, float], ...]
    distances: np.ndarray
    bounds: np.ndarray
    within_bound: bool
    monotone_decreasing: bool

    @property
    def final_distance(self) -> float:
        return float(self.distances[-1])


def theorem4_experiment(
    f: FunctionSpec, n: int, fam: RatioFamily, cfg: BoundConfig = DEFAULT_CONFIG
) -> Theorem4Report:
    """Run the fixed-degree, growing-beta collapse experiment."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError("n must be a positive integer")
    m = fam.ratio_m
    f_at_m = float(f(m))
    slack = grid_slack(f, cfg)
    levels = tuple(fam.levels())
    distances = []
    bound_vals = []
    for a, b in levels:
        curve = apply_operator_curve(f, StancuParams(int(n), a, b), cfg.sup_grid_size)
        distances.append(float(np.abs(curve.values - f_at_m).max()))
        bound_vals.append(modulus_of_continuity(f, 2.0 * n / (n + b), cfg) + slack)
    d = np.array(distances)
    bounds = np.array(bound_vals)
    # 1e-12 noise floor: a constant f has bound exactly 0 while the measured
    # distance carries operator-evaluation rounding (same floor as sup_error)
    return Theorem4Report(
        ratio_m=m,
        f_at_m=f_at_m,
        levels=levels,
        distances=d,
        bounds=bounds,
        within_bound=bool((d <= bounds + 1e-12).all()),
        monotone_decreasing=bool((np.diff(d) < 0.0).all()),
    )
