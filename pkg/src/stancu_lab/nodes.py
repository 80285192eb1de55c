"""Node geometry of the two operator families.

For fixed degree n the plain operator samples at k/n while the shifted
family samples at (k + alpha)/(n + beta). The checks below turn the
geometric facts about those two point sets into plain per-index data plus
booleans:

* the displacement of every shifted node from its plain counterpart is at
  most (alpha + beta)/(n + beta), which vanishes as n grows
  (``check_theorem1``);
* the shifted nodes contract toward the ratio m = alpha/beta by the exact
  factor n/(n + beta), and the two families cross at m
  (``check_theorem2``);
* growing beta at fixed ratio m nests the node families strictly closer
  around m, with distance ratio (n + beta1)/(n + beta2)
  (``check_theorem3``).

Reports are data, not prose; harnesses assert on their fields.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import StancuParams

__all__ = [
    "ClusterReport",
    "NodeSet",
    "Theorem1Report",
    "Theorem3Report",
    "check_theorem1",
    "check_theorem2",
    "check_theorem3",
    "node_gap",
    "stancu_nodes",
]

# |k/n - m| at or below this is treated as "the node sits at m"; covers the
# float fuzz of non-representable ratios like 4.7/10.
CROSSING_TOL = 1e-12

# 1-ulp cushion for bound comparisons: with alpha = 0 the largest gap is
# mathematically EQUAL to the bound and two float evaluations of the same
# real can land either side of each other.
_FLOAT_CUSHION = 1e-12


@dataclass(frozen=True, eq=False)
class NodeSet:
    """The n+1 sample points of one operator, with their common spacing."""

    params: StancuParams
    nodes: np.ndarray
    spacing_h: float


def stancu_nodes(p: StancuParams) -> NodeSet:
    """Node set (k + alpha)/(n + beta), k = 0..n; alpha = beta = 0 gives k/n."""
    nodes = p.node_values()
    nodes.setflags(write=False)
    return NodeSet(params=p, nodes=nodes, spacing_h=1.0 / (p.n + p.beta))


def node_gap(k: int, p: StancuParams) -> float:
    """Displacement (k + alpha)/(n + beta) - k/n of one shifted node.

    Algebraically equal to (n alpha - k beta)/(n (n + beta)); it vanishes
    exactly where k/n meets alpha/beta.
    """
    if not isinstance(k, (int, np.integer)) or not 0 <= k <= p.n:
        raise ValueError(f"k must be an integer in 0..{p.n}")
    return (k + p.alpha) / (p.n + p.beta) - k / p.n


def _gaps(p: StancuParams) -> np.ndarray:
    ks = np.arange(p.n + 1)
    return (ks + p.alpha) / (p.n + p.beta) - ks / p.n


@dataclass(frozen=True, eq=False)
class Theorem1Report:
    """Per-degree maximal node displacement against the (alpha+beta)/(n+beta) bound."""

    alpha: float
    beta: float
    degrees: tuple[int, ...]
    max_gaps: np.ndarray
    bounds: np.ndarray
    within_bound: bool
    bounds_decreasing: bool

    @property
    def ok(self) -> bool:
        return self.within_bound and self.bounds_decreasing


def check_theorem1(p: StancuParams, n_sequence) -> Theorem1Report:
    """Check the even-distribution claim along a strictly increasing degree sweep.

    ``p`` supplies the shift parameters; its own degree is replaced by each
    entry of ``n_sequence`` in turn.
    """
    degrees = tuple(int(n) for n in n_sequence)
    if len(degrees) == 0:
        raise ValueError("n_sequence must be non-empty")
    if any(n < 1 for n in degrees):
        raise ValueError("degrees must be >= 1")
    if any(b <= a for a, b in zip(degrees, degrees[1:])):
        raise ValueError("n_sequence must be strictly increasing")
    a, b = p.alpha, p.beta
    max_gaps = np.array([np.abs(_gaps(StancuParams(n, a, b))).max() for n in degrees])
    bounds = np.array([(a + b) / (n + b) for n in degrees])
    within = bool((max_gaps <= bounds + _FLOAT_CUSHION).all())
    if a + b == 0.0:
        decreasing = bool((bounds == 0.0).all())
    else:
        decreasing = bool((np.diff(bounds) < 0.0).all())
    return Theorem1Report(
        alpha=a,
        beta=b,
        degrees=degrees,
        max_gaps=max_gaps,
        bounds=bounds,
        within_bound=within,
        bounds_decreasing=decreasing,
    )


@dataclass(frozen=True, eq=False)
class ClusterReport:
    """How the shifted nodes sit around the ratio m = alpha/beta.

    ``stancu_dist`` equals ``contraction * bernstein_dist`` up to float
    rounding (``identity_error`` is the measured residual); the two node
    families coincide exactly at the ``crossing_indices``.
    """

    params: StancuParams
    ratio_m: float
    bernstein_dist: np.ndarray
    stancu_dist: np.ndarray
    max_gap: float
    crossing_indices: tuple[int, ...]
    contraction: float
    identity_error: float
    inequality_holds: bool
    sign_pattern_holds: bool

    @property
    def ok(self) -> bool:
        return self.inequality_holds and self.sign_pattern_holds


def check_theorem2(p: StancuParams) -> ClusterReport:
    """Check the contraction of the shifted nodes toward m = alpha/beta (beta > 0)."""
    if p.beta <= 0.0:
        raise ValueError("beta must be positive: the ratio alpha/beta is undefined at 0")
    n, a, b = p.n, p.alpha, p.beta
    m = a / b
    ks = np.arange(n + 1)
    plain = ks / n
    shifted = (ks + a) / (n + b)
    gaps = shifted - plain
    contraction = n / (n + b)
    bern_dist = np.abs(plain - m)
    stan_dist = np.abs(shifted - m)
    identity_error = float(np.abs((shifted - m) - contraction * (plain - m)).max())
    inequality = bool((stan_dist <= bern_dist + 1e-15).all())
    off = bern_dist > CROSSING_TOL
    above = off & (plain > m)
    below = off & (plain < m)
    sign_pattern = bool(
        ((m < shifted[above]) & (shifted[above] < plain[above])).all()
        and ((plain[below] < shifted[below]) & (shifted[below] < m)).all()
    )
    crossings = tuple(int(k) for k in ks[np.abs(gaps) <= CROSSING_TOL])
    return ClusterReport(
        params=p,
        ratio_m=m,
        bernstein_dist=bern_dist,
        stancu_dist=stan_dist,
        max_gap=float(np.abs(gaps).max()),
        crossing_indices=crossings,
        contraction=contraction,
        identity_error=identity_error,
        inequality_holds=inequality,
        sign_pattern_holds=sign_pattern,
    )


@dataclass(frozen=True, eq=False)
class Theorem3Report:
    """Nesting of two node families sharing the ratio m = alpha/beta.

    With beta2 > beta1 the second family sits strictly between the first
    and m at every index off m; the distances shrink by the exact factor
    ``shrink_factor`` = (n + beta1)/(n + beta2).
    """

    params1: StancuParams
    params2: StancuParams
    ratio_m: float
    dist1: np.ndarray
    dist2: np.ndarray
    shrink_factor: float
    chain_holds: bool
    strictly_closer: bool
    difference_identity_error: float
    distance_identity_error: float

    @property
    def ok(self) -> bool:
        return self.chain_holds and self.strictly_closer


def check_theorem3(p1: StancuParams, p2: StancuParams) -> Theorem3Report:
    """Check nesting for two shift pairs with equal ratio and beta2 >= beta1."""
    if p1.n != p2.n:
        raise ValueError("both parameter sets must share the degree n")
    n = p1.n
    a1, b1, a2, b2 = p1.alpha, p1.beta, p2.alpha, p2.beta
    if b1 <= 0.0:
        raise ValueError("beta1 must be positive")
    if a1 > a2 or b1 > b2:
        raise ValueError("need alpha1 <= alpha2 and beta1 <= beta2")
    m1, m2 = a1 / b1, a2 / b2
    if abs(m1 - m2) > 1e-12 * max(1.0, abs(m1)):
        raise ValueError(f"ratio mismatch: {m1!r} vs {m2!r}")
    m = m1
    ks = np.arange(n + 1)
    plain = ks / n
    nodes1 = (ks + a1) / (n + b1)
    nodes2 = (ks + a2) / (n + b2)
    dist1 = np.abs(nodes1 - m)
    dist2 = np.abs(nodes2 - m)
    factor = (n + b1) / (n + b2)

    diff_identity = float(
        np.abs((nodes1 - nodes2) - (n * (b2 - b1) * (plain - m)) / ((n + b1) * (n + b2))).max()
    )
    dist_identity = float(np.abs(dist2 - factor * dist1).max())

    off = np.abs(plain - m) > CROSSING_TOL
    below = off & (plain < m)
    above = off & (plain > m)
    if b2 > b1:
        chain = bool(
            ((nodes1[below] < nodes2[below]) & (nodes2[below] < m)).all()
            and ((nodes1[above] > nodes2[above]) & (nodes2[above] > m)).all()
        )
        closer = bool((dist2[off] < dist1[off]).all())
    else:
        # identical ratios with equal beta mean identical families
        chain = bool(np.abs(nodes1 - nodes2).max() == 0.0)
        closer = chain
    return Theorem3Report(
        params1=p1,
        params2=p2,
        ratio_m=m,
        dist1=dist1,
        dist2=dist2,
        shrink_factor=factor,
        chain_holds=chain,
        strictly_closer=closer,
        difference_identity_error=diff_identity,
        distance_identity_error=dist_identity,
    )
