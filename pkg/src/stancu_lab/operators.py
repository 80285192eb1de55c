"""Bernstein and Bernstein-Stancu operators on [0, 1].

The degree-n Bernstein operator blends samples of a function taken at the
equally spaced points k/n with binomial weights b_{n,k}(x). The Stancu
variant keeps the weights and shifts the sample points to
(k + alpha)/(n + beta) for shift parameters 0 <= alpha <= beta; alpha =
beta = 0 recovers the plain operator through the same code path.

Everything in this module is a pure function of its arguments. Basis rows
are produced by a forward ratio recurrence (no explicit binomial
coefficients, so degrees in the hundreds stay exact to ~1e-13); rows for
x > 1/2 are computed at 1 - x and reversed so the recurrence always starts
from its well-conditioned end and (1 - x)**n never underflows for the
supported degree range.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "BUILTIN_FUNCTIONS",
    "FunctionSpec",
    "SampledCurve",
    "StancuParams",
    "apply_operator",
    "apply_operator_curve",
    "basis_row",
    "bernstein_basis",
    "moment_closed_form",
]

_BUILTIN_EVAL = {
    "e0": lambda t: np.ones_like(t),
    "e1": lambda t: np.array(t, copy=True),
    "e2": lambda t: t * t,
    "sin15": lambda t: np.sin(15.0 * t),
    "abshalf": lambda t: np.abs(t - 0.5),
}

BUILTIN_FUNCTIONS = tuple(sorted(_BUILTIN_EVAL))


def _as_unit_interval(x, what="x"):
    arr = np.asarray(x, dtype=float)
    if arr.size == 0:
        raise ValueError(f"{what} is empty")
    if not np.isfinite(arr).all() or float(arr.min()) < 0.0 or float(arr.max()) > 1.0:
        raise ValueError(f"{what} must lie in [0, 1]")
    return arr


@dataclass(frozen=True)
class FunctionSpec:
    """A named real-valued function on exactly [0, 1].

    Either a builtin analytic function (``e0``, ``e1``, ``e2``, ``sin15``
    for sin(15x), ``abshalf`` for |x - 1/2|) or a tabulated one given by
    samples, evaluated with linear interpolation between them. Calling the
    spec outside [0, 1] raises ValueError.
    """

    name: str
    kind: str
    samples: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self):
        if self.kind == "builtin":
            if self.name not in _BUILTIN_EVAL:
                raise ValueError(
                    f"unknown builtin function {self.name!r}; "
                    f"choose one of {', '.join(BUILTIN_FUNCTIONS)}"
                )
            if self.samples is not None:
                raise ValueError("builtin functions carry no samples")
        elif self.kind == "tabulated":
            if self.samples is None or len(self.samples) < 2:
                raise ValueError("tabulated functions need at least 2 samples")
            xs = np.array([s[0] for s in self.samples], dtype=float)
            ys = np.array([s[1] for s in self.samples], dtype=float)
            if not np.isfinite(xs).all() or not np.isfinite(ys).all():
                raise ValueError("samples must be finite")
            if xs[0] != 0.0 or xs[-1] != 1.0:
                raise ValueError("sample abscissae must start at 0 and end at 1")
            if not (np.diff(xs) > 0.0).all():
                raise ValueError("sample abscissae must be strictly increasing")
        else:
            raise ValueError(f"kind must be 'builtin' or 'tabulated', got {self.kind!r}")

    @staticmethod
    def builtin(name: str) -> "FunctionSpec":
        return FunctionSpec(name=name, kind="builtin")

    @staticmethod
    def tabulated(name, xs, ys) -> "FunctionSpec":
        """Build a piecewise-linear function from parallel abscissa/value arrays."""
        pts = tuple((float(a), float(b)) for a, b in zip(xs, ys, strict=True))
        return FunctionSpec(name=name, kind="tabulated", samples=pts)

    def __call__(self, x):
        arr = _as_unit_interval(x, what=f"argument of {self.name}")
        if self.kind == "builtin":
            out = _BUILTIN_EVAL[self.name](arr)
        else:
            xs = np.array([s[0] for s in self.samples], dtype=float)
            ys = np.array([s[1] for s in self.samples], dtype=float)
            out = np.interp(arr, xs, ys)
        if arr.ndim == 0:
            return float(out)
        return out


@dataclass(frozen=True)
class StancuParams:
    """Operator degree n >= 1 plus the node shifts, 0 <= alpha <= beta."""

    n: int
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise ValueError("n must be an integer")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        a, b = float(self.alpha), float(self.beta)
        if not (np.isfinite(a) and np.isfinite(b)) or not (0.0 <= a <= b):
            raise ValueError("shift parameters must satisfy 0 <= alpha <= beta")

    def node_values(self) -> np.ndarray:
        """The n+1 sample points (k + alpha)/(n + beta), k = 0..n."""
        return (np.arange(self.n + 1) + self.alpha) / (self.n + self.beta)


@dataclass(frozen=True, eq=False)
class SampledCurve:
    """Function values over a uniform grid on [0, 1], endpoints included."""

    grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if grid.ndim != 1 or grid.size < 2 or values.shape != grid.shape:
            raise ValueError("grid and values must be equal-length 1-d arrays, size >= 2")
        if grid[0] != 0.0 or grid[-1] != 1.0 or not (np.diff(grid) > 0.0).all():
            raise ValueError("grid must increase strictly from 0 to 1")
        h = 1.0 / (grid.size - 1)
        if np.abs(np.diff(grid) - h).max() > 1e-12:
            raise ValueError("grid must be uniform")
        grid.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)

    @property
    def step(self) -> float:
        return 1.0 / (self.grid.size - 1)


def _basis_columns(n: int, xs: np.ndarray) -> np.ndarray:
    """All basis values b_{n,k}(x) as an (n+1, len(xs)) array.

    Forward ratio recurrence over k with explicit unit-vector branches at
    x = 0 and x = 1 (the formula would hit 0**0 there). Interior points
    are reflected to u = min(x, 1-x) so the seed (1-u)**n stays a normal
    float; degrees large enough to underflow the seed are rejected rather
    than silently returning zeros.
    """
    out = np.zeros((n + 1, xs.size))
    out[0, xs == 0.0] = 1.0
    out[n, xs == 1.0] = 1.0
    interior = (xs > 0.0) & (xs < 1.0)
    if interior.any():
        xi = xs[interior]
        u = np.minimum(xi, 1.0 - xi)
        seed = (1.0 - u) ** n
        if float(seed.min()) < np.finfo(float).tiny:
            raise ValueError(f"degree n={n} too large for float64 basis recurrence")
        r = u / (1.0 - u)
        vals = np.empty((n + 1, xi.size))
        b = seed
        vals[0] = b
        for k in range(n):
            b = b * r * ((n - k) / (k + 1.0))
            vals[k + 1] = b
        flip = xi > 0.5
        vals[:, flip] = vals[::-1, flip]
        out[:, interior] = vals
    return out


def basis_row(n: int, x: float) -> np.ndarray:
    """All n+1 basis values at one point; non-negative, sums to 1."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError("n must be a positive integer")
    arr = _as_unit_interval(float(x))
    return _basis_columns(n, arr.reshape(1))[:, 0]


def bernstein_basis(n: int, k: int, x: float) -> float:
    """The single basis value b_{n,k}(x) = C(n,k) x^k (1-x)^(n-k)."""
    if not isinstance(k, (int, np.integer)) or not 0 <= k <= n:
        raise ValueError(f"k must be an integer in 0..{n}")
    return float(basis_row(n, x)[k])


def _operator_values(f: FunctionSpec, p: StancuParams, xs: np.ndarray) -> np.ndarray:
    fn = np.asarray(f(p.node_values()), dtype=float)
    cols = _basis_columns(p.n, xs)
    acc = np.zeros(xs.size)
    # fixed ascending-k accumulation keeps scalar and curve paths bit-identical
    for k in range(p.n + 1):
        acc = acc + fn[k] * cols[k]
    return acc


def apply_operator(f: FunctionSpec, p: StancuParams, x: float) -> float:
    """Evaluate the operator: sum_k b_{n,k}(x) f((k + alpha)/(n + beta))."""
    arr = _as_unit_interval(float(x))
    return float(_operator_values(f, p, arr.reshape(1))[0])


def apply_operator_curve(f: FunctionSpec, p: StancuParams, grid_size: int) -> SampledCurve:
    """Operator values over a uniform grid; pointwise identical to apply_operator."""
    if not isinstance(grid_size, (int, np.integer)) or grid_size < 2:
        raise ValueError("grid_size must be an integer >= 2")
    grid = np.linspace(0.0, 1.0, grid_size)
    return SampledCurve(grid=grid, values=_operator_values(f, p, grid))


def moment_closed_form(i: int, p: StancuParams, x):
    """Closed-form operator image of the monomial t**i, i in {0, 1, 2}.

    These are the three identities that drive the positive-linear-operator
    convergence argument:

        i = 0:  1
        i = 1:  x + (alpha - beta x)/(n + beta)
        i = 2:  x**2 + (n x (1-x) + (alpha - beta x)(2 n x + beta x + alpha))
                       / (n + beta)**2

    Accepts a scalar or an array of evaluation points.
    """
    if i not in (0, 1, 2):
        raise ValueError("moment index must be 0, 1 or 2")
    arr = _as_unit_interval(x)
    n, a, b = p.n, p.alpha, p.beta
    if i == 0:
        out = np.ones_like(arr)
    elif i == 1:
        out = arr + (a - b * arr) / (n + b)
    else:
        out = arr**2 + (n * arr * (1.0 - arr) + (a - b * arr) * (2.0 * n * arr + b * arr + a)) / (
            n + b
        ) ** 2
    if arr.ndim == 0:
        return float(out)
    return out
