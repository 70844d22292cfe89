"""Interval type-2 trapezoidal fuzzy numbers, fuzziness and EKM centroids.

Everything here works on the universe [0, 1] unless a grid says otherwise.
Values are immutable; all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

DEFAULT_N = 1001
EKM_MAX_ITER = 100
EKM_TOL = 1e-12

FuzzinessMode = Literal["midpoint", "right", "left"]


class FuzzyError(ValueError):
    """Invalid fuzzy-set construction or an undefined numeric result."""


def universe(n: int = DEFAULT_N, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
    if n < 3:
        raise FuzzyError(f"grid needs at least 3 points, got {n}")
    return np.linspace(lo, hi, n)


@dataclass(frozen=True)
class Trapezoid:
    """Trapezoidal membership function ``T(a, b, c, d; h)``.

    Membership is 0 outside ``[a, d]``, ``h`` on ``[b, c]`` and linear on the
    two edges.  Degenerate edges (``a == b`` or ``c == d``) are vertical.
    """

    a: float
    b: float
    c: float
    d: float
    h: float = 1.0

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "h"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not (self.a <= self.b <= self.c <= self.d):
            raise FuzzyError(
                f"trapezoid knots must satisfy a <= b <= c <= d, got "
                f"({self.a}, {self.b}, {self.c}, {self.d})"
            )
        if not (0.0 < self.h <= 1.0):
            raise FuzzyError(f"trapezoid height must lie in (0, 1], got {self.h}")

    @property
    def knots(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    @property
    def height(self) -> float:
        return self.h

    @property
    def support(self) -> tuple[float, float]:
        return (self.a, self.d)

    def __call__(self, x):
        return membership(self, x)

    def cut(self, alpha: float) -> tuple[float, float]:
        """Closed alpha-cut ``[l, r]``; at ``alpha = 0`` this is the support."""
        if alpha > self.h + 1e-12:
            raise FuzzyError(f"alpha {alpha} exceeds height {self.h}")
        t = min(max(alpha / self.h, 0.0), 1.0)
        return (self.a + (self.b - self.a) * t, self.d - (self.d - self.c) * t)

    def centroid(self, n: int = DEFAULT_N) -> float:
        x = universe(n, min(self.a, 0.0), max(self.d, 1.0))
        mu = membership(self, x)
        if mu.sum() == 0.0:
            return 0.5 * (self.b + self.c)
        return float(np.dot(x, mu) / mu.sum())

    def scaled(self, factor: float) -> "Trapezoid":
        return Trapezoid(self.a, self.b, self.c, self.d, self.h * factor)

    def mirrored(self) -> "Trapezoid":
        return Trapezoid(1 - self.d, 1 - self.c, 1 - self.b, 1 - self.a, self.h)


def membership(t: Trapezoid, x):
    """Evaluate ``t`` at scalar or array ``x``."""
    xs = np.asarray(x, dtype=float)
    mu = np.zeros_like(xs)
    core = (xs >= t.b) & (xs <= t.c)
    mu[core] = t.h
    if t.b > t.a:
        rise = (xs > t.a) & (xs < t.b)
        mu[rise] = t.h * (xs[rise] - t.a) / (t.b - t.a)
    if t.d > t.c:
        fall = (xs > t.c) & (xs < t.d)
        mu[fall] = t.h * (t.d - xs[fall]) / (t.d - t.c)
    if np.ndim(x) == 0:
        return float(mu)
    return mu


@dataclass(frozen=True)
class IT2TrFN:
    """Interval type-2 trapezoidal fuzzy number: a UMF with a nested LMF."""

    umf: Trapezoid
    lmf: Trapezoid

    def __post_init__(self):
        u, l = self.umf, self.lmf
        if l.h > u.h + 1e-12:
            raise FuzzyError(f"LMF height {l.h} exceeds UMF height {u.h}")
        if l.a < u.a - 1e-12 or l.d > u.d + 1e-12:
            raise FuzzyError(
                f"LMF support [{l.a}, {l.d}] is not inside UMF support [{u.a}, {u.d}]"
            )
        # Both are piecewise linear, so nesting only needs checking at the knots.
        pts = np.array(sorted(set(u.knots) | set(l.knots)))
        if np.any(membership(l, pts) > membership(u, pts) + 1e-9):
            raise FuzzyError("LMF rises above UMF: footprint is not nested")

    @classmethod
    def from_params(cls, umf: Sequence[float], lmf: Sequence[float],
                    lmf_height: float = 1.0, umf_height: float = 1.0) -> "IT2TrFN":
        return cls(Trapezoid(*umf, h=umf_height), Trapezoid(*lmf, h=lmf_height))

    @classmethod
    def crisp(cls, value: float) -> "IT2TrFN":
        t = Trapezoid(value, value, value, value)
        return cls(t, t)

    @classmethod
    def type1(cls, t: Trapezoid) -> "IT2TrFN":
        return cls(t, t)

    def upper(self, x):
        return membership(self.umf, x)

    def lower(self, x):
        return membership(self.lmf, x)

    def sample(self, n: int = DEFAULT_N) -> "SampledFOU":
        x = universe(n)
        return SampledFOU(x, self.lower(x), self.upper(x))

    def mirrored(self) -> "IT2TrFN":
        return IT2TrFN(self.umf.mirrored(), self.lmf.mirrored())

    def centroid(self, n: int = DEFAULT_N) -> tuple[float, float, float]:
        return ekm_centroid(self.sample(n))


@dataclass(frozen=True, eq=False)
class SampledFOU:
    """Footprint of uncertainty sampled on an ascending grid."""

    grid: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        if grid.ndim != 1 or grid.shape != lower.shape or grid.shape != upper.shape:
            raise FuzzyError("grid, lower and upper must be 1-D arrays of equal length")
        if grid.size < 3:
            raise FuzzyError(f"sampled FOU needs N >= 3 points, got {grid.size}")
        if np.any(np.diff(grid) <= 0):
            raise FuzzyError("grid must be strictly increasing")
        if np.any(lower < -1e-12) or np.any(upper > 1 + 1e-12):
            raise FuzzyError("memberships must lie in [0, 1]")
        bad = np.flatnonzero(lower > upper + 1e-12)
        if bad.size:
            i = int(bad[0])
            raise FuzzyError(
                f"FOU not nested at x={grid[i]:.6g}: lower {lower[i]:.6g} > upper {upper[i]:.6g}"
            )
        lower = np.clip(np.minimum(lower, upper), 0.0, 1.0)
        upper = np.clip(upper, 0.0, 1.0)
        for arr in (grid, lower, upper):
            arr.setflags(write=False)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    def __len__(self) -> int:
        return self.grid.size

    def __eq__(self, other):
        if not isinstance(other, SampledFOU):
            return NotImplemented
        return (np.array_equal(self.grid, other.grid)
                and np.array_equal(self.lower, other.lower)
                and np.array_equal(self.upper, other.upper))

    __hash__ = None

    def rows(self):
        """(x, lower, upper) triples."""
        return list(zip(self.grid.tolist(), self.lower.tolist(), self.upper.tolist()))


def yager_fuzziness(mu) -> float:
    """Normalised Yager fuzziness ``mean(1 - |2 mu - 1|)`` of a sampled T1 set."""
    mu = np.asarray(mu, dtype=float)
    if mu.size == 0:
        raise FuzzyError("fuzziness of an empty sample set is undefined")
    if np.any(mu < -1e-12) or np.any(mu > 1 + 1e-12):
        raise FuzzyError("membership samples must lie in [0, 1]")
    return float(np.mean(1.0 - np.abs(2.0 * mu - 1.0)))


def _as_fou(f, n: int) -> SampledFOU:
    if isinstance(f, SampledFOU):
        return f
    if hasattr(f, "sample"):
        return f.sample(n)
    raise TypeError(f"expected IT2TrFN or SampledFOU, got {type(f).__name__}")


def embedded_extremes(lower, upper) -> tuple[np.ndarray, np.ndarray]:
    """Embedded sets of minimum and maximum fuzziness.

    The first picks, pointwise, whichever bound is further from 0.5; the
    second moves toward 0.5 as far as the footprint allows.
    """
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    least = np.where(np.abs(upper - 0.5) > np.abs(lower - 0.5), upper, lower)
    most = np.where(upper < 0.5, upper, np.where(lower > 0.5, lower, 0.5))
    return least, most


def it2_fuzziness(f, n: int = DEFAULT_N) -> tuple[float, float]:
    """Fuzziness interval ``[f_l, f_r]`` of an IT2 set over all embedded T1 sets."""
    fou = _as_fou(f, n)
    least, most = embedded_extremes(fou.lower, fou.upper)
    return yager_fuzziness(least), yager_fuzziness(most)


def scalar_fuzziness(f, mode: FuzzinessMode = "midpoint", n: int = DEFAULT_N) -> float:
    f_l, f_r = it2_fuzziness(f, n)
    if mode == "midpoint":
        return 0.5 * (f_l + f_r)
    if mode == "left":
        return f_l
    if mode == "right":
        return f_r
    raise ValueError(f"unknown fuzziness mode {mode!r}")


def _switch_value(x, theta):
    den = theta.sum()
    if den <= 0.0:
        return None
    return float(np.dot(x, theta) / den)


def _ekm_side(x: np.ndarray, lo: np.ndarray, hi: np.ndarray, left: bool) -> float:
    """One EKM endpoint.

    For the left endpoint the first ``k`` points carry ``hi`` and the rest
    ``lo``; the right endpoint swaps the roles.  ``k`` is moved to the point
    where the running weighted mean sits until it stops changing.
    """
    n = x.size
    first, rest = (hi, lo) if left else (lo, hi)
    k = int(round(n / 2.4)) if left else int(round(n / 1.7))
    k = min(max(k, 1), n - 1) if n > 1 else 1

    theta = np.concatenate([first[:k], rest[k:]])
    num, den = float(np.dot(x, theta)), float(theta.sum())
    if den <= 0.0:
        k = n if left else 0
        theta = hi.copy()
        num, den = float(np.dot(x, theta)), float(theta.sum())
        if den <= 0.0:
            raise FuzzyError("centroid undefined: upper membership is identically zero")

    for _ in range(EKM_MAX_ITER):
        y = num / den
        k_new = int(np.searchsorted(x, y, side="right"))
        if k_new == k:
            break
        lo_k, hi_k = sorted((k, k_new))
        seg = slice(lo_k, hi_k)
        delta = hi[seg] - lo[seg]
        sign = 1.0 if k_new > k else -1.0
        if not left:
            sign = -sign
        num += sign * float(np.dot(x[seg], delta))
        den += sign * float(delta.sum())
        k = k_new
        if den <= EKM_TOL:
            break

    theta = np.concatenate([first[:k], rest[k:]])
    y = _switch_value(x, theta)
    if y is None:
        # Defensive: fall back to scanning every switch point.
        vals = [v for j in range(n + 1)
                if (v := _switch_value(x, np.concatenate([first[:j], rest[j:]]))) is not None]
        return min(vals) if left else max(vals)
    return y


def interval_weighted_average(points, lo, hi) -> tuple[float, float]:
    """Range of ``sum(p w) / sum(w)`` over ``w_i`` in ``[lo_i, hi_i]`` (EKM)."""
    points = np.asarray(points, dtype=float)
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    order = np.argsort(points, kind="stable")
    x, lo, hi = points[order], lo[order], hi[order]
    if np.any(lo > hi + 1e-12):
        raise FuzzyError("weight interval lower bound exceeds upper bound")
    if not np.any(hi > 0):
        raise FuzzyError("all weights are identically zero")
    return _ekm_side(x, lo, hi, True), _ekm_side(x, lo, hi, False)


def ekm_centroid(f, n: int = DEFAULT_N) -> tuple[float, float, float]:
    """Centroid interval ``(c_l, c_r)`` and its midpoint for an IT2 set."""
    fou = _as_fou(f, n)
    if not np.any(fou.upper > 0):
        raise FuzzyError("centroid undefined: upper membership is identically zero")
    c_l, c_r = interval_weighted_average(fou.grid, fou.lower, fou.upper)
    return c_l, c_r, 0.5 * (c_l + c_r)
