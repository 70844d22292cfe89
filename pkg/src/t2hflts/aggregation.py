"""Fuzzy and linguistic weighted averages over alpha-cuts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .it2 import DEFAULT_N, FuzzyError, IT2TrFN, SampledFOU, interval_weighted_average, universe

DEFAULT_LEVELS = 101


class AggregationError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CutSet:
    """A T1 fuzzy number stored as nested alpha-cuts ``[left_k, right_k]``.

    ``levels`` ascend from 0 to the height; ``left`` is nondecreasing and
    ``right`` nonincreasing.  Membership is linear between levels.
    """

    levels: np.ndarray
    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        lv = np.asarray(self.levels, dtype=float)
        l = np.maximum.accumulate(np.asarray(self.left, dtype=float))
        r = np.minimum.accumulate(np.asarray(self.right, dtype=float))
        if lv.ndim != 1 or lv.shape != l.shape or lv.shape != r.shape or lv.size < 1:
            raise AggregationError("levels, left and right must be equal-length 1-D arrays")
        if np.any(np.diff(lv) <= 0):
            raise AggregationError("alpha levels must be strictly increasing")
        # EKM rounding can cross the two branches at the apex by a few ulps.
        mid = 0.5 * (l + r)
        l, r = np.minimum(l, mid), np.maximum(r, mid)
        for name, arr in (("levels", lv), ("left", l), ("right", r)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def height(self) -> float:
        return float(self.levels[-1])

    @property
    def support(self) -> tuple[float, float]:
        return float(self.left[0]), float(self.right[0])

    @property
    def core(self) -> tuple[float, float]:
        return float(self.left[-1]), float(self.right[-1])

    @property
    def knots(self) -> tuple[float, float, float, float]:
        return self.support[0], self.core[0], self.core[1], self.support[1]

    def cut(self, alpha: float) -> tuple[float, float]:
        if alpha > self.height + 1e-12:
            raise FuzzyError(f"alpha {alpha} exceeds height {self.height}")
        return (float(np.interp(alpha, self.levels, self.left)),
                float(np.interp(alpha, self.levels, self.right)))

    def __call__(self, x):
        xs = np.asarray(x, dtype=float)
        mu = np.minimum(_branch(xs, self.left, self.levels),
                        _branch(-xs, -self.right, self.levels))
        return float(mu) if np.ndim(x) == 0 else mu


def _branch(x: np.ndarray, edge: np.ndarray, levels: np.ndarray) -> np.ndarray:
    """Membership along one monotone edge (``edge`` nondecreasing in alpha)."""
    k = np.searchsorted(edge, x, side="right") - 1
    top = levels.size - 1
    out = np.zeros(x.shape)
    out[k >= top] = levels[top]
    mid = (k >= 0) & (k < top)
    if np.any(mid):
        km = k[mid]
        e0, e1 = edge[km], edge[km + 1]
        out[mid] = levels[km] + (x[mid] - e0) / (e1 - e0) * (levels[km + 1] - levels[km])
    return out


def alpha_ladder(height: float, n_levels: int = DEFAULT_LEVELS, breaks: Sequence[float] = ()) -> np.ndarray:
    """Uniform levels on [0, 1] cut at ``height``, plus any break points below it."""
    if not 0.0 < height <= 1.0:
        raise AggregationError(f"height must lie in (0, 1], got {height}")
    if n_levels < 2:
        raise AggregationError("need at least two alpha levels")
    base = np.linspace(0.0, 1.0, n_levels)
    extra = [b for b in breaks if 0.0 < b < height]
    lv = np.unique(np.concatenate([base[base < height], extra, [height]]))
    return lv


def _cuts(mf, alpha: float) -> tuple[float, float]:
    return mf.cut(min(alpha, mf.height))


def fwa(xs: Sequence, ws: Sequence, levels: np.ndarray | int | None = None) -> CutSet:
    """Fuzzy weighted average ``sum(w x) / sum(w)`` of T1 fuzzy numbers.

    Each argument needs ``cut(alpha)`` and ``height``.  At every level the
    output interval comes from interval KM over the cut endpoints.
    """
    if len(xs) != len(ws):
        raise AggregationError(f"got {len(xs)} values but {len(ws)} weights")
    if not xs:
        raise AggregationError("nothing to aggregate")
    height = min(min(m.height for m in xs), min(m.height for m in ws))
    if levels is None or isinstance(levels, int):
        levels = alpha_ladder(height, levels or DEFAULT_LEVELS)
    levels = np.asarray(levels, dtype=float)
    if levels[-1] > height + 1e-12:
        raise AggregationError(f"top level {levels[-1]} exceeds common height {height}")
    left = np.empty(levels.size)
    right = np.empty(levels.size)
    for k, alpha in enumerate(levels):
        xc = np.array([_cuts(m, alpha) for m in xs])
        wc = np.array([_cuts(m, alpha) for m in ws])
        try:
            left[k] = interval_weighted_average(xc[:, 0], wc[:, 0], wc[:, 1])[0]
            right[k] = interval_weighted_average(xc[:, 1], wc[:, 0], wc[:, 1])[1]
        except FuzzyError as exc:
            raise AggregationError(f"alpha={alpha:.4g}: {exc}") from None
    return CutSet(levels, left, right)


def bands(rep) -> tuple:
    """(upper, lower) T1 members of an IT2 representation."""
    if isinstance(rep, IT2TrFN):
        return rep.umf, rep.lmf
    if hasattr(rep, "umf") and hasattr(rep, "lower"):
        return rep.umf, rep.lower
    if isinstance(rep, (int, float)):
        return bands(IT2TrFN.crisp(float(rep)))
    raise TypeError(f"not an IT2 representation: {type(rep).__name__}")


def lwa(xs: Sequence, ws: Sequence, n_levels: int = DEFAULT_LEVELS, n: int = DEFAULT_N) -> SampledFOU:
    """Linguistic weighted average of IT2 representations.

    The upper track is the FWA of the UMFs, the lower track the FWA of the
    LMFs; crisp weights are promoted to zero-width IT2 numbers.  Cut sets are
    kept in ``meta["upper"]`` / ``meta["lower"]``.
    """
    if len(xs) != len(ws):
        raise AggregationError(f"got {len(xs)} values but {len(ws)} weights")
    xb = [bands(x) for x in xs]
    wb = [bands(w) for w in ws]
    lower_h = min(b[1].height for b in xb + wb)
    upper_h = min(b[0].height for b in xb + wb)
    upper = fwa([b[0] for b in xb], [b[0] for b in wb], alpha_ladder(upper_h, n_levels, [lower_h]))
    lower = fwa([b[1] for b in xb], [b[1] for b in wb], alpha_ladder(lower_h, n_levels))
    grid = universe(n)
    lo, up = lower(grid), upper(grid)
    return SampledFOU(grid, np.minimum(lo, up), up, {"upper": upper, "lower": lower})


def aggregate_all(reps, ws: Sequence, n_levels: int = DEFAULT_LEVELS, n: int = DEFAULT_N,
                  dmrs=None, criteria=None, alternatives=None) -> list[list[SampledFOU]]:
    """LWA over criteria for every (DMR, alternative).

    ``reps[p][k][j]`` holds the representation from DMR ``p`` for criterion
    ``k`` and alternative ``j``; the result is indexed ``[p][j]``.
    """
    p = len(reps)
    if p == 0:
        raise AggregationError("no decision makers")
    m = len(ws)
    dmrs = dmrs or [f"D{i + 1}" for i in range(p)]
    criteria = criteria or [f"C{k + 1}" for k in range(m)]
    n_alt = len(reps[0][0]) if reps[0] else 0
    alternatives = alternatives or [f"A{j + 1}" for j in range(n_alt)]
    out = []
    for i in range(p):
        if len(reps[i]) != m:
            raise AggregationError(f"dmr={dmrs[i]}: expected {m} criteria, got {len(reps[i])}")
        row = []
        for j in range(len(alternatives)):
            column = []
            for k in range(m):
                cells = reps[i][k]
                if j >= len(cells) or cells[j] is None:
                    raise AggregationError(
                        f"missing representation at dmr={dmrs[i]}, criterion={criteria[k]}, "
                        f"alternative={alternatives[j]}")
                column.append(cells[j])
            try:
                row.append(lwa(column, ws, n_levels, n))
            except (AggregationError, FuzzyError) as exc:
                raise AggregationError(
                    f"dmr={dmrs[i]}, alternative={alternatives[j]}: {exc}") from None
        out.append(row)
    return out
