"""Comparison methods: likelihood-based IT2 TOPSIS and the Wang-Liu-Qin rank value.

Both operate on nine-parameter IT2 trapezoids (upper and lower quadruples
plus heights), so envelopes are first reduced to that form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import least_squares

from .it2 import IT2TrFN, Trapezoid, membership, universe


class BaselineError(ValueError):
    pass


@dataclass(frozen=True)
class NineParamIT2:
    """``((u1..u4; H1u, H2u), (l1..l4; H1l, H2l))``.

    ``H1``/``H2`` are the memberships at the second and third knots; they
    coincide for trapezoids.
    """

    upper: tuple[float, float, float, float]
    lower: tuple[float, float, float, float]
    hu: tuple[float, float] = (1.0, 1.0)
    hl: tuple[float, float] = (1.0, 1.0)

    def __post_init__(self):
        for name in ("upper", "lower", "hu", "hl"):
            object.__setattr__(self, name, tuple(float(v) for v in getattr(self, name)))
        for name in ("upper", "lower"):
            q = getattr(self, name)
            if len(q) != 4 or any(q[k] > q[k + 1] + 1e-12 for k in range(3)):
                raise BaselineError(f"{name} quadruple must be ordered, got {q}")
        if len(self.hu) != 2 or len(self.hl) != 2:
            raise BaselineError("heights come in (H1, H2) pairs")

    @classmethod
    def make(cls, upper, lower, h_upper: float = 1.0, h_lower: float = 1.0) -> "NineParamIT2":
        return cls(tuple(upper), tuple(lower), (h_upper, h_upper), (h_lower, h_lower))

    @classmethod
    def crisp(cls, value: float) -> "NineParamIT2":
        return cls.make((value,) * 4, (value,) * 4)

    @property
    def h_upper(self) -> float:
        return min(self.hu)

    @property
    def h_lower(self) -> float:
        return min(self.hl)

    def scaled(self, k: float) -> "NineParamIT2":
        return NineParamIT2(tuple(k * v for v in self.upper), tuple(k * v for v in self.lower),
                            self.hu, self.hl)

    def __add__(self, other: "NineParamIT2") -> "NineParamIT2":
        return NineParamIT2(
            tuple(a + b for a, b in zip(self.upper, other.upper)),
            tuple(a + b for a, b in zip(self.lower, other.lower)),
            tuple(min(a, b) for a, b in zip(self.hu, other.hu)),
            tuple(min(a, b) for a, b in zip(self.hl, other.hl)),
        )

    def to_dict(self) -> dict:
        return {"upper": list(self.upper), "hu": list(self.hu),
                "lower": list(self.lower), "hl": list(self.hl)}


def fit_trapezoid(x: np.ndarray, mu: np.ndarray) -> Trapezoid:
    """Least-squares trapezoid ``(a, b, c, d; h)`` through sampled memberships.

    The height is the sample maximum; knots start from the support and
    plateau of the samples.
    """
    h = float(mu.max())
    if h <= 0:
        raise BaselineError("cannot fit a trapezoid to an all-zero membership")
    on = np.flatnonzero(mu > 0)
    core = np.flatnonzero(mu >= h - 1e-9)
    x0 = np.array([x[max(on[0] - 1, 0)], x[core[0]], x[core[-1]], x[min(on[-1] + 1, x.size - 1)]])

    def resid(p):
        k = np.sort(p)
        return membership(Trapezoid(*k, h=h), x) - mu

    fit = least_squares(resid, x0, bounds=(x[0], x[-1]), diff_step=1e-6)
    return Trapezoid(*np.sort(fit.x), h=h)


def to_nine_param(rep, n: int = 2001) -> NineParamIT2:
    """Reduce an IT2TrFN or T2 envelope to nine-parameter form."""
    if isinstance(rep, NineParamIT2):
        return rep
    if isinstance(rep, (int, float)):
        return NineParamIT2.crisp(float(rep))
    if isinstance(rep, IT2TrFN):
        u, l = rep.umf, rep.lmf
    elif hasattr(rep, "umf") and hasattr(rep, "lower"):
        u = rep.umf
        l = rep.lower.as_trapezoid()
        if l is None:
            x = universe(n, u.a, u.d) if u.d > u.a else universe(n)
            l = fit_trapezoid(x, rep.lower(x))
    else:
        raise TypeError(f"cannot convert {type(rep).__name__} to nine-parameter form")
    return NineParamIT2.make(u.knots, l.knots, u.h, l.h)


# --- likelihood-based TOPSIS -------------------------------------------------

def topsis_weighted(e: NineParamIT2, w: NineParamIT2) -> NineParamIT2:
    """Componentwise product of rating and weight, minimum heights."""
    return NineParamIT2(
        tuple(a * b for a, b in zip(e.upper, w.upper)),
        tuple(a * b for a, b in zip(e.lower, w.lower)),
        tuple(min(a, b) for a, b in zip(e.hu, w.hu)),
        tuple(min(a, b) for a, b in zip(e.hl, w.hl)),
    )


def topsis_ideals(column: Sequence[NineParamIT2]) -> tuple[NineParamIT2, NineParamIT2]:
    """Approximate positive and negative ideals of one criterion column."""
    if not column:
        raise BaselineError("empty rating column")
    up = np.array([c.upper for c in column])
    lo = np.array([c.lower for c in column])
    hu = tuple(np.min([c.hu for c in column], axis=0))
    hl = tuple(np.min([c.hl for c in column], axis=0))
    pos = NineParamIT2(tuple(up.max(axis=0)), tuple(lo.max(axis=0)), hu, hl)
    neg = NineParamIT2(tuple(up.min(axis=0)), tuple(lo.min(axis=0)), hu, hl)
    return pos, neg


def _likelihood_side(xq, xh, yq, yh) -> float:
    """``max(1 - max(num / den, 0), 0)`` for one band pairing.

    ``xq``/``yq`` are the compared quadruples of ``X`` and ``Y``; the spread
    terms use each quadruple's own width.
    """
    num = sum(max(b - a, 0.0) for a, b in zip(xq, yq)) + (yq[3] - yq[0]) + 2 * max(yh - xh, 0.0)
    den = (sum(abs(b - a) for a, b in zip(xq, yq)) + (xq[3] - xq[0]) + (yq[3] - yq[0])
           + 2 * abs(yh - xh))
    if den <= 0.0:
        raise BaselineError("degenerate likelihood denominator (identical crisp operands)")
    return max(1.0 - max(num / den, 0.0), 0.0)


def likelihood_index(x: NineParamIT2, y: NineParamIT2) -> float:
    """Likelihood that ``x >= y``: mean of the lower and upper indices.

    The lower index compares ``x``'s lower band with ``y``'s upper band, the
    upper index ``x``'s upper band with ``y``'s lower band.
    """
    li_minus = _likelihood_side(x.lower, x.h_lower, y.upper, y.h_upper)
    li_plus = _likelihood_side(x.upper, x.h_upper, y.lower, y.h_lower)
    return 0.5 * (li_minus + li_plus)


def closeness(li_pos: Sequence[float], li_neg: Sequence[float]) -> float:
    """``sum(LI(E >= neg)) / sum(LI(pos >= E) + LI(E >= neg))``."""
    if len(li_pos) != len(li_neg):
        raise BaselineError("likelihood rows differ in length")
    num = float(sum(li_neg))
    den = float(sum(li_pos)) + num
    if den <= 0.0:
        raise BaselineError("closeness undefined: all likelihoods are zero")
    return num / den


@dataclass(frozen=True)
class TopsisResult:
    weighted: tuple[tuple[NineParamIT2, ...], ...]  # [alternative][criterion]
    ideals: tuple[tuple[NineParamIT2, NineParamIT2], ...]  # per criterion
    li_pos: np.ndarray
    li_neg: np.ndarray
    lc: np.ndarray


def topsis(ratings: Sequence[Sequence[NineParamIT2]], weights: Sequence[NineParamIT2]) -> TopsisResult:
    """Full likelihood TOPSIS on ``ratings[alternative][criterion]``."""
    n_crit = len(weights)
    if any(len(r) != n_crit for r in ratings):
        raise BaselineError(f"every alternative needs {n_crit} ratings")
    weighted = tuple(tuple(topsis_weighted(e, w) for e, w in zip(row, weights)) for row in ratings)
    ideals = tuple(topsis_ideals([row[j] for row in weighted]) for j in range(n_crit))
    li_pos = np.array([[likelihood_index(ideals[j][0], row[j]) for j in range(n_crit)]
                       for row in weighted])
    li_neg = np.array([[likelihood_index(row[j], ideals[j][1]) for j in range(n_crit)]
                       for row in weighted])
    lc = np.array([closeness(p, q) for p, q in zip(li_pos, li_neg)])
    return TopsisResult(weighted, ideals, li_pos, li_neg, lc)


# --- Wang-Liu-Qin ------------------------------------------------------------

def weighted_sum(items: Sequence[NineParamIT2], weights: Sequence[float]) -> NineParamIT2:
    """``(+)_k w_k E_k`` with componentwise sums and minimum heights."""
    if len(items) != len(weights) or not items:
        raise BaselineError("need one weight per item")
    acc = items[0].scaled(weights[0])
    for e, w in zip(items[1:], weights[1:]):
        acc = acc + e.scaled(w)
    return acc


def wlq_collect(tensor, lam: Sequence[float]):
    """Collective matrix ``E_ij = (+)_k lam_k E_ij^k`` of ``tensor[k][i][j]``."""
    if len(tensor) != len(lam):
        raise BaselineError(f"{len(tensor)} decision matrices but {len(lam)} weights")
    rows, cols = len(tensor[0]), len(tensor[0][0])
    return [[weighted_sum([t[i][j] for t in tensor], lam) for j in range(cols)]
            for i in range(rows)]


def _spreads(q: Sequence[float]) -> tuple[list[float], list[float]]:
    m = [(q[p] + q[p + 1]) / 2 for p in range(3)]
    s = [math.sqrt(0.5 * sum((q[k] - m[p]) ** 2 for k in (p, p + 1))) for p in range(3)]
    mean = sum(q) / 4
    s.append(math.sqrt(0.25 * sum((v - mean) ** 2 for v in q)))
    return m, s


def wlq_rank_value(e: NineParamIT2) -> float:
    """Rank value: sum of segment means of both bands, minus a quarter of all
    standard deviations, plus all four heights."""
    mu, su = _spreads(e.upper)
    ml, sl = _spreads(e.lower)
    return (sum(mu) + sum(ml) - 0.25 * (sum(su) + sum(sl))
            + sum(e.hu) + sum(e.hl))
