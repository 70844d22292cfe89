"""OWA weights and T1/T2 fuzzy envelopes of T2 HFLTSs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .entropy import EntropyReport, entropy_report
from .it2 import DEFAULT_N, FuzzyError, IT2TrFN, SampledFOU, Trapezoid, membership, universe
from .linguistic import CLE, CLEKind, LinguisticTermSet, T2HFLTS, transform

# Fitted against the worked {M, G, VG} envelope; see scripts/calibrate.py.
DEFAULT_ALPHA = 0.571008


class EnvelopeError(ValueError):
    pass


@dataclass(frozen=True)
class EnvelopeConfig:
    alpha: float = DEFAULT_ALPHA
    lower_kind: int = 2  # OWA weights for the left inner point (b / f)
    upper_kind: int = 1  # OWA weights for the right inner point (c / g)
    shoulder_policy: Literal["clamp", "plain"] = "clamp"
    n: int = DEFAULT_N
    fuzziness_mode: str = "midpoint"

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise EnvelopeError(f"OWA alpha must lie in [0, 1], got {self.alpha}")
        if self.lower_kind not in (1, 2) or self.upper_kind not in (1, 2):
            raise EnvelopeError("OWA kinds must be 1 or 2")
        if self.shoulder_policy not in ("clamp", "plain"):
            raise EnvelopeError(f"unknown shoulder policy {self.shoulder_policy!r}")

    @classmethod
    def for_lts(cls, lts: LinguisticTermSet, **overrides) -> "EnvelopeConfig":
        """Defaults taken from the term set's calibration block, if any."""
        cal = lts.calibration
        kw = {}
        if cal is not None:
            if cal.alpha is not None:
                kw["alpha"] = cal.alpha
            if cal.fuzziness_mode is not None:
                kw["fuzziness_mode"] = cal.fuzziness_mode
            if cal.n is not None:
                kw["n"] = cal.n
        kw.update(overrides)
        return cls(**kw)


def owa_weights(kind: int, n: int, alpha: float) -> np.ndarray:
    """Filev-Yager style OWA weights.

    ``W1 = (a, a(1-a), ..., a(1-a)^(n-2), (1-a)^(n-1))`` and
    ``W2 = (a^(n-1), (1-a)a^(n-2), ..., (1-a)a, 1-a)``.
    """
    if n < 1:
        raise EnvelopeError("OWA needs at least one argument")
    if n == 1:
        return np.ones(1)
    a = float(alpha)
    k = np.arange(n)
    if kind == 1:
        w = a * (1.0 - a) ** k
        w[-1] = (1.0 - a) ** (n - 1)
    elif kind == 2:
        w = (1.0 - a) * a ** (n - 1 - k)
        w[0] = a ** (n - 1)
    else:
        raise EnvelopeError(f"unknown OWA kind {kind}")
    assert abs(w.sum() - 1.0) < 1e-12, w
    return w


def owa(values, weights) -> float:
    v = np.sort(np.asarray(values, dtype=float))[::-1]
    return float(np.dot(v, weights))


def _band(term_semantics: IT2TrFN, band: str) -> Trapezoid:
    return term_semantics.umf if band == "UMF" else term_semantics.lmf


def t1_envelope(h: T2HFLTS, lts: LinguisticTermSet | None = None,
                cfg: EnvelopeConfig = EnvelopeConfig(), band: str = "UMF",
                shape: CLEKind | None = None) -> Trapezoid:
    """Aggregate the UMFs (or LMFs) of the member terms into one trapezoid.

    Outer knots are the extreme support points; inner knots are OWA means of
    the plateau midpoints.  ``shape`` enables shoulder clamping for ``more
    than`` / ``less than`` expressions.
    """
    lts = lts or h.lts
    if band not in ("UMF", "LMF"):
        raise EnvelopeError(f"band must be 'UMF' or 'LMF', got {band!r}")
    if h.is_empty:
        raise EnvelopeError("cannot build an envelope for an empty HFLTS")
    traps = [_band(lts[k].semantics, band) for k in h.indices]
    if len(traps) == 1:
        return traps[0]
    left = min(t.a for t in traps)
    right = max(t.d for t in traps)
    mids = [0.5 * (t.b + t.c) for t in traps]
    n = len(mids)
    inner_l = owa(mids, owa_weights(cfg.lower_kind, n, cfg.alpha))
    inner_r = owa(mids, owa_weights(cfg.upper_kind, n, cfg.alpha))
    if cfg.shoulder_policy == "clamp":
        if shape is CLEKind.MORE_THAN and h.indices[-1] == lts.g:
            inner_r = right
        if shape is CLEKind.LESS_THAN and h.indices[0] == 0:
            inner_l = left
    if inner_l > inner_r + 1e-12:
        raise EnvelopeError(
            f"{band} envelope inner points out of order ({inner_l:.4f} > {inner_r:.4f}); "
            f"swap the OWA kinds or change alpha"
        )
    height = min(t.h for t in traps)
    return Trapezoid(left, inner_l, inner_r, right, height)


@dataclass(frozen=True)
class EnvelopeLower:
    """Lower membership ``max(0, U - max(U - L, e))`` of a T2 envelope.

    Equivalent to ``max(0, min(L, U - e))``, so its alpha-cuts are
    ``L.cut(a) & U.cut(a + e)``.
    """

    umf: Trapezoid
    lmf_t1: Trapezoid
    e_c: float

    def __call__(self, x):
        u = membership(self.umf, x)
        l = membership(self.lmf_t1, x)
        return np.maximum(0.0, u - np.maximum(u - l, self.e_c))

    @property
    def height(self) -> float:
        return max(0.0, min(self.lmf_t1.h, self.umf.h - self.e_c))

    def cut(self, alpha: float) -> tuple[float, float]:
        if alpha > self.height + 1e-12:
            raise FuzzyError(f"alpha {alpha} exceeds height {self.height}")
        l1, r1 = self.lmf_t1.cut(min(alpha, self.lmf_t1.h))
        l2, r2 = self.umf.cut(min(alpha + self.e_c, self.umf.h))
        lo, hi = max(l1, l2), min(r1, r2)
        if lo > hi:  # only reachable through rounding at the apex
            lo = hi = 0.5 * (lo + hi)
        return lo, hi

    def as_trapezoid(self, n: int = 4001, tol: float = 1e-9) -> Trapezoid | None:
        """The LMF as a trapezoid when ``U - e`` never cuts below ``L``."""
        if self.height <= 0:
            return None
        # Both sides are piecewise linear, so knots plus a dense grid suffice.
        pts = np.union1d(universe(n, self.lmf_t1.a, self.lmf_t1.d),
                         [k for k in self.umf.knots if self.lmf_t1.a <= k <= self.lmf_t1.d])
        if np.all(np.abs(self(pts) - membership(self.lmf_t1, pts)) <= tol):
            return self.lmf_t1
        return None

    def effective_knots(self, n: int = 100001) -> tuple[float, float, float, float, float]:
        """Support and plateau ends of the sampled lower track, plus its height."""
        x = universe(n)
        mu = self(x)
        top = mu.max()
        if top <= 0:
            return (0.0, 0.0, 0.0, 0.0, 0.0)
        on = np.flatnonzero(mu > 0)
        core = np.flatnonzero(mu >= top - 1e-12)
        a = x[max(on[0] - 1, 0)]
        d = x[min(on[-1] + 1, n - 1)]
        return (float(a), float(x[core[0]]), float(x[core[-1]]), float(d), float(top))


@dataclass(frozen=True, eq=False)
class T2Envelope:
    umf: Trapezoid
    lmf_t1: Trapezoid
    e_c: float
    source: T2HFLTS
    entropy: EntropyReport
    cle: CLE | None = None
    n: int = DEFAULT_N
    lower: EnvelopeLower = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "lower", EnvelopeLower(self.umf, self.lmf_t1, self.e_c))

    @property
    def lmf(self) -> SampledFOU:
        """The lower track on the envelope's own grid."""
        return self.sample(self.n)

    def upper_membership(self, x):
        return membership(self.umf, x)

    def lower_membership(self, x):
        return self.lower(x)

    def sample(self, n: int | None = None) -> SampledFOU:
        x = universe(n or self.n)
        return SampledFOU(x, self.lower(x), membership(self.umf, x))

    def lmf_trapezoid(self) -> Trapezoid | None:
        return self.lower.as_trapezoid()


def t2_envelope(h: T2HFLTS, lts: LinguisticTermSet | None = None,
                cfg: EnvelopeConfig = EnvelopeConfig(), cle: CLE | None = None) -> T2Envelope:
    """T2 fuzzy envelope: T1 UMF envelope on top, entropy-shrunk LMF below."""
    lts = lts or h.lts
    shape = cle.kind if cle is not None else None
    umf = t1_envelope(h, lts, cfg, "UMF", shape)
    lmf = t1_envelope(h, lts, cfg, "LMF", shape)
    rep = entropy_report(h, cle, cfg.fuzziness_mode, cfg.n)
    return T2Envelope(umf, lmf, rep.e_c, h, rep, cle, cfg.n)


@dataclass
class EnvelopeCounter:
    count: int = 0


def represent_response(cle: CLE, lts: LinguisticTermSet, cfg: EnvelopeConfig = EnvelopeConfig(),
                       counter: EnvelopeCounter | None = None):
    """Single terms keep their own semantics; anything else gets an envelope."""
    if cle.is_single:
        return lts[cle.i].semantics
    env = t2_envelope(transform(cle, lts), lts, cfg, cle)
    if counter is not None:
        counter.count += 1
    return env
