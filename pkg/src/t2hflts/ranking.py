"""Centroid ranking, rank matrices and the expertise/priority score."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .it2 import DEFAULT_N, FuzzyError, ekm_centroid

WEIGHT_TOL = 1e-9


class RankingError(ValueError):
    pass


@dataclass(frozen=True)
class Ranking:
    """Alternatives best-first, with groups of tied alternatives."""

    order: tuple[str, ...]
    values: tuple[float, ...]
    ties: tuple[tuple[str, ...], ...] = ()

    def to_dict(self) -> dict:
        return {"order": list(self.order), "values": list(self.values),
                "ties": [list(t) for t in self.ties]}


def _rank_desc(names: Sequence[str], values: Sequence[float], tol: float) -> Ranking:
    """Descending order; values within ``tol`` of a neighbour form a tie,
    resolved by original index."""
    idx = sorted(range(len(names)), key=lambda i: -values[i])
    groups: list[list[int]] = []
    for i in idx:
        if groups and abs(values[groups[-1][-1]] - values[i]) <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    out = [i for g in groups for i in sorted(g)]
    ties = tuple(tuple(names[i] for i in sorted(g)) for g in groups if len(g) > 1)
    return Ranking(tuple(names[i] for i in out), tuple(float(values[i]) for i in out), ties)


def centroid_rank(fous: Sequence, names: Sequence[str] | None = None, n: int = DEFAULT_N,
                  tol: float = 1e-9) -> tuple[Ranking, list[tuple[float, float, float]]]:
    """Order alternatives by descending EKM centroid center.

    Returns the ranking and the ``(c_l, c_r, center)`` of each input.
    """
    names = list(names) if names is not None else [f"A{j + 1}" for j in range(len(fous))]
    if len(names) != len(fous):
        raise RankingError(f"{len(fous)} sets but {len(names)} names")
    cents = []
    for name, f in zip(names, fous):
        try:
            cents.append(ekm_centroid(f, n))
        except FuzzyError as exc:
            raise RankingError(f"alternative {name}: {exc}") from None
    return _rank_desc(names, [c[2] for c in cents], tol), cents


def linear_priority(j: int, m: int) -> float:
    """Priority of rank ``j`` (1 = best) among ``m`` alternatives: ``(m + 1) - j``."""
    return float(m + 1 - j)


@dataclass(frozen=True)
class RankMatrix:
    """Row ``i`` is DMR ``i``'s ordering, best first."""

    rows: tuple[tuple[str, ...], ...]
    dmrs: tuple[str, ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise RankingError("rank matrix has no rows")
        if not self.dmrs:
            object.__setattr__(self, "dmrs", tuple(f"D{i + 1}" for i in range(len(rows))))
        ref = sorted(rows[0])
        if len(set(ref)) != len(ref):
            raise RankingError(f"rank matrix row {self.dmrs[0]} repeats an alternative")
        for name, row in zip(self.dmrs, rows):
            if sorted(row) != ref:
                raise RankingError(
                    f"rank matrix row {name} is not a permutation of {', '.join(ref)}")

    @property
    def alternatives(self) -> tuple[str, ...]:
        return tuple(sorted(self.rows[0], key=_natural_key))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])


def _natural_key(s: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


@dataclass(frozen=True)
class ScoreEntry:
    alternative: str
    score: float
    contributions: tuple[tuple[int, float], ...]  # (rank j, C(i, j))

    def to_dict(self) -> dict:
        return {"alternative": self.alternative, "score": self.score,
                "contributions": [{"rank": j, "c": c} for j, c in self.contributions]}


@dataclass(frozen=True)
class ScoreTable:
    entries: tuple[ScoreEntry, ...]
    meta: dict = field(default_factory=dict, compare=False)

    def __getitem__(self, name: str) -> ScoreEntry:
        for e in self.entries:
            if e.alternative == name:
                return e
        raise KeyError(name)

    @property
    def scores(self) -> dict[str, float]:
        return {e.alternative: e.score for e in self.entries}


def score(r: RankMatrix, dw: Sequence[float], alternatives: Sequence[str] | None = None,
          priority: Callable[[int, int], float] = linear_priority) -> ScoreTable:
    """Expertise/priority score of every alternative.

    ``C(i, j)`` is the mean weight of the DMRs that put alternative ``i`` at
    rank ``j``; the score is the ``C``-weighted mean of the rank priorities.
    """
    p, m = r.shape
    if len(dw) != p:
        raise RankingError(f"{p} rank-matrix rows but {len(dw)} DMR weights")
    if any(w < 0 for w in dw):
        raise RankingError("DMR weights must be nonnegative")
    if abs(sum(dw) - 1.0) > WEIGHT_TOL:
        raise RankingError(f"DMR weights sum to {sum(dw):.12g}, expected 1")
    alternatives = list(alternatives) if alternatives is not None else list(r.alternatives)
    if sorted(alternatives) != sorted(r.rows[0]):
        raise RankingError("alternatives do not match the rank matrix")

    entries = []
    for alt in alternatives:
        by_rank: dict[int, list[float]] = {}
        for i, row in enumerate(r.rows):
            j = row.index(alt) + 1
            by_rank.setdefault(j, []).append(float(dw[i]))
        contrib = tuple((j, sum(ws) / len(ws)) for j, ws in sorted(by_rank.items()))
        den = sum(c for _, c in contrib)
        if den <= 0.0:
            raise RankingError(f"alternative {alt}: all contributing DMR weights are zero")
        num = sum(priority(j, m) * c for j, c in contrib)
        entries.append(ScoreEntry(alt, num / den, contrib))
    return ScoreTable(tuple(entries))


def final_ranking(scores: ScoreTable, tol: float = 1e-9) -> Ranking:
    names = [e.alternative for e in scores.entries]
    return _rank_desc(names, [e.score for e in scores.entries], tol)
