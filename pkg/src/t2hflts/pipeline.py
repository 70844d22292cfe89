"""End-to-end decision runs, sweeps, baselines and result serialization."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np

from .aggregation import DEFAULT_LEVELS, AggregationError, aggregate_all
from .baselines import NineParamIT2, to_nine_param, topsis, wlq_collect, wlq_rank_value, weighted_sum
from .entropy import entropy_sweep
from .envelope import EnvelopeConfig, EnvelopeCounter, represent_response
from .io import SCHEMA_VERSION, Survey, ValidationError
from .it2 import IT2TrFN, SampledFOU, ekm_centroid
from .linguistic import LinguisticError, LinguisticTermSet, parse_cle
from .ranking import Ranking, RankMatrix, centroid_rank, final_ranking, score


class PipelineError(ValueError):
    """A stage failed; the message names the offending cell."""


@dataclass(frozen=True)
class RunConfig:
    envelope: EnvelopeConfig = field(default_factory=EnvelopeConfig)
    n_levels: int = DEFAULT_LEVELS
    inject_ranks: bool = False
    jobs: int = 1

    @classmethod
    def for_lts(cls, lts: LinguisticTermSet, **kw) -> "RunConfig":
        return cls(envelope=EnvelopeConfig.for_lts(lts), **kw)

    def to_dict(self) -> dict:
        e = self.envelope
        return {"alpha": e.alpha, "lower_kind": e.lower_kind, "upper_kind": e.upper_kind,
                "shoulder_policy": e.shoulder_policy, "n": e.n,
                "fuzziness_mode": e.fuzziness_mode, "n_levels": self.n_levels,
                "inject_ranks": self.inject_ranks}


def _where(survey: Survey, p: int, k: int, j: int) -> str:
    return (f"dmr={survey.dmrs[p]}, criterion={survey.criteria[k]}, "
            f"alternative={survey.alternatives[j]}")


def represent_survey(survey: Survey, lts: LinguisticTermSet, cfg: EnvelopeConfig,
                     counter: EnvelopeCounter | None = None):
    """Parse every response and build its IT2 representation ``[p][k][j]``."""
    reps = []
    for p, block in enumerate(survey.responses):
        rows = []
        for k, row in enumerate(block):
            cells = []
            for j, text in enumerate(row):
                try:
                    cle = parse_cle(text, lts)
                except LinguisticError as exc:
                    raise ValidationError(f"{_where(survey, p, k, j)}: {exc}") from None
                try:
                    cells.append(represent_response(cle, lts, cfg, counter))
                except ValueError as exc:
                    raise PipelineError(f"{_where(survey, p, k, j)}: {exc}") from None
            rows.append(cells)
        reps.append(rows)
    return reps


def criteria_weights(survey: Survey, lts: LinguisticTermSet, cfg: EnvelopeConfig) -> list:
    """Crisp weights become zero-width IT2 numbers; labels and CLEs use the LTS."""
    out = []
    for cid, w in zip(survey.criteria, survey.criteria_weights):
        if isinstance(w, (int, float)):
            out.append(IT2TrFN.crisp(float(w)))
            continue
        try:
            out.append(represent_response(parse_cle(w, lts), lts, cfg))
        except LinguisticError as exc:
            raise ValidationError(f"criterion={cid}: weight: {exc}") from None
    return out


@dataclass(eq=False)
class RunResult:
    alternatives: list[str]
    dmrs: list[str]
    dmr_weights: list[float]
    centroids: list[list[tuple[float, float, float]]]
    rank_matrix: list[list[str]]
    rank_source: str
    centroid_ties: list[list[list[str]]]
    scores: list[dict]
    final_ranking: list[str]
    final_ties: list[list[str]]
    envelope_count: int
    response_count: int
    config: dict
    aggregates: list[list[SampledFOU]] | None = None

    def to_dict(self) -> dict:
        return {
            "version": SCHEMA_VERSION,
            "alternatives": self.alternatives,
            "dmrs": self.dmrs,
            "dmr_weights": self.dmr_weights,
            "centroids": [[list(c) for c in row] for row in self.centroids],
            "rank_matrix": self.rank_matrix,
            "rank_source": self.rank_source,
            "centroid_ties": self.centroid_ties,
            "scores": self.scores,
            "final_ranking": self.final_ranking,
            "final_ties": self.final_ties,
            "envelope_count": self.envelope_count,
            "response_count": self.response_count,
            "config": self.config,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RunResult":
        return cls(
            alternatives=list(d["alternatives"]), dmrs=list(d["dmrs"]),
            dmr_weights=list(d["dmr_weights"]),
            centroids=[[tuple(c) for c in row] for row in d["centroids"]],
            rank_matrix=[list(r) for r in d["rank_matrix"]], rank_source=d["rank_source"],
            centroid_ties=d["centroid_ties"], scores=d["scores"],
            final_ranking=list(d["final_ranking"]), final_ties=d["final_ties"],
            envelope_count=d["envelope_count"], response_count=d["response_count"],
            config=d["config"],
        )

    @property
    def bypass_rate(self) -> float:
        return 1.0 - self.envelope_count / self.response_count if self.response_count else 0.0


def run(survey: Survey, lts: LinguisticTermSet, cfg: RunConfig | None = None) -> RunResult:
    """Represent, aggregate, rank per DMR, score and order the alternatives."""
    cfg = cfg or RunConfig.for_lts(lts)
    ecfg = cfg.envelope
    counter = EnvelopeCounter()
    reps = represent_survey(survey, lts, ecfg, counter)
    ws = criteria_weights(survey, lts, ecfg)

    def one_dmr(p: int):
        return aggregate_all([reps[p]], ws, cfg.n_levels, ecfg.n, [survey.dmrs[p]],
                             list(survey.criteria), list(survey.alternatives))[0]

    try:
        if cfg.jobs > 1:
            with ThreadPoolExecutor(cfg.jobs) as pool:
                aggs = list(pool.map(one_dmr, range(len(survey.dmrs))))
        else:
            aggs = [one_dmr(p) for p in range(len(survey.dmrs))]
    except AggregationError as exc:
        raise PipelineError(str(exc)) from None

    centroids, rows, ties = [], [], []
    for p, row in enumerate(aggs):
        ranking, cents = centroid_rank(row, survey.alternatives, ecfg.n)
        centroids.append(cents)
        rows.append(list(ranking.order))
        ties.append([list(t) for t in ranking.ties])

    source = "centroid"
    if cfg.inject_ranks:
        if survey.rank_matrix is None:
            raise ValidationError("inject_ranks requested but the survey has no rank_matrix")
        rows = [list(r) for r in survey.rank_matrix]
        source = "injected"
    rm = RankMatrix(rows, survey.dmrs)
    table = score(rm, survey.dmr_weights, survey.alternatives)
    final = final_ranking(table)
    return RunResult(
        alternatives=list(survey.alternatives), dmrs=list(survey.dmrs),
        dmr_weights=list(survey.dmr_weights), centroids=centroids, rank_matrix=rows,
        rank_source=source, centroid_ties=ties,
        scores=[e.to_dict() for e in table.entries], final_ranking=list(final.order),
        final_ties=[list(t) for t in final.ties], envelope_count=counter.count,
        response_count=sum(len(r) for b in survey.responses for r in b),
        config=cfg.to_dict(), aggregates=aggs,
    )


# --- emission ----------------------------------------------------------------

def to_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _delimited(header: list[str], rows: list[list], delimiter: str = "\t") -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([f"{v:.6f}" if isinstance(v, float) else v for v in r])
    return buf.getvalue()


def score_table(result: RunResult, delimiter: str = "\t") -> str:
    """One row per alternative: final position, score, contributing ranks."""
    pos = {a: i + 1 for i, a in enumerate(result.final_ranking)}
    tied = {a for t in result.final_ties for a in t}
    rows = []
    for s in result.scores:
        a = s["alternative"]
        ranks = " ".join(f"{c['rank']}:{c['c']:.4f}" for c in s["contributions"])
        rows.append([a, pos[a], s["score"], "yes" if a in tied else "no", ranks])
    rows.sort(key=lambda r: r[1])
    return _delimited(["alternative", "position", "score", "tied", "rank:C"], rows, delimiter)


def rank_matrix_table(result: RunResult, delimiter: str = "\t") -> str:
    m = len(result.alternatives)
    rows = [[d, *r] for d, r in zip(result.dmrs, result.rank_matrix)]
    return _delimited(["dmr", *[f"rank{j + 1}" for j in range(m)]], rows, delimiter)


def geometry_rows(fou: SampledFOU) -> list[tuple[float, float, float]]:
    return fou.rows()


def geometry_table(named: list[tuple[str, SampledFOU]], delimiter: str = "\t") -> str:
    rows = [[name, x, lo, up] for name, f in named for x, lo, up in f.rows()]
    return _delimited(["set", "x", "lower", "upper"], rows, delimiter)


def emit(result: RunResult, fmt: str = "json") -> bytes:
    if fmt == "json":
        return to_json(result.to_dict()).encode()
    if fmt == "table":
        return score_table(result).encode()
    if fmt == "geometry":
        if result.aggregates is None:
            raise PipelineError("result carries no aggregated sets")
        named = [(f"{d}/{a}", f) for d, row in zip(result.dmrs, result.aggregates)
                 for a, f in zip(result.alternatives, row)]
        return geometry_table(named).encode()
    raise PipelineError(f"unknown output format {fmt!r}")


def sweep_table(rows: list[dict], delimiter: str = "\t") -> str:
    keys = ["g", "k", "e_f", "e_h", "beta", "e_c"]
    return _delimited(keys, [[r[k] for k in keys] for r in rows], delimiter)


def sweep(lts: LinguisticTermSet, case: int, mode: str | None = None) -> list[dict]:
    mode = mode or (lts.calibration.fuzziness_mode if lts.calibration else None) or "midpoint"
    return entropy_sweep(lts, case, mode)


# --- baselines -----------------------------------------------------------------

def _nine_param_tensor(survey: Survey, lts: LinguisticTermSet, cfg: EnvelopeConfig):
    reps = represent_survey(survey, lts, cfg)
    # [p][alternative][criterion]
    return [[[to_nine_param(reps[p][k][j]) for k in range(len(survey.criteria))]
             for j in range(len(survey.alternatives))] for p in range(len(survey.dmrs))]


def _rank_by(values, names) -> Ranking:
    from .ranking import _rank_desc
    return _rank_desc(list(names), [float(v) for v in values], 1e-3 / 2)


def baseline(survey: Survey, lts: LinguisticTermSet, method: str,
             cfg: EnvelopeConfig | None = None) -> dict:
    """Run a comparison method on the same representations as the main pipeline.

    Several decision makers are first merged with their expertise weights.
    Ties are flagged at the three-decimal precision of the published tables.
    """
    cfg = cfg or EnvelopeConfig.for_lts(lts)
    tensor = _nine_param_tensor(survey, lts, cfg)
    collective = wlq_collect(tensor, survey.dmr_weights)
    if method == "topsis":
        weights = [to_nine_param(w) for w in criteria_weights(survey, lts, cfg)]
        res = topsis(collective, weights)
        ranking = _rank_by(res.lc, survey.alternatives)
        return {"method": "topsis", "alternatives": list(survey.alternatives),
                "li_pos": res.li_pos.tolist(), "li_neg": res.li_neg.tolist(),
                "value": res.lc.tolist(), "ranking": list(ranking.order),
                "ties": [list(t) for t in ranking.ties]}
    if method == "wlq":
        omega = []
        for w in criteria_weights(survey, lts, cfg):
            omega.append(ekm_centroid(w)[2] if w.umf.d > w.umf.a else w.umf.a)
        total = sum(omega)
        if total <= 0:
            raise ValidationError("criteria weights sum to zero")
        omega = [w / total for w in omega]
        overall = [weighted_sum(row, omega) for row in collective]
        values = [wlq_rank_value(e) for e in overall]
        ranking = _rank_by(values, survey.alternatives)
        return {"method": "wlq", "alternatives": list(survey.alternatives),
                "overall": [e.to_dict() for e in overall], "value": values,
                "ranking": list(ranking.order), "ties": [list(t) for t in ranking.ties]}
    raise ValidationError(f"unknown baseline method {method!r}; expected topsis or wlq")


def baseline_table(res: dict, delimiter: str = "\t") -> str:
    pos = {a: i + 1 for i, a in enumerate(res["ranking"])}
    rows = sorted(([a, pos[a], v] for a, v in zip(res["alternatives"], res["value"])),
                  key=lambda r: r[1])
    return _delimited(["alternative", "position", res["method"]], rows, delimiter)
