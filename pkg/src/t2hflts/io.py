"""Loading and validating term-set and survey documents."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema

from .it2 import FuzzyError, IT2TrFN, Trapezoid
from .linguistic import Calibration, LinguisticError, LinguisticTermSet, Term

SCHEMA_VERSION = 1
CONFIG_ENV = "T2HFLTS_LTS"


class ValidationError(ValueError):
    """Input document is malformed; the message carries a field path."""


def load_schema(name: str) -> dict:
    text = resources.files("t2hflts.schemas").joinpath(f"{name}.schema.json").read_text()
    return json.loads(text)


def _read_json(path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"{path}: cannot read ({exc.strerror})") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None


def _validate(doc: Any, schema_name: str, where: str) -> None:
    validator = jsonschema.Draft202012Validator(load_schema(schema_name))
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        path = "/".join(str(p) for p in err.absolute_path) or "<root>"
        raise ValidationError(f"{where}: {path}: {err.message}")


def lts_from_dict(doc: dict, where: str = "<lts>") -> LinguisticTermSet:
    _validate(doc, "lts", where)
    terms = []
    for i, spec in enumerate(doc["terms"]):
        label = spec["label"]
        try:
            sem = IT2TrFN(
                Trapezoid(*spec["umf"], h=spec.get("umf_height", 1.0)),
                Trapezoid(*spec["lmf"], h=spec.get("lmf_height", 1.0)),
            )
        except FuzzyError as exc:
            raise ValidationError(f"{where}: terms/{i} ({label}): {exc}") from None
        terms.append(Term(label, sem, spec.get("long_label")))
    cal = doc.get("calibration")
    if cal is not None:
        cal = Calibration(cal.get("alpha"), cal.get("fuzziness_mode"), cal.get("n"),
                          cal.get("note", ""))
    try:
        lts = LinguisticTermSet(tuple(terms), cal)
        lts.check_ordering()
    except LinguisticError as exc:
        raise ValidationError(f"{where}: {exc}") from None
    return lts


def load_lts(path=None) -> LinguisticTermSet:
    """Load a term set; falls back to ``$T2HFLTS_LTS`` then the bundled fixture."""
    if path is None:
        path = os.environ.get(CONFIG_ENV)
    if path is None:
        return bundled_lts()
    return lts_from_dict(_read_json(path), str(path))


def lts_to_dict(lts: LinguisticTermSet) -> dict:
    out = {"version": SCHEMA_VERSION, "terms": []}
    for t in lts.terms:
        u, l = t.semantics.umf, t.semantics.lmf
        spec = {"label": t.label}
        if t.long_label:
            spec["long_label"] = t.long_label
        spec.update(umf=list(u.knots), lmf=list(l.knots), lmf_height=l.h)
        if u.h != 1.0:
            spec["umf_height"] = u.h
        out["terms"].append(spec)
    cal = lts.calibration
    if cal is not None:
        out["calibration"] = {k: v for k, v in vars(cal).items() if v not in (None, "")}
    return out


def data_path(name: str) -> Path:
    return Path(str(resources.files("t2hflts.data").joinpath(name)))


def bundled_lts() -> LinguisticTermSet:
    return load_lts(data_path("example1_lts.json"))


@dataclass(frozen=True)
class Survey:
    """Responses ``responses[dmr][criterion][alternative]`` as CLE strings."""

    dmrs: tuple[str, ...]
    dmr_weights: tuple[float, ...]
    criteria: tuple[str, ...]
    criteria_weights: tuple[Any, ...]
    alternatives: tuple[str, ...]
    responses: tuple[tuple[tuple[str, ...], ...], ...]
    rank_matrix: tuple[tuple[str, ...], ...] | None = None
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def shape(self) -> tuple[int, int, int]:
        return (len(self.dmrs), len(self.criteria), len(self.alternatives))


def survey_from_dict(doc: dict, where: str = "<survey>") -> Survey:
    _validate(doc, "survey", where)
    dmrs = [d["id"] for d in doc["dmrs"]]
    weights = [float(d["weight"]) for d in doc["dmrs"]]
    crits = [c["id"] for c in doc["criteria"]]
    cweights = [c.get("weight", 1.0) for c in doc["criteria"]]
    alts = list(doc["alternatives"])
    resp = doc["responses"]

    for kind, ids in (("dmrs", dmrs), ("criteria", crits), ("alternatives", alts)):
        if len(set(ids)) != len(ids):
            raise ValidationError(f"{where}: {kind}: duplicate identifiers")
    if abs(sum(weights) - 1.0) > 1e-9:
        raise ValidationError(f"{where}: dmrs: weights sum to {sum(weights):.12g}, expected 1")
    if isinstance(resp, dict):
        resp = [resp.get(d) for d in dmrs]
    table = []
    for p, dmr in enumerate(dmrs):
        block = resp[p] if p < len(resp) else None
        if isinstance(block, dict):
            block = [block.get(c) for c in crits]
        if block is None or len(block) != len(crits):
            raise ValidationError(f"{where}: responses/{dmr}: expected {len(crits)} criteria rows")
        rows = []
        for k, crit in enumerate(crits):
            row = block[k]
            if isinstance(row, dict):
                row = [row.get(a) for a in alts]
            if row is None or len(row) != len(alts):
                raise ValidationError(
                    f"{where}: responses/{dmr}/{crit}: expected {len(alts)} responses")
            for j, cell in enumerate(row):
                if not isinstance(cell, str) or not cell.strip():
                    raise ValidationError(
                        f"{where}: responses/{dmr}/{crit}/{alts[j]}: missing response")
            rows.append(tuple(row))
        table.append(tuple(rows))

    rank = doc.get("rank_matrix")
    if rank is not None:
        rank = tuple(tuple(r) for r in rank)
        if len(rank) != len(dmrs):
            raise ValidationError(f"{where}: rank_matrix: expected {len(dmrs)} rows, got {len(rank)}")
        for dmr, row in zip(dmrs, rank):
            if sorted(row) != sorted(alts):
                raise ValidationError(
                    f"{where}: rank_matrix/{dmr}: rank matrix row is not a permutation of the alternatives")
    return Survey(tuple(dmrs), tuple(weights), tuple(crits), tuple(cweights), tuple(alts),
                  tuple(table), rank, dict(doc.get("meta", {})))


def responses_from_csv(text: str, dmrs, criteria) -> list[list[list[str]]]:
    """Parse a CSV of blocks: header row of alternatives, one block per DMR.

    Each data row is ``criterion,<cle>,<cle>,...``; a row whose first cell
    names a DMR starts that DMR's block.
    """
    reader = csv.reader(io.StringIO(text))
    header = None
    out: dict[str, list[list[str]]] = {}
    current = None
    for lineno, row in enumerate(reader, 1):
        if not row or not any(c.strip() for c in row):
            continue
        row = [c.strip() for c in row]
        if header is None:
            header = row[1:]
            continue
        if row[0] in dmrs and all(not c for c in row[1:]):
            current = row[0]
            out[current] = []
            continue
        if current is None:
            raise ValidationError(f"csv line {lineno}: response row before any DMR block")
        if len(row) - 1 != len(header):
            raise ValidationError(
                f"csv line {lineno}: expected {len(header)} responses, got {len(row) - 1}")
        out[current].append(row[1:])
    missing = [d for d in dmrs if d not in out]
    if missing:
        raise ValidationError(f"csv: no block for DMR(s) {', '.join(missing)}")
    for d in dmrs:
        if len(out[d]) != len(criteria):
            raise ValidationError(f"csv: DMR {d}: expected {len(criteria)} rows, got {len(out[d])}")
    return [out[d] for d in dmrs]


def load_survey(path) -> Survey:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        raise ValidationError(
            f"{path}: a CSV holds only responses; reference it from a JSON survey "
            f"via \"responses_csv\"")
    doc = _read_json(path)
    if isinstance(doc, dict) and "responses_csv" in doc and "responses" not in doc:
        csv_path = path.parent / doc["responses_csv"]
        try:
            text = csv_path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ValidationError(f"{csv_path}: cannot read ({exc.strerror})") from None
        dmrs = [d.get("id") for d in doc.get("dmrs", [])]
        crits = [c.get("id") for c in doc.get("criteria", [])]
        doc = dict(doc)
        doc["responses"] = responses_from_csv(text, dmrs, crits)
        del doc["responses_csv"]
    return survey_from_dict(doc, str(path))


def bundled_survey(name: str = "example1_survey.json") -> Survey:
    return load_survey(data_path(name))
