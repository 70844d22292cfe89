"""Fit the bundled Example-1 term set and the envelope OWA alpha.

The published worked example gives the {M, G, VG} envelope
UMF ~ T(0.167, 0.667, 0.819, 1), LMF ~ T(0.333, 0.667, 0.819, 1; 0.8) and
per-term fuzziness 0.040 / 0.051 / 0.040, but not the term parameters
themselves.  This script reconstructs a term set that reproduces those
numbers and writes it to src/t2hflts/data/example1_lts.json.

    python scripts/calibrate.py [--out PATH] [--n 1001]
"""

from __future__ import annotations

import argparse
import json
import re
from pathlib import Path

import numpy as np
from scipy.optimize import least_squares

from t2hflts.envelope import EnvelopeConfig, t1_envelope
from t2hflts.io import lts_from_dict, lts_to_dict
from t2hflts.it2 import IT2TrFN, Trapezoid, scalar_fuzziness
from t2hflts.linguistic import Calibration, LinguisticTermSet, T2HFLTS, Term

MODE = "left"
LMF_H = 0.8
UMF_TARGET = (0.167, 0.667, 0.819, 1.0)
LMF_TARGET = (0.333, 0.667, 0.819, 1.0)
FUZZ_TARGET = (0.040, 0.051, 0.040)
NAMES = [("VP", "very poor"), ("P", "poor"), ("M", "moderate"), ("G", "good"), ("VG", "very good")]

# alpha, mM, mG, hM, hML, hG, rG, hGL, rGL, aV, eV
X0 = np.array([0.6, 0.367, 0.668, 0.03, 0.02, 0.03, 0.08, 0.02, 0.05, 0.9, 0.95])
LO = np.array([0.0, 0.34, 0.45, 0.0, 0.0, 0.0, 0.01, 0.0, 0.01, 0.7, 0.7])
HI = np.array([1.0, 0.45, 0.85, 0.15, 0.1, 0.15, 0.2, 0.15, 0.2, 0.999, 0.999])
# Weak pull toward X0 so the fit keeps plausible term shapes (the targets
# alone leave several directions free).
PRIOR = 0.1


def build(x) -> tuple[LinguisticTermSet, float]:
    alpha, mM, mG, hM, hML, hG, rG, hGL, rGL, aV, eV = (float(v) for v in x)
    hML = min(hML, hM, mM - 1 / 3)
    hGL, rGL = min(hGL, hG), min(rGL, rG)
    m = IT2TrFN(Trapezoid(1 / 6, mM - hM, mM + hM, 2 * mM - 1 / 6),
                Trapezoid(1 / 3, mM - hML, mM + hML, 2 * mM - 1 / 3, LMF_H))
    g = IT2TrFN(Trapezoid(mG - hG - rG, mG - hG, mG + hG, min(mG + hG + rG, 1.0)),
                Trapezoid(mG - hGL - rGL, mG - hGL, mG + hGL, min(mG + hGL + rGL, 1.0), LMF_H))
    eV = max(eV, aV)
    vg = IT2TrFN(Trapezoid(aV, 1, 1, 1), Trapezoid(eV, 1, 1, 1, LMF_H))
    terms = [vg.mirrored(), g.mirrored(), m, g, vg]
    lts = LinguisticTermSet(tuple(Term(s, t, l) for (s, l), t in zip(NAMES, terms)))
    return lts, alpha


def envelope_knots(lts, alpha, n):
    cfg = EnvelopeConfig(alpha=alpha, n=n, fuzziness_mode=MODE)
    h = T2HFLTS.span(lts, 2, 4)
    return t1_envelope(h, lts, cfg, "UMF"), t1_envelope(h, lts, cfg, "LMF")


def residuals(x, n):
    try:
        lts, alpha = build(x)
        u, l = envelope_knots(lts, alpha, n)
    except ValueError:
        return np.full(11, 1.0)
    r = [k - t for k, t in zip(u.knots, UMF_TARGET)]
    r += [k - t for k, t in zip(l.knots, LMF_TARGET)]
    fz = [scalar_fuzziness(lts[k].semantics, MODE, n) for k in (2, 3, 4)]
    r += [f - t for f, t in zip(fz, FUZZ_TARGET)]
    return np.array(r)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    root = Path(__file__).resolve().parents[1]
    ap.add_argument("--out", type=Path, default=root / "src/t2hflts/data/example1_lts.json")
    ap.add_argument("--n", type=int, default=1001)
    args = ap.parse_args(argv)

    def objective(x):
        return np.concatenate([residuals(x, args.n), PRIOR * (x - X0)])

    fit = least_squares(objective, X0, bounds=(LO, HI), diff_step=1e-4)
    lts, alpha = build(fit.x)
    res = residuals(fit.x, args.n)
    worst = float(np.max(np.abs(res)))
    u, l = envelope_knots(lts, alpha, args.n)
    fz = [scalar_fuzziness(lts[k].semantics, MODE, args.n) for k in (2, 3, 4)]
    print(f"alpha = {alpha:.6f}")
    print("UMF envelope:", " ".join(f"{k:.4f}" for k in u.knots))
    print("LMF envelope:", " ".join(f"{k:.4f}" for k in l.knots), f"h={l.h}")
    print("fuzziness (M, G, VG):", " ".join(f"{f:.4f}" for f in fz))
    print(f"max |residual| = {worst:.2e}")

    note = (f"reconstructed by scripts/calibrate.py; not published parameters; "
            f"max residual {worst:.1e}")
    lts = LinguisticTermSet(lts.terms, Calibration(round(alpha, 6), MODE, args.n, note))
    doc = lts_to_dict(lts)
    for term in doc["terms"]:
        term["umf"] = [round(v, 6) for v in term["umf"]]
        term["lmf"] = [round(v, 6) for v in term["lmf"]]
    lts_from_dict(doc)  # rounded document must still validate
    text = json.dumps(doc, indent=2)
    text = re.sub(r"\[\s+([^\[\]{}]*?)\s+\]", lambda m: "[" + " ".join(m.group(1).split()) + "]", text)
    args.out.write_text(text + "\n")
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
