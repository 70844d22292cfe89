"""Hesitant, fuzzy and comprehensive entropies of (T2) HFLTSs."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Sequence

from .it2 import DEFAULT_N
from .linguistic import CLE, CLEKind, LinguisticTermSet, T2HFLTS, transform


class EntropyError(ValueError):
    pass


@dataclass(frozen=True)
class EntropyReport:
    e_f: float
    e_h: float
    beta: float
    e_c: float

    def to_dict(self) -> dict:
        return asdict(self)


def _indices(h) -> tuple[int, ...]:
    idx = tuple(sorted(h.indices if isinstance(h, T2HFLTS) else h))
    if not idx:
        raise EntropyError("entropy of an empty HFLTS is undefined")
    return idx


def hesitant_entropy(h, g: int) -> float:
    """Mean pairwise index spread divided by ``g``; zero for a singleton."""
    idx = _indices(h)
    l = len(idx)
    if l == 1:
        return 0.0
    spread = sum(idx[j] - idx[i] for i in range(l - 1) for j in range(i + 1, l))
    return (2.0 / (l * (l - 1))) * spread / g


def beta(cle: CLE, g: int) -> float:
    """Importance degree of hesitation for a CLE shape.

    ``between`` uses ``(cos(pi i/g) - cos(pi j/g)) / 2``; single terms carry
    no hesitation and map to 0 even when written as ``between s_i and s_i``.
    """
    top = cle.j if cle.kind is CLEKind.BETWEEN else cle.i
    if not (0 <= cle.i <= g and top <= g):
        raise EntropyError(f"CLE indices outside [0, {g}]")
    w = math.pi / g
    if cle.kind is CLEKind.SINGLE:
        return 0.0
    if cle.kind is CLEKind.MORE_THAN:
        val = 0.5 * math.cos(w * cle.i) + 0.5
    elif cle.kind is CLEKind.LESS_THAN:
        val = 0.5 * math.sin(w * cle.i - math.pi / 2) + 0.5
    else:
        val = 0.5 * (math.cos(w * cle.i) - math.cos(w * cle.j))
    return min(max(val, 0.0), 1.0)


def fuzzy_entropy_from_scalars(indices: Sequence[int], fuzziness: Sequence[float], g: int) -> float:
    """Mean of ``4 F_k (k/g)(1 - k/g)`` over the member terms.

    ``fuzziness`` is aligned with ``indices`` (one scalar per member term).
    """
    if not indices:
        raise EntropyError("entropy of an empty HFLTS is undefined")
    if len(fuzziness) != len(indices):
        raise EntropyError("need one fuzziness value per member term")
    total = 0.0
    for k, f in zip(indices, fuzziness):
        r = k / g
        total += 4.0 * f * r * (1.0 - r)
    return total / len(indices)


def t2_fuzzy_entropy(h: T2HFLTS, mode: str = "midpoint", n: int = DEFAULT_N) -> float:
    fz = h.lts.term_fuzziness(mode, n)
    idx = _indices(h)
    return fuzzy_entropy_from_scalars(idx, [fz[k] for k in idx], h.lts.g)


def comprehensive_entropy(e_f: float, e_h: float, beta: float) -> float:
    return (e_f + beta * e_h) / (1.0 + beta * e_h)


def t1_fuzzy_entropy(h, g: int) -> float:
    """Index-only fuzzy entropy (all term fuzziness taken as 1)."""
    idx = _indices(h)
    return fuzzy_entropy_from_scalars(idx, [1.0] * len(idx), g)


def t1_comprehensive(h, g: int, beta_value: float) -> float:
    return comprehensive_entropy(t1_fuzzy_entropy(h, g), hesitant_entropy(h, g), beta_value)


def entropy_report(h: T2HFLTS, cle: CLE | None = None, mode: str = "midpoint",
                   n: int = DEFAULT_N) -> EntropyReport:
    """All entropies of ``h``; ``cle`` selects the beta formula."""
    g = h.lts.g
    if cle is None:
        cle = CLE.single(h.indices[0]) if len(h) == 1 else CLE.between(h.indices[0], h.indices[-1])
    e_f = t2_fuzzy_entropy(h, mode, n)
    e_h = hesitant_entropy(h, g)
    b = beta(cle, g)
    return EntropyReport(e_f, e_h, b, comprehensive_entropy(e_f, e_h, b))


class SweepCase(Enum):
    GROWING_SET = 1
    SLIDING_SINGLETON = 2


def entropy_sweep(lts: LinguisticTermSet, case: SweepCase | int,
                  mode: str = "midpoint", n: int = DEFAULT_N) -> list[dict]:
    """Rows ``(k, e_f, e_h, beta, e_c)`` for the two sensitivity cases.

    Case 1 grows ``{s_0} .. {s_0..s_k}`` (a ``less than s_k`` expression);
    case 2 slides a single term ``{s_k}`` across the set.
    """
    case = SweepCase(case)
    rows = []
    for k in range(lts.g + 1):
        if case is SweepCase.GROWING_SET and k > 0:
            cle = CLE.less_than(k)
        else:
            cle = CLE.single(k)
        h = transform(cle, lts)
        rep = entropy_report(h, cle, mode, n)
        rows.append({"g": lts.g, "k": k, **rep.to_dict()})
    return rows
