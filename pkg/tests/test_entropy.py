import itertools
import math

import numpy as np
import pytest

from conftest import uniform_lts
from t2hflts.entropy import (EntropyError, SweepCase, beta, comprehensive_entropy, entropy_report,
                             entropy_sweep, fuzzy_entropy_from_scalars, hesitant_entropy,
                             t1_comprehensive, t1_fuzzy_entropy, t2_fuzzy_entropy)
from t2hflts.linguistic import CLE, T2HFLTS, complement


def test_worked_mgvg_values():
    e_f = fuzzy_entropy_from_scalars((2, 3, 4), (0.040, 0.051, 0.040), 4)
    e_h = hesitant_entropy((2, 3, 4), 4)
    b = beta(CLE.between(2, 4), 4)
    assert e_f == pytest.approx(0.026, abs=1e-3)
    assert e_h == pytest.approx(1 / 3, abs=1e-12)
    assert b == 0.5
    assert comprehensive_entropy(e_f, e_h, b) == pytest.approx(0.165, abs=2e-3)


def test_hesitant_entropy_direct_summation():
    assert hesitant_entropy((3,), 4) == 0.0
    for g in range(1, 12):
        idx = list(range(g + 1))
        l = len(idx)
        direct = sum(abs(a - b) for a in idx for b in idx) / 2
        assert hesitant_entropy(idx, g) == pytest.approx(direct * 2 / (l * (l - 1)) / g, abs=1e-14)


def test_empty_inputs_rejected(lts):
    with pytest.raises(EntropyError):
        hesitant_entropy((), 4)
    with pytest.raises(EntropyError):
        t2_fuzzy_entropy(T2HFLTS.empty(lts))
    with pytest.raises(EntropyError):
        fuzzy_entropy_from_scalars((1, 2), (0.1,), 4)


def test_beta_examples():
    assert beta(CLE.single(2), 4) == 0.0
    assert beta(CLE.between(2, 2), 4) == 0.0
    for g in (1, 4, 9):
        assert beta(CLE.more_than(0), g) == pytest.approx(1.0)
        assert beta(CLE.less_than(g), g) == pytest.approx(1.0)
        assert beta(CLE.less_than(0), g) == pytest.approx(0.0, abs=1e-15)


def test_beta_bounded_exhaustive():
    for g in range(1, 65):
        for i in range(g + 1):
            for cle in (CLE.single(i), CLE.more_than(i), CLE.less_than(i)):
                assert 0.0 <= beta(cle, g) <= 1.0
            for j in range(i, g + 1):
                assert 0.0 <= beta(CLE.between(i, j), g) <= 1.0


def test_beta_out_of_range():
    with pytest.raises(EntropyError):
        beta(CLE.between(1, 6), 4)


def test_t1_examples():
    assert t1_fuzzy_entropy((2,), 4) == 1.0
    assert t1_fuzzy_entropy((0, 4), 4) == 0.0
    assert t1_fuzzy_entropy((2, 3, 4), 4) == pytest.approx((1 + 0.75 + 0) / 3)
    assert t1_comprehensive((2,), 4, 0.0) == 1.0


def test_comprehensive_examples():
    assert comprehensive_entropy(0.3, 0.7, 0.0) == 0.3
    assert comprehensive_entropy(1, 1, 1) == 1.0


def test_comprehensive_monotone_grid():
    grid = np.linspace(0, 1, 21)
    for b in grid:
        for e_h in grid:
            col = [comprehensive_entropy(e_f, e_h, b) for e_f in grid]
            assert np.all(np.diff(col) >= -1e-15)
            assert all(0 <= v <= 1 for v in col)
        for e_f in grid:
            row = [comprehensive_entropy(e_f, e_h, b) for e_h in grid]
            assert np.all(np.diff(row) >= -1e-15)


def test_fe1_endpoints(lts):
    for s in (uniform_lts(4), uniform_lts(7), lts):
        assert t2_fuzzy_entropy(T2HFLTS.span(s, 0, 0)) == 0.0
        assert t2_fuzzy_entropy(T2HFLTS.span(s, s.g, s.g)) == 0.0


@pytest.mark.parametrize("g", [2, 4, 6, 8])
def test_fe2_middle_singleton_is_strict_maximum(g):
    vals = [fuzzy_entropy_from_scalars((k,), (0.3,), g) for k in range(g + 1)]
    mid = vals[g // 2]
    assert all(v < mid for k, v in enumerate(vals) if k != g // 2)


@pytest.mark.parametrize("g", range(1, 7))
def test_fe3_moving_towards_centre_exhaustive(g):
    f = 0.45
    for l in range(1, g + 2):
        for idx in itertools.combinations(range(g + 1), l):
            base = fuzzy_entropy_from_scalars(idx, [f] * l, g)
            for pos, k in enumerate(idx):
                for k2 in range(g + 1):
                    if k2 in idx or abs(k2 - g / 2) > abs(k - g / 2):
                        continue
                    moved = tuple(sorted(idx[:pos] + (k2,) + idx[pos + 1:]))
                    assert fuzzy_entropy_from_scalars(moved, [f] * l, g) >= base - 1e-15


@pytest.mark.parametrize("g", [2, 3, 4, 6])
def test_fe4_complement_on_symmetric_lts(g):
    s = uniform_lts(g)
    assert s.is_symmetric()
    for i in range(g + 1):
        for j in range(i, g + 1):
            h = T2HFLTS.span(s, i, j)
            assert t2_fuzzy_entropy(h) == pytest.approx(t2_fuzzy_entropy(complement(h)), abs=1e-12)


def test_report_fields_in_unit_interval(lts):
    for i in range(lts.g + 1):
        for j in range(i, lts.g + 1):
            rep = entropy_report(T2HFLTS.span(lts, i, j), mode="left")
            assert all(0.0 <= v <= 1.0 for v in rep.to_dict().values())


@pytest.mark.parametrize("g", [4, 6, 9])
def test_sweep_case1_trends(g):
    rows = entropy_sweep(uniform_lts(g), SweepCase.GROWING_SET)
    assert rows[0]["e_f"] == rows[0]["e_h"] == rows[0]["e_c"] == 0.0
    e_h = [r["e_h"] for r in rows]
    assert np.all(np.diff(e_h) >= 0)
    e_f = [r["e_f"] for r in rows]
    peak = int(np.argmax(e_f))
    assert 0 < peak < g
    assert np.all(np.diff(e_f[:peak + 1]) >= 0) and np.all(np.diff(e_f[peak:]) <= 0)


def test_sweep_case2_beta_zero(lts):
    rows = entropy_sweep(lts, 2, mode="left")
    assert len(rows) == lts.g + 1
    for r in rows:
        assert r["beta"] == 0.0 and r["e_c"] == r["e_f"] and r["e_h"] == 0.0


def test_midpoint_fuzziness_used_by_default():
    s = uniform_lts(4)
    fz = s.term_fuzziness("midpoint", 1001)
    h = T2HFLTS.span(s, 1, 2)
    want = (4 * fz[1] * 0.25 * 0.75 + 4 * fz[2] * 0.25) / 2
    assert t2_fuzzy_entropy(h) == pytest.approx(want, abs=1e-14)
    assert math.isfinite(want)
