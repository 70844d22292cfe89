import numpy as np
import pytest

from conftest import uniform_lts
from t2hflts.envelope import (EnvelopeConfig, EnvelopeCounter, EnvelopeError, owa, owa_weights,
                              represent_response, t1_envelope, t2_envelope)
from t2hflts.it2 import IT2TrFN, Trapezoid, membership, universe
from t2hflts.linguistic import CLE, LinguisticTermSet, T2HFLTS, Term, parse_cle, transform


def test_owa_weight_examples():
    assert np.array_equal(owa_weights(1, 5, 1.0), [1, 0, 0, 0, 0])
    assert np.allclose(owa_weights(1, 2, 0.5), [0.5, 0.5])
    w = owa_weights(1, 4, 0.3)
    assert np.allclose(w, [0.3, 0.21, 0.147, 0.343], atol=1e-12)
    assert w.sum() == pytest.approx(1.0)
    assert np.allclose(owa_weights(2, 4, 0.3), [0.3 ** 3, 0.7 * 0.09, 0.7 * 0.3, 0.7])
    assert np.array_equal(owa_weights(2, 1, 0.7), [1.0])


def test_owa_weights_sum_to_one():
    for kind in (1, 2):
        for n in range(1, 12):
            for a in np.linspace(0, 1, 11):
                w = owa_weights(kind, n, a)
                assert w.sum() == pytest.approx(1.0, abs=1e-12) and np.all(w >= 0)


def test_owa_errors_and_sorting():
    with pytest.raises(EnvelopeError):
        owa_weights(1, 0, 0.5)
    with pytest.raises(EnvelopeError):
        owa_weights(3, 2, 0.5)
    with pytest.raises(EnvelopeError):
        EnvelopeConfig(alpha=1.5)
    # Values are reordered descending before weighting.
    assert owa([0.1, 0.9], [1.0, 0.0]) == 0.9


def test_calibrated_mgvg_envelope(lts):
    cfg = EnvelopeConfig.for_lts(lts)
    env = represent_response(parse_cle("between M and VG", lts), lts, cfg)
    for got, want in zip(env.umf.knots, (0.167, 0.667, 0.819, 1.0)):
        assert got == pytest.approx(want, abs=0.01)
    for got, want in zip(env.lmf_t1.knots, (0.333, 0.667, 0.819, 1.0)):
        assert got == pytest.approx(want, abs=0.01)
    assert env.lower.height == pytest.approx(0.8)
    assert env.e_c == pytest.approx(0.165, abs=2e-3)
    assert env.umf.h == 1.0


def test_single_term_envelope_is_unchanged(lts):
    h = T2HFLTS.span(lts, 3, 3)
    assert t1_envelope(h, band="UMF") == lts[3].semantics.umf
    assert t1_envelope(h, band="LMF") == lts[3].semantics.lmf


def test_single_response_bypasses_envelope(lts):
    counter = EnvelopeCounter()
    assert represent_response(CLE.single(3), lts, counter=counter) is lts[3].semantics
    assert counter.count == 0
    represent_response(CLE.between(2, 4), lts, counter=counter)
    represent_response(CLE.more_than(1), lts, counter=counter)
    assert counter.count == 2


def test_shoulder_clamp(lts):
    h = transform(CLE.more_than(2), lts)
    clamp = t1_envelope(h, cfg=EnvelopeConfig(), shape=CLE.more_than(2).kind)
    plain = t1_envelope(h, cfg=EnvelopeConfig(shoulder_policy="plain"), shape=CLE.more_than(2).kind)
    assert clamp.c == clamp.d == 1.0
    assert plain.c < 1.0
    h = transform(CLE.less_than(2), lts)
    left = t1_envelope(h, shape=CLE.less_than(2).kind)
    assert left.a == left.b == 0.0
    # between never clamps, even when it touches the domain edge
    between = t1_envelope(transform(CLE.between(2, 4), lts), shape=CLE.between(2, 4).kind)
    assert between.c < 1.0


def test_inner_points_out_of_order_is_an_error(lts):
    h = T2HFLTS.span(lts, 1, 3)
    with pytest.raises(EnvelopeError, match="out of order"):
        t1_envelope(h, cfg=EnvelopeConfig(lower_kind=1, upper_kind=2, alpha=0.9))


def test_empty_and_bad_band(lts):
    with pytest.raises(EnvelopeError):
        t1_envelope(T2HFLTS.empty(lts))
    with pytest.raises(EnvelopeError):
        t1_envelope(T2HFLTS.span(lts, 0, 1), band="MID")


def all_envelopes(s, cfg):
    for i in range(s.g + 1):
        for cle in (CLE.more_than(i), CLE.less_than(i)):
            if not (cle.kind.name == "MORE_THAN" and i == s.g) and not (cle.kind.name == "LESS_THAN" and i == 0):
                yield cle, represent_response(cle, s, cfg)
        for j in range(i + 1, s.g + 1):
            yield CLE.between(i, j), represent_response(CLE.between(i, j), s, cfg)


@pytest.mark.parametrize("g", [2, 4, 6])
def test_fou_nesting_and_support(g, lts):
    for s in (uniform_lts(g), lts):
        cfg = EnvelopeConfig.for_lts(s)
        for cle, env in all_envelopes(s, cfg):
            fou = env.sample(401)
            assert np.all(fou.lower <= fou.upper + 1e-12)
            members = [s[k].semantics.umf for k in env.source.indices]
            assert env.umf.a == min(t.a for t in members)
            assert env.umf.d == max(t.d for t in members)
            on = fou.grid[fou.lower > 0]
            if on.size:
                assert env.umf.a <= on[0] and on[-1] <= env.umf.d


def test_support_grows_with_the_set(lts):
    for i in range(lts.g):
        prev = None
        for j in range(i + 1, lts.g + 1):
            env = t2_envelope(T2HFLTS.span(lts, i, j), cle=CLE.between(i, j))
            if prev is not None:
                assert env.umf.a <= prev.a and env.umf.d >= prev.d
            prev = env.umf


def test_degenerate_envelope_reduces_to_type1():
    # Two crisp-ish endpoint terms with LMF == UMF, so every member has zero fuzziness.
    t0 = Trapezoid(0.0, 0.0, 0.0, 0.0)
    t1 = Trapezoid(1.0, 1.0, 1.0, 1.0)
    s = LinguisticTermSet((Term("lo", IT2TrFN(t0, t0)), Term("hi", IT2TrFN(t1, t1))))
    env = t2_envelope(T2HFLTS.span(s, 0, 0))
    assert env.e_c == 0.0
    x = universe(201)
    assert np.array_equal(env.lower(x), membership(env.umf, x))


def test_sampled_lower_matches_closed_form(lts, rng):
    n = 1001
    for cle in (CLE.between(1, 3), CLE.between(2, 4), CLE.more_than(1)):
        env = represent_response(cle, lts, EnvelopeConfig.for_lts(lts, n=n))
        fou = env.sample()
        x = rng.uniform(0, 1, 500)
        closed = np.maximum(0.0, np.minimum(membership(env.lmf_t1, x), membership(env.umf, x) - env.e_c))
        approx = np.interp(x, fou.grid, fou.lower)
        # piecewise-linear sampling error is bounded by slope x step
        slope = max(1 / (t.b - t.a) for t in (env.umf, env.lmf_t1) if t.b > t.a)
        assert np.max(np.abs(approx - closed)) <= slope / (n - 1) + 1e-12


def test_lower_cut_agrees_with_samples(lts):
    env = represent_response(CLE.between(2, 4), lts, EnvelopeConfig.for_lts(lts))
    x = universe(20001)
    mu = env.lower(x)
    for a in (0.05, 0.3, 0.6, 0.79):
        lo, hi = env.lower.cut(a)
        inside = x[mu >= a - 1e-12]
        assert lo == pytest.approx(inside[0], abs=1e-4) and hi == pytest.approx(inside[-1], abs=1e-4)


def test_lmf_trapezoid_fast_path():
    # A low LMF plateau keeps U - e_c above the lower band everywhere.
    s = uniform_lts(4, lmf_height=0.5)
    env = t2_envelope(T2HFLTS.span(s, 1, 2), cle=CLE.between(1, 2))
    trap = env.lmf_trapezoid()
    assert trap is not None and trap == env.lmf_t1


def test_lmf_trapezoid_rejects_cut_track(lts):
    env = represent_response(CLE.between(2, 4), lts, EnvelopeConfig.for_lts(lts))
    assert env.lmf_trapezoid() is None
    a, f, g, o, h = env.lower.effective_knots()
    assert o < env.lmf_t1.d and h == pytest.approx(0.8)
