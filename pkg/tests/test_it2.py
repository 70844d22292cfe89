import numpy as np
import pytest

from oracles import (embedded_fuzziness_range, random_fou, random_it2, switch_point_centroid,
                     vertex_centroid, yager_direct)
from t2hflts.it2 import (FuzzyError, IT2TrFN, SampledFOU, Trapezoid, ekm_centroid, embedded_extremes,
                         interval_weighted_average, it2_fuzziness, membership, scalar_fuzziness,
                         universe, yager_fuzziness)


def test_membership_examples():
    t = Trapezoid(0, 0.25, 0.5, 0.75)
    assert membership(t, 0.25) == 1.0
    assert membership(t, 0.9) == 0.0
    assert membership(Trapezoid(0, 0.25, 0.5, 0.75, 0.8), 0.125) == pytest.approx(0.4)


def test_membership_vectorised_matches_scalar():
    t = Trapezoid(0.1, 0.3, 0.35, 0.9, 0.7)
    x = np.linspace(-0.2, 1.2, 57)
    assert np.allclose(membership(t, x), [membership(t, v) for v in x])


def test_vertical_edges():
    t = Trapezoid(0.2, 0.2, 0.4, 0.4)
    assert membership(t, 0.2) == 1.0 and membership(t, 0.4) == 1.0
    assert membership(t, 0.19) == 0.0


@pytest.mark.parametrize("knots,h", [((0.3, 0.2, 0.4, 0.5), 1.0), ((0, 0.1, 0.2, 0.3), 0.0),
                                      ((0, 0.1, 0.2, 0.3), 1.2)])
def test_trapezoid_rejects_bad_input(knots, h):
    with pytest.raises(FuzzyError):
        Trapezoid(*knots, h=h)


def test_cut_endpoints():
    t = Trapezoid(0.0, 0.2, 0.6, 1.0, 0.5)
    assert t.cut(0.0) == (0.0, 1.0)
    assert t.cut(0.5) == pytest.approx((0.2, 0.6))
    assert t.cut(0.25) == pytest.approx((0.1, 0.8))
    with pytest.raises(FuzzyError):
        t.cut(0.6)


def test_it2_nesting_is_enforced():
    with pytest.raises(FuzzyError, match="not inside"):
        IT2TrFN(Trapezoid(0.2, 0.3, 0.4, 0.5), Trapezoid(0.1, 0.3, 0.4, 0.5, 0.5))
    with pytest.raises(FuzzyError, match="height"):
        IT2TrFN(Trapezoid(0.2, 0.3, 0.4, 0.5, 0.5), Trapezoid(0.2, 0.3, 0.4, 0.5, 0.8))
    # Same support, but a lower plateau that pokes above the upper ramp.
    with pytest.raises(FuzzyError, match="nested"):
        IT2TrFN(Trapezoid(0.0, 0.5, 0.5, 1.0), Trapezoid(0.0, 0.1, 0.9, 1.0, 0.9))


def test_sampled_fou_validation():
    x = universe(5)
    with pytest.raises(FuzzyError, match="not nested"):
        SampledFOU(x, [0, 0.6, 0, 0, 0], [0, 0.5, 0, 0, 0])
    with pytest.raises(FuzzyError):
        SampledFOU(x[:2], [0, 0], [0, 0])
    with pytest.raises(FuzzyError):
        SampledFOU(x[::-1], np.zeros(5), np.ones(5))
    f = SampledFOU(x, np.zeros(5), np.ones(5))
    with pytest.raises(ValueError):
        f.upper[0] = 0.3


def test_yager_basics():
    assert yager_fuzziness([0, 1, 1, 0]) == 0.0
    assert yager_fuzziness(np.full(7, 0.5)) == 1.0
    with pytest.raises(FuzzyError):
        yager_fuzziness([])


def test_yager_triangle_against_direct_summation():
    tri = Trapezoid(0, 0.5, 0.5, 1)
    ours = yager_fuzziness(membership(tri, universe(1001)))
    assert abs(ours - yager_direct(tri, 10001)) < 1e-3


def test_yager_complement_symmetry(rng):
    for _ in range(50):
        mu = rng.uniform(0, 1, 30)
        assert yager_fuzziness(mu) == pytest.approx(yager_fuzziness(1 - mu), abs=1e-15)


def test_it2_fuzziness_degenerate_fou():
    t = Trapezoid(0.1, 0.3, 0.5, 0.8)
    f_l, f_r = it2_fuzziness(IT2TrFN(t, t))
    expected = yager_fuzziness(membership(t, universe()))
    assert f_l == f_r == pytest.approx(expected)
    for mode in ("midpoint", "left", "right"):
        assert scalar_fuzziness(IT2TrFN(t, t), mode) == pytest.approx(expected)


def test_it2_fuzziness_below_half():
    x = universe(9)
    lower = np.linspace(0.0, 0.2, 9)
    upper = lower + 0.25
    least, most = embedded_extremes(lower, upper)
    assert np.array_equal(least, lower)
    assert np.array_equal(most, upper)


def test_theorem1_against_enumeration_nine_points(rng):
    for _ in range(20):
        upper = rng.uniform(0, 1, 9)
        lower = upper * rng.uniform(0, 1, 9)
        f = SampledFOU(universe(9), lower, upper)
        least, most = embedded_fuzziness_range(lower, upper)
        assert it2_fuzziness(f) == (yager_fuzziness(least), yager_fuzziness(most))


def test_fuzziness_interval_ordering_and_equality(rng):
    for _ in range(100):
        f = random_it2(rng)
        f_l, f_r = it2_fuzziness(f, 201)
        assert f_l <= f_r + 1e-15
        assert scalar_fuzziness(f, "left", 201) <= scalar_fuzziness(f, "midpoint", 201)
        assert scalar_fuzziness(f, "midpoint", 201) <= scalar_fuzziness(f, "right", 201)
        fou = f.sample(201)
        assert (f_l == f_r) == np.array_equal(fou.lower, fou.upper)


def test_scalar_fuzziness_rejects_unknown_mode():
    t = Trapezoid(0.1, 0.2, 0.3, 0.4)
    with pytest.raises(ValueError):
        scalar_fuzziness(IT2TrFN(t, t), "median")


def test_ekm_symmetric_set_centres_at_half():
    f = IT2TrFN(Trapezoid(0.1, 0.4, 0.6, 0.9), Trapezoid(0.3, 0.45, 0.55, 0.7, 0.6))
    assert ekm_centroid(f)[2] == pytest.approx(0.5, abs=1e-9)


def test_ekm_type1_set_collapses():
    t = Trapezoid(0.05, 0.2, 0.3, 0.7)
    c_l, c_r, c = ekm_centroid(IT2TrFN(t, t))
    x = universe()
    mu = membership(t, x)
    assert c_l == pytest.approx(c_r, abs=1e-12)
    assert c == pytest.approx(np.dot(x, mu) / mu.sum(), abs=1e-12)


def test_ekm_eleven_points_switch_point_oracle(rng):
    for _ in range(50):
        x, lower, upper = random_fou(rng, 11)
        got = ekm_centroid(SampledFOU(x, lower, upper))
        want = switch_point_centroid(x, lower, upper)
        assert got[0] == pytest.approx(want[0], abs=1e-12)
        assert got[1] == pytest.approx(want[1], abs=1e-12)


def test_switch_point_oracle_matches_vertex_search(rng):
    # The oracle itself is checked against the full 2^N vertex scan.
    for _ in range(30):
        x, lower, upper = random_fou(rng, int(rng.integers(3, 10)))
        assert switch_point_centroid(x, lower, upper) == pytest.approx(
            vertex_centroid(x, lower, upper), abs=1e-12)


def test_ekm_bounds_within_support(rng):
    for _ in range(50):
        f = random_it2(rng)
        c_l, c_r, _ = ekm_centroid(f, 301)
        assert f.umf.a - 1e-9 <= c_l <= c_r <= f.umf.d + 1e-9


def test_ekm_zero_upper_is_an_error():
    with pytest.raises(FuzzyError, match="identically zero"):
        ekm_centroid(SampledFOU(universe(5), np.zeros(5), np.zeros(5)))


def test_interval_weighted_average_unsorted_points():
    lo, hi = interval_weighted_average([0.9, 0.1, 0.5], [1, 1, 1], [1, 1, 1])
    assert lo == pytest.approx(0.5) and hi == pytest.approx(0.5)
    with pytest.raises(FuzzyError):
        interval_weighted_average([0.1, 0.2], [0, 0], [0, 0])
