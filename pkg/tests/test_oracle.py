import math

import numpy as np
import pytest
from scipy.stats import norm

from conftest import random_sample

from giniscore.core import Sample, build_sample
from giniscore.curves import curve_areas, lorenz_curve
from giniscore.errors import BadParamsError, OutOfRangeError, UnequalWeightsError
from giniscore.oracle import (
    DiscreteDistribution,
    aggregate_ties,
    cap_area_aggregated,
    discrete_lorenz,
    generalized_inverse,
    lognormal_lorenz,
    norm_cdf,
    norm_ppf,
    step_lorenz,
)

THREE_ATOM = DiscreteDistribution(
    ys=np.array([0.5, 1.0, 2.5]), ps=np.array([0.375, 0.5, 0.125])
)

EIGHT = build_sample(
    [(1.99, 3), (2, 3), (3, 3), (4, 3), (5, 7), (6, 7), (7, 7), (8, 7)]
)


# --- tie aggregation ---------------------------------------------------------


def test_aggregate_eight_point_exact_group_means():
    agg = aggregate_ties(EIGHT)
    assert agg.predictions.tolist() == [7.0, 3.0]
    assert agg.responses[0] == 6.5
    assert agg.responses[1] == 2.7475
    assert agg.weights.tolist() == [4.0, 4.0]


def test_aggregate_without_ties_is_identity_up_to_sorting():
    s = build_sample([(1, 5, 2.0), (2, 9, 1.0), (3, 7, 4.0)])
    agg = aggregate_ties(s)
    assert agg.predictions.tolist() == [9.0, 7.0, 5.0]
    assert agg.responses.tolist() == [2.0, 3.0, 1.0]
    assert agg.weights.tolist() == [1.0, 4.0, 2.0]


def test_aggregate_weighted_mean():
    s = build_sample([(2, 5, 1.0), (1, 5, 3.0)])
    agg = aggregate_ties(s)
    assert agg.responses.tolist() == [1.25]
    assert agg.weights.tolist() == [4.0]


def test_aggregate_preserves_total_weight(rng):
    for _ in range(10):
        s = random_sample(rng, int(rng.integers(2, 50)), ties=True, weighted=True)
        agg = aggregate_ties(s)
        assert math.fsum(agg.weights.tolist()) == pytest.approx(s.total_weight, rel=1e-15)
        assert bool(np.all(np.diff(agg.predictions) < 0))


# --- straight-line oracle area ------------------------------------------------


def test_aggregated_area_equals_best_without_ties():
    s = build_sample([(1, 5, 2.0), (2, 9, 1.0), (3, 7, 4.0)])
    areas = curve_areas(s)
    assert areas.cap_best == areas.cap_worst
    assert cap_area_aggregated(s) == pytest.approx(areas.cap_mid, abs=1e-14)


def test_aggregated_area_equals_mid_on_eight_point():
    assert cap_area_aggregated(EIGHT) == pytest.approx(curve_areas(EIGHT).cap_mid, abs=1e-14)


def test_aggregated_area_equals_mid_on_random_samples(rng):
    for k in range(120):
        s = random_sample(
            rng,
            int(rng.integers(2, 120)),
            ties=bool(k % 2),
            weighted=bool((k // 2) % 2),
            response_ties=bool(k % 5 == 0),
        )
        a = cap_area_aggregated(s)
        b = curve_areas(s).cap_mid
        assert abs(a - b) <= 1e-12 * max(1.0, abs(a), abs(b))


# --- generalized inverse and discrete Lorenz -----------------------------------


@pytest.mark.parametrize(
    "p, expected",
    [
        (1e-9, 0.5),
        (0.375, 0.5),
        (0.3750000001, 1.0),
        (0.5, 1.0),
        (0.875, 1.0),
        (0.8750000001, 2.5),
        (1.0, 2.5),
    ],
)
def test_generalized_inverse_table(p, expected):
    assert generalized_inverse(THREE_ATOM, p) == expected


@pytest.mark.parametrize("p", [0.0, -0.5, 1.0000001])
def test_generalized_inverse_out_of_range(p):
    with pytest.raises(OutOfRangeError):
        generalized_inverse(THREE_ATOM, p)


@pytest.mark.parametrize(
    "alpha, expected",
    [
        (0.0, 0.0),
        (0.05, 0.0),
        (0.12499999, 0.0),
        (0.125, 0.3125),
        (0.4, 0.3125),
        (0.62499999, 0.3125),
        (0.625, 0.8125),
        (0.99, 0.8125),
        (1.0, 1.0),
    ],
)
def test_discrete_lorenz_steps(alpha, expected):
    assert discrete_lorenz(THREE_ATOM, alpha) == expected


def test_discrete_lorenz_out_of_range():
    with pytest.raises(OutOfRangeError):
        discrete_lorenz(THREE_ATOM, 1.1)
    with pytest.raises(OutOfRangeError):
        discrete_lorenz(THREE_ATOM, -0.1)


def test_discrete_distribution_atom_views():
    dist = DiscreteDistribution.from_atoms([(0.5, 0.375), (1.0, 0.5), (2.5, 0.125)])
    assert dist.atoms == THREE_ATOM.atoms
    assert dist.mean == 1.0


def test_discrete_distribution_validation():
    with pytest.raises(BadParamsError):
        DiscreteDistribution(np.array([1.0, 0.5]), np.array([0.5, 0.5]))
    with pytest.raises(BadParamsError):
        DiscreteDistribution(np.array([0.5, 1.0]), np.array([0.6, 0.6]))
    with pytest.raises(BadParamsError):
        DiscreteDistribution(np.array([0.5, 1.0]), np.array([1.0, -0.0]))


# --- log-normal closed form -----------------------------------------------------


def test_lognormal_matches_normal_cdf():
    assert lognormal_lorenz(1.0, 0.5) == pytest.approx(norm.cdf(1.0), abs=1e-12)


def test_lognormal_degenerate_sigma_is_diagonal():
    for alpha in (0.05, 0.3, 0.5, 0.77, 0.99):
        assert lognormal_lorenz(0.0, alpha) == pytest.approx(alpha, abs=1e-13)


def test_lognormal_boundary_limit():
    assert lognormal_lorenz(1.0, 1.0 - 1e-12) == pytest.approx(1.0, abs=1e-9)
    assert lognormal_lorenz(1.0, 1e-12) == pytest.approx(0.0, abs=1e-9)


def test_lognormal_concave_increasing_above_diagonal():
    grid = np.linspace(1e-4, 1 - 1e-4, 2000)
    values = np.array([lognormal_lorenz(0.8, float(a)) for a in grid])
    assert (np.diff(values) > 0).all()
    assert (np.diff(values, 2) <= 1e-12).all()
    assert (values > grid).all()


def test_lognormal_out_of_range():
    with pytest.raises(OutOfRangeError):
        lognormal_lorenz(1.0, 0.0)
    with pytest.raises(OutOfRangeError):
        lognormal_lorenz(1.0, 1.0)
    with pytest.raises(OutOfRangeError):
        lognormal_lorenz(-1.0, 0.5)


# --- step-function empirical Lorenz ----------------------------------------------


def test_step_lorenz_eight_point_breakpoint():
    s = Sample.from_arrays(
        [0.5, 0.5, 0.5, 1, 1, 1, 1, 2.5], [1, 2, 3, 4, 5, 6, 7, 8]
    )
    assert step_lorenz(s, 0.125) == 0.3125
    assert step_lorenz(s, 0.4) == 0.3125
    assert step_lorenz(s, 0.625) == 0.8125


def test_step_lorenz_identical_values_zero_before_last_step():
    s = Sample.from_arrays([3.0, 3.0, 3.0], [1.0, 2.0, 3.0])
    for alpha in (0.01, 0.5, 0.99):
        assert step_lorenz(s, alpha) == 0.0


def test_step_lorenz_matches_corners_of_interpolated_curve():
    # dyadic n so the grid alphas i/n are exact
    rng = np.random.default_rng(2)
    responses = rng.exponential(1.0, 16)
    s = Sample.from_arrays(responses, responses.copy())
    curve = lorenz_curve(s)
    for i in range(1, 16):
        assert step_lorenz(s, i / 16) == pytest.approx(float(curve.values[i]), abs=1e-13)


def test_step_lorenz_below_interpolated(rng):
    responses = rng.exponential(1.0, 23)
    s = Sample.from_arrays(responses, responses.copy())
    curve = lorenz_curve(s)
    for alpha in np.linspace(0.01, 0.99, 37):
        assert step_lorenz(s, float(alpha)) <= curve.evaluate(float(alpha)) + 1e-12


def test_step_lorenz_errors():
    s = build_sample([(1, 1, 1.0), (2, 2, 2.0)])
    with pytest.raises(UnequalWeightsError):
        step_lorenz(s, 0.5)
    t = build_sample([(1, 1), (2, 2)])
    for alpha in (0.0, 1.0, -0.2):
        with pytest.raises(OutOfRangeError):
            step_lorenz(t, alpha)


def test_step_lorenz_accepts_any_equal_weight():
    a = Sample.from_arrays([1.0, 2.0, 4.0], [1, 2, 3])
    b = Sample.from_arrays([1.0, 2.0, 4.0], [1, 2, 3], [2.5, 2.5, 2.5])
    assert step_lorenz(a, 0.4) == step_lorenz(b, 0.4)


# --- normal CDF / quantile --------------------------------------------------------


def test_norm_cdf_accuracy_against_scipy():
    xs = np.concatenate([np.linspace(-37, 37, 5001), np.linspace(-3, 3, 2001)])
    for x in xs:
        reference = norm.cdf(x)
        if reference > 0:
            assert norm_cdf(float(x)) == pytest.approx(reference, rel=1e-12, abs=5e-324)


def test_norm_ppf_accuracy_against_scipy():
    ps = np.concatenate(
        [np.geomspace(1e-290, 0.5, 2001), 1.0 - np.geomspace(1e-16, 0.5, 2001)]
    )
    for p in ps:
        assert norm_ppf(float(p)) == pytest.approx(norm.ppf(p), rel=1e-12, abs=1e-13)


def test_norm_round_trip():
    for p in (1e-10, 0.02425, 0.3, 0.5, 0.9, 1 - 1e-10):
        assert norm_cdf(norm_ppf(p)) == pytest.approx(p, rel=1e-12)


def test_norm_ppf_out_of_range():
    for p in (0.0, 1.0, -0.3, 2.0):
        with pytest.raises(OutOfRangeError):
            norm_ppf(p)


# --- empirical convergence to the exact curve --------------------------------------


def test_empirical_corners_converge_to_discrete_lorenz():
    rng = np.random.default_rng(99)
    responses = rng.choice(THREE_ATOM.ys, size=100_000, p=THREE_ATOM.ps)
    s = Sample.from_arrays(responses, responses.copy())
    curve = lorenz_curve(s)
    # compare at the exact breakpoints of the true curve
    for alpha, truth in ((0.125, 0.3125), (0.625, 0.8125)):
        assert abs(curve.evaluate(alpha) - truth) < 0.01
