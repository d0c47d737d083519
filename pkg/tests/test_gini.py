import numpy as np
import pytest

from conftest import random_sample

from giniscore.core import Sample, build_sample
from giniscore.datagen import sample_two_models
from giniscore.errors import (
    DegenerateResponsesError,
    LengthMismatchError,
    NonFiniteValueError,
)
from giniscore.gini import compare, gini_score


def test_perfect_ranking_scores_one():
    y = np.array([3.0, 1.0, 4.0, 1.5])
    for weights in (None, np.array([1.0, 2.0, 0.5, 4.0])):
        s = Sample.from_arrays(y, y.copy(), weights)
        assert gini_score(s).gini == 1.0


def test_constant_predictions_score_zero():
    s = Sample.from_arrays([1.0, 3.0, 2.0, 5.0], [7.0, 7.0, 7.0, 7.0])
    assert gini_score(s).gini == pytest.approx(0.0, abs=1e-12)


def test_reversed_ranking_scores_minus_one():
    s = Sample.from_arrays([5.0, 4.0, 3.0, 2.0, 1.0], [1.0, 2.0, 3.0, 4.0, 5.0])
    assert gini_score(s).gini == pytest.approx(-1.0, abs=1e-12)


def test_weighted_example_scores_minus_one():
    s = build_sample([(2, 1, 1), (1, 2, 3)])
    rep = gini_score(s)
    assert rep.areas.lorenz == pytest.approx(0.075, abs=1e-12)
    assert rep.areas.cap_mid == pytest.approx(-0.075, abs=1e-12)
    assert rep.gini == pytest.approx(-1.0, abs=1e-12)
    assert rep.weighted is True
    assert rep.n == 2 and rep.tie_group_count == 2


def test_degenerate_responses_raise():
    with pytest.raises(DegenerateResponsesError):
        gini_score(Sample.from_arrays([2.0, 2.0, 2.0], [1.0, 2.0, 3.0]))
    # identical responses with unequal weights fall in the same bucket
    with pytest.raises(DegenerateResponsesError):
        gini_score(Sample.from_arrays([2.0, 2.0], [1.0, 2.0], [1.0, 5.0]))


def test_report_diagnostics():
    s = build_sample(
        [(1.99, 3), (2, 3), (3, 3), (4, 3), (5, 7), (6, 7), (7, 7), (8, 7)]
    )
    rep = gini_score(s)
    assert rep.n == 8
    assert rep.tie_group_count == 2
    assert rep.weighted is False
    assert rep.gini == rep.areas.cap_mid / rep.areas.lorenz


def test_gini_never_exceeds_one(rng):
    for k in range(40):
        s = random_sample(rng, int(rng.integers(2, 80)), ties=bool(k % 2), weighted=bool(k % 3))
        assert gini_score(s).gini <= 1.0 + 1e-12


def test_invariance_under_increasing_transform(rng):
    s = random_sample(rng, 60, ties=True, weighted=True)
    base = gini_score(s).gini
    p = s.predictions
    for transform in (2.0 * p + 3.0, np.exp(p / p.max()), np.unique(p, return_inverse=True)[1].astype(float)):
        t = Sample.from_arrays(s.responses, transform, s.weights)
        assert gini_score(t).gini == base  # identical ranks, identical permutation


def test_invariance_under_scalings_and_permutation(rng):
    s = random_sample(rng, 60, ties=True, weighted=True)
    base = gini_score(s).gini
    scaled_y = Sample.from_arrays(3.7 * s.responses, s.predictions, s.weights)
    assert gini_score(scaled_y).gini == pytest.approx(base, abs=1e-12)
    scaled_w = Sample.from_arrays(s.responses, s.predictions, 0.25 * s.weights)
    assert gini_score(scaled_w).gini == pytest.approx(base, abs=1e-12)
    perm = rng.permutation(s.n)
    shuffled = Sample.from_arrays(s.responses[perm], s.predictions[perm], s.weights[perm])
    assert gini_score(shuffled).gini == pytest.approx(base, abs=1e-12)


def test_constant_weights_reduce_to_unit_weights_exactly(rng):
    s = random_sample(rng, 45, ties=True, weighted=False)
    base = gini_score(s).gini
    for c in (0.1, 2.0, 99.5):
        t = Sample.from_arrays(s.responses, s.predictions, np.full(s.n, c))
        assert gini_score(t).gini == base


def test_coarsening_predictions_cannot_inflate_mid_score():
    # merging the four smallest predictions into one tie must strictly
    # lower the mid score on the eight-point sample
    y = np.array([1.99, 2, 3, 4, 5, 6, 7, 8])
    fine = np.array([2.01, 2, 3, 4, 5, 6, 7, 8])
    merged = fine.copy()
    merged[:4] = 3.0
    g_fine = gini_score(Sample.from_arrays(y, fine)).gini
    g_merged = gini_score(Sample.from_arrays(y, merged)).gini
    assert g_merged < g_fine
    # the best-case-only ratio is the one a big tie can inflate
    areas_fine = gini_score(Sample.from_arrays(y, fine)).areas
    areas_merged = gini_score(Sample.from_arrays(y, merged)).areas
    assert areas_merged.cap_best / areas_merged.lorenz > areas_fine.cap_best / areas_fine.lorenz


def test_compare_orders_by_score_then_name():
    y = np.array([1.0, 2.0, 3.0, 4.0])
    result = compare(
        [("anti", y[::-1].copy()), ("good", y.copy()), ("also_good", y.copy())], y
    )
    names = [name for name, _ in result.entries]
    assert names == ["also_good", "good", "anti"]
    assert result.entries[0][1].gini == result.entries[1][1].gini == 1.0
    assert result.entries[2][1].gini == pytest.approx(-1.0, abs=1e-12)


def test_compare_identical_vectors():
    y = np.array([1.0, 3.0, 2.0])
    result = compare([("b", y.copy()), ("a", y.copy())], y)
    assert [name for name, _ in result.entries] == ["a", "b"]
    g = [rep.gini for _, rep in result.entries]
    assert g[0] == g[1]


def test_compare_two_model_experiment_prefers_model_one():
    first, second = sample_two_models(20, seed=0)
    result = compare(
        [("model1", first.predictions), ("model2", second.predictions)],
        first.responses,
        allow_negative=True,
    )
    assert result.entries[0][0] == "model1"


def test_compare_length_mismatch():
    with pytest.raises(LengthMismatchError):
        compare([("m", [1.0, 2.0, 3.0])], [1.0, 2.0])
    with pytest.raises(LengthMismatchError):
        compare([("m", [1.0, 2.0])], [1.0, 2.0], [1.0])


def test_compare_annotates_model_errors():
    y = [1.0, 2.0]
    with pytest.raises(NonFiniteValueError, match="model 'bad'"):
        compare([("bad", [float("nan"), 1.0])], y)
    with pytest.raises(DegenerateResponsesError, match="model 'any'"):
        compare([("any", [1.0, 2.0])], [5.0, 5.0])
