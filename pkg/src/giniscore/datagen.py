"""Seeded synthetic samples for tests, benchmarks and the CLI.

All generators draw from numpy's Philox 4x64 counter-based bit generator,
so a given (generator, parameters, seed) triple always produces the same
sample.  Tests rely only on distributional statistics, never on the exact
stream.
"""

from __future__ import annotations

import numpy as np

from .core import Sample
from .errors import BadParamsError
from .oracle import DiscreteDistribution

__all__ = [
    "THREE_ATOM_DISTRIBUTION",
    "sample_lognormal",
    "sample_discrete",
    "sample_two_models",
    "sample_frequency_portfolio",
]

# Small skewed three-atom distribution with mean 1 and dyadic breakpoints;
# default target for the discrete generator.
THREE_ATOM_DISTRIBUTION = DiscreteDistribution(
    ys=np.array([0.5, 1.0, 2.5]), ps=np.array([0.375, 0.5, 0.125])
)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def sample_lognormal(n: int, mu: float = 0.0, sigma: float = 1.0, seed: int = 0) -> Sample:
    """Positive responses with log-normal law; predictions equal the responses."""
    if n < 2:
        raise BadParamsError(f"need n >= 2, got {n}")
    if not sigma > 0.0:
        raise BadParamsError(f"need sigma > 0, got {sigma}")
    responses = np.exp(_rng(seed).normal(mu, sigma, size=n))
    return Sample.from_arrays(responses, responses.copy())


def sample_discrete(
    n: int,
    dist: DiscreteDistribution = THREE_ATOM_DISTRIBUTION,
    seed: int = 0,
    *,
    exact_proportions: bool = False,
) -> Sample:
    """Draws from a finite distribution; predictions equal the responses.

    With ``exact_proportions`` the atom counts are fixed to the largest
    remainder rounding of ``n * p_k`` instead of being sampled, which makes
    the empirical distribution hit the exact breakpoints deterministically.
    """
    if n < 2:
        raise BadParamsError(f"need n >= 2, got {n}")
    if exact_proportions:
        scaled = dist.ps * n
        counts = np.floor(scaled).astype(np.int64)
        short = n - int(counts.sum())
        if short:
            for i in np.argsort(-(scaled - counts), kind="stable")[:short]:
                counts[i] += 1
        responses = np.repeat(dist.ys, counts)
    else:
        responses = _rng(seed).choice(dist.ys, size=n, p=dist.ps)
    return Sample.from_arrays(responses, responses.copy())


_TWO_MODEL_MEANS = np.array([1.0, 2.0, 3.0, 8.0, 9.0, 10.0])
# per-mean predictions: model 1 misplaces the top risk, model 2 additionally
# collapses the three lowest risks into one tie
_TWO_MODEL_PREDS_1 = np.array([1.0, 2.0, 3.0, 10.0, 7.0, 8.0])
_TWO_MODEL_PREDS_2 = np.array([2.0, 2.0, 2.0, 10.0, 7.0, 8.0])


def sample_two_models(
    n: int, seed: int = 0, *, balanced: bool = False
) -> tuple[Sample, Sample]:
    """Two competing prediction columns on shared Gaussian responses.

    The latent mean is uniform on six well-separated values; model 1 ranks
    the lower half correctly but misplaces the largest risk, model 2 has
    the same upper-half mistake and additionally collapses the three lowest
    risks into one tie.  ``balanced`` cycles through the six means
    deterministically instead of drawing them, so at ``n = 6`` the
    prediction columns are exactly the two model maps.

    Responses are conditionally Gaussian and may be negative; the samples
    are built with the negative-response override.
    """
    if n < 6:
        raise BadParamsError(f"need n >= 6, got {n}")
    rng = _rng(seed)
    if balanced:
        mus = np.resize(_TWO_MODEL_MEANS, n)
    else:
        mus = rng.choice(_TWO_MODEL_MEANS, size=n)
    responses = mus + rng.standard_normal(n)
    which = np.searchsorted(_TWO_MODEL_MEANS, mus)
    first = Sample.from_arrays(responses, _TWO_MODEL_PREDS_1[which], allow_negative=True)
    return first, first.with_predictions(_TWO_MODEL_PREDS_2[which])


def sample_frequency_portfolio(n: int, seed: int = 0) -> tuple[Sample, Sample]:
    """Class-imbalanced claims-frequency portfolio with exposure weights.

    Each record carries an exposure in (0, 1] as its case weight, a latent
    Poisson intensity from a low- or high-risk tier with multiplicative
    spread, a count drawn at ``exposure * intensity`` and the frequency
    count/exposure as response.  Average frequency sits near 7%, so the
    bulk of the records has zero claims.

    Returns two samples on the shared responses and exposures: the first
    predicts with the exact per-record intensity (tie-free), the second
    only with the two tier levels (two big ties).
    """
    if n < 2:
        raise BadParamsError(f"need n >= 2, got {n}")
    rng = _rng(seed)
    exposures = 1.0 - rng.random(n)
    tier = np.where(rng.random(n) < 0.3, 0.12, 0.035)
    intensity = tier * np.exp(0.5 * rng.standard_normal(n))
    counts = rng.poisson(exposures * intensity)
    for _ in range(1000):
        # tiny portfolios can draw no claims at all, which admits no curves
        if counts.sum() > 0:
            break
        counts = rng.poisson(exposures * intensity)
    else:
        raise BadParamsError("portfolio produced no claims; increase n")
    frequencies = counts / exposures
    fine = Sample.from_arrays(frequencies, intensity, exposures)
    return fine, fine.with_predictions(tier)
