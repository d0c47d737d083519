"""Piecewise-linear validation curves and their signed areas.

All curves live on the unit square and are stored as corner sets: the
cumulative weight share on the x-axis against the cumulative weighted
response share on the y-axis, linearly interpolated between corners.  The
Lorenz curve accumulates responses in their own decreasing order (the
unbeatable benchmark); the accuracy profiles accumulate them in the order
of the predictions, once per tie suborder.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Sample
from .errors import OutOfRangeError, UnequalWeightsError
from .ordering import TieDirection, order_responses_desc, order_tied

__all__ = [
    "Curve",
    "CurveAreas",
    "lorenz_curve",
    "cap_curve",
    "cap_curve_mid",
    "curve_areas",
]


@dataclass(frozen=True, eq=False)
class Curve:
    """Piecewise-linear curve on [0,1]x[0,1] given by its corner set.

    Corners run from exactly (0, 0) to exactly (1, 1) with strictly
    increasing ``alphas``.
    """

    alphas: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        alphas = np.ascontiguousarray(self.alphas, dtype=np.float64)
        values = np.ascontiguousarray(self.values, dtype=np.float64)
        if alphas.ndim != 1 or alphas.shape != values.shape:
            raise ValueError(f"corner arrays must match, got {alphas.shape} and {values.shape}")
        if alphas.size < 2:
            raise ValueError("a curve needs at least the two endpoint corners")
        if alphas[0] != 0.0 or values[0] != 0.0 or alphas[-1] != 1.0 or values[-1] != 1.0:
            raise ValueError("corner set must start at (0,0) and end at (1,1)")
        if not bool(np.all(np.diff(alphas) > 0.0)):
            raise ValueError("corner alphas must be strictly increasing")
        alphas.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "values", values)

    def evaluate(self, alpha):
        """Linear interpolation between corners; exact at corner alphas.

        Accepts a scalar or an array of points in [0, 1].
        """
        a = np.asarray(alpha, dtype=np.float64)
        if not bool(np.all((a >= 0.0) & (a <= 1.0))):
            raise OutOfRangeError(f"alpha must lie in [0, 1], got {alpha!r}")
        out = np.interp(a, self.alphas, self.values)
        return float(out) if np.isscalar(alpha) or a.ndim == 0 else out

    def area_above_diagonal(self) -> float:
        """Signed trapezoid area between the curve and the diagonal.

        Positive when the curve lies above the diagonal, negative below.
        """
        v = self.values
        trapezoids = np.dot(v[1:] + v[:-1], np.diff(self.alphas))
        return float(0.5 * trapezoids - 0.5)


@dataclass(frozen=True)
class CurveAreas:
    """Signed areas of the Lorenz curve and the best/worst accuracy profiles."""

    lorenz: float
    cap_best: float
    cap_worst: float

    @property
    def cap_mid(self) -> float:
        return 0.5 * (self.cap_best + self.cap_worst)


def _corner_curve(sample: Sample, order: np.ndarray) -> Curve:
    # Cumulative weight shares vs cumulative weighted-response shares, with
    # the final corner pinned to exactly (1, 1) to absorb normalization
    # rounding.  Constant weights canonicalize to the i/n grid so that any
    # common weight reproduces the unit-weight curve bit for bit.
    n = sample.n
    y_ord = sample.responses[order]
    w = sample.weights
    values = np.empty(n + 1)
    values[0] = 0.0
    # total_response can round to <= 0 for allowed-negative samples whose
    # weighted total is positive only at noise scale; fall back then
    if w[0] > 0 and bool(np.all(w == w[0])) and sample.total_response > 0.0:
        alphas = np.arange(n + 1, dtype=np.float64) / n
        np.cumsum(y_ord, out=values[1:])
        values[1:] /= sample.total_response
    else:
        w_ord = w[order]
        alphas = np.empty(n + 1)
        alphas[0] = 0.0
        np.cumsum(w_ord, out=alphas[1:])
        alphas[1:] /= sample.total_weight
        alphas[n] = 1.0
        np.cumsum(w_ord * y_ord, out=values[1:])
        values[1:] /= sample.total_weighted_response
    values[n] = 1.0
    return Curve(alphas, values)


def lorenz_curve(sample: Sample) -> Curve:
    """Empirical Lorenz curve: responses accumulated in their own decreasing order.

    The result is concave, non-decreasing and lies on or above the
    diagonal; it equals the diagonal exactly when all responses coincide.
    """
    return _corner_curve(sample, order_responses_desc(sample))


def cap_curve(sample: Sample, direction: TieDirection) -> Curve:
    """Cumulative accuracy profile under one tie suborder.

    Responses are accumulated in decreasing prediction order; inside
    prediction ties they are taken best-first (``BEST``) or worst-first
    (``WORST``).  Without prediction ties both directions coincide.
    """
    return _corner_curve(sample, order_tied(sample, direction))


def cap_curve_mid(sample: Sample) -> Curve:
    """Pointwise average of the best and worst accuracy profiles.

    Defined only for equal case weights, where both profiles share the
    corner grid i/n; with unequal weights the two corner sets fall on
    different x positions and only the areas can be averaged.
    """
    w = sample.weights
    if not bool(np.all(w == w[0])):
        raise UnequalWeightsError(
            "mid curve needs equal case weights; average the best/worst areas instead"
        )
    best = cap_curve(sample, TieDirection.BEST)
    worst = cap_curve(sample, TieDirection.WORST)
    alphas = np.arange(sample.n + 1, dtype=np.float64) / sample.n
    return Curve(alphas, 0.5 * (best.values + worst.values))


def curve_areas(sample: Sample) -> CurveAreas:
    """All signed areas needed for scoring: Lorenz, best and worst profile.

    Shares the response sort between the Lorenz curve and the best
    profile's first pass; the corners and areas are bit-identical to what
    the three public curve constructors produce.
    """
    y, p = sample.responses, sample.predictions
    by_desc = np.argsort(-y, kind="stable")
    by_asc = np.argsort(y, kind="stable")
    best = by_desc[np.argsort(-p[by_desc], kind="stable")]
    worst = by_asc[np.argsort(-p[by_asc], kind="stable")]
    return CurveAreas(
        lorenz=_corner_curve(sample, by_desc).area_above_diagonal(),
        cap_best=_corner_curve(sample, best).area_above_diagonal(),
        cap_worst=_corner_curve(sample, worst).area_above_diagonal(),
    )
