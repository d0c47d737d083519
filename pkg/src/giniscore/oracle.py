"""Independent reference implementations used for verification.

Nothing here shares curve or area code with :mod:`giniscore.curves`; the
point is to cross-check that machinery through a second, deliberately
different route:

* tie aggregation plus a straight-line accuracy profile, whose enclosed
  area must coincide with the mid tie-resolution area of the main path;
* the step-function (non-interpolated) empirical Lorenz curve via the
  empirical quantile;
* exact Lorenz curves for two analytic families, a finite discrete
  distribution and the log-normal closed form.

The standard-normal CDF is built on Cody's rational Chebyshev
approximation of the complementary error function; the quantile uses
Acklam's rational approximation polished with one Halley step against
that CDF.  Both stay well inside 1e-12 relative error down to tail
probabilities around 1e-300, without touching platform math libraries
beyond exp/log/sqrt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Sample
from .errors import BadParamsError, OutOfRangeError, UnequalWeightsError

__all__ = [
    "DiscreteDistribution",
    "AggregatedSample",
    "aggregate_ties",
    "cap_area_aggregated",
    "generalized_inverse",
    "discrete_lorenz",
    "lognormal_lorenz",
    "step_lorenz",
    "norm_cdf",
    "norm_ppf",
]


@dataclass(frozen=True, eq=False)
class DiscreteDistribution:
    """Finite distribution given by atoms ``ys`` with probabilities ``ps``."""

    ys: np.ndarray
    ps: np.ndarray

    def __post_init__(self) -> None:
        ys = np.ascontiguousarray(self.ys, dtype=np.float64)
        ps = np.ascontiguousarray(self.ps, dtype=np.float64)
        if ys.ndim != 1 or ys.shape != ps.shape or ys.size == 0:
            raise BadParamsError("atoms must be parallel non-empty 1-d arrays")
        if not bool(np.all(np.diff(ys) > 0.0)):
            raise BadParamsError("atom values must be strictly increasing")
        if not bool(np.all(ps > 0.0)):
            raise BadParamsError("atom probabilities must be positive")
        total = math.fsum(ps.tolist())
        if abs(total - 1.0) > 1e-12:
            raise BadParamsError(f"probabilities sum to {total}, not 1")
        mean = math.fsum((ps * ys).tolist())
        if mean <= 0.0:
            raise BadParamsError(f"distribution mean {mean} must be positive")
        ys.setflags(write=False)
        ps.setflags(write=False)
        object.__setattr__(self, "ys", ys)
        object.__setattr__(self, "ps", ps)
        object.__setattr__(self, "_mean", mean)

    @classmethod
    def from_atoms(cls, atoms) -> "DiscreteDistribution":
        """Build from (value, probability) pairs."""
        ys, ps = zip(*atoms)
        return cls(ys=np.asarray(ys, dtype=np.float64), ps=np.asarray(ps, dtype=np.float64))

    @property
    def atoms(self) -> list[tuple[float, float]]:
        return list(zip(self.ys.tolist(), self.ps.tolist()))

    @property
    def mean(self) -> float:
        return self._mean  # type: ignore[attr-defined]


@dataclass(frozen=True, eq=False)
class AggregatedSample:
    """One entry per distinct prediction value, predictions strictly decreasing.

    ``responses`` holds the weight-averaged response of each tie group and
    ``weights`` the group's total weight, so the total weight of the
    original sample is preserved.
    """

    responses: np.ndarray
    predictions: np.ndarray
    weights: np.ndarray


def aggregate_ties(sample: Sample) -> AggregatedSample:
    """Collapse every prediction tie group into its weighted-average record."""
    order = np.argsort(-sample.predictions, kind="stable")
    p = sample.predictions[order]
    y = sample.responses[order]
    w = sample.weights[order]
    starts = np.flatnonzero(np.r_[True, p[1:] != p[:-1]])
    ends = np.r_[starts[1:], p.size]
    k = starts.size
    y_star = np.empty(k)
    w_star = np.empty(k)
    for g, (s, e) in enumerate(zip(starts, ends)):
        group_weight = math.fsum(w[s:e].tolist())
        group_wy = math.fsum((w[s:e] * y[s:e]).tolist())
        w_star[g] = group_weight
        y_star[g] = group_wy / group_weight
    return AggregatedSample(responses=y_star, predictions=p[starts].copy(), weights=w_star)


def _kahan_add(total: float, comp: float, x: float) -> tuple[float, float]:
    y = x - comp
    t = total + y
    return t, (t - total) - y


def cap_area_aggregated(sample: Sample) -> float:
    """Signed area of the straight-line accuracy profile on the tie-aggregated sample.

    After aggregation the predictions are distinct, so connecting the corner
    set by straight lines is unambiguous.  The returned area must match the
    mid tie-resolution area of the interpolated profiles; that equivalence
    is what makes this function an oracle.
    """
    agg = aggregate_ties(sample)
    total_w = math.fsum(agg.weights.tolist())
    total_wy = math.fsum((agg.weights * agg.responses).tolist())
    k = agg.weights.size
    cw = cwc = cwy = cwyc = 0.0
    prev_a = prev_v = 0.0
    terms: list[float] = []
    for i in range(k):
        cw, cwc = _kahan_add(cw, cwc, float(agg.weights[i]))
        cwy, cwyc = _kahan_add(cwy, cwyc, float(agg.weights[i] * agg.responses[i]))
        if i == k - 1:
            a, v = 1.0, 1.0
        else:
            a, v = cw / total_w, cwy / total_wy
        terms.append((prev_v + v) * (a - prev_a))
        prev_a, prev_v = a, v
    return 0.5 * math.fsum(terms) - 0.5


def generalized_inverse(dist: DiscreteDistribution, p: float) -> float:
    """Left-continuous quantile: the smallest atom whose CDF reaches ``p``."""
    if not 0.0 < p <= 1.0:
        raise OutOfRangeError(f"p must lie in (0, 1], got {p!r}")
    cdf = np.cumsum(dist.ps)
    cdf[-1] = 1.0
    return float(dist.ys[int(np.searchsorted(cdf, p, side="left"))])


def discrete_lorenz(dist: DiscreteDistribution, alpha: float) -> float:
    """Exact upper-tail Lorenz value of a discrete distribution (step convention).

    Mean share of the atoms strictly above the (1 - alpha)-quantile; pinned
    to 0 at alpha = 0 and to 1 at alpha = 1.
    """
    if not 0.0 <= alpha <= 1.0:
        raise OutOfRangeError(f"alpha must lie in [0, 1], got {alpha!r}")
    if alpha == 0.0:
        return 0.0
    if alpha == 1.0:
        return 1.0
    cut = generalized_inverse(dist, 1.0 - alpha)
    mask = dist.ys > cut
    return math.fsum((dist.ps[mask] * dist.ys[mask]).tolist()) / dist.mean


def lognormal_lorenz(sigma: float, alpha: float) -> float:
    """Closed-form upper-tail Lorenz value of a log-normal response.

    For log Y normal with standard deviation ``sigma`` the curve does not
    depend on the location parameter; ``sigma = 0`` degenerates to the
    diagonal.
    """
    if sigma < 0.0 or not math.isfinite(sigma):
        raise OutOfRangeError(f"sigma must be >= 0, got {sigma!r}")
    if not 0.0 < alpha < 1.0:
        raise OutOfRangeError(f"alpha must lie in (0, 1), got {alpha!r}")
    return 1.0 - norm_cdf(norm_ppf(1.0 - alpha) - sigma)


def step_lorenz(sample: Sample, alpha: float) -> float:
    """Step-function empirical Lorenz value (no interpolation), unit weights only."""
    w = sample.weights
    if not bool(np.all(w == w[0])):
        raise UnequalWeightsError("step Lorenz is defined for equal case weights only")
    if not 0.0 < alpha < 1.0:
        raise OutOfRangeError(f"alpha must lie in (0, 1), got {alpha!r}")
    y_sorted = np.sort(sample.responses)
    n = y_sorted.size
    rank = math.ceil((1.0 - alpha) * n)
    cut = float(y_sorted[min(max(rank, 1), n) - 1])
    above = sample.responses[sample.responses > cut]
    return math.fsum(above.tolist()) / math.fsum(sample.responses.tolist())


# --- standard normal CDF and quantile -------------------------------------

_SQRT_TWO_PI = 2.506628274631000502415765284811
_SQRT_TWO = 1.4142135623730950488016887242097

# Cody's rational Chebyshev coefficients for erf on |z| <= 0.46875 ...
_ERF_A = (
    3.16112374387056560e00,
    1.13864154151050156e02,
    3.77485237685302021e02,
    3.20937758913846947e03,
    1.85777706184603153e-01,
)
_ERF_B = (
    2.36012909523441209e01,
    2.44024637934444173e02,
    1.28261652607737228e03,
    2.84423683343917062e03,
)
# ... for erfc on 0.46875 < z <= 4 ...
_ERFC_C = (
    5.64188496988670089e-01,
    8.88314979438837594e00,
    6.61191906371416295e01,
    2.98635138197400131e02,
    8.81952221241769090e02,
    1.71204761263407058e03,
    2.05107837782607147e03,
    1.23033935479799725e03,
    2.15311535474403846e-08,
)
_ERFC_D = (
    1.57449261107098347e01,
    1.17693950891312499e02,
    5.37181101862009858e02,
    1.62138957456669019e03,
    3.29079923573345963e03,
    4.36261909014324716e03,
    3.43936767414372164e03,
    1.23033935480374942e03,
)
# ... and for z * exp(z^2) * erfc(z) on z > 4.
_ERFC_P = (
    3.05326634961232344e-01,
    3.60344899949804439e-01,
    1.25781726111229246e-01,
    1.60837851487422766e-02,
    6.58749161529837803e-04,
    1.63153871373020978e-02,
)
_ERFC_Q = (
    2.56852019228982242e00,
    1.87295284992346047e00,
    5.27905102951428412e-01,
    6.05183413124413191e-02,
    2.33520497626869185e-03,
)
_INV_SQRT_PI = 5.6418958354775628695e-01


def _exp_neg_square(z: float) -> float:
    # exp(-z*z) with the argument split on a 1/16 grid so the squared part
    # is exact (Cody's device against argument-rounding error).
    zq = math.floor(z * 16.0) / 16.0
    return math.exp(-zq * zq) * math.exp(-(z - zq) * (z + zq))


def _erfc(z: float) -> float:
    """Complementary error function for z >= 0 (Cody's approximation)."""
    if z <= 0.46875:
        sq = z * z
        num = _ERF_A[4] * sq
        den = sq
        for i in range(3):
            num = (num + _ERF_A[i]) * sq
            den = (den + _ERF_B[i]) * sq
        return 1.0 - z * (num + _ERF_A[3]) / (den + _ERF_B[3])
    if z <= 4.0:
        num = _ERFC_C[8] * z
        den = z
        for i in range(7):
            num = (num + _ERFC_C[i]) * z
            den = (den + _ERFC_D[i]) * z
        return _exp_neg_square(z) * (num + _ERFC_C[7]) / (den + _ERFC_D[7])
    if z >= 26.65:
        return 0.0
    inv_sq = 1.0 / (z * z)
    num = _ERFC_P[5] * inv_sq
    den = inv_sq
    for i in range(4):
        num = (num + _ERFC_P[i]) * inv_sq
        den = (den + _ERFC_Q[i]) * inv_sq
    ratio = inv_sq * (num + _ERFC_P[4]) / (den + _ERFC_Q[4])
    return _exp_neg_square(z) * (_INV_SQRT_PI - ratio) / z


def norm_cdf(x: float) -> float:
    """Standard normal CDF, accurate to a few ulp over the whole double range."""
    if x <= 0.0:
        return 0.5 * _erfc(-x / _SQRT_TWO)
    return 1.0 - 0.5 * _erfc(x / _SQRT_TWO)


_PPF_A = (
    -3.969683028665376e01,
    2.209460984245205e02,
    -2.759285104469687e02,
    1.383577518672690e02,
    -3.066479806614716e01,
    2.506628277459239e00,
)
_PPF_B = (
    -5.447609879822406e01,
    1.615858368580409e02,
    -1.556989798598866e02,
    6.680131188771972e01,
    -1.328068155288572e01,
)
_PPF_C = (
    -7.784894002430293e-03,
    -3.223964580411365e-01,
    -2.400758277161838e00,
    -2.549732539343734e00,
    4.374664141464968e00,
    2.938163982698783e00,
)
_PPF_D = (
    7.784695709041462e-03,
    3.224671290700398e-01,
    2.445134137142996e00,
    3.754408661907416e00,
)


def _ppf_tail(q: float) -> float:
    c, d = _PPF_C, _PPF_D
    num = ((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]
    den = (((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0
    return num / den


def _ppf_lower(p: float) -> float:
    # Quantile for p in (0, 0.5]: Acklam's rational estimate, then one
    # Halley step.  With x <= 0 the CDF is evaluated as a small tail value
    # with full relative precision, so the step is well conditioned.
    if p < 0.02425:
        x = _ppf_tail(math.sqrt(-2.0 * math.log(p)))
    else:
        a, b = _PPF_A, _PPF_B
        q = p - 0.5
        r = q * q
        num = ((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]
        den = ((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0
        x = q * num / den
    if x > -37.0:
        err = norm_cdf(x) - p
        u = err * _SQRT_TWO_PI * math.exp(0.5 * x * x)
        x -= u / (1.0 + 0.5 * x * u)
    return x


def norm_ppf(p: float) -> float:
    """Standard normal quantile (inverse CDF)."""
    if not 0.0 < p < 1.0:
        raise OutOfRangeError(f"p must lie in (0, 1), got {p!r}")
    if p > 0.5:
        # 1 - p is exact for p in [0.5, 1], so the reflection loses nothing
        return -_ppf_lower(1.0 - p)
    return _ppf_lower(p)
