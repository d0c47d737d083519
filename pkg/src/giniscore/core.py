"""Domain types and validated sample construction.

A :class:`Sample` bundles three parallel columns -- responses, predictions
and strictly positive case weights -- and caches their exactly rounded
totals.  All containers are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import (
    EmptyOrSingletonError,
    LengthMismatchError,
    NegativeResponseError,
    NonFiniteValueError,
    NonPositiveWeightError,
    ZeroTotalResponseError,
)

__all__ = [
    "WeightedObservation",
    "Sample",
    "ValidationReport",
    "build_sample",
    "validate",
]

FLAG_CONSTANT_PREDICTIONS = "all-predictions-constant"
FLAG_CONSTANT_RESPONSES = "all-responses-constant"


class WeightedObservation(NamedTuple):
    """One record: observed response, model prediction, positive case weight."""

    response: float
    prediction: float
    weight: float


def _column(values, name: str) -> np.ndarray:
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise LengthMismatchError(f"{name} must be one-dimensional, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Sample:
    """Immutable collection of weighted observations with cached totals.

    The totals are computed with exact (error-free) float summation, so
    they are invariant under permutation of the records.  Use
    :func:`build_sample` or :meth:`Sample.from_arrays` to get input
    validation; constructing ``Sample`` directly only checks shapes.
    """

    responses: np.ndarray
    predictions: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "responses", _column(self.responses, "responses"))
        object.__setattr__(self, "predictions", _column(self.predictions, "predictions"))
        object.__setattr__(self, "weights", _column(self.weights, "weights"))
        n = self.responses.size
        if self.predictions.size != n or self.weights.size != n:
            raise LengthMismatchError(
                f"column lengths differ: {n} responses, "
                f"{self.predictions.size} predictions, {self.weights.size} weights"
            )
        object.__setattr__(self, "_total_weight", math.fsum(self.weights.tolist()))
        object.__setattr__(
            self,
            "_total_weighted_response",
            math.fsum((self.weights * self.responses).tolist()),
        )

    @classmethod
    def from_arrays(
        cls,
        responses,
        predictions,
        weights=None,
        *,
        allow_negative: bool = False,
    ) -> "Sample":
        """Validate three parallel columns and build a sample.

        ``weights=None`` gives every record unit weight, which reproduces
        the unweighted scoring rules exactly.
        """
        responses = np.asarray(responses, dtype=np.float64)
        predictions = np.asarray(predictions, dtype=np.float64)
        if weights is None:
            weights = np.ones_like(responses)
        else:
            weights = np.asarray(weights, dtype=np.float64)
        if not (responses.shape == predictions.shape == weights.shape):
            raise LengthMismatchError(
                f"column lengths differ: {responses.shape} responses, "
                f"{predictions.shape} predictions, {weights.shape} weights"
            )

        bad = ~(np.isfinite(responses) & np.isfinite(predictions) & np.isfinite(weights))
        if bad.any():
            raise NonFiniteValueError(f"non-finite value at record {int(np.flatnonzero(bad)[0])}")
        nonpos = weights <= 0.0
        if nonpos.any():
            i = int(np.flatnonzero(nonpos)[0])
            raise NonPositiveWeightError(f"weight {weights[i]} at record {i} is not > 0")
        if not allow_negative:
            neg = responses < 0.0
            if neg.any():
                i = int(np.flatnonzero(neg)[0])
                raise NegativeResponseError(
                    f"response {responses[i]} at record {i} is negative "
                    "(pass allow_negative=True to accept)"
                )
        if responses.size < 2:
            raise EmptyOrSingletonError(f"need at least 2 records, got {responses.size}")

        sample = cls(responses, predictions, weights)
        if sample.total_weighted_response <= 0.0:
            raise ZeroTotalResponseError(
                f"weighted response total {sample.total_weighted_response} is not > 0"
            )
        return sample

    @property
    def n(self) -> int:
        return self.responses.size

    @property
    def total_weight(self) -> float:
        return self._total_weight  # type: ignore[attr-defined]

    @property
    def total_weighted_response(self) -> float:
        return self._total_weighted_response  # type: ignore[attr-defined]

    @property
    def total_response(self) -> float:
        """Plain (unweighted) response total; computed lazily, cached."""
        cached = getattr(self, "_total_response", None)
        if cached is None:
            cached = math.fsum(self.responses.tolist())
            object.__setattr__(self, "_total_response", cached)
        return cached

    def __len__(self) -> int:
        return self.responses.size

    def __getitem__(self, i: int) -> WeightedObservation:
        return WeightedObservation(
            float(self.responses[i]), float(self.predictions[i]), float(self.weights[i])
        )

    def __iter__(self) -> Iterator[WeightedObservation]:
        for i in range(self.n):
            yield self[i]

    def with_predictions(self, predictions) -> "Sample":
        """Same responses and weights, different prediction column."""
        predictions = np.asarray(predictions, dtype=np.float64)
        if predictions.shape != self.responses.shape:
            raise LengthMismatchError(
                f"prediction column has length {predictions.size}, expected {self.n}"
            )
        if not np.isfinite(predictions).all():
            raise NonFiniteValueError("non-finite prediction")
        return Sample(self.responses, predictions, self.weights)


def build_sample(
    records: Iterable[Sequence[float] | WeightedObservation],
    *,
    allow_negative: bool = False,
) -> Sample:
    """Build a validated :class:`Sample` from (response, prediction[, weight]) records.

    A missing or ``None`` weight defaults to 1.  Record order is preserved.
    """
    responses: list[float] = []
    predictions: list[float] = []
    weights: list[float] = []
    for i, rec in enumerate(records):
        if len(rec) == 2:
            r, p = rec
            w = 1.0
        elif len(rec) == 3:
            r, p, w = rec
            w = 1.0 if w is None else w
        else:
            raise LengthMismatchError(
                f"record {i} has {len(rec)} fields, expected 2 or 3"
            )
        responses.append(float(r))
        predictions.append(float(p))
        weights.append(float(w))
    return Sample.from_arrays(
        responses, predictions, weights, allow_negative=allow_negative
    )


@dataclass(frozen=True)
class ValidationReport:
    """Tie structure of the prediction column plus warning flags."""

    n: int
    tie_group_count: int
    max_tie_size: int
    flags: tuple[str, ...]


def validate(sample: Sample) -> ValidationReport:
    """Report prediction tie groups (exact float equality) and warning flags."""
    _, counts = np.unique(sample.predictions, return_counts=True)
    flags: list[str] = []
    if counts.size == 1:
        flags.append(FLAG_CONSTANT_PREDICTIONS)
    if bool(np.all(sample.responses == sample.responses[0])):
        flags.append(FLAG_CONSTANT_RESPONSES)
    return ValidationReport(
        n=sample.n,
        tie_group_count=int(counts.size),
        max_tie_size=int(counts.max()),
        flags=tuple(flags),
    )
