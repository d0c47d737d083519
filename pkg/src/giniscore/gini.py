"""Gini score computation and multi-model comparison."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Sample, validate
from .curves import CurveAreas, curve_areas
from .errors import DegenerateResponsesError, GiniScoreError, LengthMismatchError

__all__ = ["GiniReport", "ModelComparison", "gini_score", "compare"]


@dataclass(frozen=True)
class GiniReport:
    """Gini score of one prediction column plus the areas behind it.

    ``gini`` is the mid tie-resolution profile area divided by the Lorenz
    area, a dimensionless ratio in [-1, 1]: 1 for a perfect ranking, 0 for
    an uninformative one, negative for an inverted one.
    """

    gini: float
    areas: CurveAreas
    n: int
    tie_group_count: int
    weighted: bool


@dataclass(frozen=True)
class ModelComparison:
    """Per-model reports on a shared response/weight basis, best score first."""

    entries: tuple[tuple[str, GiniReport], ...]


def gini_score(sample: Sample) -> GiniReport:
    """Score the sample's risk ranking.

    Reads the ratio of the mid accuracy-profile area to the Lorenz area.
    Raises :class:`DegenerateResponsesError` when all responses are equal,
    in which case the Lorenz area vanishes and no ranking can be assessed.
    """
    if bool(np.all(sample.responses == sample.responses[0])):
        raise DegenerateResponsesError(
            "all responses are identical; the score denominator is zero"
        )
    areas = curve_areas(sample)
    report = validate(sample)
    return GiniReport(
        gini=areas.cap_mid / areas.lorenz,
        areas=areas,
        n=sample.n,
        tie_group_count=report.tie_group_count,
        weighted=not bool(np.all(sample.weights == 1.0)),
    )


def compare(
    models: Sequence[tuple[str, object]],
    responses,
    weights=None,
    *,
    allow_negative: bool = False,
) -> ModelComparison:
    """Score several prediction columns against shared responses and weights.

    Every model is evaluated on the identical (response, weight) vectors, so
    the scores are directly comparable.  Entries are sorted by score
    descending, ties broken by model name.
    """
    responses = np.asarray(responses, dtype=np.float64)
    n = responses.size
    if weights is not None:
        weights = np.asarray(weights, dtype=np.float64)
        if weights.size != n:
            raise LengthMismatchError(
                f"weights have length {weights.size}, responses {n}"
            )
    entries: list[tuple[str, GiniReport]] = []
    for name, predictions in models:
        predictions = np.asarray(predictions, dtype=np.float64)
        if predictions.size != n:
            raise LengthMismatchError(
                f"model {name!r}: predictions have length {predictions.size}, responses {n}"
            )
        try:
            sample = Sample.from_arrays(
                responses, predictions, weights, allow_negative=allow_negative
            )
            entries.append((str(name), gini_score(sample)))
        except GiniScoreError as exc:
            raise type(exc)(f"model {name!r}: {exc}") from exc
    entries.sort(key=lambda item: (-item[1].gini, item[0]))
    return ModelComparison(entries=tuple(entries))
