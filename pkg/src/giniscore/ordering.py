"""Deterministic orderings of a sample by predictions, with tie suborders.

Prediction ties carry no ranking information, so the curve machinery needs
the two extreme ways of resolving them: responses descending inside every
tie (the most favorable reading) or ascending (the least favorable one).
Both are produced by two stable sorts; only prediction ranks matter, never
their values.
"""

from __future__ import annotations

import enum

import numpy as np

from .core import Sample

__all__ = ["TieDirection", "order_tied", "order_responses_desc"]


class TieDirection(enum.Enum):
    """Suborder used for records whose predictions are exactly equal."""

    BEST = "best"
    WORST = "worst"


def order_responses_desc(sample: Sample) -> np.ndarray:
    """Permutation sorting responses non-increasingly, ties by original index."""
    return np.argsort(-sample.responses, kind="stable")


def order_tied(sample: Sample, direction: TieDirection) -> np.ndarray:
    """Permutation sorting predictions non-increasingly with a response suborder.

    Within each maximal run of equal predictions the responses are
    non-increasing (``BEST``) or non-decreasing (``WORST``); records equal
    in both columns keep their original relative order.  Implemented as a
    response sort followed by a stable prediction sort, so the first pass
    survives inside prediction ties.
    """
    if direction is TieDirection.BEST:
        by_response = np.argsort(-sample.responses, kind="stable")
    elif direction is TieDirection.WORST:
        by_response = np.argsort(sample.responses, kind="stable")
    else:
        raise TypeError(f"direction must be a TieDirection, got {direction!r}")
    by_prediction = np.argsort(-sample.predictions[by_response], kind="stable")
    return by_response[by_prediction]
