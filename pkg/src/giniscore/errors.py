"""Exception types raised on invalid inputs.

Everything derives from :class:`GiniScoreError` so callers can catch one
base class; the CLI maps these onto exit codes.
"""

from __future__ import annotations


class GiniScoreError(ValueError):
    """Base class for all input and domain errors raised by this package."""


class EmptyOrSingletonError(GiniScoreError):
    """Fewer than two observations; curves and scores need n >= 2."""


class NonPositiveWeightError(GiniScoreError):
    """A case weight is zero or negative."""


class NonFiniteValueError(GiniScoreError):
    """A response, prediction or weight is NaN or infinite."""


class NegativeResponseError(GiniScoreError):
    """A response is negative and negative responses were not allowed."""


class ZeroTotalResponseError(GiniScoreError):
    """The weighted response total is not strictly positive."""


class UnequalWeightsError(GiniScoreError):
    """Operation requires all case weights to be equal."""


class DegenerateResponsesError(GiniScoreError):
    """All responses are identical, so the score denominator vanishes."""


class LengthMismatchError(GiniScoreError):
    """Parallel input vectors have different lengths."""


class OutOfRangeError(GiniScoreError):
    """A probability or curve argument lies outside its admissible interval."""


class BadParamsError(GiniScoreError):
    """Invalid parameters passed to a data generator."""


class InputFormatError(GiniScoreError):
    """A CSV cell or column could not be parsed (CLI ingestion)."""
