"""Rank-based model validation under tied predictions and case weights.

The package builds modified empirical Lorenz curves and best/worst/mid
cumulative accuracy profiles from weighted samples and reads the Gini
score off their areas, with independent oracles for verification in
:mod:`giniscore.oracle` and seeded generators in :mod:`giniscore.datagen`.
"""

from . import datagen, errors, oracle
from .core import Sample, ValidationReport, WeightedObservation, build_sample, validate
from .curves import Curve, CurveAreas, cap_curve, cap_curve_mid, curve_areas, lorenz_curve
from .gini import GiniReport, ModelComparison, compare, gini_score
from .ordering import TieDirection, order_responses_desc, order_tied

__version__ = "0.1.0"

__all__ = [
    "Sample",
    "WeightedObservation",
    "ValidationReport",
    "build_sample",
    "validate",
    "TieDirection",
    "order_tied",
    "order_responses_desc",
    "Curve",
    "CurveAreas",
    "lorenz_curve",
    "cap_curve",
    "cap_curve_mid",
    "curve_areas",
    "GiniReport",
    "ModelComparison",
    "gini_score",
    "compare",
    "datagen",
    "errors",
    "oracle",
    "__version__",
]
