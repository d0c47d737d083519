"""
Case weights: scoring rates that come with exposures
====================================================

Insurance-style responses are rates per unit of exposure, so every record
carries a positive case weight.  The curves then live on the cumulative
*weight* share instead of the record count, and the score works on the
scaled quantities: ranking must be judged on the rate level, not on the
weight-inflated totals, otherwise a big contract with a mediocre rate
looks riskier than a small one with a terrible rate.
"""

import numpy as np

from giniscore import Sample, curve_areas, gini_score, lorenz_curve

# %% A two-record portfolio: a small risky contract and a large safe one.
# The model ranks them the wrong way round, and the weighted score says so.
sample = Sample.from_arrays(
    responses=[2.0, 1.0], predictions=[1.0, 2.0], weights=[1.0, 3.0]
)
curve = lorenz_curve(sample)
print("weighted Lorenz corners:", list(zip(curve.alphas, curve.values)))
areas = curve_areas(sample)
print(f"areas: lorenz {areas.lorenz:.4f}, mid profile {areas.cap_mid:.4f}")
print(f"score: {gini_score(sample).gini:+.4f}  (perfectly inverted ranking)\n")

# %% Weights are a volume measure, so a record of weight 3 is the same as
# three identical unit-weight records:
rng = np.random.default_rng(5)
y = rng.exponential(1.0, 12)
p = np.round(rng.normal(size=12), 1)
w = rng.uniform(0.5, 2.0, 12)
whole = Sample.from_arrays(y, p, w)

split = Sample.from_arrays(
    np.repeat(y, 3), np.repeat(p, 3), np.repeat(w / 3.0, 3)
)
print("one record of weight w vs three copies of weight w/3:")
print(f"  {gini_score(whole).gini:.15f}")
print(f"  {gini_score(split).gini:.15f}\n")

# %% Rescaling every weight by a common constant changes nothing either --
# for a constant weight the curves reduce to the unit-weight ones exactly.
unit = Sample.from_arrays(y, p)
for c in (0.25, 1.0, 40.0):
    constant = Sample.from_arrays(y, p, np.full(12, c))
    print(f"all weights = {c:5}: score {gini_score(constant).gini:.15f}"
          f"  (unit: {gini_score(unit).gini:.15f})")
