"""
Lorenz curves: exact shapes and their empirical estimates
=========================================================

The Lorenz curve answers "what share of the total response sits in the
top-alpha share of the population?".  For a couple of distributions that
curve is known in closed form, which makes them good yardsticks for the
empirical, linearly interpolated curve the scoring machinery uses.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from giniscore import lorenz_curve
from giniscore.datagen import THREE_ATOM_DISTRIBUTION, sample_discrete, sample_lognormal
from giniscore.oracle import discrete_lorenz, lognormal_lorenz

fig, axes = plt.subplots(1, 2, figsize=(11, 5))

# %% Log-normal responses: the closed form is 1 - Phi(Phi^{-1}(1 - a) - sigma).
grid = np.linspace(0.001, 0.999, 400)
axes[0].plot(grid, [lognormal_lorenz(1.0, a) for a in grid], "k", lw=2, label="exact, sigma=1")
for n, color in ((10, "tab:red"), (30, "tab:orange")):
    curve = lorenz_curve(sample_lognormal(n, sigma=1.0, seed=42))
    area = curve.area_above_diagonal()
    axes[0].plot(curve.alphas, curve.values, color=color, marker="o", ms=3,
                 label=f"empirical n={n} (area {area:.3f})")
axes[0].plot([0, 1], [0, 1], "k:", lw=1)
axes[0].set_title("log-normal")

# %% Discrete responses: the exact curve is a step function; the empirical
# modified curve interpolates its corner set linearly, so it never falls
# below the diagonal and encloses a convex area.
axes[1].step(grid, [discrete_lorenz(THREE_ATOM_DISTRIBUTION, a) for a in grid],
             where="post", color="k", lw=2, label="exact (step)")
for n, color in ((10, "tab:red"), (30, "tab:orange")):
    curve = lorenz_curve(sample_discrete(n, seed=7))
    axes[1].plot(curve.alphas, curve.values, color=color, marker="o", ms=3,
                 label=f"interpolated n={n}")
sample = sample_discrete(8, exact_proportions=True)
curve = lorenz_curve(sample)
axes[1].plot(curve.alphas, curve.values, "tab:blue", lw=2,
             label="n=8 exact proportions")
axes[1].plot([0, 1], [0, 1], "k:", lw=1)
axes[1].set_title("three-atom discrete")

for ax in axes:
    ax.set_xlabel("share of population (by largest response)")
    ax.set_ylabel("share of total response")
    ax.legend(loc="lower right", fontsize=8)

fig.tight_layout()
fig.savefig("lorenz_curves.png", dpi=120)
print("wrote lorenz_curves.png")

# The n=8 exact-proportion sample reproduces the true breakpoints exactly:
print("corner at alpha=1/8:", curve.evaluate(0.125), "(exact 5/16 =", 5 / 16, ")")
print("corner at alpha=5/8:", curve.evaluate(0.625), "(exact 13/16 =", 13 / 16, ")")
