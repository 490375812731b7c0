"""
Mixed character sums on a grid
==============================

F(theta) = sum over alpha p < n <= beta p of chi(n) e(n theta) is a
trigonometric polynomial. Evaluating it at M equally spaced points is one
FFT; the points (k + t)/p used throughout the lower-bound argument are a
length-p chirp transform.
"""

import os

import matplotlib

matplotlib.use("svg")
import matplotlib.pyplot as plt
import numpy as np

from mixedsums import SumSpec, build_modulus, direct_sum, grid_evaluate, legendre
from mixedsums.sums import kt_profile, truncated_profile

out = os.environ.get("MIXEDSUMS_DEMO_OUT", "demo_output")
os.makedirs(out, exist_ok=True)

p = 499
s = SumSpec(legendre(build_modulus(p)), 0.0, 1.0)  # the Fekete polynomial

# %%
# A fine power-of-two grid, checked at a few points against direct summation.
g = grid_evaluate(s, t=0.0, M=8192)
for j in (0, 1000, 5000):
    print(f"theta={g.thetas[j]:.5f}  grid={g.values[j]:.6f}  direct={direct_sum(s, g.thetas[j]):.6f}")

# %%
# At theta = (k + t)/p the sum is close to a short weighted combination of
# conj(chi)(k - l), |l| <= K. Compare the two over all k for K = 3 and K = 30.
t = 0.25
exact = kt_profile(s, t)
fig, ax = plt.subplots(figsize=(7, 3))
ax.plot(np.abs(exact), lw=0.7, label="|F((k+t)/p)|")
for K in (3, 30):
    ax.plot(np.abs(exact - truncated_profile(s, t, K)), lw=0.5, label=f"residual, K={K}")
ax.set_xlabel("k")
ax.legend(fontsize=7)
fig.tight_layout()
fig.savefig(os.path.join(out, "mixed_sums.svg"), metadata={"Date": None})
print("wrote", os.path.join(out, "mixed_sums.svg"))
