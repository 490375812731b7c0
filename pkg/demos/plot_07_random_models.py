"""
Random polynomials for comparison
=================================

With independent random signs the maximum of a degree-N polynomial is about
sqrt(N log N). Random multiplicative coefficients behave similarly at this
scale. Trials are keyed by (seed, trial), so reruns reproduce exactly.
"""

import os

import matplotlib

matplotlib.use("svg")
import matplotlib.pyplot as plt

from mixedsums import KINDS, random_poly_max

out = os.environ.get("MIXEDSUMS_DEMO_OUT", "demo_output")
os.makedirs(out, exist_ok=True)

N, trials = 2048, 20
fig, ax = plt.subplots(figsize=(6, 3))
for i, kind in enumerate(KINDS):
    st = random_poly_max(kind, N, trials, seed=1)
    print(f"{kind:>15}: median max/sqrt(N log N) = {st.median:.3f}  (range {st.min:.3f}..{st.max:.3f})")
    ax.plot([i] * trials, st.lo, "o", ms=3, alpha=0.6)
ax.axhline(1.0, color="k", lw=0.5)
ax.set_xticks(range(len(KINDS)), KINDS, fontsize=7)
ax.set_ylabel("max / sqrt(N log N)")
fig.tight_layout()
fig.savefig(os.path.join(out, "random_models.svg"), metadata={"Date": None})
