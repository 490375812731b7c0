"""
A certified maximum
===================

Sampling |F| on M points only gives a lower bound for its maximum. For a
polynomial whose frequencies span N, Bernstein's inequality turns the grid
maximum into an upper bound as well: max |F| <= grid max / (1 - pi N / M).
"""

import math

from mixedsums import SumSpec, build_modulus, certified_max, legendre
from mixedsums.maxsearch import refine

for p in (499, 1009, 4999, 10007):
    s = SumSpec(legendre(build_modulus(p)), 0.0, 1.0)
    cm = certified_max(s)
    print(
        f"p={p:>5}  M={cm.M:>7}  max|F| in [{cm.lo:9.3f}, {cm.hi:9.3f}]"
        f"  hi/(sqrt p log p) = {cm.hi / (math.sqrt(p) * math.log(p)):.3f}"
        f"  lo/(sqrt p loglog p) = {cm.lo / (math.sqrt(p) * math.log(math.log(p))):.3f}"
    )

# %%
# Doubling the grid tightens the bracket; neither end ever moves outward.
s = SumSpec(legendre(build_modulus(1009)), 0.25, 1.0)
cm = certified_max(s, eps=0.4)
for _ in range(4):
    print(f"M={cm.M:>7}  hi/lo={cm.gap:.4f}")
    cm = refine(cm, s)
