"""
Mahler measure of Fekete polynomials
====================================

The geometric mean of |F| over the circle, divided by sqrt(p), settles
slowly near 0.74 at these sizes. The L^q norms interpolate between it and
the L^2 norm given by Parseval.
"""

import math

from mixedsums import SumSpec, build_modulus, legendre, lq_norm, mahler_measure

for p in (1009, 10007, 20011):
    s = SumSpec(legendre(build_modulus(p)), 0, 1)
    norms = "  ".join(f"L^{q}={lq_norm(s, q) / math.sqrt(p):.3f}" for q in (0.5, 1, 2, 4))
    print(f"p={p:>5}  M0/sqrt p = {mahler_measure(s) / math.sqrt(p):.4f}  {norms}")
