"""
Checking Weil's bound exhaustively
==================================

For a polynomial P with m distinct roots that is not a d-th power,
|sum_k chi(P(k))| <= (m - 1) sqrt(p). A literal enumeration over all
characters and polynomials is far too large even for p <= 61, but an affine
change of variable sends every root set to {0}, {0, 1} or {0, 1, r}, and all
character tuples on a fixed root set come out of one multidimensional FFT.
"""

import time

from mixedsums import FactoredPoly, build_modulus, character_of_order, weil_check, weil_exhaustive

chi = character_of_order(build_modulus(13), 3)
P = FactoredPoly.from_roots([0, 1, 5], [1, 2, 1])
value, bound, holds = weil_check(chi, P)
print(f"one polynomial at p=13: |sum| = {value:.4f}, bound {bound:.4f}, holds: {holds}")

t0 = time.perf_counter()
r = weil_exhaustive(pmax=61, max_roots=3)
print(f"p <= 61: {r['checked']:,} sums, {r['violations']} violations, worst |sum|/bound = {r['worst_ratio']:.6f}"
      f"  ({time.perf_counter() - t0:.1f} s)")
print("worst case (p, roots, character exponents):", r["worst_case"])
