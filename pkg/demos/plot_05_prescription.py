"""
Prescribing character values
============================

The set S collects residues k at which conj(chi)(k - l) is pinned to chosen
targets for every |l| <= K0. Its size follows a simple law, and a weight
W(k) built from geometric sums over the d-th roots of unity is exactly
d^(2K0+1) times the indicator of S.
"""

import numpy as np

from mixedsums import PrescriptionTarget, build_S, build_modulus, character_of_order, membership, weight_W_all

rng = np.random.default_rng(5)
for p, d, K0 in [(1009, 2, 1), (1009, 3, 1), (1033, 4, 1), (997, 2, 2)]:
    chi = character_of_order(build_modulus(p), d)
    tg = PrescriptionTarget.random(K0, d, rng)
    S = build_S(chi, tg)
    W = weight_W_all(chi, tg)
    k = np.arange(K0 + 1, p - K0)
    identity = all(W[k] == d ** (2 * K0 + 1) * membership(chi, tg)[k])
    print(f"p={p} d={d} K0={K0}: |S|={len(S):>4}, predicted {S.predicted:7.1f}, ratio {S.ratio:.2f}, W identity holds: {identity}")
