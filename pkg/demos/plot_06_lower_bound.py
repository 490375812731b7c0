"""
Building a large value
======================

The lower bound max |F| >> sqrt(p) log log p is constructive: pick t, align
the targets with the phases of the truncated main term, find a k in the
prescription set with a small residual, and evaluate F at (k + t)/p.
"""

from mixedsums import SumSpec, build_modulus, certified_max, character_of_order, lower_bound_witness

for p, d in [(1009, 2), (4999, 3), (10009, 4)]:
    chi = character_of_order(build_modulus(p), d)
    for alpha, beta in [(0, 1), (0.25, 1)]:
        s = SumSpec(chi, alpha, beta)
        w = lower_bound_witness(s)
        cm = certified_max(s)
        print(
            f"p={p} d={d} ({alpha},{beta}): t={w.t} K0={w.K0} |S|={w.S_size} k={w.k}"
            f"  |main term|={abs(w.tilde_value):.2f} >= {w.minorant:.2f}"
            f"  |F|={abs(w.F_value):.2f} <= max {cm.hi:.2f}"
        )
