"""Sweep definitions and row producers shared by the CLI and the acceptance tests."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .charcore import (
    DirichletCharacter as DirichletCharacterFactory,
    ModulusError,
    build_modulus,
    character_of_order,
    enumerate_characters,
    is_prime,
    legendre,
    primes_between,
)
from .lowerbound import lower_bound_witness
from .maxsearch import DEFAULT_EPS, certified_max
from .prescribe import MIN_PREDICTED_SIZE, PrescriptionError, default_K0
from .randmodels import random_poly_max
from .sums import SumSpec

STANDARD_PRIMES = (499, 1009, 4999, 10007)
STANDARD_ORDERS = (2, 3, 4)
STANDARD_ALPHA_BETA = ((0.0, 1.0), (0.0, 0.5), (0.25, 1.0), (1.0, 2.0))

# (u1, u2, c1, c2) parameter sets for the log-growth check of sumcos. The
# minimum of sumcos(K)/log K over K in [1e2, 1e5] is noted for each.
SUMCOS_CORPUS = {
    "irrational": (math.sqrt(2) - 1, math.sqrt(3) - 1, 0.25, 1 / 3),  # 0.402
    "rational": (1 / 3, 2 / 5, 0.1, 0.3),  # 0.461
    "equal-slopes": (math.sqrt(5) - 2, math.sqrt(5) - 2, 0.2, 0.45),  # 0.447
    "zero-slope": (0.0, math.pi - 3, 0.25, 0.4),  # 0.492
}
SUMCOS_FLOOR = 0.01


def substitute_prime(p: int, d: int) -> int:
    """Smallest prime q >= p that has a character of order d and a prescription
    set of predicted size >= MIN_PREDICTED_SIZE at the default K0."""
    q = max(p, 17)
    while True:
        if is_prime(q) and (q - 1) % d == 0 and q / d ** (2 * default_K0(q) + 1) >= MIN_PREDICTED_SIZE:
            return q
        q += 1


def standard_tasks(primes=STANDARD_PRIMES, orders=STANDARD_ORDERS) -> list[tuple[int, int]]:
    """(p, d) pairs: Legendre at each listed prime, and for d >= 3 the nearest
    usable prime at or above each listed one (deduplicated, in order)."""
    out = []
    for d in orders:
        seen = []
        for p in primes:
            q = p if d == 2 else substitute_prime(p, d)
            if q not in seen:
                seen.append(q)
        out += [(q, d) for q in seen]
    return out


def select_primes(spec: str, per_decade: int | None = None, seed: int = 0) -> list[int]:
    """'499,1009' lists primes; 'lo:hi' takes every prime in the range, or
    ``per_decade`` of them per decade chosen with the seed."""
    spec = str(spec).strip()
    if ":" in spec:
        lo, hi = (int(x) for x in spec.split(":"))
        ps = primes_between(max(lo, 3), hi)
        if per_decade:
            rng = np.random.default_rng(seed)
            picked = []
            dec = 10 ** int(math.log10(max(lo, 3)))
            while dec <= hi:
                band = [q for q in ps if dec <= q < 10 * dec]
                if band:
                    idx = sorted(rng.choice(len(band), min(per_decade, len(band)), replace=False))
                    picked += [band[i] for i in idx]
                dec *= 10
            ps = picked
        return ps
    ps = [int(x) for x in spec.split(",") if x.strip()]
    for q in ps:
        if not is_prime(q) or q < 3:
            raise ValueError(f"{q} is not an odd prime")
    return ps


def select_characters(mod, policy: str, seed: int = 0):
    """Policies: all | legendre | sample-N | order-D."""
    policy = policy.strip().lower()
    if policy == "all":
        return enumerate_characters(mod, non_principal_only=True)
    if policy == "legendre":
        return [legendre(mod)]
    if policy.startswith("sample-"):
        n = int(policy.split("-", 1)[1])
        chars = enumerate_characters(mod, non_principal_only=True)
        rng = np.random.default_rng([seed, mod.p])
        idx = sorted(rng.choice(len(chars), min(n, len(chars)), replace=False))
        return [chars[i] for i in idx]
    if policy.startswith("order-"):
        d = int(policy.split("-", 1)[1])
        if (mod.p - 1) % d:
            return []
        return [character_of_order(mod, d)]
    raise ValueError(f"unknown character policy {policy!r}")


def parse_alpha_beta(spec) -> list[tuple[float, float]]:
    """'0:1,0.25:1' -> [(0, 1), (0.25, 1)]."""
    if isinstance(spec, (list, tuple)):
        pairs = [tuple(map(float, ab)) for ab in spec]
    else:
        pairs = []
        for item in str(spec).split(","):
            a, b = item.split(":")
            pairs.append((float(a), float(b)))
    for a, b in pairs:
        if not b > a >= 0:
            raise ValueError(f"need beta > alpha >= 0, got ({a}, {b})")
    return pairs


def fmt(x) -> str:
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        return f"{x:.9g}"
    return str(x)


def to_csv(rows: list[dict], columns: list[str], comment: str | None = None) -> str:
    buf = io.StringIO()
    if comment:
        buf.write(f"# {comment}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([fmt(r.get(c, "")) for c in columns])
    return buf.getvalue()


MAX_COLUMNS = ["p", "c", "d", "lo", "hi", "argmax", "lo_over_sqrtp_lnlnp", "hi_over_sqrtp_lnp"]


def max_row(chi, alpha: float, beta: float, eps: float = DEFAULT_EPS) -> dict:
    s = SumSpec(chi, alpha, beta)
    cm = certified_max(s, eps)
    p = chi.p
    return {
        "p": p,
        "c": chi.index,
        "d": chi.order,
        "lo": cm.lo,
        "hi": cm.hi,
        "argmax": cm.argmax_j,
        "lo_over_sqrtp_lnlnp": cm.lo / (math.sqrt(p) * math.log(math.log(p))),
        "hi_over_sqrtp_lnp": cm.hi / (math.sqrt(p) * math.log(p)),
    }


WITNESS_COLUMNS = [
    "p", "c", "d", "alpha", "beta", "t", "K0", "S_size", "S_predicted", "k",
    "residual", "tilde_abs", "minorant", "lower_ratio", "F_abs", "final_ratio", "error",
]


def witness_row(chi, alpha: float, beta: float) -> dict:
    row = {"p": chi.p, "c": chi.index, "d": chi.order, "alpha": float(alpha), "beta": float(beta), "error": ""}
    try:
        w = lower_bound_witness(SumSpec(chi, alpha, beta))
    except (PrescriptionError, ValueError) as ex:
        row["error"] = str(ex).replace(",", ";")
        return row
    row.update(
        t=w.t, K0=w.K0, S_size=w.S_size, S_predicted=w.S_predicted, k=w.k, residual=w.residual,
        tilde_abs=abs(w.tilde_value), minorant=w.minorant, lower_ratio=w.lower_ratio,
        F_abs=abs(w.F_value), final_ratio=w.final_ratio,
    )
    return row


def standard_witness_rows() -> list[dict]:
    rows = []
    for p, d in standard_tasks():
        chi = legendre(build_modulus(p)) if d == 2 else character_of_order(build_modulus(p), d)
        for a, b in STANDARD_ALPHA_BETA:
            rows.append(witness_row(chi, a, b))
    return rows


def standard_max_rows(eps: float = DEFAULT_EPS) -> list[dict]:
    rows = []
    for p, d in standard_tasks():
        chi = legendre(build_modulus(p)) if d == 2 else character_of_order(build_modulus(p), d)
        for a, b in STANDARD_ALPHA_BETA:
            r = max_row(chi, a, b, eps)
            r.update(alpha=a, beta=b)
            rows.append(r)
    return rows


RANDOM_COLUMNS = ["kind", "N", "trial", "max_lo", "max_hi", "norm_lo", "norm_hi"]


def random_rows(kind: str, N: int, trials: int, seed: int, eps: float = DEFAULT_EPS) -> list[dict]:
    from .randmodels import normaliser

    st = random_poly_max(kind, N, trials, seed, eps)
    z = normaliser(N)
    return [
        {"kind": kind, "N": N, "trial": i, "max_lo": float(lo * z), "max_hi": float(hi * z),
         "norm_lo": float(lo), "norm_hi": float(hi)}
        for i, (lo, hi) in enumerate(zip(st.lo, st.hi))
    ]


def prescription_sweep(n: int = 20, seed: int = 2026, pmax: int = 1009, dmax: int = 10, K0max: int = 2):
    """n random (chi, target) configurations with p <= pmax, order d <= dmax,
    K0 <= K0max and predicted |S| >= MIN_PREDICTED_SIZE. Deterministic in seed."""
    from .prescribe import PrescriptionTarget

    rng = np.random.default_rng(seed)
    primes = primes_between(101, pmax)
    out = []
    while len(out) < n:
        K0 = len(out) % (K0max + 1)  # cycle through K0 = 0, 1, 2, ...
        p = int(rng.choice(primes))
        ds = [
            d for d in range(2, dmax + 1)
            if (p - 1) % d == 0 and p / d ** (2 * K0 + 1) >= MIN_PREDICTED_SIZE
        ]
        if K0 == 0 and len(ds) > 1:
            ds = ds[1:]  # K0 = 0 is where the larger orders fit; keep d = 2 for K0 >= 1
        if not ds:
            continue
        d = int(rng.choice(ds))
        mod = build_modulus(p)
        # a random character of exact order d
        gens = [c for c in range(1, p - 1) if (p - 1) // math.gcd(c, p - 1) == d]
        chi = DirichletCharacterFactory(mod, int(rng.choice(gens)))
        out.append((chi, PrescriptionTarget.random(K0, d, rng)))
    return out
