"""Random trigonometric polynomials used as a baseline: i.i.d. Rademacher
coefficients (Q_N) and random completely multiplicative coefficients (P_N).

Randomness comes from a counter-based generator (Philox) keyed by
(seed, trial), and coefficient n always takes draw number n of its stream, so
results do not depend on evaluation order or on how trials are scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .charcore import primes_between
from .maxsearch import DEFAULT_EPS, certified_max
from .sums import CoefficientVector

KINDS = ("rademacher-iid", "steinhaus-iid", "rmf-rademacher", "rmf-steinhaus")


def stream(seed: int, trial: int) -> np.random.Generator:
    key = np.array([seed & 0xFFFFFFFFFFFFFFFF, trial & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


@dataclass(frozen=True)
class RandomMultiplicativeFn:
    kind: str  # "rademacher" | "steinhaus"
    N: int
    values: np.ndarray  # values[n] = f(n) for n = 0..N (values[0] unused, set to 0)

    def __call__(self, n: int) -> complex:
        return complex(self.values[n])


def sample_rmf(kind: str, N: int, seed: int, trial: int = 0) -> RandomMultiplicativeFn:
    """Completely multiplicative f on [1, N] with independent values at primes."""
    if kind not in ("rademacher", "steinhaus"):
        raise ValueError(f"unknown kind {kind!r}")
    if N < 1:
        raise ValueError("N must be >= 1")
    g = stream(seed, trial)
    if kind == "rademacher":
        draws = g.integers(0, 2, N + 1).astype(np.float64) / 2.0  # phase 0 or 1/2
    else:
        draws = g.random(N + 1)
    # phase of f(n) = sum over prime powers q^e | n of phase(f(q))
    phase = np.zeros(N + 1)
    for q in primes_between(2, N):
        qe = q
        while qe <= N:
            phase[qe::qe] += draws[q]
            qe *= q
    vals = np.exp(2j * np.pi * np.mod(phase, 1.0))
    if kind == "rademacher":
        vals = np.rint(vals.real) + 0j
    vals[0] = 0
    return RandomMultiplicativeFn(kind, N, vals)


def sample_coefficients(kind: str, N: int, seed: int, trial: int) -> np.ndarray:
    """Coefficients c_1..c_N of one random polynomial."""
    if kind == "rademacher-iid":
        return np.where(stream(seed, trial).integers(0, 2, N + 1)[1:] == 0, 1.0, -1.0).astype(np.complex128)
    if kind == "steinhaus-iid":
        return np.exp(2j * np.pi * stream(seed, trial).random(N + 1)[1:])
    if kind in ("rmf-rademacher", "rmf-steinhaus"):
        return sample_rmf(kind[4:], N, seed, trial).values[1:]
    raise ValueError(f"unknown kind {kind!r}; choose from {KINDS}")


def normaliser(N: int) -> float:
    """sqrt(N log N), with log N floored at 1 so tiny N stay finite."""
    return math.sqrt(N * max(1.0, math.log(N)))


@dataclass(frozen=True)
class RandomMaxStats:
    kind: str
    N: int
    seed: int
    lo: np.ndarray  # per-trial certified lower bracket, normalised
    hi: np.ndarray

    @property
    def trials(self) -> int:
        return len(self.lo)

    @property
    def min(self) -> float:
        return float(self.lo.min())

    @property
    def median(self) -> float:
        return float(np.median(self.lo))

    @property
    def max(self) -> float:
        return float(self.lo.max())

    def reference_curves(self) -> dict:
        """Known almost-sure growth shapes at this N, on the same normalisation."""
        N = self.N
        if N < 16:
            return {}
        L, LL = math.log(N), math.log(math.log(N))
        z = normaliser(N)
        return {
            "salem_zygmund": 1.0,
            "bnr_lower": math.sqrt(N) * (L / LL) ** (1 / 6) / z,
            "bnr_upper": math.sqrt(N) * math.exp(3 * math.sqrt(L * LL)) / z,
        }


def random_poly_max(kind: str, N: int, trials: int, seed: int = 0, eps: float = DEFAULT_EPS) -> RandomMaxStats:
    if N < 1 or trials < 1:
        raise ValueError("need N >= 1 and trials >= 1")
    z = normaliser(N)
    lo = np.empty(trials)
    hi = np.empty(trials)
    for i in range(trials):
        cm = certified_max(CoefficientVector(1, sample_coefficients(kind, N, seed, i)), eps)
        lo[i], hi[i] = cm.lo / z, cm.hi / z
    return RandomMaxStats(kind, N, seed, lo, hi)
