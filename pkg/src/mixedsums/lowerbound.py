"""Constructive lower bound for max |F|: pick t, pick targets xi_l aligned
with the weights of the truncated main term, find k in the prescription set
and certify that the main term is large there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .charcore import DirichletCharacter, gauss_sum
from .prescribe import PrescriptionTarget, build_S, default_K0, membership, select_k
from .sums import SumSpec, approx_weights, direct_sum_at, truncated_approx

# the worst angle a term can have: pi/3 from choosing xi_l (d >= 3) plus the
# 2*pi/20 window of e(a/d)
ALIGN_COS = math.cos(math.pi / 3 + 2 * math.pi / 20)
T_GRID = [i / 100 for i in range(10, 91)]


def _dist_half(u: float) -> float:
    """Distance from u to the lattice (1/2)Z."""
    return abs(u - round(2 * u) / 2)


def choose_t(alpha: float, beta: float) -> float:
    if not beta > alpha >= 0:
        raise ValueError("need beta > alpha >= 0")
    best, best_score = None, -1.0
    for t in T_GRID:
        score = min(_dist_half((alpha + beta) * t), _dist_half((beta - alpha) * t))
        if score > best_score + 1e-12:
            best, best_score = t, score
    if best_score <= 1e-12:
        raise ValueError(f"every t in [0.1, 0.9] is degenerate for alpha={alpha}, beta={beta}")
    return best


def choose_xi(chi: DirichletCharacter, s: SumSpec, t: float, K0: int) -> PrescriptionTarget:
    """Targets xi_l in mu_d matching the phases of the main-term weights."""
    d = chi.order
    if d < 2:
        raise ValueError("principal character has no targets to choose")
    if not 0 < t < 1:
        raise ValueError("t must lie in (0, 1)")
    l, w = approx_weights(s.alpha, s.beta, t, K0)
    scale = np.abs(1.0 / (l + t))
    xi = []
    for wl, sc in zip(w, scale):
        if d == 2:
            # sign of the real part, sgn(0) = +1
            re = wl.real
            xi.append(0 if re >= -1e-12 * sc else 1)
        else:
            if abs(wl) <= 1e-12 * sc:  # arg 0 = 0
                xi.append(0)
                continue
            xi.append(round(math.atan2(wl.imag, wl.real) / (2 * math.pi) * d) % d)
    return PrescriptionTarget(K0, d, tuple(xi))


def minorant(s: SumSpec, t: float, K0: int) -> float:
    """Analytic lower bound for |main term| at any k of the prescription set.

    d >= 3: every aligned term has angle at most pi/3 + pi/10, so the sum is at
    least cos(pi/3 + pi/10) * sum |w_l|. d = 2: the terms xi_l w_l have real
    parts |Re w_l|, which gives sum |Re w_l|.
    """
    l, w = approx_weights(s.alpha, s.beta, t, K0)
    pref = math.sqrt(s.p) / (2 * math.pi)
    if s.character.order == 2:
        return pref * math.fsum(np.abs(w.real))
    return pref * ALIGN_COS * math.fsum(np.abs(w))


def tilde_lower(chi, s: SumSpec, t: float, K0: int, targets: PrescriptionTarget, k: int, tau=None) -> tuple[float, float]:
    """(|truncated main term at k|, analytic minorant); raises if the minorant fails."""
    if not membership(chi, targets)[k % chi.p]:
        raise ValueError(f"k={k} is not in the prescription set")
    value = abs(truncated_approx(s, k, t, K0, tau=tau))
    low = minorant(s, t, K0)
    if value < low * (1 - 1e-9):
        raise ArithmeticError(f"|main term| {value} below its minorant {low}")
    return value, low


def sumcos(u1: float, u2: float, c1: float, c2: float, K: int) -> float:
    """sum_{1<=l<=K} |sin(pi(u1 l + c1)) sin(pi(u2 l + c2))| / l."""
    for c in (c1, c2):
        if abs(2 * c - round(2 * c)) < 1e-12:
            raise ValueError(f"c={c} lies in (1/2)Z")
    if K < 2:
        raise ValueError("K must be >= 2")
    l = np.arange(1, K + 1, dtype=np.float64)
    a = np.sin(np.pi * np.mod(u1 * l + c1, 2.0))
    b = np.sin(np.pi * np.mod(u2 * l + c2, 2.0))
    return math.fsum(np.abs(a * b) / l)


def sumcos_profile(u1, u2, c1, c2, K: int) -> np.ndarray:
    """Partial sums of sumcos for K' = 1..K (entry K'-1)."""
    l = np.arange(1, K + 1, dtype=np.float64)
    a = np.sin(np.pi * np.mod(u1 * l + c1, 2.0))
    b = np.sin(np.pi * np.mod(u2 * l + c2, 2.0))
    return np.cumsum(np.abs(a * b) / l)


def harmonic(n: int) -> float:
    return math.fsum(1.0 / i for i in range(1, n + 1))


@dataclass(frozen=True)
class LowerBoundWitness:
    p: int
    char_index: int
    order: int
    alpha: float
    beta: float
    t: float
    K0: int
    targets: PrescriptionTarget
    S_size: int
    S_predicted: float
    k: int
    residual: float
    tilde_value: complex
    minorant: float
    F_value: complex

    @property
    def theta(self) -> float:
        return (self.k + self.t) / self.p

    @property
    def lower_ratio(self) -> float:
        """|main term| / (sqrt(p) * H_K0); H_K0 stands in for log K0, which is 0 when K0 = 1."""
        return abs(self.tilde_value) / (math.sqrt(self.p) * harmonic(self.K0))

    @property
    def final_ratio(self) -> float:
        return abs(self.F_value) / (math.sqrt(self.p) * math.log(math.log(self.p)))


def lower_bound_witness(s: SumSpec, K0: int | None = None, t: float | None = None) -> LowerBoundWitness:
    chi = s.character
    p = s.p
    if p < 17:
        raise ValueError("lower_bound_witness needs p >= 17")
    if t is None:
        t = choose_t(s.alpha, s.beta)
    if K0 is None:
        K0 = default_K0(p)
    targets = choose_xi(chi, s, t, K0)
    S = build_S(chi, targets)
    k, res = select_k(s, targets, t, S)
    tau = gauss_sum(chi)
    tilde = truncated_approx(s, k, t, K0, tau=tau)
    value, low = tilde_lower(chi, s, t, K0, targets, k, tau=tau)
    F = direct_sum_at(s, k, t)
    return LowerBoundWitness(
        p, chi.index, chi.order, s.alpha, s.beta, t, K0, targets, len(S), S.predicted, k, res, tilde, low, F
    )
