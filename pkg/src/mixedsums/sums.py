"""Evaluation of the incomplete mixed character sum

    F(theta) = sum_{alpha*p < n <= beta*p} chi(n) e(n*theta)

directly, on equispaced grids, and through the truncated Gauss-sum expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .charcore import DirichletCharacter, gauss_sum
from .fft import chirp_dft, cyclic_convolve, fft_pow2, fold, is_pow2

# largest grid we are willing to allocate (complex128, so 1 GiB)
MAX_GRID = 1 << 26


class GridTooLarge(MemoryError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def e(x):
    """e(x) = exp(2 pi i x), elementwise."""
    return np.exp(2j * np.pi * np.asarray(x, dtype=float))


@dataclass(frozen=True)
class SumSpec:
    character: DirichletCharacter
    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha >= 0 and self.beta > self.alpha):
            raise ValueError(f"need beta > alpha >= 0, got alpha={self.alpha}, beta={self.beta}")
        if self.character.is_principal:
            raise ValueError("principal character: the sum is only studied for non-principal chi")
        if self.n_last < self.n_first:
            raise ValueError(f"empty range ({self.alpha}p, {self.beta}p] for p={self.p}")

    @property
    def p(self) -> int:
        return self.character.p

    @property
    def n_first(self) -> int:
        return math.floor(_frac(self.alpha) * self.p) + 1

    @property
    def n_last(self) -> int:
        return math.floor(_frac(self.beta) * self.p)

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(self.n_first, self.n_last + 1, dtype=np.int64)

    def coefficients(self) -> "CoefficientVector":
        n = self.frequencies
        c = np.asarray(self.character.values)[n % self.p]
        return CoefficientVector(self.n_first, c, math.ceil(_frac(self.beta) * self.p))


@dataclass(frozen=True)
class CoefficientVector:
    """Coefficients c_n for n = offset .. offset+len-1 of sum c_n e(n theta)."""

    offset: int
    coeffs: np.ndarray
    degree: int | None = None

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.complex128)
        object.__setattr__(self, "coeffs", c)
        top = self.offset + max(len(c) - 1, 0)
        if self.degree is None:
            object.__setattr__(self, "degree", top)
        elif self.degree < top:
            raise ValueError("degree bound below the largest frequency present")

    def __len__(self):
        return len(self.coeffs)

    @property
    def span(self) -> int:
        """Width of the frequency band; the degree after translating it to start at 0."""
        return max(len(self.coeffs) - 1, 0)

    def __call__(self, theta) -> np.ndarray:
        """Direct evaluation at one or more theta (no compensation; test/oracle use)."""
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        n = self.offset + np.arange(len(self.coeffs))
        ph = np.mod(np.outer(theta, n), 1.0)
        return np.exp(2j * np.pi * ph) @ self.coeffs


@dataclass(frozen=True)
class GridEvaluation:
    """values[j] = F(j/M + shift)."""

    M: int
    values: np.ndarray
    degree: int
    shift: float = 0.0

    @property
    def thetas(self) -> np.ndarray:
        return np.arange(self.M) / self.M + self.shift

    @property
    def abs(self) -> np.ndarray:
        return np.abs(self.values)


def direct_sum(s: SumSpec, theta: float) -> complex:
    """F(theta) straight from the definition, with fsum accumulation."""
    n = s.frequencies
    ex = s.character.exponents[n % s.p]
    d = s.character.order
    keep = ex >= 0
    ph = np.mod(ex[keep] / d + np.mod(n[keep] * float(theta), 1.0), 1.0)
    ang = 2.0 * np.pi * ph
    return complex(math.fsum(np.cos(ang)), math.fsum(np.sin(ang)))


def direct_sum_at(s: SumSpec, k: int, t: float) -> complex:
    """F((k+t)/p), with n*k reduced mod p in integers before forming phases."""
    p = s.p
    n = s.frequencies
    ex = s.character.exponents[n % p]
    d = s.character.order
    keep = ex >= 0
    n, ex = n[keep], ex[keep]
    ph = np.mod(ex / d + ((n * k) % p) / p + np.mod(n * t / p, 1.0), 1.0)
    ang = 2.0 * np.pi * ph
    return complex(math.fsum(np.cos(ang)), math.fsum(np.sin(ang)))


def evaluate_grid(cv: CoefficientVector, M: int, shift: float = 0.0, kernel: str = "radix2") -> GridEvaluation:
    """Evaluate sum c_n e(n theta) at theta = j/M + shift, j = 0..M-1.

    ``kernel="radix2"`` requires M to be a power of two; ``kernel="chirp"``
    accepts any M.  The coefficient band is translated to start at 0 before
    transforming and folded mod M if it is wider than the grid, so the result
    is exact at every grid point either way.
    """
    M = int(M)
    if M < 1:
        raise ValueError("grid size must be positive")
    if M > MAX_GRID:
        raise GridTooLarge(f"grid size {M} exceeds cap {MAX_GRID}")
    if kernel == "radix2" and not is_pow2(M):
        raise ValueError(f"radix2 kernel needs a power-of-two grid, got M={M}; use kernel='chirp'")
    if kernel not in ("radix2", "chirp"):
        raise ValueError(f"unknown kernel {kernel!r}")
    n = cv.offset + np.arange(len(cv.coeffs))
    a = cv.coeffs
    if shift:
        a = a * np.exp(2j * np.pi * np.mod(n * float(shift), 1.0))
    a = fold(a, M)
    v = fft_pow2(a, 1) if kernel == "radix2" else chirp_dft(a, 1)
    j = np.arange(M, dtype=np.int64)
    v = v * np.exp(2j * np.pi * ((cv.offset * j) % M) / M)
    return GridEvaluation(M, v, cv.degree, float(shift))


def grid_evaluate(s: SumSpec, t: float, M: int, kernel: str = "radix2") -> GridEvaluation:
    """F(j/M + t/p) for j = 0..M-1."""
    if not 0 <= t < 1:
        raise ValueError("twist t must lie in [0, 1)")
    return evaluate_grid(s.coefficients(), M, shift=t / s.p, kernel=kernel)


def kt_profile(s: SumSpec, t: float) -> np.ndarray:
    """F((k+t)/p) for k = 0..p-1, as an exact length-p chirp transform."""
    return grid_evaluate(s, t, s.p, kernel="chirp").values


def _check_t(t):
    if not 0 < t < 1:
        raise ValueError(f"t must lie strictly inside (0, 1), got {t}")


def approx_weights(alpha: float, beta: float, t: float, K: int) -> tuple[np.ndarray, np.ndarray]:
    """Shifts l = -K..K and weights (e(beta(l+t)) - e(alpha(l+t))) / (l+t)."""
    l = np.arange(-K, K + 1)
    u = l + t
    w = (e(np.mod(beta * u, 1.0)) - e(np.mod(alpha * u, 1.0))) / u
    return l, w


def truncated_approx(
    s: SumSpec, k: int, t: float, K: int, tau: complex | None = None, alpha_phase: bool = False
) -> complex:
    """Main term tau(chi)/(2 pi i) * sum_{|l|<=K} w_l conj(chi)(k-l).

    The unimodular factor e(alpha*k) is only applied when ``alpha_phase`` is
    set: without it the main term converges to F((k+t)/p) as K grows; with it
    that only happens when alpha*k is an integer. Moduli are identical.
    """
    _check_t(t)
    if K < 1:
        raise ValueError("truncation radius K must be >= 1")
    chi = s.character
    if tau is None:
        tau = gauss_sum(chi)
    l, w = approx_weights(s.alpha, s.beta, t, K)
    cbar = np.conj(chi.values)[(k - l) % s.p]
    inner = complex(np.sum(w * cbar))
    out = tau / (2j * np.pi) * inner
    if alpha_phase:
        out *= complex(e(np.mod(s.alpha * k, 1.0)))
    return out


def truncated_profile(
    s: SumSpec, t: float, K: int, tau: complex | None = None, alpha_phase: bool = False
) -> np.ndarray:
    """truncated_approx for every k = 0..p-1 at once."""
    _check_t(t)
    if K < 1:
        raise ValueError("truncation radius K must be >= 1")
    p = s.p
    chi = s.character
    if tau is None:
        tau = gauss_sum(chi)
    l, w = approx_weights(s.alpha, s.beta, t, K)
    cbar = np.conj(chi.values)
    k = np.arange(p)
    if len(l) <= 64:
        inner = np.zeros(p, dtype=np.complex128)
        for li, wi in zip(l, w):
            inner += wi * cbar[(k - li) % p]
    else:
        wf = np.zeros(p, dtype=np.complex128)
        np.add.at(wf, l % p, w)
        inner = cyclic_convolve(wf, cbar)
    out = tau / (2j * np.pi) * inner
    if alpha_phase:
        out = out * e(np.mod(s.alpha * k, 1.0))
    return out


def residual_profile(s: SumSpec, t: float, K: int) -> np.ndarray:
    """|F((k+t)/p) - truncated_approx(k, t, K)| for k = 0..p-1."""
    return np.abs(kt_profile(s, t) - truncated_profile(s, t, K))
