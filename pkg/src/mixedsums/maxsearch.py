"""Certified sup-norm brackets, L^q norms and Mahler measure on grids.

The bracket rests on Bernstein's inequality: a trigonometric polynomial whose
frequencies span a band of width N satisfies ``sup|F'| <= 2*pi*N*sup|F|`` (after
translating the band to [0, N], which does not change |F|). Every theta is
within 1/(2M) of a grid point, so the grid maximum loses at most a factor
``1 - pi*N/M``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fft import next_pow2
from .sums import CoefficientVector, GridTooLarge, SumSpec, evaluate_grid, grid_evaluate, MAX_GRID

DEFAULT_EPS = 1.0 / 16


@dataclass(frozen=True)
class CertifiedMax:
    lo: float
    hi: float
    argmax_j: int
    M: int
    N: int

    @property
    def argmax_theta(self) -> float:
        return self.argmax_j / self.M

    @property
    def gap(self) -> float:
        return self.hi / self.lo if self.lo > 0 else math.inf

    def contains(self, x: float, rtol: float = 1e-12) -> bool:
        return self.lo * (1 - rtol) <= x <= self.hi * (1 + rtol)


def _as_coeffs(obj) -> CoefficientVector:
    if isinstance(obj, SumSpec):
        return obj.coefficients()
    if isinstance(obj, CoefficientVector):
        return obj
    return CoefficientVector(0, np.asarray(obj, dtype=np.complex128))


def _recentred(cv: CoefficientVector) -> CoefficientVector:
    # |F| is invariant under multiplying by e(-offset*theta)
    return CoefficientVector(0, cv.coeffs)


def bracket_from_grid(cv: CoefficientVector, M: int) -> CertifiedMax:
    N = cv.span
    if M <= math.pi * N:
        raise ValueError(f"grid M={M} too coarse for band width N={N}: need M > pi*N")
    absv = evaluate_grid(_recentred(cv), M).abs
    j = int(np.argmax(absv))  # first occurrence: ties go to the smallest index
    lo = float(absv[j])
    hi = lo / (1.0 - math.pi * N / M)
    return CertifiedMax(lo, hi, j, M, N)


def grid_size_for(N: int, eps: float) -> int:
    return next_pow2(max(2, math.ceil(math.pi * max(N, 1) / eps)))


def certified_max(s, eps: float = DEFAULT_EPS, max_grid: int = MAX_GRID) -> CertifiedMax:
    """Bracket [lo, hi] around sup_theta |F| with hi/lo <= 1/(1-eps).

    ``s`` may be a SumSpec, a CoefficientVector or a plain coefficient array
    (frequencies 0..len-1).
    """
    if not 0 < eps < 0.5:
        raise ValueError("eps must lie in (0, 1/2)")
    cv = _as_coeffs(s)
    M = grid_size_for(cv.span, eps)
    if M > max_grid:
        raise GridTooLarge(f"certified_max needs M={M} > cap {max_grid}")
    return bracket_from_grid(cv, M)


def refine(prev: CertifiedMax, s) -> CertifiedMax:
    """Double the grid and intersect with the previous bracket."""
    cv = _as_coeffs(s)
    nxt = bracket_from_grid(cv, 2 * prev.M)
    if nxt.lo >= prev.lo:
        lo, j, M = nxt.lo, nxt.argmax_j, nxt.M
    else:  # cannot happen on nested grids beyond rounding; keep the old witness
        lo, j, M = prev.lo, 2 * prev.argmax_j, nxt.M
    return CertifiedMax(lo, min(prev.hi, nxt.hi), j, M, nxt.N)


def max_decomposed(s: SumSpec, t: float) -> tuple[int, float]:
    """max over k of |F((k+t)/p)|: the maximising k and the value."""
    if not 0 < t < 1:
        raise ValueError("t must lie in (0, 1)")
    v = np.abs(grid_evaluate(s, t, s.p, kernel="chirp").values)
    k = int(np.argmax(v))
    return k, float(v[k])


def _check_grid(cv: CoefficientVector, M: int):
    if M & (M - 1) or M < 1:
        raise ValueError(f"M must be a power of two, got {M}")
    if M <= 2 * cv.span:
        raise ValueError(f"M={M} must exceed twice the band width {cv.span}")


def lq_norm(s, q: float, M: int | None = None) -> float:
    """((1/M) sum_j |F(j/M)|^q)^(1/q); exact for even integer q when M > q*N/2."""
    if not q > 0:
        raise ValueError("q must be positive; use mahler_measure for q -> 0")
    cv = _recentred(_as_coeffs(s))
    if M is None:
        M = next_pow2(max(4 * cv.span + 1, 2))
    _check_grid(cv, M)
    a = evaluate_grid(cv, M).abs
    top = a.max()
    if top == 0:
        return 0.0
    # scale out the maximum so large q does not overflow
    return float(top * np.mean((a / top) ** q) ** (1.0 / q))


class QuadratureError(ArithmeticError):
    pass


def mahler_measure(s, M: int | None = None, floor: float = 1e-300) -> float:
    """exp of the grid mean of log|F|; points with |F| < floor are dropped.

    Raises QuadratureError if more than 1% of the grid has to be dropped.
    """
    cv = _recentred(_as_coeffs(s))
    if M is None:
        M = next_pow2(max(8 * cv.span + 1, 2))
    _check_grid(cv, M)
    a = evaluate_grid(cv, M).abs
    good = a >= floor
    dropped = M - int(good.sum())
    if dropped > 0.01 * M:
        raise QuadratureError(f"{dropped} of {M} grid points vanish; log-quadrature untrustworthy")
    return float(np.exp(np.mean(np.log(a[good]))))
