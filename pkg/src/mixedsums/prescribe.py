"""Prescription sets: residues k at which chi(k - l) is pinned (up to a small
window of d-th roots of unity) to chosen targets xi_l for every |l| <= K0.

Membership is tested directly from character exponents. The weight W(k), a
product of geometric sums over mu_d, is computed separately from its
definition; that the two agree is checked in the tests rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .charcore import DirichletCharacter, RootOfUnity
from .sums import SumSpec, residual_profile

MIN_PREDICTED_SIZE = 16


class PrescriptionError(RuntimeError):
    """S is empty or predicted to be too small to mean anything."""

    def __init__(self, msg, predicted=None):
        super().__init__(msg)
        self.predicted = predicted


def default_K0(p: int) -> int:
    """floor(log p / (log log p)^2), but at least 1."""
    if p < 17:
        raise ValueError("default_K0 needs p >= 17")
    return max(1, math.floor(math.log(p) / math.log(math.log(p)) ** 2))


def window(d: int) -> int:
    """Largest |a| allowed in e(a/d): |a| <= d/20 with a an integer."""
    return d // 20


@dataclass(frozen=True)
class PrescriptionTarget:
    K0: int
    d: int
    xi: tuple[int, ...]  # exponents: xi_l = e(xi[l + K0] / d)

    def __post_init__(self):
        xi = tuple(int(x) % self.d for x in self.xi)
        if len(xi) != 2 * self.K0 + 1:
            raise ValueError(f"need {2 * self.K0 + 1} targets, got {len(xi)}")
        object.__setattr__(self, "xi", xi)

    @classmethod
    def from_roots(cls, K0: int, roots) -> "PrescriptionTarget":
        roots = list(roots)
        d = math.lcm(*(r.den for r in roots))
        return cls(K0, d, tuple(r.num * (d // r.den) for r in roots))

    @classmethod
    def constant(cls, K0: int, d: int, exponent: int = 0) -> "PrescriptionTarget":
        return cls(K0, d, (exponent,) * (2 * K0 + 1))

    @classmethod
    def random(cls, K0: int, d: int, rng) -> "PrescriptionTarget":
        return cls(K0, d, tuple(int(x) for x in rng.integers(0, d, 2 * K0 + 1)))

    @property
    def shifts(self) -> np.ndarray:
        return np.arange(-self.K0, self.K0 + 1)

    @property
    def window(self) -> int:
        return window(self.d)

    def root(self, l: int) -> RootOfUnity:
        return RootOfUnity(self.xi[l + self.K0], self.d)

    def predicted_size(self, p: int) -> float:
        return p * ((2 * self.window + 1) / self.d) ** (2 * self.K0 + 1)


@dataclass(frozen=True)
class PrescriptionSet:
    members: np.ndarray
    predicted: float
    target: PrescriptionTarget
    p: int = field(default=0)

    def __len__(self):
        return len(self.members)

    def __contains__(self, k):
        i = np.searchsorted(self.members, k)
        return i < len(self.members) and self.members[i] == k

    @property
    def ratio(self) -> float:
        return len(self.members) / self.predicted


def _check(chi: DirichletCharacter, target: PrescriptionTarget):
    if chi.is_principal:
        raise ValueError("prescription needs a non-principal character")
    if target.d != chi.order:
        raise ValueError(f"targets live in mu_{target.d} but chi has order {chi.order}")


def membership(chi: DirichletCharacter, target: PrescriptionTarget) -> np.ndarray:
    """Boolean mask over k = 0..p-1 of the defining predicate of S."""
    _check(chi, target)
    p, d, A = chi.p, target.d, target.window
    k = np.arange(p)
    ok = np.ones(p, dtype=bool)
    for l, x in zip(target.shifts, target.xi):
        ex = chi.exponents[(k - l) % p]
        diff = (ex - x) % d
        ok &= (ex >= 0) & ((diff <= A) | (diff >= d - A))
    return ok


def weight_W_all(chi: DirichletCharacter, target: PrescriptionTarget) -> np.ndarray:
    """W(k) for every k, each inner double sum evaluated from its definition."""
    _check(chi, target)
    p, d, A = chi.p, target.d, target.window
    k = np.arange(p)
    j = np.arange(d)
    W = np.ones(p, dtype=object)
    for l, x in zip(target.shifts, target.xi):
        ex = chi.exponents[(k - l) % p]
        unit = ex >= 0
        inner = np.zeros(p, dtype=np.complex128)
        for a in range(-A, A + 1):
            z = np.mod(np.where(unit, -ex, 0) + x + a, d)  # conj(chi)(k-l) * xi_l * e(a/d)
            terms = np.exp(2j * np.pi * np.outer(z, j) / d)
            # z = 0 in C: only the j = 0 term (0^0 = 1) survives
            terms[~unit, 1:] = 0.0
            inner += terms.sum(axis=1)
        rounded = np.rint(inner.real)
        if np.abs(inner - rounded).max() > 1e-6:
            raise ArithmeticError("inner sum of W(k) is not an integer")
        W = W * rounded.astype(np.int64).astype(object)
    return W


def weight_W(chi: DirichletCharacter, target: PrescriptionTarget, k: int) -> int:
    return int(weight_W_all(chi, target)[int(k) % chi.p])


def build_S(chi: DirichletCharacter, target: PrescriptionTarget, min_predicted: float = MIN_PREDICTED_SIZE) -> PrescriptionSet:
    _check(chi, target)
    predicted = target.predicted_size(chi.p)
    if predicted < min_predicted:
        raise PrescriptionError(
            f"predicted |S| = {predicted:.3g} < {min_predicted} for p={chi.p}, d={target.d}, K0={target.K0}",
            predicted,
        )
    members = np.nonzero(membership(chi, target))[0]
    if len(members) == 0:
        raise PrescriptionError(f"S is empty (predicted {predicted:.3g})", predicted)
    return PrescriptionSet(members, predicted, target, chi.p)


def sum_W_diagnostic(chi: DirichletCharacter, target: PrescriptionTarget) -> tuple[int, float]:
    """(sum_k W(k) exactly, main term p (2 floor(d/20) + 1)^(2 K0 + 1))."""
    measured = int(sum(weight_W_all(chi, target)))
    predicted = chi.p * (2 * target.window + 1) ** (2 * target.K0 + 1)
    return measured, float(predicted)


def select_k(s: SumSpec, target: PrescriptionTarget, t: float, S: PrescriptionSet | None = None) -> tuple[int, float]:
    """The k in S where |F((k+t)/p) - truncated main term| is smallest."""
    if S is None:
        S = build_S(s.character, target)
    res = residual_profile(s, t, target.K0)[S.members]
    i = int(np.argmin(res))
    return int(S.members[i]), float(res[i])


def offdiag_diagnostic(chi: DirichletCharacter, target: PrescriptionTarget, l1: int, l2: int) -> tuple[float, float]:
    """|sum_{K0<k<p-K0} W(k) conj(chi)(k-l1) chi(k-l2)| and the scale K0 sqrt(p) (d log d)^(2K0+1)."""
    p, K0, d = chi.p, target.K0, target.d
    if l1 == l2:
        raise ValueError("off-diagonal diagnostic needs l1 != l2")
    for l in (l1, l2):
        if not K0 < abs(l) < p - K0:
            raise ValueError(f"need K0 < |l| < p - K0, got l={l}")
    W = weight_W_all(chi, target).astype(np.float64)
    k = np.arange(K0 + 1, p - K0)
    v = chi.values
    terms = W[k] * np.conj(v[(k - l1) % p]) * v[(k - l2) % p]
    lhs = abs(complex(math.fsum(terms.real), math.fsum(terms.imag)))
    return lhs, K0 * math.sqrt(p) * (d * math.log(d)) ** (2 * K0 + 1)
