"""Complete character sums of factored polynomials, and Weil's bound.

Polynomials are products of linear factors, P(x) = prod (x - r_i)^{j_i}, so
chi(P(k)) can be read off exactly as a sum of exponents.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .charcore import DirichletCharacter, primes_between, build_modulus, enumerate_characters


@dataclass(frozen=True)
class FactoredPoly:
    factors: tuple[tuple[int, int], ...]  # (root r, multiplicity j)

    def __post_init__(self):
        fs = tuple((int(r), int(j)) for r, j in self.factors)
        if any(j < 1 for _, j in fs):
            raise ValueError("multiplicities must be >= 1")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def from_roots(cls, roots, mults=None):
        roots = list(roots)
        mults = [1] * len(roots) if mults is None else list(mults)
        return cls(tuple(zip(roots, mults)))

    def reduced(self, p: int) -> "FactoredPoly":
        """Merge roots that coincide mod p."""
        acc: dict[int, int] = {}
        for r, j in self.factors:
            acc[r % p] = acc.get(r % p, 0) + j
        return FactoredPoly(tuple(sorted(acc.items())))

    def distinct_roots(self, p: int) -> int:
        return len(self.reduced(p).factors)

    def shifted(self, c: int) -> "FactoredPoly":
        """P(x + c)."""
        return FactoredPoly(tuple((r - c, j) for r, j in self.factors))

    def __call__(self, x: int, p: int) -> int:
        out = 1
        for r, j in self.factors:
            out = out * pow(x - r, j, p) % p
        return out


def is_dth_power(P: FactoredPoly, d: int, p: int | None = None) -> bool:
    fs = P.reduced(p).factors if p is not None else P.factors
    return all(j % d == 0 for _, j in fs)


def _exponent_sum(chi: DirichletCharacter, P: FactoredPoly) -> np.ndarray:
    """For k = 0..p-1: exponent of chi(P(k)) mod d, or -1 where P(k) = 0."""
    p, d = chi.p, chi.order
    k = np.arange(p, dtype=np.int64)
    ex = np.zeros(p, dtype=np.int64)
    zero = np.zeros(p, dtype=bool)
    for r, j in P.factors:
        e1 = chi.exponents[(k - r) % p]
        zero |= e1 < 0
        ex += j * np.where(e1 < 0, 0, e1)
    ex %= d
    ex[zero] = -1
    return ex


def poly_char_sum(chi: DirichletCharacter, P: FactoredPoly) -> complex:
    """sum_{k mod p} chi(P(k)), summed by bucketing exponents."""
    d = chi.order
    ex = _exponent_sum(chi, P)
    counts = np.bincount(ex[ex >= 0], minlength=d).astype(float)
    ang = 2.0 * np.pi * np.arange(d) / d
    return complex(math.fsum(counts * np.cos(ang)), math.fsum(counts * np.sin(ang)))


def weil_check(chi: DirichletCharacter, P: FactoredPoly, slack: float = 1e-6) -> tuple[float, float, bool]:
    """(|sum chi(P(k))|, (m-1) sqrt(p), bound holds)."""
    p, d = chi.p, chi.order
    if chi.is_principal:
        raise ValueError("Weil's bound needs a non-principal character")
    if is_dth_power(P, d, p):
        raise ValueError(f"P is a {d}-th power mod {p}; Weil's bound does not apply")
    lhs = abs(poly_char_sum(chi, P))
    rhs = (P.distinct_roots(p) - 1) * math.sqrt(p)
    return lhs, rhs, lhs <= rhs + slack


def weil_polys(p: int, d: int, max_roots: int = 3, fix_first_root: bool = True):
    """Every factored P with <= max_roots distinct roots in [0, p), multiplicities in [1, d-1].

    With ``fix_first_root`` the smallest root is pinned to 0, which loses
    nothing because the sum is invariant under x -> x + c.
    """
    for m in range(1, max_roots + 1):
        if fix_first_root:
            root_sets = (((0,) + rest) for rest in itertools.combinations(range(1, p), m - 1))
        else:
            root_sets = itertools.combinations(range(p), m)
        for roots in root_sets:
            for mults in itertools.product(range(1, d), repeat=m):
                yield FactoredPoly(tuple(zip(roots, mults)))


def weil_exhaustive_literal(pmax: int, max_roots: int = 3, fix_first_root: bool = False) -> dict:
    """weil_check over every prime 3 <= p <= pmax, non-principal chi and P from weil_polys.

    The number of pairs grows like p^(max_roots+1) * d^max_roots, so this is
    only practical for small pmax; :func:`weil_exhaustive` covers the same
    sums for larger p.
    """
    checked = violations = 0
    worst = 0.0
    for p in primes_between(3, pmax):
        mod = build_modulus(p)
        for chi in enumerate_characters(mod, non_principal_only=True):
            for P in weil_polys(p, chi.order, max_roots, fix_first_root):
                lhs, rhs, ok = weil_check(chi, P)
                checked += 1
                violations += not ok
                if rhs > 0:
                    worst = max(worst, lhs / rhs)
    return {"checked": checked, "violations": violations, "worst_ratio": worst}


def _tuple_sums(mod, roots) -> np.ndarray:
    """|sum_k prod_i psi_i(k - r_i)| for every tuple of characters (psi_i), as an array
    indexed by the character indices (c_1, ..., c_m) in [0, p-2]^m.

    Built as the m-dimensional DFT of the joint histogram of discrete logs.
    """
    p = mod.p
    k = np.arange(p, dtype=np.int64)
    logs = [mod.dlog[(k - r) % p] for r in roots]
    ok = np.all([lg >= 0 for lg in logs], axis=0)
    n = p - 1
    flat = np.zeros(ok.sum(), dtype=np.int64)
    for lg in logs:
        flat = flat * n + lg[ok]
    hist = np.bincount(flat, minlength=n ** len(roots)).reshape((n,) * len(roots))
    return np.abs(np.fft.fftn(hist))


def weil_exhaustive(pmax: int = 61, max_roots: int = 3, slack: float = 1e-6) -> dict:
    """Weil's bound over all primes 3 <= p <= pmax, all non-principal chi, all P
    with <= max_roots distinct roots and multiplicities 1..d-1.

    chi(P(k)) = prod_i chi^{j_i}(k - r_i), and (chi, j_i) ranges over every
    tuple of non-principal characters psi_i = chi^{j_i}. Translating and
    rescaling k maps any root set onto {0}, {0, 1} or {0, 1, r}, changing the
    sum only by a unimodular factor. So checking every character tuple on
    those normalised root sets is the same as checking every (chi, P) pair.
    """
    if max_roots > 3:
        raise ValueError("max_roots > 3 is not supported (histogram size (p-1)^m)")
    checked = violations = 0
    worst = 0.0
    worst_case = None
    for p in primes_between(3, pmax):
        mod = build_modulus(p)
        root_sets = [(0,)]
        if max_roots >= 2:
            root_sets.append((0, 1))
        if max_roots >= 3:
            root_sets += [(0, 1, r) for r in range(2, p)]
        for roots in root_sets:
            m = len(roots)
            S = _tuple_sums(mod, roots)
            nonprincipal = S[(slice(1, None),) * m]
            bound = (m - 1) * math.sqrt(p)
            checked += nonprincipal.size
            violations += int((nonprincipal > bound + slack).sum())
            if m > 1:
                r = float(nonprincipal.max()) / bound
                if r > worst:
                    idx = np.unravel_index(np.argmax(nonprincipal), nonprincipal.shape)
                    worst, worst_case = r, (p, roots, tuple(int(i) + 1 for i in idx))
    return {"checked": checked, "violations": violations, "worst_ratio": worst, "worst_case": worst_case}
