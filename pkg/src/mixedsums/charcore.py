"""Exact arithmetic for Dirichlet characters modulo a prime.

Character values are kept as exponents of a root of unity so that every
algebraic identity (multiplicativity, orthogonality) can be checked without
rounding. Conversion to floating complex numbers only happens when a sum is
formed, and those sums go through :func:`math.fsum`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

# dlog tables are O(p) memory; refuse anything larger than this by default.
MAX_MODULUS = 1 << 24


class ModulusError(ValueError):
    pass


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization. Fine for n below 2**48 or so."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi] (simple sieve)."""
    if hi < 2:
        return []
    sieve = np.ones(hi + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, math.isqrt(hi) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    return [int(q) for q in np.nonzero(sieve)[0] if q >= lo]


def smallest_primitive_root(p: int, factors: dict[int, int] | None = None) -> int:
    if factors is None:
        factors = factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    if p == 2:
        return 1
    raise ModulusError(f"no primitive root found mod {p}")


@dataclass(frozen=True)
class RootOfUnity:
    """The number e(num/den), stored by its exponent."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 1:
            raise ValueError("denominator must be positive")
        object.__setattr__(self, "num", self.num % self.den)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        den = math.lcm(self.den, other.den)
        return RootOfUnity(self.num * (den // self.den) + other.num * (den // other.den), den)

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity(-self.num, self.den)

    def __pow__(self, j: int) -> "RootOfUnity":
        return RootOfUnity(self.num * j, self.den)

    def __complex__(self) -> complex:
        ang = 2.0 * math.pi * self.num / self.den
        return complex(math.cos(ang), math.sin(ang))

    @property
    def angle(self) -> float:
        """Argument in (-pi, pi]."""
        a = self.num / self.den
        if a > 0.5:
            a -= 1.0
        return 2.0 * math.pi * a


@dataclass(frozen=True, eq=False)
class PrimeModulus:
    p: int
    g: int
    dlog: np.ndarray = field(repr=False)
    powers: np.ndarray = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, PrimeModulus) and other.p == self.p

    def __hash__(self):
        return hash(self.p)


def _power_table(g: int, p: int) -> np.ndarray:
    # g^j mod p for j = 0..p-2, filled by block doubling to stay vectorised.
    n = p - 1
    out = np.empty(n, dtype=np.int64)
    out[0] = 1
    filled = 1
    while filled < n:
        step = min(filled, n - filled)
        mult = pow(g, filled, p)
        out[filled : filled + step] = (out[:step] * mult) % p
        filled += step
    return out


def build_modulus(p: int, max_modulus: int = MAX_MODULUS) -> PrimeModulus:
    """Prime modulus with its smallest primitive root and full dlog table."""
    p = int(p)
    if p < 3:
        raise ModulusError(f"p={p}: need an odd prime p >= 3")
    if p % 2 == 0:
        raise ModulusError(f"p={p}: even, fails primality (divisible by 2)")
    if p > max_modulus:
        raise ModulusError(f"p={p} exceeds the dlog-table cap {max_modulus}")
    fac = factorize(p)
    if fac != {p: 1}:
        q = min(fac)
        raise ModulusError(f"p={p}: composite, fails trial-division primality (divisible by {q})")
    g = smallest_primitive_root(p)
    powers = _power_table(g, p)
    dlog = np.full(p, -1, dtype=np.int64)
    dlog[powers] = np.arange(p - 1, dtype=np.int64)
    if (dlog[1:] < 0).any():
        raise ModulusError(f"p={p}: g={g} fails the primitive-root test")
    powers.setflags(write=False)
    dlog.setflags(write=False)
    return PrimeModulus(p, g, dlog, powers)


@dataclass(frozen=True, eq=False)
class DirichletCharacter:
    """chi(g^j) = e(c*j/(p-1)) for the modulus' primitive root g."""

    modulus: PrimeModulus
    index: int

    def __post_init__(self):
        object.__setattr__(self, "index", self.index % (self.modulus.p - 1))

    def __eq__(self, other):
        return (
            isinstance(other, DirichletCharacter)
            and other.modulus == self.modulus
            and other.index == self.index
        )

    def __hash__(self):
        return hash((self.modulus.p, self.index))

    def __repr__(self):
        return f"DirichletCharacter(p={self.p}, index={self.index}, order={self.order})"

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def order(self) -> int:
        return (self.p - 1) // math.gcd(self.index, self.p - 1)

    @property
    def is_principal(self) -> bool:
        return self.index == 0

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    @cached_property
    def exponents(self) -> np.ndarray:
        """Length-p table: chi(n) = e(exponents[n]/order), or -1 where p | n."""
        d = self.order
        step = self.index // ((self.p - 1) // d)
        ex = np.where(self.modulus.dlog >= 0, (step * self.modulus.dlog) % d, -1)
        ex.setflags(write=False)
        return ex

    @cached_property
    def values(self) -> np.ndarray:
        """Length-p complex table of chi(n), n = 0..p-1."""
        ex = self.exponents
        ang = 2.0 * np.pi * ex / self.order
        v = np.where(ex >= 0, np.exp(1j * ang), 0.0)
        v.setflags(write=False)
        return v

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, -self.index)

    def exponent(self, n: int) -> int:
        return int(self.exponents[int(n) % self.p])

    def __call__(self, n: int) -> RootOfUnity | int:
        return char_eval(self, n)


def char_eval(chi: DirichletCharacter, n: int) -> RootOfUnity | int:
    """chi(n) as an exact root of unity, or the integer 0 when p | n."""
    ex = chi.exponent(n)
    if ex < 0:
        return 0
    return RootOfUnity(ex, chi.order)


def legendre(m: PrimeModulus) -> DirichletCharacter:
    return DirichletCharacter(m, (m.p - 1) // 2)


def character_of_order(m: PrimeModulus, d: int) -> DirichletCharacter:
    """The character of order d with the smallest index."""
    if (m.p - 1) % d:
        raise ModulusError(f"no character of order {d} mod {m.p}")
    return DirichletCharacter(m, (m.p - 1) // d)


def enumerate_characters(m: PrimeModulus, non_principal_only: bool = False) -> list[DirichletCharacter]:
    start = 1 if non_principal_only else 0
    return [DirichletCharacter(m, c) for c in range(start, m.p - 1)]


def _require_nonprincipal(chi: DirichletCharacter):
    if chi.is_principal:
        raise ValueError(f"principal character mod {chi.p} is not allowed here")


def gauss_sum(chi: DirichletCharacter) -> complex:
    """tau(chi) = sum_{n=1}^{p-1} chi(n) e(n/p), by direct compensated summation."""
    _require_nonprincipal(chi)
    p, d = chi.p, chi.order
    n = np.arange(1, p, dtype=np.int64)
    # exact phase numerator over the common denominator d*p
    num = (chi.exponents[1:] * p + n * d) % (d * p)
    ang = 2.0 * np.pi * num / (d * p)
    return complex(math.fsum(np.cos(ang)), math.fsum(np.sin(ang)))
