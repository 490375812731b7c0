"""Radix-2 FFT and a chirp (Bluestein) transform for arbitrary lengths.

Both use the convention ``X[k] = sum_n x[n] * exp(sign * 2j*pi*n*k/N)``; the
default ``sign=+1`` matches evaluating ``sum_n c_n e(n*theta)`` at theta = k/N.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def next_pow2(n: int) -> int:
    n = int(n)
    return 1 if n <= 1 else 1 << (n - 1).bit_length()


def is_pow2(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


@lru_cache(maxsize=32)
def _bitrev(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    rev.setflags(write=False)
    return rev


@lru_cache(maxsize=64)
def _twiddles(size: int, sign: int) -> np.ndarray:
    # one table per stage; exp evaluated directly (no recurrence) for accuracy
    tw = np.exp(sign * 2j * np.pi * np.arange(size // 2) / size)
    tw.setflags(write=False)
    return tw


@lru_cache(maxsize=8)
def _block_kernel(B: int, sign: int) -> np.ndarray:
    r = _bitrev(B)
    k = np.arange(B)
    G = np.exp(sign * 2j * np.pi * ((np.outer(r, k)) % B) / B)
    G.setflags(write=False)
    return G


def fft_pow2(x, sign: int = 1) -> np.ndarray:
    """Iterative decimation-in-time radix-2 transform; len(x) must be a power of two."""
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[0]
    if not is_pow2(n):
        raise ValueError(f"radix-2 transform needs a power-of-two length, got {n}")
    if n == 1:
        return x.copy()
    y = x[_bitrev(n)]
    # the first log2(B) butterfly stages are B-point DFTs of each bit-reversed block
    B = min(n, 16)
    y = y.reshape(-1, B) @ _block_kernel(B, sign)
    y = y.reshape(n)
    z = np.empty_like(y)
    tmp = np.empty(n // 2, dtype=np.complex128)
    size = 2 * B
    while size <= n:
        half = size // 2
        src = y.reshape(-1, size)
        dst = z.reshape(-1, size)
        t = tmp.reshape(-1, half)
        np.multiply(src[:, half:], _twiddles(size, sign), out=t)
        np.add(src[:, :half], t, out=dst[:, :half])
        np.subtract(src[:, :half], t, out=dst[:, half:])
        y, z = z, y
        size *= 2
    return y


def chirp_dft(x, sign: int = 1) -> np.ndarray:
    """Length-N DFT for any N via Bluestein's chirp, using radix-2 convolutions."""
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[0]
    if n == 0:
        return x.copy()
    if is_pow2(n):
        return fft_pow2(x, sign)
    m = np.arange(n, dtype=np.int64)
    # m^2 reduced mod 2N keeps the chirp phase exact for large N
    chirp = np.exp(sign * 1j * np.pi * ((m * m) % (2 * n)) / n)
    L = next_pow2(2 * n - 1)
    a = np.zeros(L, dtype=np.complex128)
    a[:n] = x * chirp
    b = np.zeros(L, dtype=np.complex128)
    b[:n] = np.conj(chirp)
    b[L - n + 1 :] = np.conj(chirp[1:][::-1])
    conv = fft_pow2(fft_pow2(a, -1) * fft_pow2(b, -1), 1) / L
    return chirp * conv[:n]


def dft(x, sign: int = 1) -> np.ndarray:
    x = np.asarray(x)
    return fft_pow2(x, sign) if is_pow2(len(x)) else chirp_dft(x, sign)


def cyclic_convolve(a, b) -> np.ndarray:
    """c[k] = sum_r a[r] b[(k - r) mod N] for equal-length inputs."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    n = a.shape[0]
    if b.shape[0] != n:
        raise ValueError("cyclic_convolve needs equal lengths")
    L = next_pow2(2 * n - 1)
    fa = fft_pow2(np.concatenate([a, np.zeros(L - n)]), -1)
    fb = fft_pow2(np.concatenate([b, np.zeros(L - n)]), -1)
    lin = fft_pow2(fa * fb, 1)[: 2 * n - 1] / L
    out = lin[:n].copy()
    out[: n - 1] += lin[n:]
    return out


def fold(coeffs, M: int) -> np.ndarray:
    """Alias a coefficient vector onto Z/M (sum entries whose index agrees mod M)."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    L = coeffs.shape[0]
    if L <= M:
        out = np.zeros(M, dtype=np.complex128)
        out[:L] = coeffs
        return out
    pad = (-L) % M
    return np.concatenate([coeffs, np.zeros(pad)]).reshape(-1, M).sum(axis=0)
