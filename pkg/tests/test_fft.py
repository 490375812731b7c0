import numpy as np
import pytest

from mixedsums.fft import chirp_dft, cyclic_convolve, dft, fft_pow2, fold, is_pow2, next_pow2


def naive(x, sign):
    n = len(x)
    k = np.arange(n)
    return np.exp(sign * 2j * np.pi * np.outer(k, k) / n) @ x


@pytest.mark.parametrize("n", [1, 2, 4, 16, 256])
@pytest.mark.parametrize("sign", [1, -1])
def test_radix2_matches_naive(rng, n, sign):
    x = rng.normal(size=n) + 1j * rng.normal(size=n)
    assert np.allclose(fft_pow2(x, sign), naive(x, sign), atol=1e-10)


@pytest.mark.parametrize("n", [3, 5, 7, 11, 100, 101, 499])
def test_chirp_matches_naive(rng, n):
    x = rng.normal(size=n) + 1j * rng.normal(size=n)
    assert np.allclose(chirp_dft(x), naive(x, 1), atol=1e-9)
    assert np.allclose(dft(x, -1), np.fft.fft(x), atol=1e-9)


def test_radix2_rejects_odd_length():
    with pytest.raises(ValueError):
        fft_pow2(np.ones(12))


def test_helpers():
    assert [next_pow2(n) for n in (0, 1, 2, 3, 1000, 1024)] == [1, 1, 2, 4, 1024, 1024]
    assert is_pow2(64) and not is_pow2(96)
    assert np.array_equal(fold(np.arange(7), 3), [0 + 3 + 6, 1 + 4, 2 + 5])
    assert np.array_equal(fold(np.arange(2), 4), [0, 1, 0, 0])


def test_cyclic_convolve(rng):
    n = 17
    a, b = rng.normal(size=n), rng.normal(size=n)
    want = [sum(a[r] * b[(k - r) % n] for r in range(n)) for k in range(n)]
    assert np.allclose(cyclic_convolve(a, b), want, atol=1e-12)
