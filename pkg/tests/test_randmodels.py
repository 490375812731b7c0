import math

import numpy as np
import pytest

from mixedsums.charcore import factorize
from mixedsums.fft import fft_pow2, next_pow2
from mixedsums.randmodels import (
    KINDS,
    normaliser,
    random_poly_max,
    sample_coefficients,
    sample_rmf,
    stream,
)


@pytest.mark.parametrize("kind", ["rademacher", "steinhaus"])
def test_rmf_basic_values(kind):
    for trial in range(5):
        f = sample_rmf(kind, 200, seed=7, trial=trial)
        assert f(1) == 1
        assert f(6) == pytest.approx(f(2) * f(3), abs=1e-12)
        assert all(abs(abs(f(n)) - 1) < 1e-12 for n in range(1, 201))
        if kind == "rademacher":
            assert f(4) == 1
            assert set(np.unique(f.values[1:].real)) <= {-1.0, 1.0}


@pytest.mark.parametrize("kind", ["rademacher", "steinhaus"])
def test_rmf_completely_multiplicative(kind, rng):
    f = sample_rmf(kind, 3000, seed=3, trial=1)
    for _ in range(300):
        a, b = (int(x) for x in rng.integers(1, 55, 2))
        assert f(a * b) == pytest.approx(f(a) * f(b), abs=1e-9)
    # agrees with the product over the factorisation
    for n in (360, 2310, 2048, 2187):
        prod = 1
        for q, e in factorize(n).items():
            prod *= f(q) ** e
        assert f(n) == pytest.approx(prod, abs=1e-9)


def test_rmf_rejects_bad_input():
    with pytest.raises(ValueError):
        sample_rmf("gaussian", 10, 0)
    with pytest.raises(ValueError):
        sample_rmf("rademacher", 0, 0)
    with pytest.raises(ValueError):
        sample_coefficients("nope", 10, 0, 0)


def test_prefix_stability():
    # coefficient n is draw n of its stream, so a longer sample extends a shorter one
    for kind in KINDS:
        a = sample_coefficients(kind, 100, 5, 2)
        b = sample_coefficients(kind, 400, 5, 2)
        assert np.allclose(a, b[:100])


def test_streams_are_independent_of_order():
    x = stream(9, 4).random(5)
    stream(9, 3).random(100)
    assert np.array_equal(stream(9, 4).random(5), x)
    assert not np.array_equal(stream(9, 5).random(5), x)


@pytest.mark.parametrize("kind", KINDS)
def test_parseval(kind):
    N = 1000
    c = sample_coefficients(kind, N, 11, 0)
    M = next_pow2(2 * N + 2)
    buf = np.zeros(M, complex)
    buf[1 : N + 1] = c
    v = fft_pow2(buf)
    assert np.mean(np.abs(v) ** 2) == pytest.approx(N, rel=1e-6)


@pytest.mark.parametrize("kind", KINDS)
def test_N1_is_one(kind):
    r = random_poly_max(kind, 1, 3, seed=0)
    assert np.allclose(r.lo, 1.0) and np.allclose(r.hi, 1.0)
    assert normaliser(1) == 1.0


def test_normaliser():
    assert normaliser(4096) == pytest.approx(math.sqrt(4096 * math.log(4096)))


def test_determinism():
    a = random_poly_max("rmf-steinhaus", 512, 6, seed=42)
    b = random_poly_max("rmf-steinhaus", 512, 6, seed=42)
    assert np.array_equal(a.lo, b.lo) and np.array_equal(a.hi, b.hi)
    c = random_poly_max("rmf-steinhaus", 512, 6, seed=43)
    assert not np.array_equal(a.lo, c.lo)


def test_stats_and_reference_curves():
    r = random_poly_max("rademacher-iid", 256, 10, seed=1)
    assert r.trials == 10
    assert r.min <= r.median <= r.max
    assert np.all(r.lo <= r.hi)
    ref = r.reference_curves()
    assert ref["salem_zygmund"] == 1.0
    assert 0 < ref["bnr_lower"] < ref["bnr_upper"]
    assert random_poly_max("rademacher-iid", 8, 1).reference_curves() == {}


def test_rademacher_median_band_quick():
    # smaller than the acceptance run; same normalisation
    r = random_poly_max("rademacher-iid", 1024, 20, seed=2)
    assert 0.5 <= r.median <= 2.0
