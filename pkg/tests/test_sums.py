import math

import numpy as np
import pytest

from mixedsums.charcore import DirichletCharacter, char_eval, gauss_sum, legendre, primes_between
from mixedsums.sums import (
    CoefficientVector,
    SumSpec,
    approx_weights,
    direct_sum,
    direct_sum_at,
    evaluate_grid,
    grid_evaluate,
    kt_profile,
    residual_profile,
    truncated_approx,
    truncated_profile,
)


def random_chars(m, n, rng):
    idx = rng.choice(np.arange(1, m.p - 1), size=min(n, m.p - 2), replace=False)
    return [DirichletCharacter(m, int(c)) for c in idx]


def test_sumspec_validation(mod):
    chi = legendre(mod(11))
    with pytest.raises(ValueError):
        SumSpec(chi, 0.5, 0.5)
    with pytest.raises(ValueError):
        SumSpec(chi, -0.1, 1)
    with pytest.raises(ValueError):
        SumSpec(DirichletCharacter(mod(11), 0), 0, 1)
    with pytest.raises(ValueError, match="empty"):
        SumSpec(chi, 0.0, 0.05)  # (0, 0.55] holds no integer


def test_coefficient_vector_range(mod):
    s = SumSpec(legendre(mod(101)), 0.25, 1.5)
    cv = s.coefficients()
    assert cv.offset == 26 and cv.offset + len(cv) - 1 == 151
    assert cv.degree == math.ceil(1.5 * 101)
    assert set(np.round(np.abs(cv.coeffs), 12)) <= {0.0, 1.0}


def test_direct_sum_full_period_is_zero(mod):
    for p in (5, 101, 499):
        for chi in (legendre(mod(p)), DirichletCharacter(mod(p), 1)):
            assert abs(direct_sum(SumSpec(chi, 0, 1), 0.0)) <= 1e-9 * p


def test_direct_sum_fekete5():
    from mixedsums.charcore import build_modulus

    chi = legendre(build_modulus(5))
    z = direct_sum(SumSpec(chi, 0, 1), 1 / 5)
    assert z == pytest.approx(math.sqrt(5), abs=1e-12)
    assert z == pytest.approx(complex(char_eval(chi, 1)) * gauss_sum(chi), abs=1e-12)


@pytest.mark.parametrize("p", primes_between(3, 101))
def test_direct_sum_at_k_over_p(mod, p, rng):
    m = mod(p)
    for chi in [legendre(m)] + random_chars(m, 2, rng):
        s = SumSpec(chi, 0, 1)
        tau = gauss_sum(chi)
        for k in range(1, p):
            want = np.conj(complex(char_eval(chi, k))) * tau
            assert abs(direct_sum(s, k / p) - want) <= 1e-9 * math.sqrt(p)
            assert abs(direct_sum_at(s, k, 0.0) - want) <= 1e-9 * math.sqrt(p)


def test_grid_zero_coefficients():
    g = evaluate_grid(CoefficientVector(5, np.zeros(9)), 32)
    assert not g.values.any()


def test_grid_single_coefficient():
    g = evaluate_grid(CoefficientVector(37, [1.0]), 64)
    assert np.allclose(g.abs, 1.0)


def test_grid_matches_direct_p11(mod, rng):
    p = 11
    chi = random_chars(mod(p), 1, rng)[0]
    s = SumSpec(chi, 0, 1)
    g = grid_evaluate(s, 0.3, 64)
    want = np.array([direct_sum(s, th) for th in g.thetas])
    assert np.abs(g.values - want).max() <= 1e-9 * math.sqrt(p)


def test_grid_rejects_bad_sizes(mod):
    s = SumSpec(legendre(mod(11)), 0, 1)
    with pytest.raises(ValueError):
        grid_evaluate(s, 0.3, 100)  # radix2 needs a power of two
    from mixedsums.sums import GridTooLarge

    with pytest.raises(GridTooLarge):
        grid_evaluate(s, 0.3, 1 << 27)


@pytest.mark.parametrize("p", [11, 101, 211, 499])
@pytest.mark.parametrize("ab", [(0, 1), (0.25, 1), (1, 2.5)])
def test_grid_direct_agreement(mod, rng, p, ab):
    m = mod(p)
    for chi in random_chars(m, 5, rng):
        s = SumSpec(chi, *ab)
        t = float(rng.uniform(0, 1))
        for M, kern in ((64, "radix2"), (257, "chirp"), (1024, "radix2")):
            g = grid_evaluate(s, t, M, kernel=kern)
            idx = rng.choice(M, size=min(M, 40), replace=False)
            want = np.array([direct_sum(s, g.thetas[j]) for j in idx])
            assert np.abs(g.values[idx] - want).max() <= 1e-8 * (ab[1] - ab[0]) * p


@pytest.mark.parametrize("p", [101, 499])
@pytest.mark.parametrize("ab", [(0, 1), (0.3, 0.8), (1, 2)])
def test_parseval(mod, rng, p, ab):
    for chi in random_chars(mod(p), 3, rng):
        s = SumSpec(chi, *ab)
        M = 1 << (2 * math.ceil(ab[1] * p)).bit_length()
        g = grid_evaluate(s, 0.4, M)
        n = s.frequencies
        units = int(np.count_nonzero(n % p))
        assert np.mean(g.abs ** 2) == pytest.approx(units, rel=1e-7)


def test_conjugation_symmetry(mod, rng):
    p = 211
    for chi in random_chars(mod(p), 4, rng):
        for ab in ((0, 1), (0.2, 0.9)):
            s, sb = SumSpec(chi, *ab), SumSpec(chi.conjugate(), *ab)
            for th in rng.uniform(0, 1, 10):
                assert abs(direct_sum(sb, -th) - np.conj(direct_sum(s, th))) <= 1e-9 * math.sqrt(p)


def test_kt_profile(mod):
    s = SumSpec(legendre(mod(101)), 0.25, 1)
    v = kt_profile(s, 0.3)
    for k in (0, 1, 50, 100):
        assert abs(v[k] - direct_sum_at(s, k, 0.3)) < 1e-9


def test_truncated_term_with_k_equal_l_vanishes(mod):
    p, K, t, k = 101, 3, 0.4, 2
    chi = DirichletCharacter(mod(p), 5)
    s = SumSpec(chi, 0, 1)
    l, w = approx_weights(0, 1, t, K)
    tau = gauss_sum(chi)
    keep = (k - l) % p != 0
    manual = tau / (2j * np.pi) * sum(
        wi * np.conj(complex(char_eval(chi, k - li))) for li, wi in zip(l[keep], w[keep])
    )
    assert truncated_approx(s, k, t, K) == pytest.approx(manual, abs=1e-12)


def test_truncated_rejects(mod):
    s = SumSpec(legendre(mod(101)), 0, 1)
    with pytest.raises(ValueError):
        truncated_approx(s, 3, 0.0, 5)
    with pytest.raises(ValueError):
        truncated_approx(s, 3, 0.5, 0)


def test_truncated_p101_within_log_p(mod):
    p = 101
    s = SumSpec(legendre(mod(p)), 0, 1)
    K = p - 1 - 1  # K0(101) = 1
    err = abs(truncated_approx(s, 10, 0.5, K) - direct_sum_at(s, 10, 0.5))
    assert err <= 10 * math.log(p)


@pytest.mark.parametrize("ab", [(0.25, 1), (0.3, 0.7), (1.5, 2.2)])
def test_truncated_converges_without_alpha_phase(mod, ab):
    # the main term tends to F((k+t)/p) as K grows only without the e(alpha k) factor
    p = 101
    chi = DirichletCharacter(mod(p), 20)
    s = SumSpec(chi, *ab)
    F = kt_profile(s, 0.3)
    err = np.abs(F - truncated_profile(s, 0.3, 5000)).max()
    assert err < 0.05
    err_phase = np.abs(F - truncated_profile(s, 0.3, 5000, alpha_phase=True)).max()
    assert err_phase > 1.0
    assert np.allclose(np.abs(truncated_profile(s, 0.3, 7)), np.abs(truncated_profile(s, 0.3, 7, alpha_phase=True)))


@pytest.mark.parametrize("K", [2, 40])
def test_truncated_profile_matches_pointwise(mod, K):
    s = SumSpec(DirichletCharacter(mod(211), 7), 0.1, 0.9)
    prof = truncated_profile(s, 0.35, K)
    for k in (0, 5, 105, 210):
        assert prof[k] == pytest.approx(truncated_approx(s, k, 0.35, K), abs=1e-9)


def test_median_residual_decreases_in_K(mod):
    p = 499
    s = SumSpec(legendre(mod(p)), 0, 1)
    meds = [np.median(residual_profile(s, 0.25, K)) for K in (1, 2, 4, 8, 16, 32, 64, 128)]
    assert all(b <= a for a, b in zip(meds, meds[1:]))
    # past p/4 the O(1) floor of the expansion is reached and the median only jitters
    assert np.median(residual_profile(s, 0.25, 249)) <= 1.25 * meds[-1]


def test_residual_profile_reports_finite(mod):
    from mixedsums.prescribe import default_K0

    p = 499
    s = SumSpec(legendre(mod(p)), 0, 1)
    r = residual_profile(s, 0.25, default_K0(p))
    assert r.shape == (p,) and np.isfinite(r).all()
    assert r.mean() > 0


def test_truncation_error_shape(mod, tmp_path):
    rows = []
    for p in (211, 499, 1009, 4999):
        s = SumSpec(legendre(mod(p)), 0, 1)
        K = math.ceil(p / 2) - 1
        r = residual_profile(s, 0.25, K).max()
        rows.append((p, K, r, r / (p * math.log(p) / K + 1)))
    (tmp_path / "prop_shape.csv").write_text(
        "p,K,max_residual,C\n" + "".join(f"{p},{K},{r:.9g},{c:.9g}\n" for p, K, r, c in rows)
    )
    C = [c for *_, c in rows]
    assert max(C) / min(C) <= 4
