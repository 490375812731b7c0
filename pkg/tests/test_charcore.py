import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mixedsums.charcore import (
    DirichletCharacter,
    ModulusError,
    RootOfUnity,
    build_modulus,
    char_eval,
    enumerate_characters,
    gauss_sum,
    legendre,
    primes_between,
)


def test_build_modulus_p7():
    m = build_modulus(7)
    assert m.g == 3
    assert m.dlog[3] == 1
    assert m.dlog[2] == 2  # 3^2 = 9 = 2 mod 7


def test_build_modulus_p5_smallest_root():
    # orders mod 5: 2 -> 4, 3 -> 4, 4 -> 2
    orders = {a: min(j for j in range(1, 5) if pow(a, j, 5) == 1) for a in (2, 3, 4)}
    assert orders == {2: 4, 3: 4, 4: 2}
    assert build_modulus(5).g == 2


@pytest.mark.parametrize("p", [4, 9, 15, 91, 2, 1])
def test_build_modulus_rejects(p):
    with pytest.raises(ModulusError):
        build_modulus(p)


def test_build_modulus_cap():
    with pytest.raises(ModulusError, match="cap"):
        build_modulus(10007, max_modulus=1000)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 101, 499, 10007])
def test_power_table_is_a_permutation(p):
    m = build_modulus(p)
    assert sorted(m.powers.tolist()) == list(range(1, p))
    assert all(m.dlog[m.powers[j]] == j for j in range(p - 1))
    assert all(pow(m.g, j, p) == m.powers[j] for j in range(0, p - 1, max(1, p // 50)))


def test_legendre_mod7_at_3():
    squares = {x * x % 7 for x in range(1, 7)}
    assert squares == {1, 2, 4}
    chi = legendre(build_modulus(7))
    assert complex(char_eval(chi, 3)) == pytest.approx(-1)
    for n in range(1, 7):
        want = 1 if n in squares else -1
        assert complex(char_eval(chi, n)) == pytest.approx(want)


def test_char_eval_zero_and_one(mod):
    for chi in enumerate_characters(mod(11)):
        assert char_eval(chi, 11) == 0
        assert char_eval(chi, 0) == 0
        assert char_eval(chi, 1) == RootOfUnity(0, chi.order)


def test_enumerate_orders_p5(mod):
    chars = enumerate_characters(mod(5))
    assert [c.order for c in chars] == [1, 4, 2, 4]
    assert len(enumerate_characters(mod(3), non_principal_only=True)) == 1
    assert enumerate_characters(mod(3), non_principal_only=True)[0] == legendre(mod(3))


def test_order_p7_index3(mod):
    assert DirichletCharacter(mod(7), 3).order == 2
    assert DirichletCharacter(mod(7), 3) == legendre(mod(7))


def test_root_of_unity_arithmetic():
    a, b = RootOfUnity(1, 4), RootOfUnity(1, 6)
    assert complex(a * b) == pytest.approx(complex(a) * complex(b))
    assert (a * a.conjugate()) == RootOfUnity(0, 4)
    assert (a ** 4).num == 0
    assert RootOfUnity(3, 4).angle == pytest.approx(-math.pi / 2)


@pytest.mark.parametrize("p", [p for p in primes_between(3, 101)])
def test_multiplicativity_exact(mod, p):
    m = mod(p)
    n = np.arange(2 * p)
    prod = np.outer(n, n)
    for chi in enumerate_characters(m):
        ex = chi.exponents
        d = chi.order
        a = ex[n % p]
        lhs = ex[prod % p]
        both = (a[:, None] >= 0) & (a[None, :] >= 0)
        rhs = np.where(both, (a[:, None] + a[None, :]) % d, -1)
        assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize("p", [3, 5, 7, 13, 31, 97, 499])
def test_orthogonality_buckets(mod, p):
    for chi in enumerate_characters(mod(p)):
        ex = chi.exponents[1:]
        counts = np.bincount(ex, minlength=chi.order)
        if chi.is_principal:
            assert counts[0] == p - 1
        else:
            # each d-th root of unity is hit equally often, so the sum is 0 exactly
            assert (counts == (p - 1) // chi.order).all()


def test_gauss_sum_small_cases(mod):
    # p = 5: chi(1..4) = 1, -1, -1, 1
    direct = sum(s * np.exp(2j * np.pi * n / 5) for n, s in zip(range(1, 5), (1, -1, -1, 1)))
    tau5 = gauss_sum(legendre(mod(5)))
    assert tau5 == pytest.approx(direct, abs=1e-14)
    assert tau5 == pytest.approx(math.sqrt(5), abs=1e-12)
    # p = 3: chi(1) = 1, chi(2) = -1
    tau3 = gauss_sum(legendre(mod(3)))
    assert tau3 == pytest.approx(1j * math.sqrt(3), abs=1e-12)


def test_gauss_sum_rejects_principal(mod):
    with pytest.raises(ValueError):
        gauss_sum(DirichletCharacter(mod(7), 0))


def test_gauss_conjugation(mod):
    for p in (7, 13, 101, 211):
        for chi in enumerate_characters(mod(p), non_principal_only=True):
            lhs = gauss_sum(chi.conjugate())
            rhs = complex(char_eval(chi, -1)) * np.conj(gauss_sum(chi))
            assert abs(lhs - rhs) <= 1e-9 * math.sqrt(p)


@settings(max_examples=60, deadline=None)
@given(p=st.sampled_from(primes_between(3, 200)), data=st.data())
def test_gauss_modulus_property(p, data):
    c = data.draw(st.integers(1, p - 2))
    chi = DirichletCharacter(build_modulus(p), c)
    assert abs(abs(gauss_sum(chi)) - math.sqrt(p)) <= 1e-9 * math.sqrt(p)


@settings(max_examples=100, deadline=None)
@given(p=st.sampled_from(primes_between(3, 150)), data=st.data())
def test_char_eval_multiplicative_property(p, data):
    chi = DirichletCharacter(build_modulus(p), data.draw(st.integers(0, p - 2)))
    m, n = data.draw(st.integers(-10**6, 10**6)), data.draw(st.integers(-10**6, 10**6))
    a, b, ab = char_eval(chi, m), char_eval(chi, n), char_eval(chi, m * n)
    if a == 0 or b == 0:
        assert ab == 0
    else:
        assert ab == a * b
