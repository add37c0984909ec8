import math

import numpy as np
import pytest

from selbounds.arithmetic import (
    build_tables,
    prime_coefficient_stats,
    primes_up_to,
    psi,
    psi_tilde,
    s_exact,
    s_hat_and_ex_exact,
    select_xy,
    von_mangoldt_sieve,
)
from selbounds.descriptors import dirichlet_descriptor, zeta_descriptor
from selbounds.errors import LimitTooLarge, OutOfTableRange, XBelowTwo


def vm_oracle(n):
    """Trial-factorization von Mangoldt."""
    if n < 2:
        return 0.0
    for p in range(2, n + 1):
        if n % p == 0:
            m = n
            while m % p == 0:
                m //= p
            return math.log(p) if m == 1 else 0.0
    return 0.0


def test_von_mangoldt_against_trial_factorization():
    lam = von_mangoldt_sieve(2000)
    rng = np.random.default_rng(7)
    for n in rng.integers(2, 2000, size=200):
        assert lam[n] == pytest.approx(vm_oracle(int(n)), abs=1e-12), n


def test_nonzero_pattern_to_ten(zeta_tables_small):
    support = [n for n in range(11) if zeta_tables_small.von_mangoldt[n] > 0]
    assert support == [2, 3, 4, 5, 7, 8, 9]


def test_psi_tilde_zeta(zeta_tables_small):
    expected = 3 * math.log(2) + 2 * math.log(3) + math.log(5) + math.log(7)
    assert psi_tilde(zeta_tables_small, 10) == pytest.approx(expected, rel=1e-12)
    assert psi_tilde(zeta_tables_small, 2) == pytest.approx(math.log(2), rel=1e-12)
    with pytest.raises(OutOfTableRange):
        psi_tilde(zeta_tables_small, 1e9)
    with pytest.raises(OutOfTableRange):
        psi_tilde(zeta_tables_small, 1.0)


def test_psi_tilde_product_oracle(product5_tables_small):
    chi = {0: 0, 1: 1, 2: 1j, 3: -1j, 4: -1}
    lam = von_mangoldt_sieve(200)
    expected = sum(abs(1 + chi[n % 5]) * lam[n] for n in range(2, 201))
    assert psi_tilde(product5_tables_small, 200) == pytest.approx(expected, rel=1e-12)


def test_lambda_l_product_value(product5_tables_small):
    # Lambda_L(3) = (1 + chi(3)) log 3 = (1 - i) log 3
    assert product5_tables_small.lambda_l[3] == pytest.approx(
        (1 - 1j) * math.log(3), rel=1e-12)


def test_lambda_l_bounded_by_m_lambda(product5, zeta):
    # |Lambda_L(n)| <= m Lambda(n) for every n <= 1e5
    for desc, m in ((product5, 2), (zeta, 1)):
        tables = build_tables(desc, 10 ** 5)
        assert np.all(tables.lambda_l_abs <= m * tables.von_mangoldt + 1e-12)


def test_von_mangoldt_divisor_sum_identity():
    """Independent oracle for the whole table: sum of Lambda(d) over the
    divisors of n equals log n, for every n <= 1e5."""
    n_max = 10 ** 5
    lam = von_mangoldt_sieve(n_max)
    acc = np.zeros(n_max + 1)
    for d in np.nonzero(lam)[0]:
        acc[d::d] += lam[d]
    n = np.arange(2, n_max + 1)
    assert np.max(np.abs(acc[2:] - np.log(n))) < 1e-9


def test_limit_too_small():
    with pytest.raises(LimitTooLarge):
        build_tables(zeta_descriptor(), 1)


def test_psi_segmented_recomputation(zeta_tables_1e6):
    """psi from the cumulative table matches an independent windowed
    recomputation at random points."""
    rng = np.random.default_rng(11)
    xs = rng.integers(100, 10 ** 6, size=100)
    primes = primes_up_to(int(math.isqrt(10 ** 6)) + 1)
    for x in xs:
        x = int(x)
        # segmented: psi(x) = sum over p <= sqrt(x) of floor(log x/log p) log p
        # restricted to prime powers, plus log p over primes in (sqrt(x), x];
        # recompute the large-prime part by sieving the window in blocks
        total = 0.0
        for p in primes[primes <= math.isqrt(x)]:
            total += math.floor(math.log(x) / math.log(p) + 1e-12) * math.log(p)
        block = np.ones(x + 1, dtype=bool)
        block[:2] = False
        for p in primes[primes <= math.isqrt(x)]:
            block[p * p:: p] = False
        big_primes = np.nonzero(block)[0]
        big_primes = big_primes[big_primes > math.isqrt(x)]
        total += float(np.log(big_primes.astype(float)).sum())
        assert psi(zeta_tables_1e6, x) == pytest.approx(total, rel=1e-10)


def test_psi_nondecreasing(zeta_tables_small):
    values = [psi(zeta_tables_small, x) for x in range(2, 500)]
    # up to pairwise-summation float jitter
    assert all(b >= a - 1e-9 for a, b in zip(values, values[1:]))


def test_schoenfeld_window(zeta_tables_1e6):
    """|psi(x) - x| <= sqrt(x) log^2 x / (8 pi) holds numerically on [74, N]."""
    cum = np.cumsum(zeta_tables_1e6.von_mangoldt)
    xs = np.concatenate([
        np.arange(74, 2000),
        np.random.default_rng(3).integers(2000, 10 ** 6, size=2000),
    ])
    for x in xs:
        bound = math.sqrt(x) * math.log(x) ** 2 / (8 * math.pi)
        assert abs(cum[int(x)] - x) <= bound, x


def test_select_xy():
    x, y = select_xy(1.0, math.log(2.0), 100.0)
    assert (x, y) == (pytest.approx(2500.0), pytest.approx(4.0))
    # at sigma = 1 the substitution gives x = e^{-2 alpha} log^2 tau
    x, y = select_xy(1.0, 1.278, 1000.0)
    assert x == pytest.approx(math.exp(-2 * 1.278) * 1e6, rel=1e-12)
    x, y = select_xy(0.75, 1.278, 1e6)
    assert y == pytest.approx(math.exp(1.278 / 0.25), rel=1e-12)
    assert x == pytest.approx(1e12 / y, rel=1e-12)
    with pytest.raises(XBelowTwo):
        select_xy(0.51, 1.278, 10.0)
    with pytest.raises(XBelowTwo):
        # tau too small for this (sigma, alpha): y = e^{5.112} forces x < 2
        select_xy(0.75, 1.278, 13.8155)
    with pytest.raises(ValueError):
        select_xy(0.4, 1.278, 100.0)
    with pytest.raises(ValueError):
        select_xy(1.0, 0.5, 100.0)


def s_exact_oracle(lam_abs, sigma, x, y):
    total = 0.0
    xy = x * y
    for n in range(2, int(xy) + 1):
        if lam_abs[n] == 0:
            continue
        if n <= x:
            total += lam_abs[n] * n ** -sigma
        else:
            total += lam_abs[n] * math.log(xy / n) * n ** -sigma / math.log(y)
    return total


def test_s_exact_frozen_value(zeta_tables_small):
    # direct summation: 0.886064482... below x plus 0.271815784... tapered
    value = s_exact(zeta_tables_small, 1.0, 4.0, 2.0)
    assert value == pytest.approx(1.1578802668, abs=1e-9)
    oracle = s_exact_oracle(zeta_tables_small.lambda_l_abs, 1.0, 4.0, 2.0)
    assert value == pytest.approx(oracle, rel=1e-13)


def test_s_exact_matches_loop_oracle(product5_tables_small):
    rng = np.random.default_rng(5)
    for _ in range(10):
        sigma = rng.uniform(0.55, 1.6)
        x = rng.uniform(2.0, 50.0)
        y = rng.uniform(2.0, 20.0)
        got = s_exact(product5_tables_small, sigma, x, y)
        want = s_exact_oracle(product5_tables_small.lambda_l_abs, sigma, x, y)
        assert got == pytest.approx(want, rel=1e-12)


def test_s_exact_monotone_in_sigma(zeta_tables_small):
    sigmas = np.linspace(0.55, 3.0, 40)
    vals = [s_exact(zeta_tables_small, s, 30.0, 8.0) for s in sigmas]
    assert all(b <= a + 1e-14 for a, b in zip(vals, vals[1:]))


def test_s_exact_decays_at_large_sigma(zeta_tables_small):
    assert s_exact(zeta_tables_small, 40.0, 2.0, 2.0) < 1e-10


def test_product_dominated_by_m_times_zeta(zeta_tables_small, product5_tables_small):
    rng = np.random.default_rng(9)
    for _ in range(20):
        sigma = rng.uniform(0.55, 2.0)
        x = rng.uniform(2.0, 60.0)
        y = rng.uniform(2.0, 15.0)
        assert s_exact(product5_tables_small, sigma, x, y) <= \
            2 * s_exact(zeta_tables_small, sigma, x, y) + 1e-12


def test_s_hat_frozen(zeta_tables_small):
    # n = 2 contributes 1/2; n = 3 sits in the tapered range
    r = s_hat_and_ex_exact(zeta_tables_small, 1.0, 2.0, 2.0)
    expected = 0.5 + math.log(4.0 / 3.0) / (3.0 * math.log(2.0))
    assert r.s_hat == pytest.approx(expected, rel=1e-12)


def test_ex_monotone_and_tail(zeta_tables_1e6):
    r100 = s_hat_and_ex_exact(zeta_tables_1e6, 1.0, 100.0, 2.0)
    r1000 = s_hat_and_ex_exact(zeta_tables_1e6, 1.0, 1000.0, 2.0)
    assert r100.ex_partial >= r1000.ex_partial
    assert r100.ex_upper >= r1000.ex_upper
    # analytic tail agrees with high-precision quadrature of u^{-3/2}/log u
    # (under u = e^v, which mpmath integrates accurately)
    mpmath = pytest.importorskip("mpmath")
    want = float(mpmath.quad(lambda v: mpmath.e ** (-v / 2) / v,
                             [math.log(10 ** 6), mpmath.inf]))
    assert r100.ex_tail_bound == pytest.approx(want, rel=1e-9)


def test_prime_stats_pi100(zeta_tables_small):
    st = prime_coefficient_stats(zeta_tables_small, [100])
    assert st.sum_abs[-1] == 25.0
    assert st.sum_sq[-1] == 25.0


def test_prime_stats_zero_coefficients(zeta_tables_small):
    from dataclasses import replace
    zeroed = replace(zeta_tables_small,
                     ap_abs=np.zeros_like(zeta_tables_small.ap_abs))
    st = prime_coefficient_stats(zeroed, [100, 1000, 10000])
    assert st.kappa_abs == 0.0
    assert st.kappa_sq == 0.0


def test_tables_immutable(zeta_tables_small):
    with pytest.raises(ValueError):
        zeta_tables_small.von_mangoldt[2] = 0.0
