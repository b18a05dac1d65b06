"""Smoke tests for the Python bindings."""

import math

import pytest

import pkpow


def test_sieve_and_arith():
    pt = pkpow.sieve_primes(10**6)
    assert pt.count() == 78498
    assert pt.is_prime(999983)
    assert 97 in pt
    f = pkpow.factorize(12)
    assert f.factors == [(2, 2), (3, 1)]
    mi = pkpow.mult_invariants(30)
    assert (mi.mu, mi.phi, mi.omega) == (-1, 8, 3)
    assert pkpow.root_count(2, 7, 2).count == 2
    assert pkpow.is_in_Ik(2, 2)
    assert not pkpow.is_in_Ik(2, 9)


def test_characters():
    g = pkpow.CharacterGroup(5)
    assert len(g) == 4
    quad = next(g.character(i) for i in range(4) if g.character(i).order == 2)
    tau = pkpow.gauss_sum(quad)
    assert abs(tau - math.sqrt(5)) < 1e-12
    assert abs(pkpow.h_sum_principal(2, 7, 2) - 7) < 1e-10
    r, star = pkpow.conductor_and_primitive_part(
        pkpow.CharacterGroup(6).character(1))
    assert r == 3 and star.is_primitive


def test_representations():
    pt = pkpow.sieve_primes(10**4)
    assert pkpow.exceptional_set(2, 20) == [2, 5, 10, 13]
    assert pkpow.count_reps(2, 21, pt) == 2
    res = pkpow.scan(2, 100)
    assert res.count(21) == 2
    assert not res.in_Ik(16)
    assert pkpow.count_waring(2, 2, 25) == 2


def test_singular_series():
    pt = pkpow.sieve_primes(10**4)
    s = pkpow.singular_series(2, 2, 7, pt)
    assert abs(s.value - 1.5625) < 1e-12
    assert abs(pkpow.truncated_sum(2, 2, 7, 1).value - (1 + 0.5 + 0.25 - 1 / 6)) < 1e-12
    assert abs(pkpow.product_form(2, 2, 7, 3, pt).value - 1.5625 / 1.5) < 1e-12


def test_circle():
    pt = pkpow.sieve_primes(2**12)
    cv = pkpow.coefficients(2, 1024, pt)
    full = pkpow.dissect(1024, 1, 2.0)
    n = (cv.n_min + cv.n_max) // 2
    rs = pkpow.r_split(cv, n, full)
    assert abs(rs.r1 - cv.at(n)) < 1e-9 * max(1.0, abs(cv.at(n)))
    hm = pkpow.hua_moment(2, 16, 2)
    assert hm.exact_count == 15
    assert abs(hm.grid - 15) < 1e-6


def test_coefficients_against_fft():
    np = pytest.importorskip("numpy")
    k, X = 2, 512
    pt = pkpow.sieve_primes(4 * X)
    cv = pkpow.coefficients(k, X, pt)
    m = 2 * cv.n_max + 1  # above the Nyquist rate for every frequency
    alphas = np.arange(m) / m
    samples = np.array(
        [pkpow.f_sum(k, X, a) * pkpow.s_sum(X, a, pt) for a in alphas])
    spectrum = np.fft.fft(samples) / m
    recovered = spectrum[cv.n_min:cv.n_max + 1].real
    mine = np.array(cv.c)
    assert np.max(np.abs(recovered - mine)) < 1e-9 * max(1.0, mine.max())
    mask = np.ones(m, bool)
    mask[cv.n_min:cv.n_max + 1] = False
    assert np.max(np.abs(spectrum[mask])) < 1e-9  # nothing outside the support


def test_error_mapping():
    with pytest.raises(ValueError):
        pkpow.is_in_Ik(1, 5)
    with pytest.raises(RuntimeError):
        pkpow.sieve_primes(10**12)


def test_verify_suite():
    reports = pkpow.run_verify("hua", seed=7)
    assert len(reports) == 1
    assert reports[0].ok()
    assert reports[0].cases > 0
