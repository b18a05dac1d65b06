#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "pkpow/circle.hpp"

using namespace pkpow;
using doctest::Approx;

TEST_CASE("window endpoints") {
    Window w = window(2, 16);
    CHECK(w.j_min == 2);
    CHECK(w.j_max == 4);
    CHECK(w.m_min == 8);
    CHECK(w.m_max == 16);
    Window w3 = window(3, 256);
    CHECK(w3.j_min == 4);
    CHECK(w3.j_max == 6);
    // j_min = min{j : (2j)^k >= X} also for non-dyadic X
    Window w17 = window(2, 17);
    CHECK(w17.j_min == 3);
}

TEST_CASE("f_sum") {
    CHECK(f_sum(2, 16, 0.0).real() == Approx(3.0));
    CHECK(std::abs(f_sum(2, 16, 1.0) - f_sum(2, 16, 0.0)) < 1e-12);
    auto v = f_sum(2, 16, 0.25);
    CHECK(v.real() == Approx(2.0).epsilon(1e-12));
    CHECK(v.imag() == Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(f_sum(2, kCircleXMax + 1, 0.0), CapacityError);
}

TEST_CASE("s_sum") {
    auto pt = sieve_primes(64);
    double theta = std::log(11.0) + std::log(13.0);
    CHECK(s_sum(16, 0.0, pt).real() == Approx(theta).epsilon(1e-14));
    CHECK(s_sum(16, 0.5, pt).real() == Approx(-theta).epsilon(1e-12));
    // |S(alpha)| <= S(0)
    for (double alpha : {0.1, 0.3, 0.77, 0.9})
        CHECK(std::abs(s_sum(16, alpha, pt)) <= theta + 1e-12);
    CHECK_THROWS_AS(s_sum(128, 0.0, pt), CapacityError);
}

TEST_CASE("t_rho") {
    CHECK(t_rho(16, 1.0, 0.0).real() == Approx(9.0));
    CHECK(t_rho(16, 1.0, 0.5).real() == Approx(1.0).epsilon(1e-12));
    double direct = 0.0;
    for (uint64_t m = 8; m <= 16; ++m)
        direct += 1.0 / std::sqrt(static_cast<double>(m));
    CHECK(t_rho(16, 0.5, 0.0).real() == Approx(direct).epsilon(1e-14));
    CHECK_THROWS_AS(t_rho(16, 0.0, 0.1), DomainError);
    CHECK_THROWS_AS(t_rho(16, 1.2, 0.1), DomainError);
}

TEST_CASE("coefficients") {
    auto pt = sieve_primes(64);
    auto cv = coefficients(2, 16, pt);
    CHECK(cv.at(20) == Approx(std::log(11.0)).epsilon(1e-15));
    CHECK(cv.at(7) == 0.0);  // below support

    // sum of coefficients equals S(0) F(0)
    KahanSum total;
    for (double c : cv.c) total.add(c);
    double expect = s_sum(16, 0.0, pt).real() * f_sum(2, 16, 0.0).real();
    CHECK(total.value() == Approx(expect).epsilon(1e-13));

    // thread-count independence
    auto pt2 = sieve_primes(2048);
    auto cv4 = coefficients(2, 2048, pt2, Parallel(4));
    auto cv1 = coefficients(2, 2048, pt2);
    CHECK(cv1.c == cv4.c);
}

TEST_CASE("dissection") {
    auto d = dissect(100, 2, 100.0);
    REQUIRE(d.arcs.size() == 2);
    CHECK(d.arcs[0].a == 1);
    CHECK(d.arcs[0].q == 2);
    CHECK(d.arcs[0].half_width == Approx(1.0 / 200.0));
    CHECK(d.arcs[1].q == 1);
    CHECK(d.arcs[1].half_width == Approx(1.0 / 100.0));
    CHECK(d.major_measure() == Approx(2.0 / 100.0 + 2.0 / 200.0).epsilon(1e-15));

    // overlap rejected before any computation
    CHECK_THROWS_AS(dissect(100, 8, 10.0), DomainError);
    CHECK_THROWS_AS(dissect(100, 2, 0.0), DomainError);

    // default Q at the working scale keeps arcs disjoint
    auto dd = dissect(1 << 14, 8, default_q(1 << 14, 2, 8));
    CHECK(dd.arcs.size() == 22);  // sum of phi(q), q <= 8
    // minor arcs tile the complement: measures add to the full period
    double minor_measure = 0.0;
    for (auto [a, b] : dd.minor) minor_measure += b - a;
    CHECK(minor_measure + dd.major_measure() == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("degenerate dissection reproduces coefficients") {
    auto pt = sieve_primes(4096);
    auto cv = coefficients(2, 1024, pt);
    auto full = dissect(1024, 1, 2.0);
    for (uint64_t n : {cv.n_min, cv.n_min + 137, (cv.n_min + cv.n_max) / 2,
                       cv.n_max}) {
        double r1 = integrate_major(cv, n, full);
        CHECK(r1 == Approx(cv.at(n)).epsilon(1e-9));
    }
    // outside the support: r = 0, r2 = -r1
    auto rs = r_split(cv, cv.n_min - 5, full);
    CHECK(rs.r == 0.0);
    CHECK(rs.r2 == Approx(-rs.r1));
}

TEST_CASE("hua moments") {
    auto hm = hua_moment(2, 16, 2);
    CHECK(hm.exact_count == 15);
    CHECK(hm.grid == Approx(15.0).epsilon(1e-9));
    CHECK(hua_moment(2, 16, 1).exact_count == 3);
    CHECK(hua_moment(2, 256, 1).exact_count == 9);
    CHECK(hua_moment(3, 256, 1).exact_count == 3);
    CHECK_THROWS_AS(hua_moment(2, 1 << 20, 3), CapacityError);
}

TEST_CASE("bessel pieces at a toy scale") {
    auto pt = sieve_primes(2048);
    auto cv = coefficients(2, 512, pt);
    auto d = dissect(512, 4, default_q(512, 2, 4));
    auto b = minor_l2(cv, d);
    CHECK(b.lhs <= b.bessel + 1e-6);
    CHECK(b.major_l2 + b.bessel == Approx(b.parseval).epsilon(1e-12));
    CHECK(b.parseval > 0.0);

    ArcDissection none;
    none.X = 512;
    auto b_none = minor_l2(cv, none);
    CHECK(b_none.bessel == Approx(b_none.parseval));
}

TEST_CASE("main-term comparison ingredients") {
    auto pt = sieve_primes(2048);
    auto cv = coefficients(2, 512, pt);
    auto d = dissect(512, 4, default_q(512, 2, 4));
    uint64_t n = 500;
    auto mt = main_term_compare(cv, n, 4, d, pt);
    CHECK(mt.l1 == Approx(l_count(2, 512, n, 1.0)));
    CHECK(mt.series == Approx(truncated_sum(2, static_cast<int64_t>(n), 4, 1).value));
    CHECK(mt.weight_bridge > 0.5);
    CHECK(mt.weight_bridge < 1.5);
    CHECK(mt.prediction ==
          Approx(mt.series * mt.l1 * mt.weight_bridge).epsilon(1e-15));
    // unit coefficients realize the L-integral identity
    auto uv = unit_coefficients(2, 512);
    for (uint64_t m = uv.n_min; m <= uv.n_max; m += 37)
        CHECK(uv.at(m) == Approx(l_count(2, 512, m, 1.0)).epsilon(1e-12));
}
