#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pkpow/singular.hpp"

using namespace pkpow;
using doctest::Approx;

TEST_CASE("local factors") {
    CHECK(local_factor(2, 7, 2) == Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(local_factor(2, 7, 3) == Approx(7.0 / 6.0).epsilon(1e-15));
    CHECK(local_factor(2, 2, 2) == Approx(1.0).epsilon(1e-15));  // rho = 1
    // neutral primes have rho = 1 and factor exactly 1
    CHECK(local_factor(3, 5, 2) == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("euler product truncations") {
    auto pt = sieve_primes(100000);
    auto s = singular_series(2, 2, 7, pt);
    CHECK(s.value == Approx(1.5625).epsilon(1e-14));
    CHECK(s.tail_estimate >= 0.0);
    CHECK(singular_series(2, 5, 1, pt).value == Approx(1.0));  // empty product
    CHECK_THROWS_AS(singular_series(2, 0, 7, pt), DomainError);
    CHECK_THROWS_AS(singular_series(2, 5, kSeriesCutoffMax + 1, pt),
                    CapacityError);
    // value recomputable from scratch via local factors
    double direct = 1.0;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
        direct *= local_factor(3, p, 10);
    CHECK(singular_series(3, 10, 13, pt).value == Approx(direct).epsilon(1e-15));
}

TEST_CASE("a coefficients") {
    CHECK(a_coeff(2, 5, 1, 1) == Approx(1.0));
    CHECK(a_coeff(2, 2, 7, 1) == Approx(-1.0 / 6.0).epsilon(1e-15));
    // shared prime with r kills the term through mu((q, r)^2)
    CHECK(a_coeff(2, 5, 6, 3) == Approx(0.0));
    CHECK_THROWS_AS(a_coeff(2, 5, 4, 1), DomainError);
    CHECK_THROWS_AS(a_coeff(2, 5, 0, 1), DomainError);
}

TEST_CASE("truncated sum") {
    auto ts = truncated_sum(2, 2, 7, 1);
    // 1 + A(2) + A(3) + A(5) + A(6) + A(7), hand values
    double hand = 1.0 + 0.0 + 0.5 + 0.25 + 0.0 - 1.0 / 6.0;
    CHECK(ts.value == Approx(hand).epsilon(1e-14));
    CHECK(truncated_sum(3, 11, 1, 1).value == Approx(1.0));
    // r divisible by every prime <= R leaves only q = 1
    CHECK(truncated_sum(2, 5, 7, 210).value == Approx(1.0));
    CHECK_THROWS_AS(truncated_sum(2, 5, 0, 1), DomainError);
    CHECK_THROWS_AS(truncated_sum(2, 5, kTruncatedSumMax + 1, 1), CapacityError);
}

TEST_CASE("product form") {
    auto pt = sieve_primes(1000);
    CHECK(product_form(2, 2, 7, 1, pt).value == Approx(1.5625).epsilon(1e-14));
    CHECK(product_form(2, 2, 1, 1, pt).value == Approx(1.0));
    CHECK(product_form(2, 2, 7, 3, pt).value ==
          Approx(1.5625 / 1.5).epsilon(1e-14));
    CHECK_FALSE(product_form(2, 2, 7, 3, pt).degenerate_skip);
    // truncation includes R itself when R is prime
    CHECK(product_form(2, 2, 7, 1, pt).value !=
          Approx(product_form(2, 2, 6, 1, pt).value));
}

TEST_CASE("tail bound closed value and dominance") {
    auto pt = sieve_primes(1000);
    // R = 2, V = e^2: lambda = 1/log 2, V^-lambda = e^{-2/log 2},
    // product = 1 + (k-1) 2^{1/log 2} / 1 = 1 + (k-1) e
    double v = std::exp(2.0);
    for (unsigned k : {2u, 3u}) {
        double expect = std::exp(-2.0 / std::log(2.0)) *
                        (1.0 + (k - 1.0) * std::exp(1.0));
        CHECK(tail_bound(k, 5, 2, v, pt) == Approx(expect).epsilon(1e-12));
    }
    CHECK_THROWS_AS(tail_bound(2, 5, 1, 10.0, pt), DomainError);
    CHECK_THROWS_AS(tail_bound(2, 5, 10, 5.0, pt), DomainError);
    CHECK(tail_bound(2, 5, 30, 10000.0, pt) <
          tail_bound(2, 5, 30, 1000.0, pt));
}

TEST_CASE("sum equals product plus smooth tail (brute force, R <= 30)") {
    auto pt = sieve_primes(1000);
    std::vector<uint64_t> ps = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    for (unsigned k : {2u, 3u}) {
        for (int64_t n : {2LL, 9LL, 35LL, 9973LL}) {
            double sum = 1.0, tail = 0.0;
            for (size_t mask = 1; mask < (1ULL << ps.size()); ++mask) {
                uint64_t q = 1;
                for (size_t i = 0; i < ps.size(); ++i)
                    if (mask & (1ULL << i)) q *= ps[i];
                double a = a_coeff(k, n, q, 1);
                sum += a;
                if (q > 30) tail += std::abs(a);
            }
            double prod = product_form(k, n, 30, 1, pt).value;
            CHECK(sum == Approx(prod).epsilon(1e-12));
            double ts = truncated_sum(k, n, 30, 1).value;
            CHECK(std::abs(ts - prod) <= tail + 1e-12);
        }
    }
}

TEST_CASE("reducible n decays through cutoffs") {
    auto pt = sieve_primes(100000);
    double prev = 1e300;
    for (uint64_t cutoff : {100ULL, 1000ULL, 10000ULL, 100000ULL}) {
        double v = singular_series(2, 9, cutoff, pt).value;
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev < 0.2);  // well on its way to zero
}
