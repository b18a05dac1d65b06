#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "pkpow/arith.hpp"
#include "pkpow/characters.hpp"

using namespace pkpow;
using doctest::Approx;

TEST_CASE("group structure") {
    CharacterGroup g1(1);
    CHECK(g1.size() == 1);
    CHECK(g1.principal().eval(0) == cdouble(1.0, 0.0));

    CharacterGroup g5(5);
    CHECK(g5.size() == 4);
    int principal = 0, order2_real = 0;
    for (size_t i = 0; i < g5.size(); ++i) {
        auto chi = g5.character(i);
        if (chi.is_principal()) ++principal;
        if (chi.order() == 2) {
            ++order2_real;
            for (int a = 0; a < 5; ++a)
                CHECK(chi.eval(a).imag() == Approx(0.0).epsilon(1e-12));
        }
    }
    CHECK(principal == 1);
    CHECK(order2_real == 1);

    CharacterGroup g8(8);
    CHECK(g8.size() == 4);
    // (Z/8)* = C2 x C2: every character squares to the principal one
    for (size_t i = 0; i < g8.size(); ++i) CHECK(g8.character(i).order() <= 2);

    CHECK_THROWS_AS(CharacterGroup(0), DomainError);
    CHECK_THROWS_AS(CharacterGroup(kCharacterGroupMax + 1), CapacityError);
}

TEST_CASE("brute-force multiplication table at q = 8") {
    CharacterGroup g8(8);
    for (size_t i = 0; i < g8.size(); ++i) {
        auto chi = g8.character(i);
        for (int64_t a = 0; a < 8; ++a)
            for (int64_t b = 0; b < 8; ++b) {
                cdouble lhs = chi.eval(a * b % 8);
                cdouble rhs = chi.eval(a) * chi.eval(b);
                CHECK(std::abs(lhs - rhs) < 1e-12);
            }
    }
}

TEST_CASE("conductors") {
    CharacterGroup g6(6);
    for (size_t i = 0; i < g6.size(); ++i) {
        auto chi = g6.character(i);
        CHECK(chi.conductor() == (chi.is_principal() ? 1 : 3));
    }
    CharacterGroup g7(7);
    for (size_t i = 0; i < g7.size(); ++i) {
        auto chi = g7.character(i);
        CHECK(chi.conductor() == (chi.is_principal() ? 1 : 7));
        CHECK(chi.is_primitive() == !chi.is_principal());
    }
    // mod 8: conductors 1, 4, 8, 8 in some order
    CharacterGroup g8(8);
    std::vector<uint64_t> conds;
    for (size_t i = 0; i < g8.size(); ++i)
        conds.push_back(g8.character(i).conductor());
    std::sort(conds.begin(), conds.end());
    CHECK(conds == std::vector<uint64_t>{1, 4, 8, 8});
}

TEST_CASE("conductor is the smallest induced modulus") {
    // chi factors through f | q exactly when it is constant on unit classes
    // mod f; the conductor must be the least such f.
    auto factors_through = [](const DirichletCharacter& chi, uint64_t q,
                              uint64_t f) {
        std::vector<cdouble> vals(f, cdouble(2.0, 2.0));  // sentinel
        for (uint64_t a = 0; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            cdouble v = chi.eval(static_cast<int64_t>(a));
            cdouble& slot = vals[a % f];
            if (slot == cdouble(2.0, 2.0))
                slot = v;
            else if (std::abs(slot - v) > 1e-9)
                return false;
        }
        return true;
    };
    for (uint64_t q : {3ULL, 4ULL, 5ULL, 8ULL, 9ULL, 12ULL, 16ULL, 24ULL,
                       36ULL, 40ULL, 45ULL, 60ULL, 72ULL}) {
        CharacterGroup g(q);
        for (size_t i = 0; i < g.size(); ++i) {
            auto chi = g.character(i);
            uint64_t smallest = 0;
            for (uint64_t f = 1; f <= q; ++f) {
                if (q % f != 0) continue;
                if (factors_through(chi, q, f)) {
                    smallest = f;
                    break;
                }
            }
            CHECK(chi.conductor() == smallest);
        }
    }
}

TEST_CASE("quadratic gauss sums carry the classical sign") {
    // tau(legendre mod p) = sqrt(p) for p = 1 (mod 4), i sqrt(p) otherwise;
    // this pins the orientation of e(x) = e^{2 pi i x}.
    for (uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL}) {
        CharacterGroup g(p);
        for (size_t i = 0; i < g.size(); ++i) {
            auto chi = g.character(i);
            if (chi.order() != 2) continue;
            cdouble tau = gauss_sum(chi);
            cdouble expect = (p % 4 == 1)
                                 ? cdouble(std::sqrt(static_cast<double>(p)), 0.0)
                                 : cdouble(0.0, std::sqrt(static_cast<double>(p)));
            CHECK(std::abs(tau - expect) < 1e-9);
        }
    }
}

TEST_CASE("primitive part values match on units") {
    for (uint64_t q : {6ULL, 12ULL, 36ULL, 40ULL, 45ULL, 96ULL}) {
        CharacterGroup g(q);
        for (size_t i = 0; i < g.size(); ++i) {
            auto chi = g.character(i);
            auto [r, star] = conductor_and_primitive_part(chi);
            CHECK(star.modulus() == r);
            CHECK(star.is_primitive());
            for (uint64_t a = 0; a < q; ++a) {
                if (std::gcd(a, q) != 1) continue;
                CHECK(std::abs(chi.eval(static_cast<int64_t>(a)) -
                               star.eval(static_cast<int64_t>(a))) < 1e-12);
            }
        }
    }
}

TEST_CASE("gauss sums") {
    CharacterGroup g1(1);
    CHECK(gauss_sum(g1.principal()) == cdouble(1.0, 0.0));

    CharacterGroup g5(5);
    for (size_t i = 0; i < g5.size(); ++i) {
        auto chi = g5.character(i);
        if (chi.order() == 2) {
            auto tau = gauss_sum(chi);
            CHECK(tau.real() == Approx(std::sqrt(5.0)).epsilon(1e-12));
            CHECK(tau.imag() == Approx(0.0).epsilon(1e-12));
        }
    }

    // tau(chi) = mu(q/r) chi*(q/r) tau(chi*) for all q <= 60
    for (uint64_t q = 1; q <= 60; ++q) {
        CharacterGroup g(q);
        for (size_t i = 0; i < g.size(); ++i) {
            auto chi = g.character(i);
            auto [r, star] = conductor_and_primitive_part(chi);
            cdouble lhs = gauss_sum(chi);
            cdouble rhs = static_cast<double>(mult_invariants(q / r).mu) *
                          star.eval(static_cast<int64_t>(q / r)) *
                          gauss_sum(star);
            CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("v_sum") {
    CHECK(v_sum(3, 0, 11) == cdouble(11.0, 0.0));
    auto v = v_sum(2, 1, 3);
    CHECK(v.real() == Approx(0.0).epsilon(1e-12));
    CHECK(v.imag() == Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(std::abs(v_sum(2, 1, 2)) < 1e-12);
    CHECK_THROWS_AS(v_sum(2, 1, 0), DomainError);
    CHECK_THROWS_AS(v_sum(2, 1, kVSumMax + 1), CapacityError);
}

TEST_CASE("h_sum") {
    CHECK(h_sum(2, 7, 2).real() == Approx(7.0).epsilon(1e-12));
    CHECK(h_sum(2, 7, 3).real() == Approx(-7.0).epsilon(1e-12));
    CHECK(h_sum(4, 1, 9) == cdouble(1.0, 0.0));

    CharacterGroup g7(7);
    CHECK_THROWS_AS(h_sum(2, g7.principal(), 5, 1), DomainError);

    // batch evaluator agrees with the one-shot path
    auto chi = g7.character(2);
    HSumBatch batch(chi);
    for (int64_t n = -3; n <= 10; ++n)
        CHECK(std::abs(batch.eval(3, n) - h_sum(3, chi, 7, n)) < 1e-10);
}

TEST_CASE("h_sum equals the literal definition") {
    // sum_a chi(a) V_k(a, q) e_q(-n a), computed with no rearrangement
    SplitMix64 rng(99);
    for (uint64_t q : {3ULL, 4ULL, 8ULL, 12ULL, 15ULL, 24ULL, 35ULL, 40ULL}) {
        CharacterGroup g(q);
        auto roots = unit_roots(q);
        for (int rep = 0; rep < 3; ++rep) {
            auto chi = g.character(rng.below(g.size()));
            for (unsigned k : {2u, 3u}) {
                int64_t n = static_cast<int64_t>(rng.below(3 * q)) - static_cast<int64_t>(q);
                cdouble literal{0.0, 0.0};
                for (uint64_t a = 0; a < q; ++a) {
                    cdouble v{0.0, 0.0};
                    for (uint64_t h = 0; h < q; ++h)
                        v += roots[(a * powmod(h, k, q)) % q];
                    uint64_t na = static_cast<uint64_t>(
                        mod_reduce(-n * static_cast<int64_t>(a), q));
                    literal += chi.eval(static_cast<int64_t>(a)) * v * roots[na];
                }
                CHECK(std::abs(h_sum(k, chi, q, n) - literal) <
                      1e-9 * std::max(1.0, std::abs(literal)));
            }
        }
    }
}

TEST_CASE("sigma_sum") {
    CharacterGroup g3(3);
    auto quad = g3.character(1);
    CHECK(sigma_sum(2, quad, 3, 1).real() == Approx(-1.0).epsilon(1e-12));

    CharacterGroup g1(1);
    CHECK(sigma_sum(2, g1.principal(), 1, 5) == cdouble(1.0, 0.0));

    // principal character mod p: sigma = p - rho (h^k - n hits 0 rho times)
    auto pt = sieve_primes(50);
    for (uint64_t p : pt.primes()) {
        CharacterGroup gp(p);
        auto chi0 = gp.principal();
        for (int64_t n = 0; n < static_cast<int64_t>(p); ++n) {
            double expect = static_cast<double>(p) -
                            static_cast<double>(rho_prime(2, p, n));
            CHECK(sigma_sum(2, chi0, p, n).real() == Approx(expect).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(sigma_sum(2, quad, 5, 1), DomainError);
}

TEST_CASE("t_factor route agreement") {
    CharacterGroup g5(5), g3(3);
    for (size_t i = 0; i < g5.size(); ++i) {
        auto chi = g5.character(i);
        if (chi.order() != 2) continue;
        auto tf = t_factor(2, chi, 1);
        CHECK(std::abs(tf.via_h - tf.via_sigma) < 1e-10);
    }
    auto tf3 = t_factor(2, g3.character(1), 2);
    CHECK(std::abs(tf3.via_h - tf3.via_sigma) < 1e-10);

    // imprimitive characters are rejected
    CharacterGroup g6(6);
    for (size_t i = 0; i < g6.size(); ++i)
        CHECK_THROWS_AS(t_factor(2, g6.character(i), 1), DomainError);
}

TEST_CASE("crt product characters") {
    CharacterGroup g3(3), g5(5), g15(15);
    for (size_t i = 0; i < g3.size(); ++i)
        for (size_t j = 0; j < g5.size(); ++j) {
            auto chi = product_character(g3.character(i), g5.character(j), g15);
            for (int64_t a = 0; a < 15; ++a) {
                cdouble expect = g3.character(i).eval(a) * g5.character(j).eval(a);
                CHECK(std::abs(chi.eval(a) - expect) < 1e-12);
            }
        }
    CHECK_THROWS_AS(product_character(g3.character(0), g3.character(1), g15),
                    DomainError);
}

TEST_CASE("induced characters vanish off the new units") {
    CharacterGroup g3(3), g12(12);
    auto chi = induced_character(g3.character(1), g12);
    CHECK(chi.modulus() == 12);
    CHECK(chi.conductor() == 3);
    for (int64_t a = 0; a < 12; ++a) {
        if (std::gcd<int64_t>(a, 12) != 1)
            CHECK(chi.eval(a) == cdouble(0.0, 0.0));
        else
            CHECK(std::abs(chi.eval(a) - g3.character(1).eval(a)) < 1e-12);
    }
}
