// Measurement tool behind the frozen constants in include/pkpow/calibration.hpp.
//
// Every battery below prints the raw measurement at its calibration scale and
// the value observed at the larger re-assertion scale.  The ratio-band battery
// deliberately avoids the library: it recounts representations and local root
// numbers with naive loops so the frozen band does not inherit a library bug.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <vector>

#include "pkpow/arith.hpp"
#include "pkpow/characters.hpp"
#include "pkpow/circle.hpp"
#include "pkpow/representations.hpp"
#include "pkpow/singular.hpp"

using namespace pkpow;

namespace {

// ---------------------------------------------------------------------------
// Self-contained naive arithmetic for the oracle battery.
// ---------------------------------------------------------------------------

bool naive_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t naive_rep_count(unsigned k, uint64_t n,
                         const std::vector<char>& prime) {
    uint64_t count = 0;
    for (uint64_t m = 1;; ++m) {
        uint64_t mk = 1;
        bool over = false;
        for (unsigned i = 0; i < k && !over; ++i) {
            mk *= m;
            if (mk > n) over = true;
        }
        if (over || mk + 2 > n) break;
        if (prime[n - mk]) ++count;
    }
    return count;
}

uint64_t naive_rho(unsigned k, uint64_t p, uint64_t n) {
    uint64_t count = 0;
    for (uint64_t h = 0; h < p; ++h) {
        uint64_t hp = 1;
        for (unsigned i = 0; i < k; ++i) hp = hp * h % p;
        if (hp == n % p) ++count;
    }
    return count;
}

bool naive_square(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    for (uint64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
        if (c * c == n) return true;
    return false;
}

// Median ratio-band oracle at X: everything recomputed from scratch.
void ratio_band_oracle(uint64_t X, uint64_t cutoff) {
    std::vector<char> prime(X + 1, 0);
    for (uint64_t n = 2; n <= X; ++n) prime[n] = naive_prime(n) ? 1 : 0;

    std::vector<uint64_t> small_primes;
    for (uint64_t p = 2; p <= cutoff; ++p)
        if (prime[p]) small_primes.push_back(p);

    std::vector<double> ratios;
    double max_factor = 0.0;
    for (uint64_t n = (X + 1) / 2; n <= X; ++n) {
        if (naive_square(n)) continue;  // k = 2: reducible
        uint64_t r = naive_rep_count(2, n, prime);
        if (r == 0) continue;  // exceptional
        double series = 1.0;
        for (uint64_t p : small_primes)
            series *= (static_cast<double>(p) -
                       static_cast<double>(naive_rho(2, p, n))) /
                      static_cast<double>(p - 1);
        double ratio = static_cast<double>(r) * std::log(static_cast<double>(n)) /
                       (series * std::sqrt(static_cast<double>(n)));
        ratios.push_back(ratio);
        if (n >= 10000) max_factor = std::max(max_factor, ratio);
    }
    std::sort(ratios.begin(), ratios.end());
    std::printf("[ratio-band] X=%llu cutoff=%llu samples=%zu median=%.6f "
                "p5=%.6f p95=%.6f min=%.6f max=%.6f max(n>=1e4)=%.6f\n",
                (unsigned long long)X, (unsigned long long)cutoff,
                ratios.size(), ratios[ratios.size() / 2],
                ratios[ratios.size() / 20], ratios[ratios.size() * 19 / 20],
                ratios.front(), ratios.back(), max_factor);
}

}  // namespace

int main() {
    std::printf("== ratio band (independent naive oracle) ==\n");
    ratio_band_oracle(10000, 1000);

    std::printf("\n== library median at the assertion scale ==\n");
    {
        auto pt = sieve_primes(100000);
        auto sc = scan(2, 100000);
        std::vector<double> ratios;
        double worst = 0.0;
        for (uint64_t n = 50000; n <= 100000; ++n) {
            if (!sc.in_Ik(n) || sc.count(n) == 0) continue;
            double ratio = hl_ratio(2, n, 1000, pt);
            ratios.push_back(ratio);
            worst = std::max(worst, ratio);
        }
        std::sort(ratios.begin(), ratios.end());
        std::printf("[ratio-band-lib] X=1e5 samples=%zu median=%.6f max=%.6f\n",
                    ratios.size(), ratios[ratios.size() / 2], worst);
    }

    std::printf("\n== eq-2 style factor (library, X=1e5) ==\n");
    {
        auto pt = sieve_primes(100000);
        auto sc = scan(2, 100000);
        double worst = 0.0;
        uint64_t argmax = 0;
        for (uint64_t n = 10000; n <= 100000; ++n) {
            if (!sc.in_Ik(n) || sc.count(n) == 0) continue;
            double ratio = hl_ratio(2, n, 1000, pt);
            if (ratio > worst) {
                worst = ratio;
                argmax = n;
            }
        }
        std::printf("[eq2-factor] max R log n / (S sqrt n) over n in [1e4,1e5]"
                    " = %.6f at n=%llu\n",
                    worst, (unsigned long long)argmax);
    }

    std::printf("\n== rational approximation constant ==\n");
    for (unsigned k : {2u, 3u}) {
        for (uint64_t X : {1024ULL, 4096ULL}) {
            double Q = default_q(X, k, 8);
            double worst = 0.0;
            for (uint64_t q = 1; q <= 12; ++q)
                for (uint64_t a = 1; a <= q; ++a) {
                    if (std::gcd(a, q) != 1) continue;
                    cdouble v = v_sum(k, static_cast<int64_t>(a), q);
                    for (double frac : {-1.0, -0.5, -0.1, 0.0, 0.1, 0.5, 1.0}) {
                        double eta = frac / (static_cast<double>(q) * Q);
                        cdouble lhs =
                            f_sum(k, X, static_cast<double>(a) / q + eta);
                        cdouble main =
                            v / static_cast<double>(q) * f_sum(k, X, eta);
                        double scale =
                            static_cast<double>(q) *
                            (1.0 + static_cast<double>(X) * std::abs(eta));
                        worst = std::max(worst, std::abs(lhs - main) / scale);
                    }
                }
            std::printf("[rational-approx] k=%u X=%llu worst=%.9f\n", k,
                        (unsigned long long)X, worst);
        }
    }

    std::printf("\n== series lower constant ==\n");
    {
        auto pt = sieve_primes(10000);
        for (unsigned k : {2u, 3u}) {
            SplitMix64 rng(0x51ab17c3ULL ^ 7);  // same stream as the suite
            double min_1e3 = 1e300, min_1e4 = 1e300;
            int taken = 0;
            while (taken < 100) {
                uint64_t n = 2 + rng.below(1000000);
                if (!is_in_Ik(k, n)) continue;
                ++taken;
                for (uint64_t P : {1000ULL, 10000ULL}) {
                    double v =
                        product_form(k, static_cast<int64_t>(n), P, 1, pt).value *
                        std::pow(std::log(static_cast<double>(P)),
                                 static_cast<double>(k));
                    (P == 1000 ? min_1e3 : min_1e4) =
                        std::min(P == 1000 ? min_1e3 : min_1e4, v);
                }
            }
            std::printf("[series-lower] k=%u min(P=1e3)=%.9f min(P=1e4)=%.9f\n",
                        k, min_1e3, min_1e4);
        }
    }

    std::printf("\n== power-omega normalization ==\n");
    for (uint64_t X : {10000ULL, 100000ULL}) {
        auto po = sum_power_omega(X, 2);
        std::printf("[power-omega] X=%llu sum=%llu normalized=%.9f\n",
                    (unsigned long long)X, (unsigned long long)po.sum,
                    po.normalized);
    }

    std::printf("\n== induced transform sum ==\n");
    {
        CharacterGroup g3(3);
        auto chi3 = g3.character(1);
        const unsigned k = 2;
        for (int64_t n : {123457LL, 150001LL}) {
            for (uint64_t P : {200ULL, 2000ULL}) {
                KahanSum sum;
                for (uint64_t q = 3; q <= P; q += 3) {
                    CharacterGroup gq(q);
                    auto lifted = induced_character(chi3, gq);
                    sum.add(std::abs(gauss_sum(lifted.conjugate())) *
                            std::abs(h_sum(k, lifted, q, n)) /
                            (static_cast<double>(q) *
                             static_cast<double>(gq.phi())));
                }
                double norm =
                    sum.value() / std::pow(std::log(static_cast<double>(P)),
                                           static_cast<double>(k));
                std::printf("[induced-sum] P=%llu n=%lld sum=%.9f "
                            "normalized=%.9f\n",
                            (unsigned long long)P, (long long)n, sum.value(),
                            norm);
            }
        }
    }

    std::printf("\n== main-term band and r2 threshold (k=2, X=2^14, P=8) ==\n");
    {
        auto pt = sieve_primes(1 << 15);
        const unsigned k = 2;
        const uint64_t X = 1 << 14;
        auto cv = coefficients(k, X, pt);
        auto d = dissect(X, 8, default_q(X, k, 8));
        uint64_t n_lo =
            static_cast<uint64_t>(std::ceil(0.99 * static_cast<double>(X)));
        double lo = 1e300, hi = -1e300, worst_r2 = 0.0;
        int used = 0;
        for (uint64_t n = n_lo; n <= X; ++n) {
            if (cv.at(n) <= 0.0) continue;
            ++used;
            auto rs = r_split(cv, n, d);
            worst_r2 = std::max(worst_r2, std::abs(rs.r2) / rs.r);
            auto mt = main_term_compare(cv, n, 8, d, pt);
            if (mt.ratio_defined) {
                lo = std::min(lo, mt.ratio);
                hi = std::max(hi, mt.ratio);
            }
        }
        std::printf("[main-term] window n in [%llu, %llu] used=%d "
                    "ratio-range=[%.9f, %.9f] max|r2/r|=%.9f\n",
                    (unsigned long long)n_lo, (unsigned long long)X, used, lo,
                    hi, worst_r2);
    }

    std::printf("\n== hua normalized trend (k=2, s=2) ==\n");
    for (uint64_t X : {1024ULL, 4096ULL, 16384ULL}) {
        auto hm = hua_moment(2, X, 2);
        std::printf("[hua-trend] X=%llu exact=%llu normalized=%.9f\n",
                    (unsigned long long)X, (unsigned long long)hm.exact_count,
                    hm.normalized);
    }

    return 0;
}
