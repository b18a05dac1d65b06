#include "pkpow/singular.hpp"

#include <cmath>
#include <numeric>

namespace pkpow {

double local_factor(unsigned k, uint64_t p, int64_t n) {
    uint64_t rho = rho_prime(k, p, n);
    return (static_cast<double>(p) - static_cast<double>(rho)) /
           static_cast<double>(p - 1);
}

TruncatedEulerProduct singular_series(unsigned k, int64_t n, uint64_t cutoff,
                                      const PrimeTable& primes) {
    if (n < 1) throw DomainError("singular_series: n must be positive");
    if (cutoff > kSeriesCutoffMax)
        throw CapacityError("singular_series: cutoff exceeds the 1e7 capacity bound");
    if (primes.limit() < cutoff)
        throw CapacityError("singular_series: prime table is smaller than the cutoff");

    TruncatedEulerProduct out;
    out.k = k;
    out.n = n;
    out.cutoff = cutoff;
    double value = 1.0;
    for (uint64_t p : primes.primes()) {
        if (p > cutoff) break;
        value *= local_factor(k, p, n);
    }
    out.value = value;
    if (cutoff >= 2) {
        out.lambda = 1.0 / std::log(static_cast<double>(cutoff));
        out.tail_estimate =
            tail_bound(k, n, cutoff, static_cast<double>(cutoff), primes);
    }
    return out;
}

double a_coeff(unsigned k, int64_t n, uint64_t q, uint64_t r) {
    if (q == 0) throw DomainError("a_coeff: q must be positive");
    auto mi = mult_invariants(q);
    if (q > 1 && mi.mu == 0)
        throw DomainError("a_coeff: q must be squarefree");
    // mu((q, r)^2) is 1 when gcd(q, r) = 1 and 0 otherwise: the gcd divides
    // the squarefree q, so its square is squarefree only when it equals 1.
    if (std::gcd(q, r) != 1) return 0.0;
    double val = static_cast<double>(mi.mu) / static_cast<double>(mi.phi);
    for (auto [p, e] : factorize(q).factors)
        val *= static_cast<double>(rho_prime(k, p, n)) - 1.0;
    return val;
}

TruncatedEulerProduct truncated_sum(unsigned k, int64_t n, uint64_t R,
                                    uint64_t r) {
    if (R == 0) throw DomainError("truncated_sum: R must be positive");
    if (R > kTruncatedSumMax)
        throw CapacityError("truncated_sum: R exceeds the 1e5 capacity bound");

    TruncatedEulerProduct out;
    out.k = k;
    out.n = n;
    out.cutoff = R;
    out.excluded_modulus = r;

    // Smallest-prime-factor sieve drives the squarefree enumeration.
    std::vector<uint32_t> spf(R + 1, 0);
    for (uint64_t p = 2; p <= R; ++p) {
        if (spf[p]) continue;
        for (uint64_t m = p; m <= R; m += p)
            if (!spf[m]) spf[m] = static_cast<uint32_t>(p);
    }

    // Per-prime (rho - 1) values, filled on first use.
    std::vector<double> rho_m1(R + 1, 0.0);
    std::vector<uint8_t> have(R + 1, 0);

    KahanSum acc;
    acc.add(1.0);  // q = 1
    for (uint64_t q = 2; q <= R; ++q) {
        double term = 1.0;
        uint64_t phi = 1;
        int mu = 1;
        uint64_t m = q;
        bool squarefree = true, coprime = true;
        while (m > 1) {
            uint64_t p = spf[m];
            m /= p;
            if (m % p == 0) {
                squarefree = false;
                break;
            }
            if (r % p == 0) {
                coprime = false;
                break;
            }
            if (!have[p]) {
                rho_m1[p] = static_cast<double>(rho_prime(k, p, n)) - 1.0;
                have[p] = 1;
            }
            term *= rho_m1[p];
            phi *= (p - 1);
            mu = -mu;
        }
        if (!squarefree || !coprime) continue;
        acc.add(static_cast<double>(mu) * term / static_cast<double>(phi));
    }
    out.value = acc.value();
    return out;
}

ProductForm product_form(unsigned k, int64_t n, uint64_t R, uint64_t r,
                         const PrimeTable& primes) {
    if (R == 0) throw DomainError("product_form: R must be positive");
    if (primes.limit() < R)
        throw CapacityError("product_form: prime table is smaller than R");
    ProductForm out;
    double value = 1.0;
    for (uint64_t p : primes.primes()) {
        if (p > R) break;
        uint64_t rho = rho_prime(k, p, n);
        double num = static_cast<double>(p) - static_cast<double>(rho);
        value *= num / static_cast<double>(p - 1);
        if (r % p == 0) {
            if (rho == p) {
                out.degenerate_skip = true;  // (p-1)/(p-rho) undefined; skip
                continue;
            }
            value *= static_cast<double>(p - 1) / num;
        }
    }
    out.value = value;
    return out;
}

double tail_bound(unsigned k, int64_t n, uint64_t R, double V,
                  const PrimeTable& primes) {
    (void)n;  // the majorant replaces |rho - 1| by its uniform bound k - 1
    if (R < 2) throw DomainError("tail_bound: R must be >= 2");
    if (V < static_cast<double>(R))
        throw DomainError("tail_bound: V must be >= R");
    if (primes.limit() < R)
        throw CapacityError("tail_bound: prime table is smaller than R");
    double lambda = 1.0 / std::log(static_cast<double>(R));
    double prod = 1.0;
    for (uint64_t p : primes.primes()) {
        if (p > R) break;
        prod *= 1.0 + (static_cast<double>(k) - 1.0) *
                          std::pow(static_cast<double>(p), lambda) /
                          static_cast<double>(p - 1);
    }
    return std::pow(V, -lambda) * prod;
}

}  // namespace pkpow
