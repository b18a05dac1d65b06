#pragma once

#include <cstdint>

#include "pkpow/arith.hpp"
#include "pkpow/common.hpp"

namespace pkpow {

// ---------------------------------------------------------------------------
// The singular series of the prime + k-th power problem:
//
//   S_k(n)      = prod_p (p - rho_k(p, n)) / (p - 1)          (Euler product)
//   S(n, R, r)  = sum_{q <= R, gcd(q, r) = 1} mu(q)/(q phi(q)) H_k(q, n)
//
// plus the multiplicative coefficients A(n, q, r), the truncated product form
// with its r-correction, and the smooth-tail majorant.
// ---------------------------------------------------------------------------

struct TruncatedEulerProduct {
    unsigned k = 2;
    int64_t n = 0;
    uint64_t cutoff = 1;           // prime bound R
    uint64_t excluded_modulus = 1; // coprimality constraint r
    double value = 1.0;
    double tail_estimate = 0.0;
    double lambda = 0.0;           // exponent used by the tail majorant
    bool degenerate_skip = false;  // a division guard fired (see product_form)
};

constexpr uint64_t kSeriesCutoffMax = 10'000'000ULL;
constexpr uint64_t kTruncatedSumMax = 100'000ULL;

/// Local factor (p - rho_k(p, n)) / (p - 1); p = 2 is computed like any prime.
double local_factor(unsigned k, uint64_t p, int64_t n);

/// Truncated Euler product over p <= cutoff.  `primes.limit()` must be
/// >= cutoff.  tail_estimate carries the lambda-majorant at V = cutoff (see
/// tail_bound); the product itself converges only conditionally, so this is
/// a truncation gauge rather than a hard error bound.
TruncatedEulerProduct singular_series(unsigned k, int64_t n, uint64_t cutoff,
                                      const PrimeTable& primes);

/// A(n, q, r) = mu(q)/phi(q) mu((q,r)^2) prod_{p|q}(rho_k(p,n) - 1),
/// defined for squarefree q.
double a_coeff(unsigned k, int64_t n, uint64_t q, uint64_t r);

/// S(n, R, r): only squarefree q contribute; each term evaluates through the
/// multiplicative form mu(q)/phi(q) prod_{p|q}(rho_k(p,n) - 1).
TruncatedEulerProduct truncated_sum(unsigned k, int64_t n, uint64_t R,
                                    uint64_t r);

struct ProductForm {
    double value = 1.0;
    bool degenerate_skip = false;
};

/// prod_{p <= R}(p - rho)/(p - 1) * prod_{p <= R, p | r}(p - 1)/(p - rho).
/// A prime with rho_k(p, n) = p would make the r-correction undefined; such
/// primes are skipped and flagged.  "p <= R" includes R when R is prime.
ProductForm product_form(unsigned k, int64_t n, uint64_t R, uint64_t r,
                         const PrimeTable& primes);

/// Majorant V^{-lambda} prod_{p <= R}(1 + (k-1) p^lambda / (p-1)) with
/// lambda = 1/log R; it dominates sum_{q > V, q squarefree R-smooth}
/// |A(n, q, 1)| because |rho_k(p, n) - 1| <= k - 1 at every prime.
double tail_bound(unsigned k, int64_t n, uint64_t R, double V,
                  const PrimeTable& primes);

}  // namespace pkpow
