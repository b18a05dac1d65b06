#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pkpow/common.hpp"

namespace pkpow {

// ---------------------------------------------------------------------------
// PrimeTable: primality predicate plus the ascending prime list up to `limit`.
// Backbone of every scan; immutable after construction and safe to share
// across concurrent readers.  Storage is an odds-only bitmap (1 bit per odd
// number) plus the prime list itself, so the documented capacity bound is
//   limit <= 1e9   (~63 MiB bitmap + ~406 MiB prime list at the top end;
//                   1e8 costs ~52 MiB total).
// ---------------------------------------------------------------------------
class PrimeTable {
  public:
    PrimeTable() = default;

    uint64_t limit() const { return limit_; }
    const std::vector<uint64_t>& primes() const { return primes_; }
    size_t count() const { return primes_.size(); }

    bool is_prime(uint64_t n) const {
        if (n < 2 || n > limit_) return false;
        if (n == 2) return true;
        if ((n & 1) == 0) return false;
        uint64_t i = n >> 1;
        return (odd_bits_[i >> 6] >> (i & 63)) & 1;
    }

    /// Index of the first listed prime >= x (== count() when none).
    size_t lower_bound_index(uint64_t x) const;

  private:
    friend PrimeTable sieve_primes(uint64_t, const Parallel&);
    uint64_t limit_ = 0;
    std::vector<uint64_t> odd_bits_;  // bit i <-> the odd number 2i+1
    std::vector<uint64_t> primes_;
};

constexpr uint64_t kSieveLimitMax = 1'000'000'000ULL;

/// Segmented odds-only sieve of Eratosthenes.  Segment marking may run on the
/// supplied worker pool; every call returns the identical table.
PrimeTable sieve_primes(uint64_t limit, const Parallel& par = Parallel{});

// ---------------------------------------------------------------------------
// Factorization and multiplicative functions
// ---------------------------------------------------------------------------

struct Factorization {
    uint64_t n = 1;
    std::vector<std::pair<uint64_t, unsigned>> factors;  // ascending primes
};

constexpr uint64_t kFactorizeMax = 1'000'000'000'000ULL;

/// Trial division with a 2-3-5 wheel; exact for n <= 1e12.
Factorization factorize(uint64_t n);

struct MultInvariants {
    int mu = 1;          // Moebius
    uint64_t phi = 1;    // Euler totient
    unsigned omega = 0;  // number of distinct prime divisors
};

MultInvariants mult_invariants(uint64_t n);

// ---------------------------------------------------------------------------
// Root counting: rho_k(d, n) = |{h mod d : h^k == n (mod d)}|
// ---------------------------------------------------------------------------

struct RootCount {
    unsigned k = 1;
    uint64_t d = 1;
    int64_t n = 0;
    uint64_t count = 0;
};

constexpr uint64_t kRootCountExhaustiveMax = 10'000'000ULL;

/// Exhaustive count over h in [0, d).  d <= 1e7.
uint64_t root_count_exhaustive(unsigned k, uint64_t d, int64_t n);

/// rho_k(p, n) for prime p in O(log p): the k-th power map on F_p* is
/// g-to-1 onto the index-g subgroup, g = gcd(k, p-1).
uint64_t rho_prime(unsigned k, uint64_t p, int64_t n);

/// rho_k(d, n).  Squarefree d multiplies per-prime counts (CRT); any other d
/// falls back to the exhaustive path.  Negative n is reduced mod d first.
RootCount root_count(unsigned k, uint64_t d, int64_t n);

// ---------------------------------------------------------------------------
// Irreducibility of x^k - n over Q
// ---------------------------------------------------------------------------

/// Exact test for n == m^p (integer root extraction, never floating point
/// alone).
bool is_perfect_power(uint64_t n, unsigned p);

/// n is in I_k iff x^k - n is irreducible over Q.  For n >= 1 this holds
/// exactly when n is not a perfect p-th power for any prime p | k; the
/// classical extra reducible case (4 | k with n = -4c^4) needs a negative
/// leading constant and cannot occur for positive n.
bool is_in_Ik(unsigned k, uint64_t n);

// ---------------------------------------------------------------------------
// sum over n <= X of A^omega(n), with its X (log X)^{A-1} normalization
// ---------------------------------------------------------------------------

struct PowerOmegaSum {
    uint64_t x = 0;
    unsigned a = 1;
    uint64_t sum = 0;
    double normalized = 0.0;
};

constexpr uint64_t kPowerOmegaMax = 100'000'000ULL;

PowerOmegaSum sum_power_omega(uint64_t x, unsigned a);

}  // namespace pkpow
