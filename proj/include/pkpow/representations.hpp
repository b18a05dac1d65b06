#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pkpow/arith.hpp"
#include "pkpow/common.hpp"
#include "pkpow/singular.hpp"

namespace pkpow {

// ---------------------------------------------------------------------------
// Exact representation counts R_k(n) for n = p + m^k (p prime, m >= 1), batch
// scans, the exceptional set E_k(X), windowed counts over I(X) x J_k(X), the
// sieve bound evaluator and Hardy-Littlewood ratio diagnostics.
// ---------------------------------------------------------------------------

constexpr uint64_t kScanMax = 100'000'000ULL;  // ~213 MiB at the top end

struct RepScanResult {
    unsigned k = 2;
    uint64_t x_max = 0;
    // counts[n] = R_k(n) for 0 <= n <= x_max, saturating at 65535 (far above
    // any attainable count at desk scale; 2 bytes per n keeps 1e8 feasible).
    std::vector<uint16_t> counts;
    std::vector<uint8_t> in_ik;  // 1 iff x^k - n is irreducible (n >= 1)
    std::vector<uint64_t> exceptional;  // sorted; in_ik && counts == 0

    uint64_t count(uint64_t n) const { return n <= x_max ? counts[n] : 0; }
    bool in_Ik(uint64_t n) const { return n <= x_max && in_ik[n] != 0; }
};

/// Exact R_k(n); requires primes.limit() >= n.  m ranges over m^k <= n - 2 so
/// that the prime summand stays >= 2.
uint64_t count_reps(unsigned k, uint64_t n, const PrimeTable& primes);

/// Batch scan over n <= x_max: outer loop over m (m^k < x_max) adds
/// prime-shifted indicators, O(x_max^{1/k} * pi(x_max)) additions.  Workers
/// own disjoint n-shards, so results are independent of the thread count.
RepScanResult scan(unsigned k, uint64_t x_max, const Parallel& par = Parallel{});

/// {n <= x_max : n in I_k and R_k(n) = 0}; |list| is E_k(X).
std::vector<uint64_t> exceptional_set(unsigned k, uint64_t x_max,
                                      const Parallel& par = Parallel{});

// ---------------------------------------------------------------------------
// Windowed counts: I(X) = [X/2, X] cap N, J_k(X) = [X^{1/k}/2, X^{1/k}] cap N
// (integer endpoints: j_min = min{j : (2j)^k >= X}, j_max = floor(X^{1/k})).
// ---------------------------------------------------------------------------

struct Window {
    uint64_t m_min = 0, m_max = 0;  // I(X)
    uint64_t j_min = 0, j_max = 0;  // J_k(X)
};

Window window(unsigned k, uint64_t X);

struct WindowedCount {
    unsigned k = 2;
    uint64_t X = 0;
    uint64_t n = 0;
    double weighted = 0.0;    // r_k(X, n) = sum log p over solutions
    uint64_t unweighted = 0;  // plain solution count over the same set
};

/// r_k(X, n) over n = j^k + p, j in J_k(X), p prime in I(X).  n outside the
/// support returns zeros (not an error).
WindowedCount windowed_count(unsigned k, uint64_t X, uint64_t n,
                             const PrimeTable& primes);

/// L_rho(X, n) = sum m^{rho-1} over n = j^k + m, j in J_k(X), m in I(X)
/// (integer m, no primality).  rho = 1 gives the plain pair count.
double l_count(unsigned k, uint64_t X, uint64_t n, double rho);

/// Sieve-type upper-bound main term:
///   2 prod_{p <= cutoff}(1 - (rho_k(p,n)-1)/(p-1)) * X / log X.
/// The main term is X/log X for the window [1, X], not n^{1/k}/log n; callers
/// comparing against R_k(n) at a single n should note the scale difference.
double selberg_bound(unsigned k, int64_t n, uint64_t X, uint64_t cutoff,
                     const PrimeTable& primes);

/// R_k(n) log n / (S_k(n, cutoff) n^{1/k}); domain error when n is not in I_k
/// (the predicted value is 0 there).
double hl_ratio(unsigned k, uint64_t n, uint64_t series_cutoff,
                const PrimeTable& primes);

/// R_{s,k}(n): ordered s-tuples of positive integers with sum of k-th powers
/// equal to n.  s <= 4, n <= 1e6.
uint64_t count_waring(unsigned s, unsigned k, uint64_t n);

// ---------------------------------------------------------------------------
// Serialization: versioned CSV and a compact binary cache.
// Binary layout (little endian): magic "PKPSCAN1" (8 bytes), u32 version = 1,
// u32 k, u64 x_max, then (x_max + 1) u16 counts.  in_Ik flags and the
// exceptional list are recomputed on load.
// ---------------------------------------------------------------------------

extern const char kScanCsvSchema[];

void write_scan_csv(const RepScanResult& res, std::ostream& os);
void write_scan_cache(const RepScanResult& res, const std::string& path);
RepScanResult read_scan_cache(const std::string& path);

}  // namespace pkpow
