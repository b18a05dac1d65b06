#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace pkpow {

using cdouble = std::complex<double>;

/// Invalid mathematical input: bad modulus, mismatched character domain, ...
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input exceeds a documented capacity bound (memory or running-time budget).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// 64-bit modular arithmetic
// ---------------------------------------------------------------------------

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline int64_t mod_reduce(int64_t n, uint64_t m) {
    int64_t r = n % static_cast<int64_t>(m);
    if (r < 0) r += static_cast<int64_t>(m);
    return r;
}

inline uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// base^k, or nullopt if the exact value would exceed `limit`.
inline std::optional<uint64_t> checked_pow(uint64_t base, unsigned k, uint64_t limit) {
    uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (base != 0 && r > limit / base) return std::nullopt;
        r *= base;
        if (r > limit) return std::nullopt;
    }
    return r;
}

/// Largest r with r^k <= n, computed exactly.
inline uint64_t nth_root_floor(uint64_t n, unsigned k) {
    if (k == 0) throw DomainError("nth_root_floor: k must be positive");
    if (k == 1 || n < 2) return n;
    uint64_t r = static_cast<uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
    // pow() can land one off in either direction; fix up exactly.
    while (r > 0 && !checked_pow(r, k, n)) --r;
    while (checked_pow(r + 1, k, n)) ++r;
    return r;
}

// ---------------------------------------------------------------------------
// Compensated (Neumaier) summation.  Identity batteries hold 1e-9-relative
// equalities over sums of up to 1e6 unit-magnitude terms, so every complex
// sum in the library routes through these accumulators.
// ---------------------------------------------------------------------------

struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

struct ComplexSum {
    KahanSum re, im;
    void add(cdouble z) {
        re.add(z.real());
        im.add(z.imag());
    }
    cdouble value() const { return {re.value(), im.value()}; }
};

// ---------------------------------------------------------------------------
// Deterministic sampler for seeded test batteries.  splitmix64 is fixed by
// its algorithm, unlike <random> distributions, so reports stay byte-stable
// across platforms.
// ---------------------------------------------------------------------------

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// ---------------------------------------------------------------------------
// Opaque parallel-map capability.  The CLI owns the thread budget and hands
// it down; threads == 1 runs inline.  Callers must write to disjoint shards
// so results do not depend on scheduling.
// ---------------------------------------------------------------------------

class Parallel {
  public:
    explicit Parallel(unsigned threads = 1) : threads_(threads ? threads : 1) {}

    unsigned threads() const { return threads_; }

    template <class F>
    void for_chunks(size_t chunk_count, F&& body) const {
        if (chunk_count == 0) return;
        unsigned workers = static_cast<unsigned>(
            std::min<size_t>(threads_, chunk_count));
        if (workers <= 1) {
            for (size_t i = 0; i < chunk_count; ++i) body(i);
            return;
        }
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= chunk_count) break;
                    body(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

  private:
    unsigned threads_;
};

}  // namespace pkpow
