#include "pkpow/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pkpow {

// ---------------------------------------------------------------------------
// sieve
// ---------------------------------------------------------------------------

namespace {

// Simple byte sieve, used for base primes up to sqrt(limit).
std::vector<uint64_t> small_primes(uint64_t limit) {
    std::vector<uint8_t> mark(limit + 1, 1);
    std::vector<uint64_t> out;
    if (limit < 2) return out;
    mark[0] = mark[1] = 0;
    for (uint64_t i = 2; i * i <= limit; ++i)
        if (mark[i])
            for (uint64_t j = i * i; j <= limit; j += i) mark[j] = 0;
    for (uint64_t i = 2; i <= limit; ++i)
        if (mark[i]) out.push_back(i);
    return out;
}

}  // namespace

size_t PrimeTable::lower_bound_index(uint64_t x) const {
    return static_cast<size_t>(
        std::lower_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

PrimeTable sieve_primes(uint64_t limit, const Parallel& par) {
    if (limit < 2) throw CapacityError("sieve_primes: limit must be >= 2");
    if (limit > kSieveLimitMax)
        throw CapacityError("sieve_primes: limit exceeds the 1e9 capacity bound");

    PrimeTable table;
    table.limit_ = limit;

    const uint64_t n_odds = (limit + 1) / 2;  // odd numbers 1, 3, ..., <= limit
    const uint64_t n_words = (n_odds + 63) / 64;
    table.odd_bits_.assign(n_words, ~0ULL);

    auto base = small_primes(isqrt_u64(limit));

    // Mark composites segment by segment; segments are word-aligned so
    // workers never touch the same word.
    constexpr uint64_t kWordsPerSeg = 1ULL << 15;  // 2 MiB of odd numbers
    const uint64_t n_segs = (n_words + kWordsPerSeg - 1) / kWordsPerSeg;
    uint64_t* bits = table.odd_bits_.data();

    par.for_chunks(n_segs, [&](size_t seg) {
        const uint64_t w0 = seg * kWordsPerSeg;
        const uint64_t w1 = std::min(n_words, w0 + kWordsPerSeg);
        const uint64_t i0 = w0 * 64;           // first odd index in segment
        const uint64_t i1 = std::min(n_odds, w1 * 64);
        for (uint64_t p : base) {
            if (p == 2) continue;
            // first odd multiple of p at index >= max(i0, index of p^2)
            uint64_t start = (p * p) / 2;
            if (start < i0) {
                uint64_t lo = 2 * i0 + 1;  // first odd value in segment
                uint64_t first = ((lo + p - 1) / p) * p;
                if ((first & 1) == 0) first += p;
                start = first / 2;
            }
            for (uint64_t i = start; i < i1; i += p)
                bits[i >> 6] &= ~(1ULL << (i & 63));
        }
    });

    // 1 is not prime; clear unused tail bits past the last odd <= limit.
    table.odd_bits_[0] &= ~1ULL;
    if (n_odds % 64)
        table.odd_bits_[n_words - 1] &= (1ULL << (n_odds % 64)) - 1;

    table.primes_.reserve(static_cast<size_t>(
        limit < 17 ? 8 : static_cast<double>(limit) / (std::log(static_cast<double>(limit)) - 1.1)));
    table.primes_.push_back(2);
    for (uint64_t w = 0; w < n_words; ++w) {
        uint64_t word = table.odd_bits_[w];
        while (word) {
            uint64_t b = static_cast<uint64_t>(__builtin_ctzll(word));
            table.primes_.push_back((w * 64 + b) * 2 + 1);
            word &= word - 1;
        }
    }
    return table;
}

// ---------------------------------------------------------------------------
// factorization
// ---------------------------------------------------------------------------

Factorization factorize(uint64_t n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    if (n > kFactorizeMax)
        throw CapacityError("factorize: n exceeds the 1e12 capacity bound");

    Factorization f;
    f.n = n;
    auto strip = [&](uint64_t p) {
        if (n % p) return;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    strip(5);
    // 2-3-5 wheel
    static constexpr uint64_t wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    uint64_t p = 7;
    for (unsigned w = 0; p * p <= n; p += wheel[w], w = (w + 1) & 7) strip(p);
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

MultInvariants mult_invariants(uint64_t n) {
    auto f = factorize(n);
    MultInvariants mi;
    mi.omega = static_cast<unsigned>(f.factors.size());
    for (auto [p, e] : f.factors) {
        mi.phi *= (p - 1);
        for (unsigned i = 1; i < e; ++i) mi.phi *= p;
        mi.mu = (e > 1) ? 0 : -mi.mu;
    }
    return mi;
}

// ---------------------------------------------------------------------------
// root counting
// ---------------------------------------------------------------------------

uint64_t root_count_exhaustive(unsigned k, uint64_t d, int64_t n) {
    if (d == 0) throw DomainError("root_count: modulus must be positive");
    if (d > kRootCountExhaustiveMax)
        throw CapacityError("root_count: exhaustive path is limited to d <= 1e7");
    if (d == 1) return 1;
    uint64_t target = static_cast<uint64_t>(mod_reduce(n, d));
    uint64_t count = 0;
    for (uint64_t h = 0; h < d; ++h)
        if (powmod(h, k, d) == target) ++count;
    return count;
}

uint64_t rho_prime(unsigned k, uint64_t p, int64_t n) {
    uint64_t r = static_cast<uint64_t>(mod_reduce(n, p));
    if (p == 2) return 1;  // h^k == h (mod 2): exactly h == n
    if (r == 0) return 1;  // only h == 0
    uint64_t g = std::gcd<uint64_t>(k, p - 1);
    return powmod(r, (p - 1) / g, p) == 1 ? g : 0;
}

RootCount root_count(unsigned k, uint64_t d, int64_t n) {
    if (d == 0) throw DomainError("root_count: modulus must be positive");
    if (k == 0) throw DomainError("root_count: k must be >= 1");
    RootCount rc{k, d, n, 0};
    if (d == 1) {
        rc.count = 1;
        return rc;
    }
    auto f = factorize(d);
    bool squarefree = std::all_of(f.factors.begin(), f.factors.end(),
                                  [](auto pe) { return pe.second == 1; });
    if (squarefree) {
        uint64_t c = 1;
        for (auto [p, e] : f.factors) c *= rho_prime(k, p, n);
        rc.count = c;
    } else {
        rc.count = root_count_exhaustive(k, d, n);
    }
    return rc;
}

// ---------------------------------------------------------------------------
// irreducibility of x^k - n
// ---------------------------------------------------------------------------

bool is_perfect_power(uint64_t n, unsigned p) {
    if (p == 0) throw DomainError("is_perfect_power: exponent must be positive");
    if (p == 1 || n == 0 || n == 1) return true;
    uint64_t r = nth_root_floor(n, p);
    auto back = checked_pow(r, p, n);
    return back && *back == n;
}

bool is_in_Ik(unsigned k, uint64_t n) {
    if (k < 2) throw DomainError("is_in_Ik: k must be >= 2");
    if (n == 0) throw DomainError("is_in_Ik: n must be positive");
    auto f = factorize(k);
    for (auto [p, e] : f.factors)
        if (is_perfect_power(n, static_cast<unsigned>(p))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// sum of A^omega(n)
// ---------------------------------------------------------------------------

PowerOmegaSum sum_power_omega(uint64_t x, unsigned a) {
    if (x < 3) throw DomainError("sum_power_omega: X must be >= 3");
    if (x > kPowerOmegaMax)
        throw CapacityError("sum_power_omega: X exceeds the 1e8 capacity bound");
    if (a == 0) throw DomainError("sum_power_omega: A must be >= 1");

    // omega(n) <= 8 for n <= 1e8, so a byte per n suffices.
    std::vector<uint8_t> omega(x + 1, 0);
    for (uint64_t p = 2; p <= x; ++p) {
        if (omega[p] != 0) continue;  // composite with a smaller prime factor
        for (uint64_t m = p; m <= x; m += p) ++omega[m];
    }

    uint64_t pw[16];
    pw[0] = 1;
    for (int i = 1; i < 16; ++i) pw[i] = pw[i - 1] * a;

    uint64_t sum = 0;
    for (uint64_t n = 1; n <= x; ++n) sum += pw[omega[n]];

    PowerOmegaSum res;
    res.x = x;
    res.a = a;
    res.sum = sum;
    double lx = std::log(static_cast<double>(x));
    res.normalized = static_cast<double>(sum) /
                     (static_cast<double>(x) * std::pow(lx, static_cast<double>(a) - 1.0));
    return res;
}

}  // namespace pkpow
