#include "pkpow/representations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>

namespace pkpow {

uint64_t count_reps(unsigned k, uint64_t n, const PrimeTable& primes) {
    if (k < 2) throw DomainError("count_reps: k must be >= 2");
    if (n < 2) return 0;
    if (primes.limit() < n)
        throw CapacityError("count_reps: prime table is smaller than n");
    uint64_t count = 0;
    for (uint64_t m = 1;; ++m) {
        auto mk = checked_pow(m, k, n - 2);
        if (!mk) break;
        if (primes.is_prime(n - *mk)) ++count;
    }
    return count;
}

RepScanResult scan(unsigned k, uint64_t x_max, const Parallel& par) {
    if (k < 2) throw DomainError("scan: k must be >= 2");
    if (x_max > kScanMax)
        throw CapacityError("scan: x_max exceeds the 1e8 capacity bound");

    RepScanResult res;
    res.k = k;
    res.x_max = x_max;
    res.counts.assign(x_max + 1, 0);
    res.in_ik.assign(x_max + 1, 1);
    res.in_ik[0] = 0;
    if (x_max < 2) {
        if (x_max >= 1) res.in_ik[1] = 0;  // 1 = 1^p for every p | k
        return res;
    }

    // in_Ik flags: strike the perfect p-th powers for every prime p | k.
    for (auto [p, e] : factorize(k).factors) {
        for (uint64_t m = 1;; ++m) {
            auto mp = checked_pow(m, static_cast<unsigned>(p), x_max);
            if (!mp) break;
            res.in_ik[*mp] = 0;
        }
    }

    auto primes = sieve_primes(x_max, par);
    const auto& plist = primes.primes();

    // m-exponent list: all m with m^k + 2 <= x_max.
    std::vector<uint64_t> mk_list;
    for (uint64_t m = 1;; ++m) {
        auto mk = checked_pow(m, k, x_max - 2);
        if (!mk) break;
        mk_list.push_back(*mk);
    }

    // Workers own disjoint contiguous n-shards; every (m, p) pair lands in
    // exactly one shard, so the merge-free accumulation is deterministic.
    const uint64_t shard = 1ULL << 22;
    const size_t n_shards = static_cast<size_t>((x_max + shard) / shard);
    uint16_t* counts = res.counts.data();
    par.for_chunks(n_shards, [&](size_t si) {
        const uint64_t lo = si * shard;                      // shard covers [lo, hi]
        const uint64_t hi = std::min(x_max, lo + shard - 1);
        for (uint64_t mk : mk_list) {
            if (mk + 2 > hi) break;
            uint64_t p_lo = lo > mk ? lo - mk : 2;
            size_t i = primes.lower_bound_index(p_lo);
            const uint64_t p_hi = hi - mk;
            for (; i < plist.size() && plist[i] <= p_hi; ++i) {
                uint16_t& c = counts[plist[i] + mk];
                if (c != 0xffff) ++c;
            }
        }
    });

    for (uint64_t n = 1; n <= x_max; ++n)
        if (res.in_ik[n] && res.counts[n] == 0) res.exceptional.push_back(n);
    return res;
}

std::vector<uint64_t> exceptional_set(unsigned k, uint64_t x_max,
                                      const Parallel& par) {
    return scan(k, x_max, par).exceptional;
}

// ---------------------------------------------------------------------------
// windowed counts
// ---------------------------------------------------------------------------

Window window(unsigned k, uint64_t X) {
    if (X < 1) throw DomainError("window: X must be positive");
    Window w;
    w.m_min = (X + 1) / 2;
    w.m_max = X;
    w.j_max = nth_root_floor(X, k);
    // j_min = min{ j : (2j)^k >= X }, i.e. the first j with (2j)^k not < X.
    uint64_t j = 1;
    while (checked_pow(2 * j, k, X - 1)) ++j;
    w.j_min = j;
    return w;
}

WindowedCount windowed_count(unsigned k, uint64_t X, uint64_t n,
                             const PrimeTable& primes) {
    if (primes.limit() < X)
        throw CapacityError("windowed_count: prime table is smaller than X");
    Window w = window(k, X);
    WindowedCount out;
    out.k = k;
    out.X = X;
    out.n = n;
    // Plain ascending-j accumulation, term for term the same additions that
    // coefficients() makes into c_n, so the cross-module identity is exact.
    double acc = 0.0;
    for (uint64_t j = w.j_min; j <= w.j_max; ++j) {
        uint64_t jk = 1;
        for (unsigned i = 0; i < k; ++i) jk *= j;
        if (jk + w.m_min > n) continue;
        uint64_t p = n - jk;
        if (p < w.m_min || p > w.m_max) continue;
        if (primes.is_prime(p)) {
            acc += std::log(static_cast<double>(p));
            ++out.unweighted;
        }
    }
    out.weighted = acc;
    return out;
}

double l_count(unsigned k, uint64_t X, uint64_t n, double rho) {
    if (rho <= 0.0 || rho > 1.0)
        throw DomainError("l_count: rho must lie in (0, 1]");
    Window w = window(k, X);
    KahanSum acc;
    for (uint64_t j = w.j_min; j <= w.j_max; ++j) {
        uint64_t jk = 1;
        for (unsigned i = 0; i < k; ++i) jk *= j;
        if (jk + w.m_min > n) continue;
        uint64_t m = n - jk;
        if (m < w.m_min || m > w.m_max) continue;
        acc.add(rho == 1.0 ? 1.0
                           : std::pow(static_cast<double>(m), rho - 1.0));
    }
    return acc.value();
}

double selberg_bound(unsigned k, int64_t n, uint64_t X, uint64_t cutoff,
                     const PrimeTable& primes) {
    if (X < 2) throw DomainError("selberg_bound: X must be >= 2");
    double prod = product_form(k, n, cutoff == 0 ? 1 : cutoff, 1, primes).value;
    double x = static_cast<double>(X);
    return 2.0 * prod * x / std::log(x);
}

double hl_ratio(unsigned k, uint64_t n, uint64_t series_cutoff,
                const PrimeTable& primes) {
    if (!is_in_Ik(k, n))
        throw DomainError("hl_ratio: n is not in I_k (the predicted count is 0)");
    auto series = singular_series(k, static_cast<int64_t>(n), series_cutoff, primes);
    if (!(series.value > 0.0))
        throw DomainError("hl_ratio: truncated singular series is not positive");
    double r = static_cast<double>(count_reps(k, n, primes));
    double nn = static_cast<double>(n);
    return r * std::log(nn) / (series.value * std::pow(nn, 1.0 / k));
}

// ---------------------------------------------------------------------------
// Waring counts
// ---------------------------------------------------------------------------

uint64_t count_waring(unsigned s, unsigned k, uint64_t n) {
    if (s < 1 || s > 4)
        throw CapacityError("count_waring: s must lie in [1, 4]");
    if (k < 1) throw DomainError("count_waring: k must be >= 1");
    if (n > 1'000'000ULL)
        throw CapacityError("count_waring: n exceeds the 1e6 capacity bound");
    if (n < s) return 0;

    auto is_kth_power = [&](uint64_t v) -> bool {
        if (v == 0) return false;
        uint64_t r = nth_root_floor(v, k);
        auto back = checked_pow(r, k, v);
        return back && *back == v;
    };

    if (s == 1) return is_kth_power(n) ? 1 : 0;

    // Table of ordered-pair counts R_{2,k}(j) for j <= n.
    std::vector<uint32_t> pairs(n + 1, 0);
    for (uint64_t a = 1;; ++a) {
        auto ak = checked_pow(a, k, n - 1);
        if (!ak) break;
        for (uint64_t b = 1;; ++b) {
            auto bk = checked_pow(b, k, n - *ak);
            if (!bk) break;
            ++pairs[*ak + *bk];
        }
    }
    if (s == 2) return pairs[n];
    if (s == 3) {
        uint64_t total = 0;
        for (uint64_t a = 1;; ++a) {
            auto ak = checked_pow(a, k, n - 2);
            if (!ak) break;
            total += pairs[n - *ak];
        }
        return total;
    }
    // s == 4: convolution of the pair table at the single point n.
    uint64_t total = 0;
    for (uint64_t j = 2; j + 2 <= n; ++j)
        total += static_cast<uint64_t>(pairs[j]) * pairs[n - j];
    return total;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

const char kScanCsvSchema[] = "pkpow.scan.v1";

void write_scan_csv(const RepScanResult& res, std::ostream& os) {
    os << "# schema=" << kScanCsvSchema << " k=" << res.k
       << " x_max=" << res.x_max << "\n";
    os << "n,R,in_Ik\n";
    for (uint64_t n = 1; n <= res.x_max; ++n)
        os << n << ',' << res.counts[n] << ',' << int(res.in_ik[n]) << '\n';
}

namespace {

constexpr char kCacheMagic[8] = {'P', 'K', 'P', 'S', 'C', 'A', 'N', '1'};

void put_u32(std::ostream& os, uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(b, 4);
}

void put_u64(std::ostream& os, uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(b, 8);
}

uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

}  // namespace

void write_scan_cache(const RepScanResult& res, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_scan_cache: cannot open " + path);
    os.write(kCacheMagic, 8);
    put_u32(os, 1);
    put_u32(os, res.k);
    put_u64(os, res.x_max);
    for (uint64_t n = 0; n <= res.x_max; ++n) {
        char b[2] = {static_cast<char>(res.counts[n] & 0xff),
                     static_cast<char>((res.counts[n] >> 8) & 0xff)};
        os.write(b, 2);
    }
    if (!os) throw std::runtime_error("write_scan_cache: short write to " + path);
}

RepScanResult read_scan_cache(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_scan_cache: cannot open " + path);
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, kCacheMagic, 8) != 0)
        throw std::runtime_error("read_scan_cache: bad magic in " + path);
    uint32_t version = get_u32(is);
    if (version != 1)
        throw std::runtime_error("read_scan_cache: unsupported version in " + path);

    RepScanResult res;
    res.k = get_u32(is);
    res.x_max = get_u64(is);
    if (res.x_max > kScanMax)
        throw std::runtime_error("read_scan_cache: x_max out of range in " + path);
    res.counts.resize(res.x_max + 1);
    for (uint64_t n = 0; n <= res.x_max; ++n) {
        unsigned char b[2];
        is.read(reinterpret_cast<char*>(b), 2);
        res.counts[n] = static_cast<uint16_t>(b[0] | (b[1] << 8));
    }
    if (!is) throw std::runtime_error("read_scan_cache: truncated file " + path);

    // Flags and the exceptional list are derived data; recompute them.
    res.in_ik.assign(res.x_max + 1, 1);
    res.in_ik[0] = 0;
    if (res.x_max >= 1) {
        for (auto [p, e] : factorize(res.k).factors)
            for (uint64_t m = 1;; ++m) {
                auto mp = checked_pow(m, static_cast<unsigned>(p), res.x_max);
                if (!mp) break;
                res.in_ik[*mp] = 0;
            }
    }
    for (uint64_t n = 1; n <= res.x_max; ++n)
        if (res.in_ik[n] && res.counts[n] == 0) res.exceptional.push_back(n);
    return res;
}

}  // namespace pkpow
