#include "pkpow/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pkpow/characters.hpp"
#include "pkpow/singular.hpp"

namespace pkpow {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

inline cdouble unit_phase(double x) {
    double f = x - std::floor(x);
    double ang = kTwoPi * f;
    return {std::cos(ang), std::sin(ang)};
}

// sinc kernel: integral of e(t eta) over [-d, d]
inline double sinc_kernel(int64_t t, double d) {
    if (t == 0) return 2.0 * d;
    double td = static_cast<double>(t);
    return std::sin(kTwoPi * td * d) / (kPi * td);
}

std::vector<uint64_t> j_powers(unsigned k, uint64_t X) {
    Window w = window(k, X);
    std::vector<uint64_t> jk;
    for (uint64_t j = w.j_min; j <= w.j_max; ++j) {
        uint64_t v = 1;
        for (unsigned i = 0; i < k; ++i) v *= j;
        jk.push_back(v);
    }
    return jk;
}

}  // namespace

// ---------------------------------------------------------------------------
// exponential sums
// ---------------------------------------------------------------------------

cdouble f_sum(unsigned k, uint64_t X, double alpha) {
    if (X > kCircleXMax)
        throw CapacityError("f_sum: X exceeds the 1e7 capacity bound");
    ComplexSum acc;
    for (uint64_t jk : j_powers(k, X))
        acc.add(unit_phase(alpha * static_cast<double>(jk)));
    return acc.value();
}

cdouble s_sum(uint64_t X, double alpha, const PrimeTable& primes) {
    if (primes.limit() < X)
        throw CapacityError("s_sum: prime table is smaller than X");
    Window w = window(2, X);  // I(X) does not depend on k
    const auto& plist = primes.primes();
    size_t i = primes.lower_bound_index(w.m_min);
    ComplexSum acc;
    for (; i < plist.size() && plist[i] <= w.m_max; ++i) {
        double p = static_cast<double>(plist[i]);
        acc.add(std::log(p) * unit_phase(alpha * p));
    }
    return acc.value();
}

cdouble t_rho(uint64_t X, double rho, double eta) {
    if (X > kCircleXMax)
        throw CapacityError("t_rho: X exceeds the 1e7 capacity bound");
    if (rho <= 0.0 || rho > 1.0)
        throw DomainError("t_rho: rho must lie in (0, 1]");
    Window w = window(2, X);
    ComplexSum acc;
    for (uint64_t m = w.m_min; m <= w.m_max; ++m) {
        double md = static_cast<double>(m);
        double weight = rho == 1.0 ? 1.0 : std::pow(md, rho - 1.0);
        acc.add(weight * unit_phase(eta * md));
    }
    return acc.value();
}

// ---------------------------------------------------------------------------
// coefficient vectors
// ---------------------------------------------------------------------------

CoefficientVector coefficients(unsigned k, uint64_t X, const PrimeTable& primes,
                               const Parallel& par) {
    if (X > kCoefficientsXMax)
        throw CapacityError("coefficients: X exceeds the 1e6 capacity bound");
    if (primes.limit() < X)
        throw CapacityError("coefficients: prime table is smaller than X");

    Window w = window(k, X);
    auto jk = j_powers(k, X);
    CoefficientVector cv;
    cv.k = k;
    cv.X = X;
    if (jk.empty()) throw DomainError("coefficients: empty J_k(X); X < 2^k");
    cv.n_min = w.m_min + jk.front();
    cv.n_max = w.m_max + jk.back();
    cv.c.assign(cv.n_max - cv.n_min + 1, 0.0);

    const auto& plist = primes.primes();
    const size_t p_lo = primes.lower_bound_index(w.m_min);
    size_t p_hi = p_lo;
    while (p_hi < plist.size() && plist[p_hi] <= w.m_max) ++p_hi;

    // Deterministic shard split over n; each (j, p) pair lands in one shard,
    // and within a shard contributions arrive in ascending-j order, matching
    // windowed_count bit for bit.
    const uint64_t shard = 1ULL << 20;
    const uint64_t span = cv.n_max - cv.n_min + 1;
    const size_t n_shards = static_cast<size_t>((span + shard - 1) / shard);
    double* c = cv.c.data();
    par.for_chunks(n_shards, [&](size_t si) {
        const uint64_t lo = cv.n_min + si * shard;
        const uint64_t hi = std::min(cv.n_max, lo + shard - 1);
        for (uint64_t v : jk) {
            if (v + w.m_min > hi) break;  // jk ascending: later v only grow
            if (v + w.m_max < lo) continue;
            uint64_t first = (lo > v + w.m_min) ? lo - v : w.m_min;
            uint64_t last = std::min(hi - v, w.m_max);
            size_t i = primes.lower_bound_index(first);
            for (; i < p_hi && plist[i] <= last; ++i)
                c[v + plist[i] - cv.n_min] +=
                    std::log(static_cast<double>(plist[i]));
        }
    });
    return cv;
}

CoefficientVector unit_coefficients(unsigned k, uint64_t X) {
    if (X > kCoefficientsXMax)
        throw CapacityError("unit_coefficients: X exceeds the 1e6 capacity bound");
    Window w = window(k, X);
    auto jk = j_powers(k, X);
    if (jk.empty())
        throw DomainError("unit_coefficients: empty J_k(X); X < 2^k");
    CoefficientVector cv;
    cv.k = k;
    cv.X = X;
    cv.n_min = w.m_min + jk.front();
    cv.n_max = w.m_max + jk.back();
    cv.c.assign(cv.n_max - cv.n_min + 1, 0.0);
    for (uint64_t v : jk)
        for (uint64_t m = w.m_min; m <= w.m_max; ++m)
            cv.c[v + m - cv.n_min] += 1.0;
    return cv;
}

// ---------------------------------------------------------------------------
// dissection
// ---------------------------------------------------------------------------

double default_q(uint64_t X, unsigned k, uint64_t P) {
    double exponent = -4.0 * static_cast<double>(k) + 5.9995;
    return static_cast<double>(X) * std::pow(static_cast<double>(P), exponent);
}

double ArcDissection::major_measure() const {
    KahanSum acc;
    for (const auto& arc : arcs) acc.add(2.0 * arc.half_width);
    return acc.value();
}

ArcDissection dissect(uint64_t X, uint64_t P, double Q) {
    if (P < 1) throw DomainError("dissect: P must be >= 1");
    if (!(Q > 0.0)) throw DomainError("dissect: Q must be positive");
    if (2.0 * static_cast<double>(P) > Q)
        throw DomainError(
            "dissect: overlap rejected, 2P > Q breaks arc disjointness");

    ArcDissection d;
    d.X = X;
    d.P = P;
    d.Q = Q;
    for (uint64_t q = 1; q <= P; ++q)
        for (uint64_t a = 1; a <= q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            Arc arc;
            arc.a = a;
            arc.q = q;
            arc.center = static_cast<double>(a) / static_cast<double>(q);
            arc.half_width = 1.0 / (static_cast<double>(q) * Q);
            d.arcs.push_back(arc);
        }
    std::sort(d.arcs.begin(), d.arcs.end(), [](const Arc& l, const Arc& r) {
        // exact rational comparison a/q < a'/q'
        return static_cast<unsigned __int128>(l.a) * r.q <
               static_cast<unsigned __int128>(r.a) * l.q;
    });

    // Exact disjointness check for adjacent arcs: the gap
    // (a'/q' - a/q) - (1/q + 1/q')/Q >= 0  <=>  (a'q - aq') Q >= q + q'.
    for (size_t i = 0; i + 1 < d.arcs.size(); ++i) {
        const Arc& l = d.arcs[i];
        const Arc& r = d.arcs[i + 1];
        double num = static_cast<double>(r.a * l.q - l.a * r.q);
        if (num * Q < static_cast<double>(l.q + r.q))
            throw DomainError("dissect: adjacent arcs overlap");
    }

    // Minor arcs: complement inside [1/Q, 1 + 1/Q].
    double cursor = 1.0 / Q;
    for (const Arc& arc : d.arcs) {
        double left = arc.center - arc.half_width;
        if (left > cursor) d.minor.emplace_back(cursor, left);
        cursor = std::max(cursor, arc.center + arc.half_width);
    }
    double end = 1.0 + 1.0 / Q;
    if (end > cursor) d.minor.emplace_back(cursor, end);
    return d;
}

// ---------------------------------------------------------------------------
// arc integrals
// ---------------------------------------------------------------------------

double integrate_major(const CoefficientVector& coeff, uint64_t n,
                       const ArcDissection& diss) {
    ComplexSum total;
    for (const Arc& arc : diss.arcs) {
        auto roots = unit_roots(arc.q);
        ComplexSum arc_sum;
        for (uint64_t m = coeff.n_min; m <= coeff.n_max; ++m) {
            double cm = coeff.c[m - coeff.n_min];
            if (cm == 0.0) continue;
            int64_t t = static_cast<int64_t>(m) - static_cast<int64_t>(n);
            uint64_t tr = static_cast<uint64_t>(
                mod_reduce(t * static_cast<int64_t>(arc.a), arc.q));
            arc_sum.add(cm * sinc_kernel(t, arc.half_width) * roots[tr]);
        }
        total.add(arc_sum.value());
    }
    return total.value().real();
}

RSplit r_split(const CoefficientVector& coeff, uint64_t n,
               const ArcDissection& diss) {
    RSplit out;
    out.r = coeff.at(n);
    out.r1 = integrate_major(coeff, n, diss);
    out.r2 = out.r - out.r1;
    return out;
}

// ---------------------------------------------------------------------------
// Hua moments
// ---------------------------------------------------------------------------

HuaMoment hua_moment(unsigned k, uint64_t X, unsigned s) {
    if (s < 1) throw DomainError("hua_moment: s must be >= 1");
    auto jk = j_powers(k, X);
    if (jk.empty()) throw DomainError("hua_moment: empty J_k(X); X < 2^k");

    double tuples = std::pow(static_cast<double>(jk.size()),
                             static_cast<double>(s));
    if (tuples > static_cast<double>(1ULL << 24))  // ~134 MiB of sums
        throw CapacityError("hua_moment: |J|^s enumeration is infeasible");

    // Meet in the middle: multiset of s-fold sums, then sum of squared
    // multiplicities.
    std::vector<uint64_t> sums;
    sums.reserve(static_cast<size_t>(tuples));
    std::vector<size_t> idx(s, 0);  // odometer over J^s
    for (;;) {
        uint64_t total = 0;
        for (unsigned i = 0; i < s; ++i) total += jk[idx[i]];
        sums.push_back(total);
        unsigned pos = 0;
        while (pos < s) {
            if (++idx[pos] < jk.size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == s) break;
    }
    std::sort(sums.begin(), sums.end());
    uint64_t exact = 0;
    for (size_t i = 0; i < sums.size();) {
        size_t j = i;
        while (j < sums.size() && sums[j] == sums[i]) ++j;
        uint64_t mult = j - i;
        exact += mult * mult;
        i = j;
    }

    HuaMoment hm;
    hm.k = k;
    hm.X = X;
    hm.s = s;
    hm.exact_count = exact;
    hm.exact = static_cast<double>(exact);

    // Riemann mean over M points with M > 2s max(j^k): exact for the
    // trigonometric polynomial |F_k|^{2s}.
    uint64_t M = 2 * static_cast<uint64_t>(s) * jk.back() + 1;
    auto roots = unit_roots(M);
    KahanSum mean;
    for (uint64_t i = 0; i < M; ++i) {
        ComplexSum f;
        for (uint64_t v : jk) f.add(roots[(i * (v % M)) % M]);
        double norm2 = std::norm(f.value());
        mean.add(std::pow(norm2, static_cast<double>(s)));
    }
    hm.grid = mean.value() / static_cast<double>(M);

    double expo = 2.0 * static_cast<double>(s) / static_cast<double>(k) - 1.0;
    hm.normalized = hm.exact / std::pow(static_cast<double>(X), expo);
    return hm;
}

// ---------------------------------------------------------------------------
// Bessel inequality pieces
// ---------------------------------------------------------------------------

MinorL2 minor_l2(const CoefficientVector& coeff, const ArcDissection& diss) {
    MinorL2 out;

    // Parseval over a full period.
    KahanSum pars;
    for (double v : coeff.c) pars.add(v * v);
    out.parseval = pars.value();

    // Autocorrelation A(t) = sum_m c_m c_{m+t}, t >= 0.
    const size_t W = coeff.c.size();
    std::vector<double> auto_corr(W, 0.0);
    const double* c = coeff.c.data();
    for (size_t t = 0; t < W; ++t) {
        double s = 0.0;
        const size_t end = W - t;
        for (size_t m = 0; m < end; ++m) s += c[m] * c[m + t];
        auto_corr[t] = s;
    }

    // Major-arc L2 mass: per arc, A(0) 2d + 2 sum_{t>=1} A(t) cos(2 pi t a/q)
    // w(t, d).
    KahanSum major;
    for (const Arc& arc : diss.arcs) {
        auto roots = unit_roots(arc.q);
        KahanSum arc_sum;
        arc_sum.add(auto_corr[0] * 2.0 * arc.half_width);
        for (size_t t = 1; t < W; ++t) {
            if (auto_corr[t] == 0.0) continue;
            uint64_t tr = (t % arc.q) * arc.a % arc.q;
            arc_sum.add(2.0 * auto_corr[t] * roots[tr].real() *
                        sinc_kernel(static_cast<int64_t>(t), arc.half_width));
        }
        major.add(arc_sum.value());
    }
    out.major_l2 = major.value();
    out.bessel = out.parseval - out.major_l2;

    // Left side: sum of r2^2 over the [0.99X, X] window.
    uint64_t n_lo = static_cast<uint64_t>(
        std::ceil(0.99 * static_cast<double>(coeff.X)));
    KahanSum lhs;
    for (uint64_t n = n_lo; n <= coeff.X; ++n) {
        RSplit rs = r_split(coeff, n, diss);
        lhs.add(rs.r2 * rs.r2);
    }
    out.lhs = lhs.value();
    return out;
}

// ---------------------------------------------------------------------------
// main-term comparison
// ---------------------------------------------------------------------------

MainTermComparison main_term_compare(const CoefficientVector& coeff, uint64_t n,
                                     uint64_t P, const ArcDissection& diss,
                                     const PrimeTable& primes) {
    MainTermComparison out;
    out.r1 = integrate_major(coeff, n, diss);
    out.series = truncated_sum(coeff.k, static_cast<int64_t>(n), P, 1).value;
    out.l1 = l_count(coeff.k, coeff.X, n, 1.0);

    Window w = window(coeff.k, coeff.X);
    const auto& plist = primes.primes();
    size_t i = primes.lower_bound_index(w.m_min);
    KahanSum theta;
    for (; i < plist.size() && plist[i] <= w.m_max; ++i)
        theta.add(std::log(static_cast<double>(plist[i])));
    double integers = static_cast<double>(w.m_max - w.m_min + 1);
    out.weight_bridge = theta.value() / integers;

    out.prediction = out.series * out.l1 * out.weight_bridge;
    if (out.prediction != 0.0) {
        out.ratio = out.r1 / out.prediction;
        out.ratio_defined = true;
    }
    return out;
}

}  // namespace pkpow
