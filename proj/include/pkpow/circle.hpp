#pragma once

#include <cstdint>
#include <vector>

#include "pkpow/arith.hpp"
#include "pkpow/common.hpp"
#include "pkpow/representations.hpp"

namespace pkpow {

// ---------------------------------------------------------------------------
// Exponential sums S(alpha), F_k(alpha), T_rho(eta); the major/minor-arc
// dissection; closed-form major-arc integrals; the decomposition
// r = r1 + r2; Hua moments; and the main-term comparison.
//
// Arc integrals use the sinc kernel: the integrand is a trigonometric
// polynomial with known coefficients, so
//   int_{a/q-d}^{a/q+d} e(t alpha) d alpha = e_q(t a) w(t, d),
//   w(0, d) = 2d,  w(t, d) = sin(2 pi t d) / (pi t),
// and no quadrature tolerance enters the primary path.
// ---------------------------------------------------------------------------

struct Arc {
    uint64_t a = 1, q = 1;
    double center = 0.0;      // a / q
    double half_width = 0.0;  // 1 / (q Q)
};

struct ArcDissection {
    uint64_t X = 0;
    uint64_t P = 1;
    double Q = 2.0;
    std::vector<Arc> arcs;  // sorted by center; pairwise disjoint
    // closed complement of the arc union inside [1/Q, 1 + 1/Q]
    std::vector<std::pair<double, double>> minor;

    double major_measure() const;
};

/// Default second parameter Q = X P^{-4k+5.9995}.
double default_q(uint64_t X, unsigned k, uint64_t P);

/// Major arcs [a/q - 1/(qQ), a/q + 1/(qQ)] for q <= P, gcd(a, q) = 1.
/// Requires 2P <= Q, which forces pairwise disjointness (checked exactly:
/// |a/q - a'/q'| >= 1/(qq') for distinct reduced fractions, so the integer
/// comparison (a'q - aq') Q >= q + q' settles every adjacent pair).
ArcDissection dissect(uint64_t X, uint64_t P, double Q);

struct CoefficientVector {
    unsigned k = 2;
    uint64_t X = 0;
    uint64_t n_min = 0, n_max = 0;
    std::vector<double> c;  // c[n - n_min]

    double at(uint64_t n) const {
        return (n >= n_min && n <= n_max) ? c[n - n_min] : 0.0;
    }
};

constexpr uint64_t kCircleXMax = 10'000'000ULL;
constexpr uint64_t kCoefficientsXMax = 1'000'000ULL;

/// F_k(alpha) = sum_{j in J_k(X)} e(alpha j^k).
cdouble f_sum(unsigned k, uint64_t X, double alpha);

/// S(alpha) = sum_{p in I(X)} log p e(alpha p).
cdouble s_sum(uint64_t X, double alpha, const PrimeTable& primes);

/// T_rho(eta) = sum_{m in I(X)} m^{rho-1} e(m eta), rho real in (0, 1].
cdouble t_rho(uint64_t X, double rho, double eta);

/// c_n = r_k(X, n): S(alpha) F_k(alpha) = sum c_n e(n alpha).  For fixed n the
/// log p contributions accumulate in ascending-j order, matching
/// windowed_count term for term.
CoefficientVector coefficients(unsigned k, uint64_t X, const PrimeTable& primes,
                               const Parallel& par = Parallel{});

/// Unweighted variant: u_n = |{(j, m) : n = j^k + m, j in J, m in I}|, the
/// coefficients of F_k(eta) T(eta).
CoefficientVector unit_coefficients(unsigned k, uint64_t X);

/// r1(X, n): the major-arc integral of F_k S e(-n alpha), exact closed form.
double integrate_major(const CoefficientVector& coeff, uint64_t n,
                       const ArcDissection& diss);

struct RSplit {
    double r = 0.0;   // full-period integral == c_n exactly
    double r1 = 0.0;  // major arcs
    double r2 = 0.0;  // minor arcs == r - r1
};

RSplit r_split(const CoefficientVector& coeff, uint64_t n,
               const ArcDissection& diss);

// ---------------------------------------------------------------------------
// Hua moments: int_0^1 |F_k|^{2s} equals the number of solutions of
// j_1^k + ... + j_s^k = j_{s+1}^k + ... + j_{2s}^k over J^{2s}.
// ---------------------------------------------------------------------------

struct HuaMoment {
    unsigned k = 2;
    uint64_t X = 0;
    unsigned s = 1;
    uint64_t exact_count = 0;  // meet-in-the-middle solution count
    double exact = 0.0;
    double grid = 0.0;  // M-point Riemann mean, M > 2s max j^k (exact for
                        // trigonometric polynomials)
    double normalized = 0.0;  // exact / X^{2s/k - 1}
};

HuaMoment hua_moment(unsigned k, uint64_t X, unsigned s);

// ---------------------------------------------------------------------------
// Bessel inequality on the minor arcs:
//   sum_{0.99X <= n <= X} r2(X, n)^2  <=  int_m |F_k S|^2,
// with the right side computed in closed form as full Parseval minus the
// major-arc L2 mass (sinc kernel applied to the autocorrelation).
// ---------------------------------------------------------------------------

struct MinorL2 {
    double lhs = 0.0;       // sum of r2^2 over the [0.99X, X] window
    double bessel = 0.0;    // int_m |F_k S|^2
    double parseval = 0.0;  // sum c_n^2
    double major_l2 = 0.0;  // int_M |F_k S|^2
};

MinorL2 minor_l2(const CoefficientVector& coeff, const ArcDissection& diss);

// ---------------------------------------------------------------------------
// Main-term comparison: r1 against S(n, P) L(X, n) rescaled by the measured
// log-weight of I(X).  S carries log p over primes while T counts integers,
// so the prediction multiplies the unweighted L(X, n) by
// (sum_{p in I(X)} log p) / |I(X)| instead of assuming the two agree.
// ---------------------------------------------------------------------------

struct MainTermComparison {
    double r1 = 0.0;
    double prediction = 0.0;
    double ratio = 0.0;
    bool ratio_defined = false;
    double series = 0.0;         // S(n, P) = truncated_sum(k, n, P, 1)
    double l1 = 0.0;             // L(X, n) at rho = 1
    double weight_bridge = 0.0;  // sum log p / |I(X)|
};

MainTermComparison main_term_compare(const CoefficientVector& coeff, uint64_t n,
                                     uint64_t P, const ArcDissection& diss,
                                     const PrimeTable& primes);

}  // namespace pkpow
