#pragma once

// Frozen measurement constants for the calibrated batteries.  Every value was
// produced by `pkpow-calibrate` (tools/calibrate.cpp) at the smaller scale of
// its battery and is re-asserted at the larger scale; margins are recorded
// next to each constant.  Re-run the tool to reproduce the measurements.

namespace pkpow::cal {

// Representation-count ratio band: median of
// R_2(n) log n / (S_2(n, cutoff) sqrt(n)) over non-exceptional n in
// [X/2, X] cap I_2.  Measured by the standalone naive oracle at X = 1e4:
// median 1.069757 (p5 0.744, p95 1.401).  Band = median +/- 0.10; the library
// run at X = 1e5 gives 1.061558, comfortably inside.
constexpr unsigned kHlSeriesCutoff = 1000;
constexpr double kHlMedianLo = 0.97;
constexpr double kHlMedianHi = 1.17;

// R_k(n) log n <= kEq2Factor * S_k(n, cutoff) * n^{1/k} for non-exceptional
// n in [1e4, 1e5] (k = 2, cutoff = 1e3); measured maximum 2.250883 at
// n = 28711.
constexpr double kEq2Factor = 3.0;

// |F_k(a/q + eta) - (V_k(a,q)/q) F_k(eta)| <= C * q * (1 + X|eta|) over
// q <= 12, gcd(a, q) = 1, |eta| <= 1/(q Q), P = 8, default Q.  Measured
// worst ratio 0.500 at X = 2^10 (k in {2, 3}); frozen with margin x1.25 and
// re-asserted at X = 2^12.
constexpr double kRationalApproxC = 0.625;

// prod_{p <= P}(p - rho_k(p,n))/(p - 1) * (log P)^k >= c for n in I_k,
// n <= 1e6, k in {2, 3}.  Global minimum over every admissible n at P = 1e3
// is 10.011 (k = 2, n = 539191; the k = 3 minimum is 206.5); frozen at half
// the minimum and re-asserted at P = 1e4 (minimum 17.92 there).
constexpr double kSeriesLowerFloor = 5.0;

// sum_{n <= X} 2^omega(n) / (X log X): 0.693449 at X = 1e4, decreasing to
// 0.676267 at X = 1e5.  Frozen at the calibration value plus 1e-3 headroom.
constexpr double kPowerOmegaCap = 0.6944;

// sum_{q <= P, r | q} |tau(conj(chi0_q chi)) H_k(chi0_q chi, q, n)| /
// (q phi(q)) <= C (log P)^k for the quadratic character mod 3, k = 2.
// Measured normalized values at P = 200: 0.0369-0.0738 across n residues;
// frozen at 0.10 (max x1.25, rounded up) and re-checked at P = 2000
// (0.0246 there).
constexpr double kInducedTransformCap = 0.10;

// Per-n main-term band: r1 / (S(n,P) L(X,n) * bridge) over non-exceptional
// n in [0.99X, X] at k = 2, X = 2^14, P = 8.  Full-window measurement gives
// [0.0538, 1.816] (individual n fluctuate strongly at this P); frozen with
// ~40% margin on both sides.
constexpr double kMainTermLo = 0.02;
constexpr double kMainTermHi = 2.5;

// Aggregate over the same window: sum r1 / sum prediction = 0.991334.
constexpr double kMainTermAggLo = 0.9;
constexpr double kMainTermAggHi = 1.1;

// max |r2 / r| over the window: measured 2.687; frozen at x1.5.
constexpr double kR2RelThreshold = 4.0;

// Hua-moment normalized values exact / X^{2s/k-1} for k = 2 at
// X in {2^10, 2^12, 2^14}: decreasing for s = 3 (0.0369, 0.0270, 0.0222),
// where 2s exceeds the clean-moment threshold; the s = 2 fourth moment grows
// like the classical log factor and is reported without an ordering assert.
// (No constant: the assertion is the s = 3 ordering itself.)

}  // namespace pkpow::cal
