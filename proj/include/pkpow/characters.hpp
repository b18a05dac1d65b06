#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "pkpow/common.hpp"

namespace pkpow {

// ---------------------------------------------------------------------------
// Dirichlet characters mod q, represented by exponent vectors over a fixed
// cyclic decomposition of (Z/qZ)*.  Discrete logarithms are precomputed per
// prime power, so evaluation is O(#prime powers) and conductors come out
// exactly.  The modulus 2^e (e >= 3) uses the {-1} x <5> decomposition.
//
// Character values are tracked as exact rational phases num/den (the value is
// e(num/den)); all conductor / primitive-part / product constructions run on
// these rationals, floating point enters only at the final complex exponential.
// ---------------------------------------------------------------------------

/// Exact character value: e(num/den) with 0 <= num < den, gcd(num, den) = 1.
struct Phase {
    int64_t num = 0;
    int64_t den = 1;
};

constexpr uint64_t kCharacterGroupMax = 100'000ULL;

namespace detail {
struct GroupData;
}

class DirichletCharacter;

class CharacterGroup {
  public:
    /// Builds the full character group mod q (1 <= q <= 1e5).
    explicit CharacterGroup(uint64_t q);

    uint64_t modulus() const;
    uint64_t phi() const;           // group order == number of characters
    size_t size() const { return static_cast<size_t>(phi()); }

    /// Characters are enumerated in a fixed mixed-radix order; index 0 is the
    /// principal character.
    DirichletCharacter character(size_t index) const;
    DirichletCharacter principal() const;

    /// Character defined by exact phases on the group generators; `phase_at`
    /// must return the value-phase of the desired character at any unit.
    DirichletCharacter from_values(
        const std::function<Phase(uint64_t)>& phase_at) const;

    const std::vector<uint64_t>& generator_orders() const;
    const std::vector<uint64_t>& generators() const;  // lifted mod q

  private:
    friend class DirichletCharacter;
    std::shared_ptr<const detail::GroupData> data_;
};

class DirichletCharacter {
  public:
    uint64_t modulus() const;
    uint64_t conductor() const { return conductor_; }
    bool is_primitive() const { return primitive_; }
    bool is_principal() const;
    uint64_t order() const;
    const std::vector<uint64_t>& exponents() const { return exps_; }

    /// Exact value-phase at a, or nullopt when gcd(a, q) > 1 (value 0).
    std::optional<Phase> phase(int64_t a) const;

    /// chi(a); exactly 0 on non-units.
    cdouble eval(int64_t a) const;
    cdouble operator()(int64_t a) const { return eval(a); }

    DirichletCharacter conjugate() const;

    bool operator==(const DirichletCharacter& o) const;

  private:
    friend class CharacterGroup;
    DirichletCharacter(std::shared_ptr<const detail::GroupData> d,
                       std::vector<uint64_t> exps);
    void compute_conductor();

    std::shared_ptr<const detail::GroupData> data_;
    std::vector<uint64_t> exps_;
    uint64_t conductor_ = 1;
    bool primitive_ = false;
};

/// Convenience: the group mod q.
CharacterGroup character_group(uint64_t q);

/// (conductor r, primitive character chi* mod r inducing chi).
std::pair<uint64_t, DirichletCharacter> conductor_and_primitive_part(
    const DirichletCharacter& chi);

/// chi lifted to a modulus that its conductor divides.
DirichletCharacter induced_character(const DirichletCharacter& chi,
                                     const CharacterGroup& target);

/// Product character mod q1*q2 of chi1 mod q1 and chi2 mod q2, gcd(q1,q2)=1.
DirichletCharacter product_character(const DirichletCharacter& chi1,
                                     const DirichletCharacter& chi2,
                                     const CharacterGroup& target);

/// Values chi(a) for a in [0, q).
std::vector<cdouble> character_table(const DirichletCharacter& chi);

/// e_q(j) = e(j/q) for j in [0, q).
std::vector<cdouble> unit_roots(uint64_t q);

// ---------------------------------------------------------------------------
// Complete exponential sums
// ---------------------------------------------------------------------------

constexpr uint64_t kVSumMax = 1'000'000ULL;
constexpr uint64_t kHSumMax = 100'000ULL;
constexpr uint64_t kSigmaSumMax = 1'000'000ULL;
constexpr uint64_t kTFactorMax = 10'000ULL;

/// Gauss sum tau(chi) = sum_{a mod q} chi(a) e_q(a).
cdouble gauss_sum(const DirichletCharacter& chi);

/// V_k(a, q) = sum_{h mod q} e_q(a h^k).
cdouble v_sum(unsigned k, int64_t a, uint64_t q);

/// H_k(chi, q, n) = sum_{a mod q} chi(a) V_k(a, q) e_q(-n a), evaluated as
/// sum_h G_chi(h^k - n) with G_chi the additive transform of chi.
cdouble h_sum(unsigned k, const DirichletCharacter& chi, uint64_t q, int64_t n);

/// Principal-character case H_k(q, n).
cdouble h_sum(unsigned k, uint64_t q, int64_t n);

/// Precomputed transform G_chi(t) for all t: batch H evaluation in O(q) per n.
class HSumBatch {
  public:
    explicit HSumBatch(const DirichletCharacter& chi);
    cdouble eval(unsigned k, int64_t n) const;

  private:
    uint64_t q_;
    std::vector<cdouble> g_;  // G_chi(t), t in [0, q)
};

/// sigma(r, chi, n) = sum_{h mod r} chi(h^k - n); chi(0) = 0 convention.
cdouble sigma_sum(unsigned k, const DirichletCharacter& chi, uint64_t r,
                  int64_t n);

/// T(chi, r, n) for primitive chi mod r, evaluated along both routes:
///   via_h     = tau(conj chi) H_k(chi, r, n) / (r phi(r))
///   via_sigma = tau(conj chi) tau(chi) sigma(r, conj chi, n) / (r phi(r))
struct TFactor {
    cdouble via_h;
    cdouble via_sigma;
};

TFactor t_factor(unsigned k, const DirichletCharacter& chi, int64_t n);

}  // namespace pkpow
