#include "pkpow/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pkpow/arith.hpp"

namespace pkpow {

namespace {

constexpr uint32_t kNonUnit = 0xffffffffu;
constexpr double kTwoPi = 6.283185307179586476925286766559;

uint64_t egcd_inverse(uint64_t a, uint64_t m) {
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
    while (nr != 0) {
        int64_t qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    if (r != 1) throw DomainError("egcd_inverse: not invertible");
    return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(m) : t);
}

uint64_t primitive_root_mod_p(uint64_t p) {
    if (p == 2) return 1;
    auto f = factorize(p - 1);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [ell, e] : f.factors)
            if (powmod(g, (p - 1) / ell, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root_mod_p: none found");
}

Phase reduce_phase(int64_t num, int64_t den) {
    num %= den;
    if (num < 0) num += den;
    if (num == 0) return {0, 1};
    int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

}  // namespace

namespace detail {

struct LocalComponent {
    uint64_t p = 0;
    unsigned e = 0;
    uint64_t pe = 1;
    bool two_gen = false;           // 2^e with e >= 3
    std::vector<uint32_t> dlog0;    // main coordinate (wrt g, or wrt 5)
    std::vector<uint8_t> dlog_sign; // the {-1} coordinate for 2^e, e >= 3
    size_t gen_offset = 0;
    unsigned gen_count = 0;
};

struct GroupData {
    uint64_t q = 1;
    uint64_t phi = 1;
    uint64_t lambda = 1;
    std::vector<LocalComponent> comps;
    std::vector<uint64_t> orders;
    std::vector<uint64_t> lifted_gens;
};

}  // namespace detail

using detail::GroupData;
using detail::LocalComponent;

// ---------------------------------------------------------------------------
// group construction
// ---------------------------------------------------------------------------

namespace {

// Lift x mod pe to the residue == x (mod pe), == 1 (mod q/pe).
uint64_t crt_lift(uint64_t x, uint64_t pe, uint64_t q) {
    uint64_t m = q / pe;
    if (m == 1) return x % pe;
    uint64_t t = mulmod((x % pe + pe - 1) % pe, egcd_inverse(m % pe, pe), pe);
    return (1 + m * t) % q;
}

std::shared_ptr<const GroupData> build_group(uint64_t q) {
    if (q == 0) throw DomainError("character_group: modulus must be positive");
    if (q > kCharacterGroupMax)
        throw CapacityError("character_group: q exceeds the 1e5 capacity bound");

    auto data = std::make_shared<GroupData>();
    data->q = q;
    if (q == 1) return data;

    auto fact = factorize(q);
    for (auto [p, e] : fact.factors) {
        LocalComponent comp;
        comp.p = p;
        comp.e = e;
        comp.pe = 1;
        for (unsigned i = 0; i < e; ++i) comp.pe *= p;
        comp.gen_offset = data->orders.size();
        comp.dlog0.assign(comp.pe, kNonUnit);

        if (p == 2) {
            if (e == 1) {
                comp.dlog0[1] = 0;  // trivial group, unit marker only
                comp.gen_count = 0;
            } else if (e == 2) {
                comp.dlog0[1] = 0;
                comp.dlog0[3] = 1;
                comp.gen_count = 1;
                data->orders.push_back(2);
                data->lifted_gens.push_back(crt_lift(3, comp.pe, q));
            } else {
                comp.two_gen = true;
                comp.dlog_sign.assign(comp.pe, 0);
                uint64_t half = comp.pe >> 2;  // order of 5 is 2^{e-2}
                uint64_t v = 1;
                for (uint64_t j = 0; j < half; ++j) {
                    comp.dlog0[v] = static_cast<uint32_t>(j);
                    comp.dlog_sign[v] = 0;
                    uint64_t w = comp.pe - v;
                    comp.dlog0[w] = static_cast<uint32_t>(j);
                    comp.dlog_sign[w] = 1;
                    v = (v * 5) % comp.pe;
                }
                comp.gen_count = 2;
                data->orders.push_back(2);
                data->lifted_gens.push_back(crt_lift(comp.pe - 1, comp.pe, q));
                data->orders.push_back(half);
                data->lifted_gens.push_back(crt_lift(5, comp.pe, q));
            }
        } else {
            uint64_t g = primitive_root_mod_p(p);
            if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
            uint64_t m = comp.pe / p * (p - 1);
            uint64_t v = 1;
            for (uint64_t j = 0; j < m; ++j) {
                comp.dlog0[v] = static_cast<uint32_t>(j);
                v = mulmod(v, g, comp.pe);
            }
            comp.gen_count = 1;
            data->orders.push_back(m);
            data->lifted_gens.push_back(crt_lift(g, comp.pe, q));
        }
        data->comps.push_back(std::move(comp));
    }

    for (uint64_t m : data->orders) {
        data->phi *= m;
        data->lambda = std::lcm(data->lambda, m);
    }
    // components with trivial unit groups (pe == 2) contribute factor 1
    return data;
}

}  // namespace

CharacterGroup::CharacterGroup(uint64_t q) : data_(build_group(q)) {}

CharacterGroup character_group(uint64_t q) { return CharacterGroup(q); }

uint64_t CharacterGroup::modulus() const { return data_->q; }
uint64_t CharacterGroup::phi() const { return data_->phi; }
const std::vector<uint64_t>& CharacterGroup::generator_orders() const {
    return data_->orders;
}
const std::vector<uint64_t>& CharacterGroup::generators() const {
    return data_->lifted_gens;
}

DirichletCharacter CharacterGroup::principal() const { return character(0); }

DirichletCharacter CharacterGroup::character(size_t index) const {
    if (index >= size())
        throw DomainError("character: index out of range");
    std::vector<uint64_t> exps(data_->orders.size(), 0);
    uint64_t rest = index;
    for (size_t i = 0; i < exps.size(); ++i) {
        exps[i] = rest % data_->orders[i];
        rest /= data_->orders[i];
    }
    return DirichletCharacter(data_, std::move(exps));
}

DirichletCharacter CharacterGroup::from_values(
    const std::function<Phase(uint64_t)>& phase_at) const {
    std::vector<uint64_t> exps(data_->orders.size(), 0);
    for (size_t i = 0; i < exps.size(); ++i) {
        Phase ph = phase_at(data_->lifted_gens[i]);
        int64_t m = static_cast<int64_t>(data_->orders[i]);
        if (m % ph.den != 0)
            throw DomainError("from_values: phase is not a root of unity of the generator order");
        int64_t c = (ph.num * (m / ph.den)) % m;
        exps[i] = static_cast<uint64_t>(c);
    }
    return DirichletCharacter(data_, std::move(exps));
}

// ---------------------------------------------------------------------------
// characters
// ---------------------------------------------------------------------------

DirichletCharacter::DirichletCharacter(
    std::shared_ptr<const detail::GroupData> d, std::vector<uint64_t> exps)
    : data_(std::move(d)), exps_(std::move(exps)) {
    compute_conductor();
}

uint64_t DirichletCharacter::modulus() const { return data_->q; }

bool DirichletCharacter::is_principal() const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [](uint64_t c) { return c == 0; });
}

uint64_t DirichletCharacter::order() const {
    uint64_t o = 1;
    for (size_t i = 0; i < exps_.size(); ++i) {
        uint64_t m = data_->orders[i];
        o = std::lcm(o, m / std::gcd(m, exps_[i]));
    }
    return o;
}

void DirichletCharacter::compute_conductor() {
    uint64_t cond = 1;
    for (const auto& comp : data_->comps) {
        if (comp.p == 2) {
            if (comp.e == 1) continue;
            if (comp.e == 2) {
                if (exps_[comp.gen_offset] != 0) cond *= 4;
                continue;
            }
            uint64_t c0 = exps_[comp.gen_offset];
            uint64_t c1 = exps_[comp.gen_offset + 1];
            if (c1 != 0) {
                unsigned v = 0;
                uint64_t t = c1;
                while ((t & 1) == 0) {
                    t >>= 1;
                    ++v;
                }
                cond *= (comp.pe >> v);
            } else if (c0 != 0) {
                cond *= 4;
            }
        } else {
            uint64_t c = exps_[comp.gen_offset];
            if (c == 0) continue;
            unsigned v = 0;
            uint64_t t = c;
            while (v < comp.e - 1 && t % comp.p == 0) {
                t /= comp.p;
                ++v;
            }
            uint64_t f = comp.pe;
            for (unsigned i = 0; i < v; ++i) f /= comp.p;
            cond *= f;
        }
    }
    conductor_ = cond;
    primitive_ = (cond == data_->q);
}

std::optional<Phase> DirichletCharacter::phase(int64_t a) const {
    const GroupData& d = *data_;
    if (d.q == 1) return Phase{0, 1};
    uint64_t r = static_cast<uint64_t>(mod_reduce(a, d.q));
    int64_t lambda = static_cast<int64_t>(d.lambda);
    int64_t num = 0;
    for (const auto& comp : d.comps) {
        uint64_t ar = r % comp.pe;
        uint32_t x = comp.dlog0[ar];
        if (x == kNonUnit) return std::nullopt;
        if (comp.two_gen) {
            uint64_t c0 = exps_[comp.gen_offset];
            uint64_t c1 = exps_[comp.gen_offset + 1];
            uint64_t m1 = d.orders[comp.gen_offset + 1];
            if (comp.dlog_sign[ar] && c0)
                num += lambda / 2;
            num += static_cast<int64_t>((c1 * x) % m1) * (lambda / static_cast<int64_t>(m1));
        } else if (comp.gen_count == 1) {
            uint64_t c = exps_[comp.gen_offset];
            uint64_t m = d.orders[comp.gen_offset];
            num += static_cast<int64_t>((c * x) % m) * (lambda / static_cast<int64_t>(m));
        }
    }
    return reduce_phase(num, lambda);
}

cdouble DirichletCharacter::eval(int64_t a) const {
    auto ph = phase(a);
    if (!ph) return {0.0, 0.0};
    double ang = kTwoPi * static_cast<double>(ph->num) / static_cast<double>(ph->den);
    return {std::cos(ang), std::sin(ang)};
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<uint64_t> exps(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i)
        exps[i] = exps_[i] == 0 ? 0 : data_->orders[i] - exps_[i];
    return DirichletCharacter(data_, std::move(exps));
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
    return data_->q == o.data_->q && exps_ == o.exps_;
}

// ---------------------------------------------------------------------------
// derived characters
// ---------------------------------------------------------------------------

std::pair<uint64_t, DirichletCharacter> conductor_and_primitive_part(
    const DirichletCharacter& chi) {
    uint64_t r = chi.conductor();
    uint64_t q = chi.modulus();
    CharacterGroup sub(r);
    auto chi_star = sub.from_values([&](uint64_t g) -> Phase {
        uint64_t y = g;
        uint64_t guard = 0;
        while (std::gcd(y, q) != 1) {
            y += r;
            if (++guard > q + 2)
                throw std::logic_error("primitive_part: no coprime lift found");
        }
        auto ph = chi.phase(static_cast<int64_t>(y));
        if (!ph) throw std::logic_error("primitive_part: lift is not a unit");
        return *ph;
    });
    return {r, chi_star};
}

DirichletCharacter induced_character(const DirichletCharacter& chi,
                                     const CharacterGroup& target) {
    uint64_t qt = target.modulus();
    if (qt % chi.conductor() != 0)
        throw DomainError("induced_character: conductor does not divide the target modulus");
    auto [r, star] = conductor_and_primitive_part(chi);
    (void)r;
    return target.from_values([&](uint64_t g) -> Phase {
        auto ph = star.phase(static_cast<int64_t>(g));
        if (!ph) throw std::logic_error("induced_character: generator not coprime to conductor");
        return *ph;
    });
}

DirichletCharacter product_character(const DirichletCharacter& chi1,
                                     const DirichletCharacter& chi2,
                                     const CharacterGroup& target) {
    uint64_t q1 = chi1.modulus(), q2 = chi2.modulus();
    if (std::gcd(q1, q2) != 1 || target.modulus() != q1 * q2)
        throw DomainError("product_character: moduli must be coprime and multiply to the target");
    return target.from_values([&](uint64_t g) -> Phase {
        auto p1 = chi1.phase(static_cast<int64_t>(g));
        auto p2 = chi2.phase(static_cast<int64_t>(g));
        if (!p1 || !p2)
            throw std::logic_error("product_character: generator not a unit in a factor");
        int64_t den = std::lcm(p1->den, p2->den);
        int64_t num = p1->num * (den / p1->den) + p2->num * (den / p2->den);
        return reduce_phase(num, den);
    });
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

std::vector<cdouble> unit_roots(uint64_t q) {
    std::vector<cdouble> r(q);
    for (uint64_t j = 0; j < q; ++j) {
        double ang = kTwoPi * static_cast<double>(j) / static_cast<double>(q);
        r[j] = {std::cos(ang), std::sin(ang)};
    }
    return r;
}

std::vector<cdouble> character_table(const DirichletCharacter& chi) {
    uint64_t q = chi.modulus();
    std::vector<cdouble> t(q);
    for (uint64_t a = 0; a < q; ++a) t[a] = chi.eval(static_cast<int64_t>(a));
    return t;
}

// ---------------------------------------------------------------------------
// exponential sums
// ---------------------------------------------------------------------------

cdouble gauss_sum(const DirichletCharacter& chi) {
    uint64_t q = chi.modulus();
    if (q > kHSumMax)
        throw CapacityError("gauss_sum: q exceeds the 1e5 capacity bound");
    if (q == 1) return {1.0, 0.0};
    auto roots = unit_roots(q);
    auto tab = character_table(chi);
    ComplexSum acc;
    for (uint64_t a = 0; a < q; ++a) acc.add(tab[a] * roots[a]);
    return acc.value();
}

cdouble v_sum(unsigned k, int64_t a, uint64_t q) {
    if (q == 0) throw DomainError("v_sum: modulus must be positive");
    if (q > kVSumMax)
        throw CapacityError("v_sum: q exceeds the 1e6 capacity bound");
    if (q == 1) return {1.0, 0.0};
    uint64_t ar = static_cast<uint64_t>(mod_reduce(a, q));
    auto roots = unit_roots(q);
    ComplexSum acc;
    for (uint64_t h = 0; h < q; ++h)
        acc.add(roots[(ar * powmod(h, k, q)) % q]);
    return acc.value();
}

namespace {

// Bucket the residues (h^k - n) mod q.
std::vector<uint32_t> power_shift_counts(unsigned k, uint64_t q, int64_t n) {
    std::vector<uint32_t> cnt(q, 0);
    uint64_t nr = static_cast<uint64_t>(mod_reduce(n, q));
    for (uint64_t h = 0; h < q; ++h)
        ++cnt[(powmod(h, k, q) + q - nr) % q];
    return cnt;
}

}  // namespace

cdouble h_sum(unsigned k, const DirichletCharacter& chi, uint64_t q, int64_t n) {
    if (chi.modulus() != q)
        throw DomainError("h_sum: character modulus does not match q");
    if (q > kHSumMax)
        throw CapacityError("h_sum: q exceeds the 1e5 capacity bound");
    if (q == 1) return {1.0, 0.0};

    auto cnt = power_shift_counts(k, q, n);
    auto roots = unit_roots(q);
    auto tab = character_table(chi);

    // H = sum_h G_chi(h^k - n), G_chi(t) = sum_a chi(a) e_q(a t)
    ComplexSum acc;
    for (uint64_t t = 0; t < q; ++t) {
        if (!cnt[t]) continue;
        ComplexSum g;
        for (uint64_t a = 0; a < q; ++a)
            g.add(tab[a] * roots[(a * t) % q]);
        acc.add(static_cast<double>(cnt[t]) * g.value());
    }
    return acc.value();
}

cdouble h_sum(unsigned k, uint64_t q, int64_t n) {
    CharacterGroup group(q);
    return h_sum(k, group.principal(), q, n);
}

HSumBatch::HSumBatch(const DirichletCharacter& chi) : q_(chi.modulus()) {
    if (q_ > 8192)
        throw CapacityError("HSumBatch: transform table is limited to q <= 8192");
    auto roots = unit_roots(q_);
    auto tab = character_table(chi);
    g_.resize(q_);
    for (uint64_t t = 0; t < q_; ++t) {
        ComplexSum g;
        for (uint64_t a = 0; a < q_; ++a)
            g.add(tab[a] * roots[(a * t) % q_]);
        g_[t] = g.value();
    }
}

cdouble HSumBatch::eval(unsigned k, int64_t n) const {
    if (q_ == 1) return {1.0, 0.0};
    auto cnt = power_shift_counts(k, q_, n);
    ComplexSum acc;
    for (uint64_t t = 0; t < q_; ++t)
        if (cnt[t]) acc.add(static_cast<double>(cnt[t]) * g_[t]);
    return acc.value();
}

cdouble sigma_sum(unsigned k, const DirichletCharacter& chi, uint64_t r,
                  int64_t n) {
    if (chi.modulus() != r)
        throw DomainError("sigma_sum: character modulus does not match r");
    if (r > kSigmaSumMax)
        throw CapacityError("sigma_sum: r exceeds the 1e6 capacity bound");
    if (r == 1) return {1.0, 0.0};
    auto tab = character_table(chi);
    uint64_t nr = static_cast<uint64_t>(mod_reduce(n, r));
    ComplexSum acc;
    for (uint64_t h = 0; h < r; ++h)
        acc.add(tab[(powmod(h, k, r) + r - nr) % r]);
    return acc.value();
}

TFactor t_factor(unsigned k, const DirichletCharacter& chi, int64_t n) {
    if (!chi.is_primitive())
        throw DomainError("t_factor: the identity requires a primitive character");
    uint64_t r = chi.modulus();
    if (r > kTFactorMax)
        throw CapacityError("t_factor: r exceeds the 1e4 capacity bound");
    auto conj = chi.conjugate();
    cdouble tau_bar = gauss_sum(conj);
    cdouble tau = gauss_sum(chi);
    cdouble h = h_sum(k, chi, r, n);
    cdouble sig = sigma_sum(k, conj, r, n);
    CharacterGroup group(r);
    double denom = static_cast<double>(r) * static_cast<double>(group.phi());
    return {tau_bar * h / denom, tau_bar * tau * sig / denom};
}

}  // namespace pkpow
