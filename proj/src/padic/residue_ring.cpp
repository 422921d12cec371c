#include "sl2hecke/padic/residue_ring.hpp"

#include <stdexcept>

namespace sl2hecke::padic {

namespace {

uint64_t ipow(uint64_t base, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) r *= base;
    return r;
}

// Monic irreducible polynomial of degree f over F_p, returned as the
// low-order coefficients of x^f = c_0 + c_1 x + ...; degrees 2 and 3 are
// irreducible iff they have no root.
std::array<uint32_t, ResidueRing::kMaxF> find_min_poly(uint32_t p, uint32_t f) {
    std::array<uint32_t, ResidueRing::kMaxF> coeffs{};
    if (f == 1) return coeffs;
    if (f > 3) throw std::invalid_argument("ResidueRing: f <= 3 supported");
    for (uint64_t code = 0;; ++code) {
        std::array<uint32_t, ResidueRing::kMaxF> c{};
        uint64_t rest = code;
        for (uint32_t i = 0; i < f; ++i) {
            c[i] = static_cast<uint32_t>(rest % p);
            rest /= p;
        }
        if (rest) throw std::logic_error("ResidueRing: no irreducible polynomial found");
        bool has_root = false;
        for (uint32_t x = 0; x < p && !has_root; ++x) {
            // evaluate x^f - sum c_i x^i mod p
            uint64_t xf = 1;
            for (uint32_t i = 0; i < f; ++i) xf = xf * x % p;
            uint64_t low = 0, xp = 1;
            for (uint32_t i = 0; i < f; ++i) {
                low = (low + static_cast<uint64_t>(c[i]) * xp) % p;
                xp = xp * x % p;
            }
            has_root = xf == low;
        }
        if (!has_root) return c;
    }
}

} // namespace

ResidueRing::ResidueRing(uint32_t p, uint32_t f, uint32_t m) : p_(p), f_(f), m_(m) {
    if (p < 2 || f < 1 || f > kMaxF || m < 1) throw std::invalid_argument("ResidueRing: bad parameters");
    pm_ = ipow(p, m);
    if (pm_ > (1ull << 31)) throw std::invalid_argument("ResidueRing: p^m too large");
    coeff_bits_ = 1;
    while ((1ull << coeff_bits_) < pm_) ++coeff_bits_;
    min_poly_ = find_min_poly(p, f);
}

ResidueRing::Elem ResidueRing::one() const {
    Elem e{};
    e[0] = 1;
    return e;
}

ResidueRing::Elem ResidueRing::from_int(long long x) const {
    long long r = x % static_cast<long long>(pm_);
    if (r < 0) r += static_cast<long long>(pm_);
    Elem e{};
    e[0] = static_cast<uint32_t>(r);
    return e;
}

ResidueRing::Elem ResidueRing::monomial(long long x, uint32_t i) const {
    if (i >= f_) throw std::invalid_argument("monomial: index out of range");
    long long r = x % static_cast<long long>(pm_);
    if (r < 0) r += static_cast<long long>(pm_);
    Elem e{};
    e[i] = static_cast<uint32_t>(r);
    return e;
}

ResidueRing::Elem ResidueRing::add(const Elem& a, const Elem& b) const {
    Elem out{};
    for (uint32_t i = 0; i < f_; ++i) {
        uint64_t s = static_cast<uint64_t>(a[i]) + b[i];
        out[i] = static_cast<uint32_t>(s >= pm_ ? s - pm_ : s);
    }
    return out;
}

ResidueRing::Elem ResidueRing::sub(const Elem& a, const Elem& b) const {
    Elem out{};
    for (uint32_t i = 0; i < f_; ++i)
        out[i] = a[i] >= b[i] ? a[i] - b[i] : static_cast<uint32_t>(a[i] + pm_ - b[i]);
    return out;
}

ResidueRing::Elem ResidueRing::neg(const Elem& a) const { return sub(zero(), a); }

void ResidueRing::reduce_step(std::array<uint64_t, 2 * kMaxF>& wide) const {
    // fold degrees f..2f-2 down with generator^f = min_poly_
    for (uint32_t d = 2 * f_ - 2; d >= f_ && d < 2 * kMaxF; --d) {
        uint64_t c = wide[d] % pm_;
        wide[d] = 0;
        if (c == 0) continue;
        for (uint32_t i = 0; i < f_; ++i) wide[d - f_ + i] += c * min_poly_[i] % pm_;
        if (d == f_) break;
    }
}

ResidueRing::Elem ResidueRing::mul(const Elem& a, const Elem& b) const {
    std::array<uint64_t, 2 * kMaxF> wide{};
    for (uint32_t i = 0; i < f_; ++i) {
        if (a[i] == 0) continue;
        for (uint32_t j = 0; j < f_; ++j) wide[i + j] += static_cast<uint64_t>(a[i]) * b[j] % pm_;
    }
    if (f_ > 1) reduce_step(wide);
    Elem out{};
    for (uint32_t i = 0; i < f_; ++i) out[i] = static_cast<uint32_t>(wide[i] % pm_);
    return out;
}

ResidueRing::Elem ResidueRing::pow(Elem a, uint64_t e) const {
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

bool ResidueRing::is_zero(const Elem& a) const {
    for (uint32_t i = 0; i < f_; ++i)
        if (a[i] % pm_) return false;
    return true;
}

bool ResidueRing::is_unit(const Elem& a) const {
    for (uint32_t i = 0; i < f_; ++i)
        if (a[i] % p_) return true;
    return false;
}

uint32_t ResidueRing::val(const Elem& a) const {
    uint32_t best = m_;
    for (uint32_t i = 0; i < f_; ++i) {
        uint32_t x = a[i], v = 0;
        if (x == 0) continue;
        while (x % p_ == 0) {
            x /= p_;
            ++v;
        }
        if (v < best) best = v;
    }
    return best;
}

ResidueRing::Elem ResidueRing::teichmuller(const Elem& a) const {
    if (!is_unit(a)) throw std::domain_error("teichmuller: unit required");
    uint64_t q = ipow(p_, f_);
    Elem t = a;
    for (uint32_t i = 0; i + 1 < m_; ++i) t = pow(t, q);
    return t;
}

ResidueRing::Elem ResidueRing::inv(const Elem& a) const {
    if (!is_unit(a)) throw std::domain_error("inv: unit required");
    // inverse in the residue field by brute force, then Newton lifting
    Elem b{};
    uint64_t q = ipow(p_, f_);
    for (uint64_t code = 1; code < q; ++code) {
        Elem cand{};
        uint64_t rest = code;
        for (uint32_t i = 0; i < f_; ++i) {
            cand[i] = static_cast<uint32_t>(rest % p_);
            rest /= p_;
        }
        Elem prod = mul(a, cand);
        if ((prod[0] % p_) == 1) {
            bool ok = true;
            for (uint32_t i = 1; i < f_; ++i) ok = ok && prod[i] % p_ == 0;
            if (ok) {
                b = cand;
                break;
            }
        }
    }
    Elem two = from_int(2);
    for (uint32_t i = 0; i < m_; ++i) b = mul(b, sub(two, mul(a, b)));
    return b;
}

std::vector<ResidueRing::Elem> ResidueRing::unit_group_generators() const {
    std::vector<Elem> out;
    // Teichmuller lift of a generator of F_q^x, found by order search.
    uint64_t q = ipow(p_, f_);
    for (uint64_t code = 2; code < q; ++code) {
        Elem cand{};
        uint64_t rest = code;
        for (uint32_t i = 0; i < f_; ++i) {
            cand[i] = static_cast<uint32_t>(rest % p_);
            rest /= p_;
        }
        if (!is_unit(cand)) continue;
        // order of the residue: smallest k with cand^k = 1 mod p
        uint64_t k = 1;
        Elem acc = cand;
        auto residue_is_one = [&](const Elem& e) {
            if (e[0] % p_ != 1) return false;
            for (uint32_t i = 1; i < f_; ++i)
                if (e[i] % p_) return false;
            return true;
        };
        while (!residue_is_one(acc)) {
            acc = mul(acc, cand);
            ++k;
        }
        if (k == q - 1) {
            out.push_back(teichmuller(cand));
            break;
        }
    }
    if (out.empty()) throw std::logic_error("unit_group_generators: no residue generator found");
    if (m_ > 1)
        for (uint32_t i = 0; i < f_; ++i) out.push_back(add(one(), monomial(p_, i)));
    return out;
}

std::vector<ResidueRing::Elem> ResidueRing::additive_generators(uint32_t v) const {
    std::vector<Elem> out;
    if (v >= m_) return out;
    for (uint32_t i = 0; i < f_; ++i) out.push_back(monomial(static_cast<long long>(ipow(p_, v)), i));
    return out;
}

std::string ResidueRing::to_string(const Elem& a) const {
    std::string out;
    for (uint32_t i = 0; i < f_; ++i) {
        if (i) out += "+";
        out += std::to_string(a[i]);
        if (i == 1) out += "g";
        if (i > 1) out += "g^" + std::to_string(i);
    }
    return out;
}

} // namespace sl2hecke::padic
