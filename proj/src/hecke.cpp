#include "sl2hecke/hecke.hpp"

#include <set>
#include <stdexcept>

namespace sl2hecke {

LevelPair make_level_pair(Level lower, Level upper) {
    bool ok = (lower == Level::I && upper == Level::J) ||
              (lower == Level::I && upper == Level::K) ||
              (lower == Level::J && upper == Level::K);
    if (!ok) throw std::invalid_argument("inadmissible level pair");
    return {lower, upper};
}

Algebra algebra_of(Level level) {
    switch (level) {
    case Level::I: return Algebra::ProP;
    case Level::J: return Algebra::Iwahori;
    default: return Algebra::Spherical;
    }
}

std::string to_string(Algebra alg) {
    switch (alg) {
    case Algebra::ProP: return "pro_p";
    case Algebra::Iwahori: return "iwahori";
    default: return "spherical";
    }
}

HeckeAlg::HeckeAlg(uint32_t p) : fp_(p), ext_(p) {
    if (p < 5) throw std::invalid_argument("HeckeAlg: p >= 5 required");
}

HeckeElt HeckeAlg::one(Algebra alg) const {
    return {alg, {{ExtWeylElt{WeylElt::identity(), 0}, 1}}};
}

HeckeElt HeckeAlg::basis_prop(const ExtWeylElt& w) const { return {Algebra::ProP, {{w, 1}}}; }

HeckeElt HeckeAlg::basis_iwahori(const WeylElt& w) const {
    return {Algebra::Iwahori, {{ExtWeylElt{w, 0}, 1}}};
}

HeckeElt HeckeAlg::basis_spherical(const WeylElt& w) const {
    if (!in_KDK(w)) throw std::invalid_argument("spherical basis symbols are indexed by 1 and s0*theta^n, n >= 1");
    return {Algebra::Spherical, {{ExtWeylElt{w, 0}, 1}}};
}

void HeckeAlg::axpy(HeckeElt& dst, uint32_t c, const HeckeElt& src) const {
    if (dst.alg != src.alg) throw std::invalid_argument("axpy: mismatched algebras");
    if (c % fp_.p() == 0) return;
    for (const auto& [key, coeff] : src.terms) {
        uint32_t v = fp_.add(dst.coeff(key), fp_.mul(c, coeff));
        if (v == 0)
            dst.terms.erase(key);
        else
            dst.terms[key] = v;
    }
}

HeckeElt HeckeAlg::add(const HeckeElt& a, const HeckeElt& b) const {
    HeckeElt out = a;
    axpy(out, 1, b);
    return out;
}

HeckeElt HeckeAlg::sub(const HeckeElt& a, const HeckeElt& b) const {
    HeckeElt out = a;
    axpy(out, fp_.neg(1), b);
    return out;
}

HeckeElt HeckeAlg::scale(uint32_t c, const HeckeElt& a) const {
    HeckeElt out = zero(a.alg);
    axpy(out, c, a);
    return out;
}

// tau_u * tau_v in the pro-p algebra.  Write v = torus(t0) * product of the
// canonical letter lifts of its reduced word; every partial product below is
// length-additive, so tau_v factors accordingly.  Right multiplication by a
// letter lift either extends the coset (length goes up) or fires the
// quadratic relation, which replaces tau_x by the sum of tau over the torus
// fiber of x.
HeckeElt HeckeAlg::mul_basis_prop(const ExtWeylElt& u, const ExtWeylElt& v) const {
    std::vector<int> word = reduced_word(v.w);
    ExtWeylElt letters = ext_.lift(WeylElt::identity());
    for (int s : word) letters = ext_.mul(letters, ext_.lift(WeylElt::s(s)));
    ExtWeylElt t0 = ext_.mul(v, ext_.inverse(letters));

    HeckeElt cur = basis_prop(ext_.mul(u, t0));
    for (int s : word) {
        HeckeElt next = zero(Algebra::ProP);
        for (const auto& [x, c] : cur.terms) {
            if (sl2hecke::mul(x.w, WeylElt::s(s)).length() == x.w.length() + 1) {
                axpy(next, c, basis_prop(ext_.mul(x, ext_.lift(WeylElt::s(s)))));
            } else {
                for (uint32_t a = 0; a < ext_.torus_order(); ++a)
                    axpy(next, c, basis_prop(ext_.mul(x, ext_.torus(a))));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

HeckeElt HeckeAlg::mul_basis_iwahori(const WeylElt& u, const WeylElt& v) const {
    HeckeElt cur = basis_iwahori(u);
    for (int s : reduced_word(v)) {
        HeckeElt next = zero(Algebra::Iwahori);
        for (const auto& [x, c] : cur.terms) {
            WeylElt xs = sl2hecke::mul(x.w, WeylElt::s(s));
            if (xs.length() == x.w.length() + 1)
                axpy(next, c, basis_iwahori(xs));
            else
                axpy(next, fp_.neg(c), basis_iwahori(x.w));
        }
        cur = std::move(next);
    }
    return cur;
}

HeckeElt HeckeAlg::mul(const HeckeElt& a, const HeckeElt& b) const {
    if (a.alg != b.alg) throw std::invalid_argument("mul: mismatched algebras");
    if (a.alg == Algebra::Spherical) {
        std::vector<uint32_t> pa = to_T_poly(a), pb = to_T_poly(b);
        std::vector<uint32_t> prod(pa.size() + pb.size(), 0);
        for (size_t i = 0; i < pa.size(); ++i)
            for (size_t j = 0; j < pb.size(); ++j)
                prod[i + j] = fp_.add(prod[i + j], fp_.mul(pa[i], pb[j]));
        return from_T_poly(prod);
    }
    HeckeElt out = zero(a.alg);
    for (const auto& [u, cu] : a.terms)
        for (const auto& [v, cv] : b.terms) {
            HeckeElt part = a.alg == Algebra::ProP ? mul_basis_prop(u, v) : mul_basis_iwahori(u.w, v.w);
            axpy(out, fp_.mul(cu, cv), part);
        }
    return out;
}

HeckeElt HeckeAlg::idempotent(LevelPair pair) const {
    make_level_pair(pair.lower, pair.upper);
    uint32_t minus1 = fp_.neg(1);
    if (pair.lower == Level::I) {
        // [J:I] = [K:I] = -1 mod p; char_J is the torus fiber of 1 and
        // char_K adds the fiber of s0.
        HeckeElt out = zero(Algebra::ProP);
        for (uint32_t t = 0; t < ext_.torus_order(); ++t) {
            axpy(out, minus1, basis_prop(ext_.torus(t)));
            if (pair.upper == Level::K)
                axpy(out, minus1, basis_prop(ext_.mul(ext_.torus(t), ext_.lift(WeylElt::s(0)))));
        }
        return out;
    }
    // (J,K): [K:J] = 1 mod p.
    HeckeElt out = basis_iwahori(WeylElt::s(0));
    axpy(out, 1, one(Algebra::Iwahori));
    return out;
}

HeckeElt HeckeAlg::map_C(LevelPair pair, const HeckeElt& a) const {
    make_level_pair(pair.lower, pair.upper);
    if (a.alg != algebra_of(pair.lower)) throw std::invalid_argument("map_C: element not at the lower level");
    Algebra target = algebra_of(pair.upper);
    uint32_t minus1 = fp_.neg(1);
    HeckeElt out = zero(target);
    for (const auto& [w, c] : a.terms) {
        if (pair.upper == Level::J) {
            axpy(out, fp_.mul(minus1, c), basis_iwahori(w.w));
        } else {
            if (!in_KDK(w.w)) continue; // index divisible by p
            uint32_t scalar = pair.lower == Level::I ? minus1 : 1;
            axpy(out, fp_.mul(scalar, c), basis_spherical(w.w));
        }
    }
    return out;
}

HeckeElt HeckeAlg::map_R(LevelPair pair, const HeckeElt& a) const {
    make_level_pair(pair.lower, pair.upper);
    if (a.alg != algebra_of(pair.upper)) throw std::invalid_argument("map_R: element not at the upper level");
    HeckeElt e = idempotent(pair);
    // [V:U] mod p: -1 for (I,J) and (I,K), 1 for (J,K).
    uint32_t scalar = pair.lower == Level::I ? fp_.neg(1) : 1;
    HeckeElt out = zero(e.alg);
    for (const auto& [w, c] : a.terms) {
        HeckeElt lift = e.alg == Algebra::ProP ? basis_prop(ext_.lift(w.w)) : basis_iwahori(w.w);
        axpy(out, fp_.mul(scalar, c), mul(mul(e, lift), e));
    }
    return out;
}

uint32_t HeckeAlg::chi_triv(const HeckeElt& a) const {
    // [U:U_g] = q^{l(w)} = 0 mod p away from length zero at levels I and J;
    // on H_K only the unit coset has index prime to p.
    uint32_t out = 0;
    for (const auto& [w, c] : a.terms)
        if (w.w.length() == 0) out = fp_.add(out, c);
    return out;
}

HeckeElt HeckeAlg::anti_involution(const HeckeElt& a) const {
    HeckeElt out = zero(a.alg);
    for (const auto& [w, c] : a.terms) {
        ExtWeylElt inv = a.alg == Algebra::ProP ? ext_.inverse(w) : ExtWeylElt{inverse(w.w), 0};
        axpy(out, c, HeckeElt{a.alg, {{inv, 1}}});
    }
    return out;
}

HeckeElt HeckeAlg::zeta() const {
    HeckeElt out = one(Algebra::Iwahori);
    axpy(out, 1, basis_iwahori(WeylElt::s(0)));
    axpy(out, 1, basis_iwahori(WeylElt::s(1)));
    axpy(out, 1, basis_iwahori(WeylElt::theta_pow(1)));
    axpy(out, 1, basis_iwahori(WeylElt::theta_pow(-1)));
    return out;
}

HeckeElt HeckeAlg::satake_T_power(long n) const {
    if (n < 0) throw std::invalid_argument("satake_T_power: n >= 0 required");
    std::vector<uint32_t> poly(static_cast<size_t>(n) + 1, 0);
    poly.back() = 1;
    return from_T_poly(poly);
}

std::vector<uint32_t> HeckeAlg::to_T_poly(const HeckeElt& a) const {
    if (a.alg != Algebra::Spherical) throw std::invalid_argument("to_T_poly: spherical element required");
    std::vector<uint32_t> poly;
    auto at = [&](size_t i) -> uint32_t& {
        if (poly.size() <= i) poly.resize(i + 1, 0);
        return poly[i];
    };
    for (const auto& [w, c] : a.terms) {
        if (w.w.is_identity()) {
            at(0) = fp_.add(at(0), c);
        } else {
            size_t n = static_cast<size_t>(w.w.n); // tau_{s0 theta^n} = T^n - T^{n-1}
            at(n) = fp_.add(at(n), c);
            at(n - 1) = fp_.sub(at(n - 1), c);
        }
    }
    return poly;
}

HeckeElt HeckeAlg::from_T_poly(const std::vector<uint32_t>& poly) const {
    HeckeElt out = zero(Algebra::Spherical);
    uint32_t suffix = 0;
    for (size_t j = poly.size(); j-- > 0;) {
        suffix = fp_.add(suffix, poly[j] % fp_.p());
        if (j == 0)
            axpy(out, suffix, basis_spherical(WeylElt::identity()));
        else
            axpy(out, suffix, basis_spherical(WeylElt::s0_theta_pow(static_cast<long>(j))));
    }
    return out;
}

HeckeElt HeckeAlg::expand_to_prop(const HeckeElt& a) const {
    if (a.alg == Algebra::ProP) return a;
    HeckeElt out = zero(Algebra::ProP);
    for (const auto& [w, c] : a.terms) {
        std::set<WeylElt> cosets;
        if (a.alg == Algebra::Iwahori) {
            cosets.insert(w.w);
        } else {
            // KwK splits into the Iwahori double cosets of the orbit of w
            // under left and right multiplication by {1, s0}.
            for (const WeylElt& l : {WeylElt::identity(), WeylElt::s(0)})
                for (const WeylElt& r : {WeylElt::identity(), WeylElt::s(0)})
                    cosets.insert(sl2hecke::mul(sl2hecke::mul(l, w.w), r));
        }
        for (const WeylElt& u : cosets)
            for (uint32_t t = 0; t < ext_.torus_order(); ++t)
                axpy(out, c, basis_prop(ext_.mul(ext_.torus(t), ext_.lift(u))));
    }
    return out;
}

HeckeElt HeckeAlg::collapse_from_prop(const HeckeElt& a, Algebra target) const {
    if (a.alg != Algebra::ProP) throw std::invalid_argument("collapse_from_prop: pro-p element required");
    if (target == Algebra::ProP) return a;
    HeckeElt out = zero(target);
    HeckeElt rest = a;
    while (!rest.terms.empty()) {
        ExtWeylElt key = rest.terms.begin()->first;
        uint32_t c = rest.terms.begin()->second;
        WeylElt label = key.w;
        if (target == Algebra::Spherical) {
            for (const WeylElt& l : {WeylElt::identity(), WeylElt::s(0)})
                for (const WeylElt& r : {WeylElt::identity(), WeylElt::s(0)}) {
                    WeylElt cand = sl2hecke::mul(sl2hecke::mul(l, key.w), r);
                    if (cand < label) label = cand;
                }
            if (!in_KDK(label)) throw std::invalid_argument("collapse_from_prop: support not K-bi-invariant");
        }
        HeckeElt fiber = target == Algebra::Spherical ? expand_to_prop(basis_spherical(label))
                                                      : expand_to_prop(basis_iwahori(label));
        for (const auto& [u, one_] : fiber.terms) {
            (void)one_;
            if (rest.coeff(u) != c) throw std::invalid_argument("collapse_from_prop: coefficients not fiber-constant");
        }
        axpy(rest, fp_.neg(c), fiber);
        HeckeElt sym = target == Algebra::Spherical ? basis_spherical(label) : basis_iwahori(label);
        axpy(out, c, sym);
    }
    return out;
}

HeckeElt HeckeAlg::pointwise(const HeckeElt& a, const HeckeElt& b) const {
    HeckeElt pa = expand_to_prop(a), pb = expand_to_prop(b);
    HeckeElt out = zero(Algebra::ProP);
    for (const auto& [w, c] : pa.terms) {
        uint32_t d = pb.coeff(w);
        if (d) axpy(out, fp_.mul(c, d), basis_prop(w));
    }
    return out;
}

std::string HeckeAlg::to_string(const HeckeElt& a) const {
    if (a.terms.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : a.terms) {
        if (!out.empty()) out += " + ";
        out += std::to_string(c) + "*tau[" + sl2hecke::to_string(w) + "]";
    }
    return out;
}

} // namespace sl2hecke
