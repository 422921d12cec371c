#include "sl2hecke/padic/descriptor.hpp"

#include <charconv>
#include <stdexcept>

namespace sl2hecke::padic {

Mat2 mat2_identity(const ResidueRing& R) {
    Mat2 m;
    m.e = {R.one(), R.zero(), R.zero(), R.one()};
    return m;
}

Mat2 mat2_mul(const ResidueRing& R, const Mat2& x, const Mat2& y) {
    Mat2 out;
    out.e[0] = R.add(R.mul(x.e[0], y.e[0]), R.mul(x.e[1], y.e[2]));
    out.e[1] = R.add(R.mul(x.e[0], y.e[1]), R.mul(x.e[1], y.e[3]));
    out.e[2] = R.add(R.mul(x.e[2], y.e[0]), R.mul(x.e[3], y.e[2]));
    out.e[3] = R.add(R.mul(x.e[2], y.e[1]), R.mul(x.e[3], y.e[3]));
    return out;
}

ResidueRing::Elem mat2_det(const ResidueRing& R, const Mat2& x) {
    return R.sub(R.mul(x.e[0], x.e[3]), R.mul(x.e[1], x.e[2]));
}

Mat2 mat2_inv(const ResidueRing& R, const Mat2& x) {
    Mat2 out;
    out.e = {x.e[3], R.neg(x.e[1]), R.neg(x.e[2]), x.e[0]};
    return out;
}

Mat2 mat2_neg(const ResidueRing& R, const Mat2& x) {
    Mat2 out;
    for (int i = 0; i < 4; ++i) out.e[static_cast<size_t>(i)] = R.neg(x.e[static_cast<size_t>(i)]);
    return out;
}

uint64_t mat2_pack(const ResidueRing& R, const Mat2& x) {
    uint32_t bits = R.coeff_bits();
    if (bits * 4 * R.f() > 63) throw std::length_error("mat2_pack: ring too large to pack");
    uint64_t key = 0;
    for (int i = 0; i < 4; ++i)
        for (uint32_t j = 0; j < R.f(); ++j)
            key = (key << bits) | x.e[static_cast<size_t>(i)][j];
    return key;
}

Mat2 mat2_unpack(const ResidueRing& R, uint64_t key) {
    uint32_t bits = R.coeff_bits();
    uint64_t mask = (1ull << bits) - 1;
    Mat2 out;
    for (int i = 3; i >= 0; --i)
        for (int j = static_cast<int>(R.f()) - 1; j >= 0; --j) {
            out.e[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<uint32_t>(key & mask);
            key >>= bits;
        }
    return out;
}

Mat2 mat2_x_plus(const ResidueRing& R, const ResidueRing::Elem& u) {
    Mat2 m = mat2_identity(R);
    m.e[1] = u;
    return m;
}

Mat2 mat2_x_minus(const ResidueRing& R, const ResidueRing::Elem& u) {
    Mat2 m = mat2_identity(R);
    m.e[2] = u;
    return m;
}

Mat2 mat2_coroot(const ResidueRing& R, const ResidueRing::Elem& t) {
    Mat2 m;
    m.e = {t, R.zero(), R.zero(), R.inv(t)};
    return m;
}

bool GroupDescriptor::contains(const ResidueRing& R, const Mat2& g) const {
    if (!R.is_zero(R.sub(mat2_det(R, g), R.one()))) return false;
    if (full_sl2) return true;
    if (R.val(g.e[1]) < std::min(val_b, R.m())) return false;
    if (R.val(g.e[2]) < std::min(val_c, R.m())) return false;
    const auto& a = g.e[0];
    const auto& d = g.e[3];
    switch (diag) {
    case Diag::Units: return R.is_unit(a) && R.is_unit(d);
    case Diag::One: return R.val(R.sub(a, R.one())) >= 1 && R.val(R.sub(d, R.one())) >= 1;
    case Diag::PlusMinusOne: {
        bool plus = R.val(R.sub(a, R.one())) >= 1 && R.val(R.sub(d, R.one())) >= 1;
        bool minus = R.val(R.add(a, R.one())) >= 1 && R.val(R.add(d, R.one())) >= 1;
        return plus || minus;
    }
    }
    return false;
}

BigInt GroupDescriptor::order(const ResidueRing& R) const {
    uint32_t m = R.m();
    BigInt q = 1;
    for (uint32_t i = 0; i < R.f(); ++i) q *= R.p();
    auto qpow = [&](uint32_t e) {
        BigInt r = 1;
        for (uint32_t i = 0; i < e; ++i) r *= q;
        return r;
    };
    if (full_sl2) return qpow(3 * (m - 1)) * q * (q * q - 1);
    if (val_b + val_c < 1) throw std::logic_error("order: pattern is not a group");
    BigInt diag_count;
    switch (diag) {
    case Diag::Units: diag_count = qpow(m) - qpow(m - 1); break;
    case Diag::One: diag_count = qpow(m - 1); break;
    default: diag_count = 2 * qpow(m - 1); break;
    }
    BigInt b_count = qpow(val_b >= m ? 0 : m - val_b);
    BigInt c_count = qpow(val_c >= m ? 0 : m - val_c);
    return diag_count * b_count * c_count;
}

std::vector<Mat2> GroupDescriptor::generators(const ResidueRing& R) const {
    std::vector<Mat2> out;
    for (const auto& u : R.additive_generators(full_sl2 ? 0 : val_b)) out.push_back(mat2_x_plus(R, u));
    for (const auto& u : R.additive_generators(full_sl2 ? 0 : val_c)) out.push_back(mat2_x_minus(R, u));
    switch (full_sl2 ? Diag::Units : diag) {
    case Diag::Units:
        for (const auto& t : R.unit_group_generators()) out.push_back(mat2_coroot(R, t));
        break;
    case Diag::PlusMinusOne:
        out.push_back(mat2_neg(R, mat2_identity(R)));
        [[fallthrough]];
    case Diag::One:
        for (uint32_t i = 0; i < R.f(); ++i)
            out.push_back(mat2_coroot(R, R.add(R.one(), R.monomial(R.p(), i))));
        break;
    }
    return out;
}

GroupDescriptor GroupDescriptor::conjugate_by_s0() const {
    if (full_sl2) return *this;
    GroupDescriptor out = *this;
    out.name = "s0*" + name + "*s0^-1";
    out.val_b = val_c;
    out.val_c = val_b;
    return out;
}

// s1 (a b; c d) s1^-1 = (d, -c/pi^2; -pi^2 b, a), so the lower entry must
// vanish to order two for the conjugate to stay inside SL2(O).
GroupDescriptor GroupDescriptor::conjugate_by_s1() const {
    if (full_sl2 || val_c < 2) throw std::invalid_argument("conjugate_by_s1: pattern leaves SL2(O)");
    GroupDescriptor out = *this;
    out.name = "s1*" + name + "*s1^-1";
    out.val_b = val_c - 2;
    out.val_c = val_b + 2;
    return out;
}

GroupDescriptor GroupDescriptor::I() { return {"I", Diag::One, 0, 1, false}; }
GroupDescriptor GroupDescriptor::J() { return {"J", Diag::Units, 0, 1, false}; }
GroupDescriptor GroupDescriptor::K() { return {"K", Diag::Units, 0, 0, true}; }
GroupDescriptor GroupDescriptor::J_plus(uint32_t l) {
    return {"J+(" + std::to_string(l) + ")", Diag::Units, 0, l + 1, false};
}
GroupDescriptor GroupDescriptor::J_minus(uint32_t l) {
    return {"J-(" + std::to_string(l) + ")", Diag::Units, l, 1, false};
}
GroupDescriptor GroupDescriptor::I_plus(uint32_t l) {
    return {"I+(" + std::to_string(l) + ")", Diag::One, 0, l + 1, false};
}
GroupDescriptor GroupDescriptor::I_minus(uint32_t l) {
    return {"I-(" + std::to_string(l) + ")", Diag::One, l, 1, false};
}
GroupDescriptor GroupDescriptor::K_theta(uint32_t n) {
    return {"Ktheta(" + std::to_string(n) + ")", Diag::Units, 2 * n, 0, n == 0};
}
GroupDescriptor GroupDescriptor::L() { return {"L", Diag::PlusMinusOne, 2, 0, false}; }

GroupDescriptor GroupDescriptor::J_w(const WeylElt& w) {
    if (w.is_identity()) return J();
    uint32_t l = static_cast<uint32_t>(w.length());
    return side_eps(w) == 0 ? J_plus(l) : J_minus(l);
}

GroupDescriptor GroupDescriptor::I_w(const WeylElt& w) {
    if (w.is_identity()) return I();
    uint32_t l = static_cast<uint32_t>(w.length());
    return side_eps(w) == 0 ? I_plus(l) : I_minus(l);
}

GroupDescriptor GroupDescriptor::K_w(const WeylElt& w) {
    long n = w.n;
    long b = w.eps ? -2 * n : 2 * n;
    GroupDescriptor out;
    out.val_b = static_cast<uint32_t>(std::max(0l, b));
    out.val_c = static_cast<uint32_t>(std::max(0l, -b));
    out.diag = Diag::Units;
    out.full_sl2 = out.val_b == 0 && out.val_c == 0;
    out.name = "K_{" + to_string(w) + "}";
    return out;
}

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
    if (text == "I") return I();
    if (text == "J") return J();
    if (text == "K") return K();
    if (text == "L") return L();
    auto parse_arg = [&](size_t prefix_len) {
        if (text.size() < prefix_len + 2 || text.back() != ')')
            throw std::invalid_argument("descriptor parse error: " + text);
        uint32_t v = 0;
        const char* begin = text.data() + prefix_len;
        const char* end = text.data() + text.size() - 1;
        auto [p, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc{} || p != end) throw std::invalid_argument("descriptor parse error: " + text);
        return v;
    };
    if (text.starts_with("J+(")) return J_plus(parse_arg(3));
    if (text.starts_with("J-(")) return J_minus(parse_arg(3));
    if (text.starts_with("I+(")) return I_plus(parse_arg(3));
    if (text.starts_with("I-(")) return I_minus(parse_arg(3));
    if (text.starts_with("Ktheta(")) return K_theta(parse_arg(7));
    throw std::invalid_argument("unknown descriptor: " + text);
}

} // namespace sl2hecke::padic
