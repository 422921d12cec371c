#include "sl2hecke/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace sl2hecke {

// Group law in (eps, n) coordinates.  theta^n * s0 = s0 * theta^(-n),
// so the four cases below.
WeylElt mul(const WeylElt& a, const WeylElt& b) {
    if (a.eps == 0 && b.eps == 0) return {0, a.n + b.n};
    if (a.eps == 0 && b.eps == 1) return {1, b.n - a.n};
    if (a.eps == 1 && b.eps == 0) return {1, a.n + b.n};
    return {0, b.n - a.n};
}

WeylElt inverse(const WeylElt& w) {
    // Reflections s0*theta^n are involutions.
    return w.eps ? w : WeylElt{0, -w.n};
}

std::vector<int> reduced_word(const WeylElt& w) {
    std::vector<int> out;
    long len = w.length();
    out.reserve(static_cast<size_t>(len));
    int first;
    if (w.eps == 0) {
        if (w.n == 0) return out;
        first = w.n > 0 ? 0 : 1; // theta^n = (s0 s1)^n, theta^-n = (s1 s0)^n
    } else {
        first = w.n >= 1 ? 1 : 0; // s0 theta^n = s1 (s0 s1)^(n-1) for n >= 1
    }
    for (long i = 0; i < len; ++i) out.push_back((first + static_cast<int>(i)) % 2);
    return out;
}

WeylElt from_word(const std::vector<int>& word) {
    WeylElt w = WeylElt::identity();
    for (int letter : word) w = mul(w, WeylElt::s(letter));
    return w;
}

SideClass side_class(const WeylElt& w) {
    SideClass sc;
    sc.w0 = mul(WeylElt::s(0), w).length() == w.length() + 1;
    sc.w1 = mul(WeylElt::s(1), w).length() == w.length() + 1;
    return sc;
}

int side_eps(const WeylElt& w) {
    if (w.is_identity()) throw std::invalid_argument("side_eps: identity lies in both side classes");
    return side_class(w).w0 ? 0 : 1;
}

bool bruhat_leq(const WeylElt& v, const WeylElt& w) {
    std::vector<int> sub = reduced_word(v), word = reduced_word(w);
    size_t i = 0;
    for (int letter : word) {
        if (i < sub.size() && sub[i] == letter) ++i;
    }
    return i == sub.size();
}

bool in_KDK(const WeylElt& w) {
    return w.is_identity() || (w.eps == 1 && w.n >= 1);
}

std::vector<WeylElt> elements_up_to_length(long max_len) {
    std::vector<WeylElt> out;
    for (long n = -max_len; n <= max_len; ++n) {
        WeylElt t{0, n};
        if (t.length() <= max_len) out.push_back(t);
        WeylElt st{1, n};
        if (st.length() <= max_len) out.push_back(st);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const WeylElt& w) {
    if (w.is_identity()) return "1";
    std::string out;
    if (w.eps) out += "s0";
    if (w.n != 0) {
        if (w.eps) out += "*";
        out += w.n == 1 ? "theta" : "theta^" + std::to_string(w.n);
    }
    return out;
}

namespace {

long parse_long(std::string_view s, const char* what) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("parse error in ") + what);
    return value;
}

// Grammar: "1" | "s0" | "s1" | theta-part | "s0*" theta-part,
// theta-part = "theta" | "theta^<int>".
WeylElt parse_weyl_impl(std::string_view s) {
    if (s == "1") return WeylElt::identity();
    if (s == "s0") return WeylElt::s(0);
    if (s == "s1") return WeylElt::s(1);
    int eps = 0;
    if (s.starts_with("s0*")) {
        eps = 1;
        s.remove_prefix(3);
    }
    if (!s.starts_with("theta")) throw std::invalid_argument("parse error in Weyl element");
    s.remove_prefix(5);
    long n = 1;
    if (!s.empty()) {
        if (!s.starts_with("^")) throw std::invalid_argument("parse error in Weyl element");
        s.remove_prefix(1);
        n = parse_long(s, "theta exponent");
    }
    return {eps, n};
}

} // namespace

WeylElt parse_weyl(const std::string& text) { return parse_weyl_impl(text); }

ExtWeyl::ExtWeyl(uint32_t q) : q_(q) {
    if (q < 3) throw std::invalid_argument("ExtWeyl: q must be >= 3");
}

ExtWeylElt ExtWeyl::torus(long exponent) const {
    long m = torus_order();
    long r = exponent % m;
    if (r < 0) r += m;
    return {WeylElt::identity(), static_cast<uint32_t>(r)};
}

ExtWeylElt ExtWeyl::s_tilde(int i) const {
    if (i == 0) return {WeylElt::s(0), 0};
    return {WeylElt::s(1), minus_one_exp()};
}

ExtWeylElt ExtWeyl::mul(const ExtWeylElt& a, const ExtWeylElt& b) const {
    uint32_t m = torus_order();
    // torus(t) conjugated across a base with an s0 prefix inverts.
    long t = a.t;
    t += a.w.eps ? -static_cast<long>(b.t) : static_cast<long>(b.t);
    // Cocycle of the canonical lifts: n_0^2 = -id contributes torus(-1)
    // exactly when both bases carry the s0 prefix.
    if (a.w.eps && b.w.eps) t += minus_one_exp();
    long r = t % static_cast<long>(m);
    if (r < 0) r += m;
    return {sl2hecke::mul(a.w, b.w), static_cast<uint32_t>(r)};
}

ExtWeylElt ExtWeyl::inverse(const ExtWeylElt& a) const {
    WeylElt wi = sl2hecke::inverse(a.w);
    // Solve mul(a, result) = identity for the torus exponent.
    long t = -(static_cast<long>(a.t) + (a.w.eps ? static_cast<long>(minus_one_exp()) : 0));
    if (a.w.eps) t = -t;
    long m = torus_order();
    long r = t % m;
    if (r < 0) r += m;
    return {wi, static_cast<uint32_t>(r)};
}

std::string to_string(const ExtWeylElt& a) {
    if (a.t == 0) return to_string(a.w);
    std::string out = "t^" + std::to_string(a.t);
    if (!a.w.is_identity()) out += "*" + to_string(a.w);
    return out;
}

ExtWeylElt parse_ext_weyl(const std::string& text, uint32_t q) {
    std::string_view s(text);
    uint32_t t = 0;
    if (s.starts_with("t^")) {
        s.remove_prefix(2);
        size_t cut = s.size();
        for (size_t i = 0; i < s.size(); ++i) {
            char c = s[i];
            if (c == '*' || static_cast<unsigned char>(c) > 127) {
                cut = i;
                break;
            }
        }
        long e = parse_long(s.substr(0, cut), "torus exponent");
        long m = static_cast<long>(q) - 1;
        long r = e % m;
        if (r < 0) r += m;
        t = static_cast<uint32_t>(r);
        if (cut == s.size()) return {WeylElt::identity(), t};
        s.remove_prefix(cut);
        if (s.starts_with("*"))
            s.remove_prefix(1);
        else if (s.starts_with("\xc2\xb7")) // accept U+00B7 as separator
            s.remove_prefix(2);
        else
            throw std::invalid_argument("parse error in extended Weyl element");
    }
    return {parse_weyl_impl(s), t};
}

} // namespace sl2hecke
