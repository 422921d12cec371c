#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sl2hecke {

/// Element of the affine Weyl group W = <s0, s1> of SL2, an infinite
/// dihedral group.  Normal form: theta^n when eps == 0, s0*theta^n when
/// eps == 1, where theta = s0*s1.  The pair (eps, n) is unique.
struct WeylElt {
    int eps = 0;
    long n = 0;

    static WeylElt identity() { return {0, 0}; }
    static WeylElt s(int i) { return i == 0 ? WeylElt{1, 0} : WeylElt{1, 1}; }
    static WeylElt theta_pow(long k) { return {0, k}; }
    static WeylElt s0_theta_pow(long k) { return {1, k}; }

    long length() const { return eps ? std::labs(1 - 2 * n) : std::labs(2 * n); }
    bool is_identity() const { return eps == 0 && n == 0; }

    bool operator==(const WeylElt&) const = default;
};

/// Total order by (length, eps, n); used for deterministic term ordering.
inline bool operator<(const WeylElt& a, const WeylElt& b) {
    long la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    if (a.eps != b.eps) return a.eps < b.eps;
    return a.n < b.n;
}

WeylElt mul(const WeylElt& a, const WeylElt& b);
WeylElt inverse(const WeylElt& w);

/// Unique reduced word of w as a sequence of letters in {0, 1}
/// (alternating; empty for the identity).
std::vector<int> reduced_word(const WeylElt& w);

/// Rebuild an element from a word over {0, 1} (need not be reduced).
WeylElt from_word(const std::vector<int>& word);

/// Side class membership: w is in W^eps iff l(s_eps * w) = l(w) + 1.
/// Returns the pair (in W^0, in W^1); both hold exactly for the identity.
struct SideClass {
    bool w0 = false;
    bool w1 = false;
};
SideClass side_class(const WeylElt& w);

/// eps with w in W^eps, for w != 1 (unique).  Throws on the identity.
int side_eps(const WeylElt& w);

/// Bruhat order via the subword criterion: the reduced word of v embeds
/// as an ordered subword of the reduced word of w.
bool bruhat_leq(const WeylElt& v, const WeylElt& w);

/// Membership in the spherical double-coset representative set
/// {1} u {s0*theta^n : n >= 1}.
bool in_KDK(const WeylElt& w);

/// All elements of length <= max_len, sorted; 2*max_len + 1 of them.
std::vector<WeylElt> elements_up_to_length(long max_len);

std::string to_string(const WeylElt& w);
WeylElt parse_weyl(const std::string& text);

/// Element of the tilde extension 0 -> T0/T1 -> W~ -> W -> 0.  The torus
/// subquotient T0/T1 is cyclic of order q - 1; torus parts are exponents of
/// a fixed generator.  An element is torus(t) * lift(w) where lift(w) is the
/// canonical lift of the normal form (theta powers and an s0 prefix lifted
/// through the standard 2x2 matrices).
struct ExtWeylElt {
    WeylElt w;
    uint32_t t = 0;

    bool operator==(const ExtWeylElt&) const = default;
    long length() const { return w.length(); }
};

inline bool operator<(const ExtWeylElt& a, const ExtWeylElt& b) {
    if (a.w == b.w) return a.t < b.t;
    return a.w < b.w;
}

/// Group operations on W~; q - 1 is the torus order.  Conjugation of the
/// torus part across an s0-prefixed base inverts it, and the product of the
/// canonical lifts of two s0-prefixed elements picks up the central torus
/// element of order 2 (the lift relation n_s^2 = coroot(-1)).
class ExtWeyl {
public:
    explicit ExtWeyl(uint32_t q);

    uint32_t q() const { return q_; }
    uint32_t torus_order() const { return q_ - 1; }

    ExtWeylElt lift(const WeylElt& w) const { return {w, 0}; }
    ExtWeylElt torus(long exponent) const;
    /// The lift of s_i coming from the matrix n_{s_i}; for i = 1 this
    /// differs from the canonical lift of s1 by the torus element -1.
    ExtWeylElt s_tilde(int i) const;

    ExtWeylElt mul(const ExtWeylElt& a, const ExtWeylElt& b) const;
    ExtWeylElt inverse(const ExtWeylElt& a) const;

    /// Exponent of the torus element -1 = coroot(-1), i.e. (q-1)/2.
    uint32_t minus_one_exp() const { return (q_ - 1) / 2; }

private:
    uint32_t q_;
};

std::string to_string(const ExtWeylElt& a);
ExtWeylElt parse_ext_weyl(const std::string& text, uint32_t q);

} // namespace sl2hecke
