#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace sl2hecke::padic {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// p-adic valuation of a nonzero rational; throws on zero.
inline long val_p(const BigRat& x, uint32_t p) {
    if (x == 0) throw std::domain_error("val_p: zero has infinite valuation");
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    long v = 0;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    return v;
}

inline long val_p_or(const BigRat& x, uint32_t p, long infinity) {
    return x == 0 ? infinity : val_p(x, p);
}

/// Exact 2x2 matrix over Q.  Everything here is used with determinant-1
/// matrices whose entries live in Z[1/p], so inverses go through the
/// adjugate.
struct QMat2 {
    std::array<BigRat, 4> e{}; // row major: a b / c d

    static QMat2 identity() { return {{1, 0, 0, 1}}; }

    const BigRat& a() const { return e[0]; }
    const BigRat& b() const { return e[1]; }
    const BigRat& c() const { return e[2]; }
    const BigRat& d() const { return e[3]; }

    BigRat det() const { return e[0] * e[3] - e[1] * e[2]; }

    bool operator==(const QMat2&) const = default;
};

inline QMat2 mul(const QMat2& x, const QMat2& y) {
    return {{x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
             x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]}};
}

inline QMat2 inverse(const QMat2& x) {
    BigRat d = x.det();
    if (d == 0) throw std::domain_error("QMat2: singular matrix");
    return {{x.e[3] / d, -x.e[1] / d, -x.e[2] / d, x.e[0] / d}};
}

inline QMat2 neg(const QMat2& x) { return {{-x.e[0], -x.e[1], -x.e[2], -x.e[3]}}; }

inline BigRat pow_int(uint32_t base, long exp) {
    BigRat r = 1;
    BigRat b = base;
    if (exp < 0) {
        b = BigRat(1) / b;
        exp = -exp;
    }
    for (long i = 0; i < exp; ++i) r *= b;
    return r;
}

// Standard matrices for SL2 over Q with uniformizer p:
//   s0 = (0 1; -1 0),  s1 = (0 -1/p; p 0),  theta = (p 0; 0 1/p),
//   x_plus(u) = (1 u; 0 1),  x_minus(u) = (1 0; u 1),  coroot(x) = (x 0; 0 1/x).
inline QMat2 mat_s0() { return {{0, 1, -1, 0}}; }
inline QMat2 mat_s1(uint32_t p) { return {{0, BigRat(-1) / p, p, 0}}; }
inline QMat2 mat_theta(uint32_t p, long n = 1) { return {{pow_int(p, n), 0, 0, pow_int(p, -n)}}; }
inline QMat2 mat_x_plus(const BigRat& u) { return {{1, u, 0, 1}}; }
inline QMat2 mat_x_minus(const BigRat& u) { return {{1, 0, u, 1}}; }
inline QMat2 mat_coroot(const BigRat& x) { return {{x, 0, 0, BigRat(1) / x}}; }

/// Minimum p-adic valuation over the entries (zero entries are skipped).
inline long min_entry_val(const QMat2& m, uint32_t p) {
    long best = 0;
    bool seen = false;
    for (const auto& x : m.e) {
        if (x == 0) continue;
        long v = val_p(x, p);
        if (!seen || v < best) best = v;
        seen = true;
    }
    if (!seen) throw std::domain_error("min_entry_val: zero matrix");
    return best;
}

} // namespace sl2hecke::padic
