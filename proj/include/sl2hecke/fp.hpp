#pragma once

#include <cstdint>
#include <stdexcept>

namespace sl2hecke {

/// Arithmetic in the prime field F_p for a runtime prime p.
/// Values are kept reduced in [0, p).
class Fp {
public:
    explicit Fp(uint32_t p) : p_(p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
    }

    uint32_t p() const { return p_; }

    uint32_t reduce(long long x) const {
        long long r = x % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint32_t inv(uint32_t a) const {
        if (a % p_ == 0) throw std::domain_error("Fp: inverse of zero");
        return pow(a % p_, p_ - 2);
    }

private:
    uint32_t p_;
};

} // namespace sl2hecke
