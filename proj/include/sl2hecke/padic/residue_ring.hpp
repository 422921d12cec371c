#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sl2hecke::padic {

/// Finite quotient O/M^m of the ring of integers of the unramified extension
/// of Q_p of degree f: the Galois ring of characteristic p^m with residue
/// field F_{p^f}.  For f = 1 this is Z/p^m.  Elements are polynomials in a
/// fixed generator with f coefficients mod p^m (f <= 4); the generator
/// satisfies a fixed monic lift of an irreducible polynomial over F_p.
class ResidueRing {
public:
    static constexpr uint32_t kMaxF = 4;
    using Elem = std::array<uint32_t, kMaxF>;

    ResidueRing(uint32_t p, uint32_t f, uint32_t m);

    uint32_t p() const { return p_; }
    uint32_t f() const { return f_; }
    uint32_t m() const { return m_; }
    uint64_t pm() const { return pm_; }

    Elem zero() const { return Elem{}; }
    Elem one() const;
    Elem from_int(long long x) const;
    /// x * generator^i for 0 <= i < f.
    Elem monomial(long long x, uint32_t i) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(Elem a, uint64_t e) const;

    bool is_zero(const Elem& a) const;
    bool is_unit(const Elem& a) const;
    /// p-adic valuation, in [0, m]; the zero element has valuation m.
    uint32_t val(const Elem& a) const;
    /// Units with a^{q-1} = 1 lifting the residue of a; requires a unit.
    Elem teichmuller(const Elem& a) const;
    Elem inv(const Elem& a) const;

    /// Multiplicative generators of the unit group: the Teichmuller lift of
    /// a generator of F_q^x together with 1 + p g^i for i < f.
    std::vector<Elem> unit_group_generators() const;
    /// Additive generators p^v g^i of M^v as a group, i < f.
    std::vector<Elem> additive_generators(uint32_t v) const;

    /// Bits needed to pack one coefficient.
    uint32_t coeff_bits() const { return coeff_bits_; }

    std::string to_string(const Elem& a) const;

private:
    void reduce_step(std::array<uint64_t, 2 * kMaxF>& wide) const;

    uint32_t p_, f_, m_;
    uint64_t pm_;
    uint32_t coeff_bits_;
    std::array<uint32_t, kMaxF> min_poly_; // generator^f = sum min_poly_[i] generator^i
};

} // namespace sl2hecke::padic
