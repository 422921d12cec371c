#pragma once

#include "sl2hecke/fp.hpp"
#include "sl2hecke/weyl.hpp"

#include <map>
#include <string>
#include <vector>

namespace sl2hecke {

enum class Algebra { ProP, Iwahori, Spherical };

enum class Level { I, J, K };

/// Admissible nested pairs of levels: (I,J), (I,K), (J,K).
struct LevelPair {
    Level lower;
    Level upper;
};

LevelPair make_level_pair(Level lower, Level upper);
Algebra algebra_of(Level level);
std::string to_string(Algebra alg);

/// Finitely supported F_p-combination of double-coset basis symbols.
/// Keys are extended Weyl elements; the torus exponent is 0 on the Iwahori
/// and spherical levels, and spherical support lies in {1, s0*theta^n n>=1}.
/// Zero coefficients are never stored.
struct HeckeElt {
    Algebra alg = Algebra::Iwahori;
    std::map<ExtWeylElt, uint32_t> terms;

    bool is_zero() const { return terms.empty(); }
    uint32_t coeff(const ExtWeylElt& key) const {
        auto it = terms.find(key);
        return it == terms.end() ? 0 : it->second;
    }
    bool operator==(const HeckeElt&) const = default;
};

/// The three degree-zero Hecke algebras of SL2(Q_p) over F_p with q = p:
/// H (pro-p Iwahori level I), H_J (Iwahori), H_K (spherical), together with
/// the change-of-level maps between them.
class HeckeAlg {
public:
    explicit HeckeAlg(uint32_t p);

    uint32_t p() const { return fp_.p(); }
    const Fp& field() const { return fp_; }
    const ExtWeyl& ext() const { return ext_; }

    HeckeElt zero(Algebra alg) const { return {alg, {}}; }
    HeckeElt one(Algebra alg) const;
    HeckeElt basis_prop(const ExtWeylElt& w) const;
    HeckeElt basis_iwahori(const WeylElt& w) const;
    HeckeElt basis_spherical(const WeylElt& w) const;

    HeckeElt add(const HeckeElt& a, const HeckeElt& b) const;
    HeckeElt sub(const HeckeElt& a, const HeckeElt& b) const;
    HeckeElt scale(uint32_t c, const HeckeElt& a) const;
    void axpy(HeckeElt& dst, uint32_t c, const HeckeElt& src) const;

    /// Product; both factors must live in the same algebra.
    HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;

    /// e_{U,V} as an element of the lower algebra of the pair.
    HeckeElt idempotent(LevelPair pair) const;

    /// Change of level downward-to-upward: tau_w of the lower algebra maps to
    /// [V_w : U_w] tau_w of the upper one, with the mod-p index values
    /// -1 for (I,J); -1 on the spherical double-coset reps and 0 off them
    /// for (I,K); 1 / 0 likewise for (J,K).
    HeckeElt map_C(LevelPair pair, const HeckeElt& a) const;

    /// Upward-to-downward: tau_w of the upper algebra maps to
    /// [V : U] e tau_w e computed in the lower algebra.
    HeckeElt map_R(LevelPair pair, const HeckeElt& a) const;

    /// The trivial character tau_g -> [U : U_g] mod p.
    uint32_t chi_triv(const HeckeElt& a) const;

    /// tau_g -> tau_{g^-1}; linear, involutive, anti-multiplicative.
    HeckeElt anti_involution(const HeckeElt& a) const;

    /// The central element zeta_J of H_J, expanded in the tau basis.
    HeckeElt zeta() const;

    /// T^n in the spherical tau basis, where T = 1 + tau^K_{s0*theta}.
    HeckeElt satake_T_power(long n) const;

    /// Pointwise product of compactly supported functions.  Arguments at the
    /// Iwahori or spherical level are first expanded into the pro-p basis;
    /// the result is returned at the pro-p level.
    HeckeElt pointwise(const HeckeElt& a, const HeckeElt& b) const;

    /// Rewrite an element as an I-bi-invariant function.
    HeckeElt expand_to_prop(const HeckeElt& a) const;

    /// Partial inverse of expand_to_prop; throws if the coefficients are not
    /// constant on the fibers of the target level.
    HeckeElt collapse_from_prop(const HeckeElt& a, Algebra target) const;

    /// Spherical elements as polynomials in the Satake parameter T.
    std::vector<uint32_t> to_T_poly(const HeckeElt& a) const;
    HeckeElt from_T_poly(const std::vector<uint32_t>& poly) const;

    std::string to_string(const HeckeElt& a) const;

private:
    HeckeElt mul_basis_prop(const ExtWeylElt& u, const ExtWeylElt& v) const;
    HeckeElt mul_basis_iwahori(const WeylElt& u, const WeylElt& v) const;

    Fp fp_;
    ExtWeyl ext_;
};

} // namespace sl2hecke
