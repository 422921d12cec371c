#pragma once

#include "sl2hecke/hecke.hpp"
#include "sl2hecke/linalg.hpp"

#include <array>
#include <map>
#include <string>

namespace sl2hecke {

/// Basis-symbol kinds of the graded algebra E_J^*, one per degree:
/// degree 0: tau_w (all w), degree 1: x_w (l(w) >= 1),
/// degree 2: alpha_w (l(w) >= 1), degree 3: phi_w (all w).
enum class ExtKind { Tau = 0, X = 1, Alpha = 2, Phi = 3 };

std::string to_string(ExtKind kind);

/// Degree-indexed finitely supported F_p-combination of E_J^* basis symbols.
struct GradedExtElt {
    std::array<std::map<WeylElt, uint32_t>, 4> comp;

    bool is_zero() const {
        for (const auto& c : comp)
            if (!c.empty()) return false;
        return true;
    }
    uint32_t coeff(int deg, const WeylElt& w) const {
        auto it = comp[static_cast<size_t>(deg)].find(w);
        return it == comp[static_cast<size_t>(deg)].end() ? 0 : it->second;
    }
    /// Degree of a homogeneous element; throws if mixed or zero.
    int degree() const;
    bool operator==(const GradedExtElt&) const = default;
};

struct CentralizerDegreeReport {
    int degree = 0;
    size_t dimension = 0;
    size_t expected_dimension = 0;
    bool matches_expected = false;
    std::vector<GradedExtElt> basis; // echelon form over the symbol order
};

struct CentralizerReport {
    long max_len = 0;
    std::array<CentralizerDegreeReport, 4> degrees;
    bool all_match = false;
};

struct FinGenReport {
    long max_len = 0;
    size_t checked = 0;
    bool ok = false;
    std::vector<std::string> failures;
};

/// The graded Ext-algebra E_J^* of SL2(Q_p), p >= 5, as a structure-constant
/// algebra on the basis {tau_w, x_w, alpha_w, phi_w}, supported in degrees
/// 0 to 3.  Degree 0 is the Iwahori-Hecke algebra; x carries the bimodule
/// transport of the positive-length part of it; alpha and phi are the dual
/// bases in degrees 2 and 3 with the tau-action given by the length
/// case-split rules; beta and psi are derived presentations.
class ExtAlg {
public:
    explicit ExtAlg(uint32_t p);

    uint32_t p() const { return hecke_.p(); }
    const Fp& field() const { return hecke_.field(); }
    const HeckeAlg& hecke() const { return hecke_; }

    GradedExtElt zero() const { return {}; }
    GradedExtElt one() const { return basis(ExtKind::Tau, WeylElt::identity()); }
    GradedExtElt basis(ExtKind kind, const WeylElt& w) const;

    GradedExtElt add(const GradedExtElt& a, const GradedExtElt& b) const;
    GradedExtElt sub(const GradedExtElt& a, const GradedExtElt& b) const;
    GradedExtElt scale(uint32_t c, const GradedExtElt& a) const;
    void axpy(GradedExtElt& dst, uint32_t c, const GradedExtElt& src) const;

    GradedExtElt mul(const GradedExtElt& a, const GradedExtElt& b) const;

    /// Derived degree-2 presentation beta_w = tau_{s_{1-eps}} alpha_w
    /// (w in W^eps) as an element in the alpha coordinates.
    GradedExtElt beta_sym(const WeylElt& w) const;
    /// Derived degree-3 presentation psi_w = tau_{s_{1-eps}} phi_w.
    GradedExtElt psi_sym(const WeylElt& w) const;

    /// Change of coordinates on the degree-2 component between the alpha and
    /// beta bases; keys of the returned maps are the beta (resp. alpha)
    /// indices.  Round trips are identities.
    std::map<WeylElt, uint32_t> to_beta(const GradedExtElt& a) const;
    GradedExtElt from_beta(const std::map<WeylElt, uint32_t>& beta_coords) const;

    /// Degree-3 coordinates in the basis {phi_1} u {psi_w}; the phi_1
    /// coordinate is keyed by the identity.
    std::map<WeylElt, uint32_t> to_psi(const GradedExtElt& a) const;
    GradedExtElt from_psi(const std::map<WeylElt, uint32_t>& psi_coords) const;

    /// Duality pairing <phi_w, tau_v> = <alpha_w, x_v> = delta_{w,v},
    /// for homogeneous arguments of complementary degree (0,3) or (1,2)
    /// in either order.
    uint32_t pairing(const GradedExtElt& a, const GradedExtElt& b) const;

    /// The anti-involution on degrees 0 and 1, and on the span of
    /// alpha_{s0}, alpha_{s1} in degree 2; throws on anything else.
    GradedExtElt anti_involution_partial(const GradedExtElt& a) const;

    /// Composite of the top Shapiro map with the trace: the sum of the phi
    /// coordinates of a degree-3 element.  Vanishes on every psi_w.
    uint32_t s_top(const GradedExtElt& a) const;

    // Central elements.
    GradedExtElt zeta() const;
    GradedExtElt zeta_pow(long m) const;
    /// f((zeta - 1) zeta^m): the degree-1 image of the center of H_J.
    GradedExtElt central_u(long m) const;
    /// beta_{s0 (s1 s0)^n} + beta_{s1 (s0 s1)^n} in alpha coordinates.
    GradedExtElt beta_pair(long n) const;
    /// psi_{s0 (s1 s0)^n} + psi_{s1 (s0 s1)^n} in phi coordinates.
    GradedExtElt psi_pair(long n) const;
    GradedExtElt phi1() const { return basis(ExtKind::Phi, WeylElt::identity()); }

    /// Index words used by the central families: s0 (s1 s0)^n and
    /// s1 (s0 s1)^n, both of length 2n + 1.
    static WeylElt zigzag0(long n) { return WeylElt::s0_theta_pow(-n); }
    static WeylElt zigzag1(long n) { return WeylElt::s0_theta_pow(n + 1); }

    /// Exact solve of z g = g z over unknowns supported in l <= max_len,
    /// with g running over all basis symbols within the interaction window
    /// l <= 2 max_len + 2, degree by degree; compares against the spans
    /// predicted by the central families plus psi_{s0} and beta_{s0}.
    CentralizerReport centralizer(long max_len) const;

    /// Expected centralizer elements with support inside l <= max_len.
    std::vector<GradedExtElt> expected_center(int degree, long max_len) const;

    /// Checks that every basis element of length <= max_len lies in the
    /// span of z*s with z central and s in S0 u S1 = {1, tau_{s0}, tau_{s1},
    /// tau_{s0 s1}} u {x_{s0}, x_{s1}, x_{s0 s1}, x_{s1 s0}}.
    FinGenReport finite_generation_check(long max_len) const;

    std::string to_string(const GradedExtElt& a) const;

    // Conversions between the degree-0 component and Iwahori-Hecke elements.
    HeckeElt deg0_to_hecke(const GradedExtElt& a) const;
    GradedExtElt hecke_to_deg0(const HeckeElt& h) const;

private:
    struct Term {
        WeylElt w;
        int sign; // +1 or -1
    };
    static std::vector<Term> act_letter(int s, ExtKind kind, const WeylElt& w, bool left);
    void act_word(GradedExtElt& out, uint32_t c, const std::vector<int>& word, ExtKind kind,
                  const WeylElt& w, bool left) const;
    GradedExtElt act_deg0(const std::map<WeylElt, uint32_t>& h, ExtKind kind,
                          const std::map<WeylElt, uint32_t>& m, bool left) const;
    GradedExtElt mul_xx(const WeylElt& v, const WeylElt& w) const;
    GradedExtElt mul_x_alpha(const WeylElt& v, const WeylElt& w) const;
    GradedExtElt mul_alpha_x(const WeylElt& w, const WeylElt& v) const;

    HeckeAlg hecke_;
};

} // namespace sl2hecke
