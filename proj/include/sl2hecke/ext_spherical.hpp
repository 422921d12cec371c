#pragma once

#include "sl2hecke/ext_iwahori.hpp"

#include <optional>

namespace sl2hecke {

/// Element of the spherical Ext-algebra E_K^*, realized as the canonical
/// coordinates of a central representative in E_J^*.  Basis per degree:
///   degree 0: T^m, degree 1: u T^m, degree 2: B_n (the beta pairs),
///   degree 3: Phi_1 (key -1) and Psi_n (the psi pairs).
struct SphericalExtElt {
    std::array<std::map<long, uint32_t>, 4> comp;

    bool is_zero() const {
        for (const auto& c : comp)
            if (!c.empty()) return false;
        return true;
    }
    uint32_t coeff(int deg, long idx) const {
        auto it = comp[static_cast<size_t>(deg)].find(idx);
        return it == comp[static_cast<size_t>(deg)].end() ? 0 : it->second;
    }
    bool operator==(const SphericalExtElt&) const = default;
};

struct SphericalReport {
    long max_index = 0;
    bool commutative = false;
    bool graded_commutative = true;
    std::string witness;
    size_t kernel_dim = 0;
    bool splitting_ok = false;
};

/// The center Z(E_J^*) and the squeeze homomorphism onto E_K^*.  The center
/// splits as the image of the canonical commutative subalgebra plus the
/// two-dimensional ideal spanned by psi_{s0} and beta_{s0}; the squeeze is
/// modeled as the projection along that ideal, with the down-up composite
/// through e_{J,K} (.) e_{J,K} checked by the tests.
class SphericalAlg {
public:
    /// max_index bounds the T-power / pair indices handled by the solver;
    /// central inputs must be supported in lengths <= 2 max_index + 1.
    SphericalAlg(const ExtAlg& ext, long max_index);

    const ExtAlg& ext() const { return ext_; }
    long max_index() const { return max_index_; }

    SphericalExtElt zero() const { return {}; }
    SphericalExtElt one() const { return T_power(0); }
    SphericalExtElt T_power(long m) const;
    SphericalExtElt u_T_power(long m) const;
    SphericalExtElt B(long n) const;
    SphericalExtElt Phi1() const;
    SphericalExtElt Psi(long n) const;

    SphericalExtElt add(const SphericalExtElt& a, const SphericalExtElt& b) const;
    SphericalExtElt sub(const SphericalExtElt& a, const SphericalExtElt& b) const;
    void axpy(SphericalExtElt& dst, uint32_t c, const SphericalExtElt& src) const;

    /// Central membership test: coordinates of z in the center basis
    /// (canonical families plus the kernel pair), degree by degree.
    std::optional<std::vector<uint32_t>> central_coordinates(int degree,
                                                             const GradedExtElt& z) const;
    bool is_central(const GradedExtElt& z) const;

    /// The squeeze homomorphism: project a central element onto the
    /// canonical subalgebra along span{psi_{s0}, beta_{s0}}.  Throws on
    /// non-central input.
    SphericalExtElt squeeze(const GradedExtElt& z) const;

    /// Canonical central representative in E_J^*.
    GradedExtElt representative(const SphericalExtElt& a) const;

    SphericalExtElt ek_mul(const SphericalExtElt& a, const SphericalExtElt& b) const;

    /// Kernel basis of the squeeze: {psi_{s0}, beta_{s0}}.
    std::vector<GradedExtElt> kernel_basis_elements() const;

    /// Commutativity of all canonical basis pairs with index <= max_len,
    /// the odd element with nonzero square, and the kernel dimension.
    SphericalReport graded_comm_report(long max_len) const;

    std::string to_string(const SphericalExtElt& a) const;

private:
    struct DegreeBasis {
        std::vector<GradedExtElt> gens; // canonical family first, kernel last
        size_t kernel_count = 0;
    };
    const DegreeBasis& degree_basis(int degree) const;
    std::vector<SphericalExtElt> canonical_basis(long max_index) const;

    const ExtAlg& ext_;
    long max_index_;
    std::array<DegreeBasis, 4> bases_;
};

} // namespace sl2hecke
