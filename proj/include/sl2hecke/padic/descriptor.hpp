#pragma once

#include "sl2hecke/padic/exact_mat.hpp"
#include "sl2hecke/padic/residue_ring.hpp"
#include "sl2hecke/weyl.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sl2hecke::padic {

/// 2x2 matrix over a residue ring, row major.
struct Mat2 {
    std::array<ResidueRing::Elem, 4> e{};
    bool operator==(const Mat2&) const = default;
};

Mat2 mat2_identity(const ResidueRing& R);
Mat2 mat2_mul(const ResidueRing& R, const Mat2& x, const Mat2& y);
ResidueRing::Elem mat2_det(const ResidueRing& R, const Mat2& x);
/// Inverse via the adjugate; requires det = 1.
Mat2 mat2_inv(const ResidueRing& R, const Mat2& x);
Mat2 mat2_neg(const ResidueRing& R, const Mat2& x);
uint64_t mat2_pack(const ResidueRing& R, const Mat2& x);
Mat2 mat2_unpack(const ResidueRing& R, uint64_t key);
Mat2 mat2_x_plus(const ResidueRing& R, const ResidueRing::Elem& u);
Mat2 mat2_x_minus(const ResidueRing& R, const ResidueRing::Elem& u);
Mat2 mat2_coroot(const ResidueRing& R, const ResidueRing::Elem& t);

/// Symbolic congruence-subgroup pattern inside SL2(O): entrywise minimum
/// valuations for the off-diagonal entries plus a constraint class for the
/// diagonal.  Membership is decidable entrywise; each pattern describes a
/// subgroup of SL2(O/M^m) whenever val_b + val_c >= 1 (K is the one full
/// pattern and is handled separately).
struct GroupDescriptor {
    enum class Diag { Units, One, PlusMinusOne };

    std::string name;
    Diag diag = Diag::Units;
    uint32_t val_b = 0;
    uint32_t val_c = 0;
    bool full_sl2 = false;

    bool contains(const ResidueRing& R, const Mat2& g) const;
    /// Exact order of the image in SL2(O/M^m).
    BigInt order(const ResidueRing& R) const;
    /// Generators: elementary unipotents at the boundary valuations plus
    /// torus generators (and -id for the PlusMinusOne class).
    std::vector<Mat2> generators(const ResidueRing& R) const;

    GroupDescriptor conjugate_by_s0() const;
    GroupDescriptor conjugate_by_s1() const;

    // Named subgroups.
    static GroupDescriptor I();
    static GroupDescriptor J();
    static GroupDescriptor K();
    static GroupDescriptor J_plus(uint32_t l);
    static GroupDescriptor J_minus(uint32_t l);
    static GroupDescriptor I_plus(uint32_t l);
    static GroupDescriptor I_minus(uint32_t l);
    static GroupDescriptor K_theta(uint32_t n);
    static GroupDescriptor L();
    /// J_w = J cap wJw^-1 and its pro-p and spherical companions.
    static GroupDescriptor J_w(const WeylElt& w);
    static GroupDescriptor I_w(const WeylElt& w);
    static GroupDescriptor K_w(const WeylElt& w);

    /// Grammar: "J" | "I" | "K" | "J+(l)" | "J-(l)" | "I+(l)" | "I-(l)" |
    /// "Ktheta(n)" | "L".
    static GroupDescriptor parse(const std::string& text);
};

} // namespace sl2hecke::padic
