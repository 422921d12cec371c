#pragma once

#include "sl2hecke/hecke.hpp"
#include "sl2hecke/padic/descriptor.hpp"
#include "sl2hecke/padic/exact_mat.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sl2hecke::padic {

/// Open-addressing set of packed matrices.
class FlatSet {
public:
    explicit FlatSet(size_t expected = 64);
    bool insert(uint64_t key); // false if already present
    bool contains(uint64_t key) const;
    size_t size() const { return size_; }

private:
    void grow();
    static constexpr uint64_t kEmpty = ~0ull;
    std::vector<uint64_t> slots_;
    size_t size_ = 0;
};

inline constexpr uint64_t kDefaultOrderCap = 20'000'000;

/// Full element set of the image of the subgroup in SL2(O/M^m), as packed
/// keys, produced by closure from the descriptor generators.  Throws
/// std::length_error when the predicted order exceeds the cap.
struct EnumeratedGroup {
    GroupDescriptor desc;
    std::vector<uint64_t> elements;
    FlatSet index;
};
EnumeratedGroup enumerate_group(const GroupDescriptor& desc, const ResidueRing& R,
                                uint64_t cap = kDefaultOrderCap);

/// Closure of a generating set, with a size cap.
std::vector<uint64_t> subgroup_closure(const ResidueRing& R, const std::vector<Mat2>& gens,
                                       uint64_t cap);

/// Frattini quotient data: the Frattini subgroup as a set plus a basis of
/// the elementary abelian quotient and its coordinate map.
struct FrattiniQuotient {
    GroupDescriptor desc;
    BigInt group_order;
    BigInt phi_order;
    uint32_t rank = 0;
    std::vector<uint64_t> phi_elements;
    FlatSet phi_index;
    std::vector<Mat2> basis;

    /// Invariant factors of the quotient: rank copies of p.
    std::vector<uint32_t> invariants(uint32_t p) const { return std::vector<uint32_t>(rank, p); }
};

/// Frattini subgroup [G,G] G^p via normal closure of generator commutators
/// and p-th powers inside the finite quotient; the quotient rank comes from
/// the exact index (the quotient is elementary abelian).
FrattiniQuotient frattini_quotient(const GroupDescriptor& desc, const ResidueRing& R,
                                   uint64_t cap = kDefaultOrderCap, bool with_basis = false);

/// Coordinates of g in the quotient basis; g must lie in the group.
std::vector<uint32_t> quotient_coordinates(const FrattiniQuotient& q, const ResidueRing& R,
                                           const Mat2& g);

/// dim_k H^1(G, k) = p-rank of the Frattini quotient.
uint32_t h1_dimension(const GroupDescriptor& desc, const ResidueRing& R,
                      uint64_t cap = kDefaultOrderCap);

/// The transfer (Verlagerung) G_Phi -> H_Phi for H of finite index in G,
/// as a matrix over F_p with one column per basis element of G_Phi; entry
/// rows follow the basis of H_Phi.  Computed from an explicit left coset
/// transversal; independent of the choice (checked against a translated
/// transversal when verify_transversal is set).
struct TransferMap {
    std::vector<std::vector<uint32_t>> matrix; // matrix[col][row]
    bool transversal_independent = true;
};
TransferMap transfer_map(const GroupDescriptor& big, const GroupDescriptor& sub,
                         const ResidueRing& R, bool verify_transversal = true,
                         uint64_t cap = kDefaultOrderCap);

/// [upper_w : lower_w] mod p from the exact orders of the pattern groups.
uint32_t index_mod_p(const WeylElt& w, LevelPair pair, const ResidueRing& R);

/// The n with g in K theta^n K, read off the entry valuations; g must have
/// determinant exactly 1.
uint32_t cartan_invariant(const QMat2& g, uint32_t p);

/// Number of double cosets in K_{theta^-1} \ (theta^-1 K theta^n cap
/// K theta K) / K_{theta^-n}, for n in {0, 1, 2}.
size_t double_coset_count(uint32_t n, uint32_t p);

} // namespace sl2hecke::padic
