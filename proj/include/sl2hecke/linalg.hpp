#pragma once

#include "sl2hecke/fp.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sl2hecke {

/// Dense matrix over F_p, rows stored as coefficient vectors.
struct FpMat {
    size_t cols = 0;
    std::vector<std::vector<uint32_t>> rows;

    void add_row(std::vector<uint32_t> row);
};

/// In-place reduced row echelon form with columns processed left to right;
/// zero rows are dropped.  The result is the canonical basis of the row
/// space, so equal spans give equal matrices.
void rref(FpMat& m, const Fp& fp);

size_t rank(FpMat m, const Fp& fp);

/// Canonical kernel basis (one vector per free column of the RREF, itself
/// in echelon form).
std::vector<std::vector<uint32_t>> kernel_basis(const FpMat& m, const Fp& fp);

/// Membership of v in the row space of an already reduced matrix.
bool in_span(const FpMat& reduced, std::vector<uint32_t> v, const Fp& fp);

/// Coefficients c with sum_i c_i gens_i = target, free coordinates set to
/// zero; empty optional when the target lies outside the span.
std::optional<std::vector<uint32_t>> express(const std::vector<std::vector<uint32_t>>& gens,
                                             const std::vector<uint32_t>& target, const Fp& fp);

} // namespace sl2hecke
