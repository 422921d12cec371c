#include "sl2hecke/linalg.hpp"

#include <stdexcept>

namespace sl2hecke {

void FpMat::add_row(std::vector<uint32_t> row) {
    if (row.size() != cols) throw std::invalid_argument("FpMat: row width mismatch");
    rows.push_back(std::move(row));
}

void rref(FpMat& m, const Fp& fp) {
    size_t pivot_row = 0;
    for (size_t col = 0; col < m.cols && pivot_row < m.rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < m.rows.size() && m.rows[sel][col] == 0) ++sel;
        if (sel == m.rows.size()) continue;
        std::swap(m.rows[pivot_row], m.rows[sel]);
        uint32_t inv = fp.inv(m.rows[pivot_row][col]);
        for (auto& x : m.rows[pivot_row]) x = fp.mul(x, inv);
        for (size_t r = 0; r < m.rows.size(); ++r) {
            if (r == pivot_row) continue;
            uint32_t f = m.rows[r][col];
            if (f == 0) continue;
            for (size_t c = 0; c < m.cols; ++c)
                m.rows[r][c] = fp.sub(m.rows[r][c], fp.mul(f, m.rows[pivot_row][c]));
        }
        ++pivot_row;
    }
    m.rows.resize(pivot_row);
}

size_t rank(FpMat m, const Fp& fp) {
    rref(m, fp);
    return m.rows.size();
}

std::vector<std::vector<uint32_t>> kernel_basis(const FpMat& m, const Fp& fp) {
    FpMat red = m;
    rref(red, fp);
    std::vector<long> pivot_of_col(red.cols, -1);
    for (size_t r = 0; r < red.rows.size(); ++r) {
        size_t c = 0;
        while (c < red.cols && red.rows[r][c] == 0) ++c;
        pivot_of_col[c] = static_cast<long>(r);
    }
    std::vector<std::vector<uint32_t>> out;
    for (size_t f = 0; f < red.cols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        std::vector<uint32_t> v(red.cols, 0);
        v[f] = 1;
        for (size_t c = 0; c < red.cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = fp.neg(red.rows[static_cast<size_t>(pivot_of_col[c])][f]);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<uint32_t>> express(const std::vector<std::vector<uint32_t>>& gens,
                                             const std::vector<uint32_t>& target, const Fp& fp) {
    // Solve the transposed system: unknown column per generator, one row per
    // coordinate axis, augmented with the target.
    size_t n = gens.size(), dim = target.size();
    FpMat sys{n + 1, {}};
    for (size_t r = 0; r < dim; ++r) {
        std::vector<uint32_t> row(n + 1, 0);
        for (size_t i = 0; i < n; ++i) {
            if (gens[i].size() != dim) throw std::invalid_argument("express: width mismatch");
            row[i] = gens[i][r];
        }
        row[n] = target[r];
        sys.add_row(std::move(row));
    }
    rref(sys, fp);
    std::vector<uint32_t> coeffs(n, 0);
    for (const auto& row : sys.rows) {
        size_t c = 0;
        while (c < sys.cols && row[c] == 0) ++c;
        if (c == n) return std::nullopt; // pivot in the target column
        if (c > n) continue;
        coeffs[c] = row[n];
    }
    return coeffs;
}

bool in_span(const FpMat& reduced, std::vector<uint32_t> v, const Fp& fp) {
    if (v.size() != reduced.cols) throw std::invalid_argument("in_span: width mismatch");
    for (const auto& row : reduced.rows) {
        size_t c = 0;
        while (c < reduced.cols && row[c] == 0) ++c;
        if (c == reduced.cols) continue;
        uint32_t f = v[c];
        if (f == 0) continue;
        for (size_t i = 0; i < reduced.cols; ++i) v[i] = fp.sub(v[i], fp.mul(f, row[i]));
    }
    for (uint32_t x : v)
        if (x) return false;
    return true;
}

} // namespace sl2hecke
