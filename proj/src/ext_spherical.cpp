#include "sl2hecke/ext_spherical.hpp"

#include "sl2hecke/linalg.hpp"

#include <stdexcept>

namespace sl2hecke {

SphericalAlg::SphericalAlg(const ExtAlg& ext, long max_index) : ext_(ext), max_index_(max_index) {
    if (max_index < 2) throw std::invalid_argument("SphericalAlg: max_index >= 2 required");
    for (long m = 0; m <= max_index; ++m) bases_[0].gens.push_back(ext_.zeta_pow(m));
    for (long m = 0; m <= max_index; ++m) bases_[1].gens.push_back(ext_.central_u(m));
    for (long n = 0; n <= max_index; ++n) bases_[2].gens.push_back(ext_.beta_pair(n));
    bases_[3].gens.push_back(ext_.phi1());
    for (long n = 0; n <= max_index; ++n) bases_[3].gens.push_back(ext_.psi_pair(n));
    // kernel of the squeeze
    bases_[2].gens.push_back(ext_.beta_sym(WeylElt::s(0)));
    bases_[2].kernel_count = 1;
    bases_[3].gens.push_back(ext_.psi_sym(WeylElt::s(0)));
    bases_[3].kernel_count = 1;
}

const SphericalAlg::DegreeBasis& SphericalAlg::degree_basis(int degree) const {
    return bases_[static_cast<size_t>(degree)];
}

SphericalExtElt SphericalAlg::T_power(long m) const {
    SphericalExtElt out;
    out.comp[0][m] = 1;
    return out;
}

SphericalExtElt SphericalAlg::u_T_power(long m) const {
    SphericalExtElt out;
    out.comp[1][m] = 1;
    return out;
}

SphericalExtElt SphericalAlg::B(long n) const {
    SphericalExtElt out;
    out.comp[2][n] = 1;
    return out;
}

SphericalExtElt SphericalAlg::Phi1() const {
    SphericalExtElt out;
    out.comp[3][-1] = 1;
    return out;
}

SphericalExtElt SphericalAlg::Psi(long n) const {
    SphericalExtElt out;
    out.comp[3][n] = 1;
    return out;
}

void SphericalAlg::axpy(SphericalExtElt& dst, uint32_t c, const SphericalExtElt& src) const {
    const Fp& fp = ext_.field();
    if (c % fp.p() == 0) return;
    for (int d = 0; d < 4; ++d)
        for (const auto& [idx, coeff] : src.comp[static_cast<size_t>(d)]) {
            auto& slot = dst.comp[static_cast<size_t>(d)];
            uint32_t v = fp.add(dst.coeff(d, idx), fp.mul(c, coeff));
            if (v == 0)
                slot.erase(idx);
            else
                slot[idx] = v;
        }
}

SphericalExtElt SphericalAlg::add(const SphericalExtElt& a, const SphericalExtElt& b) const {
    SphericalExtElt out = a;
    axpy(out, 1, b);
    return out;
}

SphericalExtElt SphericalAlg::sub(const SphericalExtElt& a, const SphericalExtElt& b) const {
    SphericalExtElt out = a;
    axpy(out, ext_.field().neg(1), b);
    return out;
}

std::optional<std::vector<uint32_t>> SphericalAlg::central_coordinates(int degree,
                                                                       const GradedExtElt& z) const {
    const DegreeBasis& basis = degree_basis(degree);
    // Common coordinate space: union of the supports.
    std::map<WeylElt, size_t> index;
    auto collect = [&](const GradedExtElt& e) {
        for (const auto& [w, c] : e.comp[static_cast<size_t>(degree)]) {
            (void)c;
            index.emplace(w, index.size());
        }
    };
    collect(z);
    for (const auto& g : basis.gens) collect(g);
    auto coords = [&](const GradedExtElt& e) {
        std::vector<uint32_t> v(index.size(), 0);
        for (const auto& [w, c] : e.comp[static_cast<size_t>(degree)]) v[index.at(w)] = c;
        return v;
    };
    std::vector<std::vector<uint32_t>> gens;
    for (const auto& g : basis.gens) gens.push_back(coords(g));
    return express(gens, coords(z), ext_.field());
}

bool SphericalAlg::is_central(const GradedExtElt& z) const {
    for (int d = 0; d < 4; ++d) {
        GradedExtElt part;
        part.comp[static_cast<size_t>(d)] = z.comp[static_cast<size_t>(d)];
        if (part.is_zero()) continue;
        for (const auto& [w, c] : part.comp[static_cast<size_t>(d)]) {
            (void)c;
            if (w.length() > 2 * max_index_ + 1) return false; // out of solver range
        }
        if (!central_coordinates(d, part)) return false;
    }
    return true;
}

SphericalExtElt SphericalAlg::squeeze(const GradedExtElt& z) const {
    SphericalExtElt out;
    for (int d = 0; d < 4; ++d) {
        GradedExtElt part;
        part.comp[static_cast<size_t>(d)] = z.comp[static_cast<size_t>(d)];
        if (part.is_zero()) continue;
        auto coords = central_coordinates(d, part);
        if (!coords) throw std::invalid_argument("squeeze: input is not central");
        const DegreeBasis& basis = degree_basis(d);
        size_t canonical = basis.gens.size() - basis.kernel_count;
        for (size_t i = 0; i < canonical; ++i) {
            if ((*coords)[i] == 0) continue;
            long idx = static_cast<long>(i);
            if (d == 3) idx -= 1; // leading Phi_1 slot
            out.comp[static_cast<size_t>(d)][idx] = (*coords)[i];
        }
    }
    return out;
}

GradedExtElt SphericalAlg::representative(const SphericalExtElt& a) const {
    GradedExtElt out;
    for (int d = 0; d < 4; ++d) {
        const DegreeBasis& basis = degree_basis(d);
        for (const auto& [idx, c] : a.comp[static_cast<size_t>(d)]) {
            if (idx < (d == 3 ? -1 : 0) || idx > max_index_)
                throw std::out_of_range("representative: index beyond the configured bound");
            size_t slot = static_cast<size_t>(d == 3 ? idx + 1 : idx);
            if (slot >= basis.gens.size() - basis.kernel_count)
                throw std::out_of_range("representative: index beyond the configured bound");
            ext_.axpy(out, c, basis.gens[slot]);
        }
    }
    return out;
}

SphericalExtElt SphericalAlg::ek_mul(const SphericalExtElt& a, const SphericalExtElt& b) const {
    GradedExtElt prod = ext_.mul(representative(a), representative(b));
    return squeeze(prod);
}

std::vector<GradedExtElt> SphericalAlg::kernel_basis_elements() const {
    return {ext_.psi_sym(WeylElt::s(0)), ext_.beta_sym(WeylElt::s(0))};
}

std::vector<SphericalExtElt> SphericalAlg::canonical_basis(long max_index) const {
    std::vector<SphericalExtElt> out;
    for (long m = 0; m <= max_index; ++m) out.push_back(T_power(m));
    for (long m = 0; m <= max_index; ++m) out.push_back(u_T_power(m));
    for (long n = 0; n <= max_index; ++n) out.push_back(B(n));
    out.push_back(Phi1());
    for (long n = 0; n <= max_index; ++n) out.push_back(Psi(n));
    return out;
}

SphericalReport SphericalAlg::graded_comm_report(long max_len) const {
    if (2 * max_len > max_index_)
        throw std::invalid_argument("graded_comm_report: max_len too large for the configured bound");
    SphericalReport report;
    report.max_index = max_len;
    report.commutative = true;
    auto basis = canonical_basis(max_len);
    for (const auto& a : basis)
        for (const auto& b : basis)
            if (!(ek_mul(a, b) == ek_mul(b, a))) report.commutative = false;

    // odd element with nonzero square
    SphericalExtElt u = u_T_power(0);
    SphericalExtElt sq = ek_mul(u, u);
    if (sq == B(0) && !sq.is_zero()) {
        report.graded_commutative = false;
        report.witness = "u^2 = B_0 != 0 with u odd";
    }

    report.kernel_dim = 0;
    for (const auto& k : kernel_basis_elements())
        if (is_central(k) && squeeze(k).is_zero()) ++report.kernel_dim;

    // the canonical families inject: squeezing their representatives
    // returns the corresponding coordinate vectors
    report.splitting_ok = true;
    for (const auto& a : basis)
        if (!(squeeze(representative(a)) == a)) report.splitting_ok = false;
    return report;
}

std::string SphericalAlg::to_string(const SphericalExtElt& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    auto append = [&](const std::string& sym, uint32_t c) {
        if (!out.empty()) out += " + ";
        out += std::to_string(c) + "*" + sym;
    };
    for (const auto& [m, c] : a.comp[0]) append("T^" + std::to_string(m), c);
    for (const auto& [m, c] : a.comp[1]) append("u*T^" + std::to_string(m), c);
    for (const auto& [n, c] : a.comp[2]) append("B[" + std::to_string(n) + "]", c);
    for (const auto& [n, c] : a.comp[3])
        append(n < 0 ? std::string("Phi1") : "Psi[" + std::to_string(n) + "]", c);
    return out;
}

} // namespace sl2hecke
