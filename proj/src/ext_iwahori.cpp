#include "sl2hecke/ext_iwahori.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2hecke {

std::string to_string(ExtKind kind) {
    switch (kind) {
    case ExtKind::Tau: return "tau";
    case ExtKind::X: return "x";
    case ExtKind::Alpha: return "alpha";
    default: return "phi";
    }
}

int GradedExtElt::degree() const {
    int deg = -1;
    for (int d = 0; d < 4; ++d) {
        if (comp[static_cast<size_t>(d)].empty()) continue;
        if (deg >= 0) throw std::invalid_argument("degree(): element is not homogeneous");
        deg = d;
    }
    if (deg < 0) throw std::invalid_argument("degree(): zero element");
    return deg;
}

ExtAlg::ExtAlg(uint32_t p) : hecke_(p) {}

GradedExtElt ExtAlg::basis(ExtKind kind, const WeylElt& w) const {
    if ((kind == ExtKind::X || kind == ExtKind::Alpha) && w.is_identity())
        throw std::invalid_argument("basis: no degree 1 or 2 symbol at the identity");
    GradedExtElt out;
    out.comp[static_cast<size_t>(kind)][w] = 1;
    return out;
}

void ExtAlg::axpy(GradedExtElt& dst, uint32_t c, const GradedExtElt& src) const {
    const Fp& fp = field();
    if (c % fp.p() == 0) return;
    for (int d = 0; d < 4; ++d)
        for (const auto& [w, coeff] : src.comp[static_cast<size_t>(d)]) {
            auto& slot = dst.comp[static_cast<size_t>(d)];
            uint32_t v = fp.add(dst.coeff(d, w), fp.mul(c, coeff));
            if (v == 0)
                slot.erase(w);
            else
                slot[w] = v;
        }
}

GradedExtElt ExtAlg::add(const GradedExtElt& a, const GradedExtElt& b) const {
    GradedExtElt out = a;
    axpy(out, 1, b);
    return out;
}

GradedExtElt ExtAlg::sub(const GradedExtElt& a, const GradedExtElt& b) const {
    GradedExtElt out = a;
    axpy(out, field().neg(1), b);
    return out;
}

GradedExtElt ExtAlg::scale(uint32_t c, const GradedExtElt& a) const {
    GradedExtElt out;
    axpy(out, c, a);
    return out;
}

// Action of tau_s on a basis symbol, by the length case-split rules.  The
// tau and x rows share one shape; alpha has the extra boundary case at
// length 1; phi only survives when the length drops.
std::vector<ExtAlg::Term> ExtAlg::act_letter(int s, ExtKind kind, const WeylElt& w, bool left) {
    WeylElt sw = left ? sl2hecke::mul(WeylElt::s(s), w) : sl2hecke::mul(w, WeylElt::s(s));
    bool up = sw.length() == w.length() + 1;
    switch (kind) {
    case ExtKind::Tau:
    case ExtKind::X:
        if (up) return {{sw, 1}};
        return {{w, -1}};
    case ExtKind::Alpha:
        if (up) return {};
        if (w.length() >= 2) return {{sw, 1}, {w, -1}};
        return {{w, -1}};
    default: // Phi
        if (!up) return {{sw, 1}, {w, -1}};
        return {};
    }
}

void ExtAlg::act_word(GradedExtElt& out, uint32_t c, const std::vector<int>& word, ExtKind kind,
                      const WeylElt& w, bool left) const {
    const Fp& fp = field();
    std::map<WeylElt, uint32_t> cur{{w, c % fp.p()}};
    auto step = [&](int letter) {
        std::map<WeylElt, uint32_t> next;
        for (const auto& [u, cu] : cur)
            for (const Term& t : act_letter(letter, kind, u, left)) {
                uint32_t v = fp.add(next.count(t.w) ? next[t.w] : 0,
                                    t.sign > 0 ? cu : fp.neg(cu));
                if (v == 0)
                    next.erase(t.w);
                else
                    next[t.w] = v;
            }
        cur = std::move(next);
    };
    if (left)
        for (auto it = word.rbegin(); it != word.rend(); ++it) step(*it);
    else
        for (int letter : word) step(letter);
    GradedExtElt tmp;
    tmp.comp[static_cast<size_t>(kind)] = std::move(cur);
    axpy(out, 1, tmp);
}

GradedExtElt ExtAlg::act_deg0(const std::map<WeylElt, uint32_t>& h, ExtKind kind,
                              const std::map<WeylElt, uint32_t>& m, bool left) const {
    GradedExtElt out;
    for (const auto& [u, cu] : h) {
        std::vector<int> word = reduced_word(u);
        for (const auto& [w, cw] : m) act_word(out, field().mul(cu, cw), word, kind, w, left);
    }
    return out;
}

// x_v x_w: peel v to its first letter and w to its last one, push the
// leftover tau factors into the middle, and resolve the x_{s} x_{s'} core
// (zero unless the letters agree, -alpha_{s} when they do).
GradedExtElt ExtAlg::mul_xx(const WeylElt& v, const WeylElt& w) const {
    const Fp& fp = field();
    GradedExtElt out;
    int delta = reduced_word(v).front();
    int eps = reduced_word(w).back();
    WeylElt vp = sl2hecke::mul(WeylElt::s(delta), v);
    WeylElt wp = sl2hecke::mul(w, WeylElt::s(eps));
    HeckeElt mid = hecke_.mul(hecke_.basis_iwahori(vp), hecke_.basis_iwahori(wp));
    for (const auto& [u, cu] : mid.terms) {
        // x_{s_delta} tau_u is a signed single x symbol.
        WeylElt z = WeylElt::s(delta);
        uint32_t c = cu;
        for (int letter : reduced_word(u.w)) {
            auto terms = act_letter(letter, ExtKind::X, z, false);
            z = terms.front().w;
            if (terms.front().sign < 0) c = fp.neg(c);
        }
        if (z.length() == 1) {
            if (z == WeylElt::s(eps)) axpy(out, fp.neg(c), basis(ExtKind::Alpha, z));
            continue;
        }
        int gamma = reduced_word(z).back();
        if (gamma != eps) continue;
        WeylElt zp = sl2hecke::mul(z, WeylElt::s(gamma));
        act_word(out, fp.neg(c), reduced_word(zp), ExtKind::Alpha, WeylElt::s(gamma), true);
    }
    return out;
}

GradedExtElt ExtAlg::mul_x_alpha(const WeylElt& v, const WeylElt& w) const {
    const Fp& fp = field();
    int delta = reduced_word(v).front();
    WeylElt vp = sl2hecke::mul(WeylElt::s(delta), v);
    GradedExtElt mid = act_deg0({{vp, 1}}, ExtKind::Alpha, {{w, 1}}, true);
    // x_{s} alpha_u = -(tau_{s} phi_u)
    GradedExtElt out;
    for (const auto& [u, cu] : mid.comp[2])
        act_word(out, fp.neg(cu), {delta}, ExtKind::Phi, u, true);
    return out;
}

GradedExtElt ExtAlg::mul_alpha_x(const WeylElt& w, const WeylElt& v) const {
    const Fp& fp = field();
    int eps = reduced_word(v).back();
    WeylElt vp = sl2hecke::mul(v, WeylElt::s(eps));
    GradedExtElt mid = act_deg0({{vp, 1}}, ExtKind::Alpha, {{w, 1}}, false);
    // alpha_u x_{s} = -(phi_u tau_{s})
    GradedExtElt out;
    for (const auto& [u, cu] : mid.comp[2])
        act_word(out, fp.neg(cu), {eps}, ExtKind::Phi, u, false);
    return out;
}

GradedExtElt ExtAlg::mul(const GradedExtElt& a, const GradedExtElt& b) const {
    const Fp& fp = field();
    GradedExtElt out;
    for (int d1 = 0; d1 < 4; ++d1) {
        const auto& A = a.comp[static_cast<size_t>(d1)];
        if (A.empty()) continue;
        for (int d2 = 0; d1 + d2 <= 3; ++d2) {
            const auto& B = b.comp[static_cast<size_t>(d2)];
            if (B.empty()) continue;
            if (d1 == 0 && d2 == 0) {
                HeckeElt ha = hecke_.zero(Algebra::Iwahori), hb = ha;
                for (const auto& [w, c] : A) ha.terms[{w, 0}] = c;
                for (const auto& [w, c] : B) hb.terms[{w, 0}] = c;
                axpy(out, 1, hecke_to_deg0(hecke_.mul(ha, hb)));
            } else if (d1 == 0) {
                axpy(out, 1, act_deg0(A, static_cast<ExtKind>(d2), B, true));
            } else if (d2 == 0) {
                axpy(out, 1, act_deg0(B, static_cast<ExtKind>(d1), A, false));
            } else if (d1 == 1 && d2 == 1) {
                for (const auto& [v, cv] : A)
                    for (const auto& [w, cw] : B) axpy(out, fp.mul(cv, cw), mul_xx(v, w));
            } else if (d1 == 1 && d2 == 2) {
                for (const auto& [v, cv] : A)
                    for (const auto& [w, cw] : B) axpy(out, fp.mul(cv, cw), mul_x_alpha(v, w));
            } else if (d1 == 2 && d2 == 1) {
                for (const auto& [w, cw] : A)
                    for (const auto& [v, cv] : B) axpy(out, fp.mul(cw, cv), mul_alpha_x(w, v));
            }
            // remaining combinations vanish by the grading
        }
    }
    return out;
}

HeckeElt ExtAlg::deg0_to_hecke(const GradedExtElt& a) const {
    HeckeElt h = hecke_.zero(Algebra::Iwahori);
    for (const auto& [w, c] : a.comp[0]) h.terms[{w, 0}] = c;
    return h;
}

GradedExtElt ExtAlg::hecke_to_deg0(const HeckeElt& h) const {
    if (h.alg != Algebra::Iwahori) throw std::invalid_argument("hecke_to_deg0: Iwahori element required");
    GradedExtElt out;
    for (const auto& [w, c] : h.terms) out.comp[0][w.w] = c;
    return out;
}

GradedExtElt ExtAlg::beta_sym(const WeylElt& w) const {
    int eps = side_eps(w);
    GradedExtElt out;
    act_word(out, 1, {1 - eps}, ExtKind::Alpha, w, true);
    return out;
}

GradedExtElt ExtAlg::psi_sym(const WeylElt& w) const {
    int eps = side_eps(w);
    GradedExtElt out;
    act_word(out, 1, {1 - eps}, ExtKind::Phi, w, true);
    return out;
}

std::map<WeylElt, uint32_t> ExtAlg::to_beta(const GradedExtElt& a) const {
    for (int d : {0, 1, 3})
        if (!a.comp[static_cast<size_t>(d)].empty())
            throw std::invalid_argument("to_beta: degree-2 component only");
    const Fp& fp = field();
    // beta_w = alpha_{s_{1-eps} w} - alpha_w for l(w) >= 2 and -alpha_w at
    // length 1, so alpha_w = -beta_w + alpha_{shorter}; peel longest first.
    std::map<WeylElt, uint32_t> rest = a.comp[2], out;
    while (!rest.empty()) {
        auto it = std::prev(rest.end());
        WeylElt w = it->first;
        uint32_t c = it->second;
        rest.erase(it);
        out[w] = fp.neg(c);
        if (out[w] == 0) out.erase(w);
        if (w.length() >= 2) {
            WeylElt shorter = sl2hecke::mul(WeylElt::s(1 - side_eps(w)), w);
            uint32_t v = fp.add(rest.count(shorter) ? rest[shorter] : 0, c);
            if (v == 0)
                rest.erase(shorter);
            else
                rest[shorter] = v;
        }
    }
    return out;
}

GradedExtElt ExtAlg::from_beta(const std::map<WeylElt, uint32_t>& beta_coords) const {
    GradedExtElt out;
    for (const auto& [w, c] : beta_coords) axpy(out, c, beta_sym(w));
    return out;
}

std::map<WeylElt, uint32_t> ExtAlg::to_psi(const GradedExtElt& a) const {
    for (int d : {0, 1, 2})
        if (!a.comp[static_cast<size_t>(d)].empty())
            throw std::invalid_argument("to_psi: degree-3 component only");
    const Fp& fp = field();
    // psi_w = phi_{s_{1-eps} w} - phi_w, so phi_w = phi_{shorter} - psi_w;
    // the phi_1 coordinate (keyed by the identity) is carried unchanged.
    std::map<WeylElt, uint32_t> rest = a.comp[3], out;
    while (!rest.empty()) {
        auto it = std::prev(rest.end());
        WeylElt w = it->first;
        uint32_t c = it->second;
        if (w.is_identity()) {
            out[w] = c;
            rest.erase(it);
            continue;
        }
        rest.erase(it);
        out[w] = fp.neg(c);
        if (out[w] == 0) out.erase(w);
        WeylElt shorter = sl2hecke::mul(WeylElt::s(1 - side_eps(w)), w);
        uint32_t v = fp.add(rest.count(shorter) ? rest[shorter] : 0, c);
        if (v == 0)
            rest.erase(shorter);
        else
            rest[shorter] = v;
    }
    return out;
}

GradedExtElt ExtAlg::from_psi(const std::map<WeylElt, uint32_t>& psi_coords) const {
    GradedExtElt out;
    for (const auto& [w, c] : psi_coords) {
        if (w.is_identity())
            axpy(out, c, phi1());
        else
            axpy(out, c, psi_sym(w));
    }
    return out;
}

uint32_t ExtAlg::pairing(const GradedExtElt& a, const GradedExtElt& b) const {
    const Fp& fp = field();
    if (a.is_zero() || b.is_zero()) return 0;
    int da = a.degree(), db = b.degree();
    const GradedExtElt* high = &a;
    const GradedExtElt* low = &b;
    if (da < db) {
        std::swap(high, low);
        std::swap(da, db);
    }
    if (!((da == 3 && db == 0) || (da == 2 && db == 1)))
        throw std::invalid_argument("pairing: degrees must split 3 as (3,0) or (2,1)");
    uint32_t out = 0;
    for (const auto& [w, c] : high->comp[static_cast<size_t>(da)])
        out = fp.add(out, fp.mul(c, low->coeff(db, w)));
    return out;
}

GradedExtElt ExtAlg::anti_involution_partial(const GradedExtElt& a) const {
    const Fp& fp = field();
    if (!a.comp[3].empty()) throw std::invalid_argument("anti_involution_partial: degree 3 unsupported");
    for (const auto& [w, c] : a.comp[2]) {
        (void)c;
        if (w.length() != 1)
            throw std::invalid_argument("anti_involution_partial: degree 2 only on alpha_{s0}, alpha_{s1}");
    }
    GradedExtElt out;
    for (const auto& [w, c] : a.comp[0]) axpy(out, c, basis(ExtKind::Tau, inverse(w)));
    for (const auto& [w, c] : a.comp[1]) {
        // x_w = (+/-)(c0)_w by the side of w, and J sends (c0)_w to
        // (-1)^{l(w)} (c0)_{w^-1}; the composite sign below.
        int sign = 1;
        if (side_eps(w) == 1) sign = -sign;
        if (side_eps(inverse(w)) == 1) sign = -sign;
        if (w.length() % 2 == 1) sign = -sign;
        axpy(out, sign > 0 ? c : fp.neg(c), basis(ExtKind::X, inverse(w)));
    }
    for (const auto& [w, c] : a.comp[2]) axpy(out, fp.neg(c), basis(ExtKind::Alpha, w));
    return out;
}

uint32_t ExtAlg::s_top(const GradedExtElt& a) const {
    for (int d : {0, 1, 2})
        if (!a.comp[static_cast<size_t>(d)].empty())
            throw std::invalid_argument("s_top: degree-3 component only");
    uint32_t out = 0;
    for (const auto& [w, c] : a.comp[3]) {
        (void)w;
        out = field().add(out, c);
    }
    return out;
}

GradedExtElt ExtAlg::zeta() const { return hecke_to_deg0(hecke_.zeta()); }

GradedExtElt ExtAlg::zeta_pow(long m) const {
    if (m < 0) throw std::invalid_argument("zeta_pow: m >= 0 required");
    HeckeElt acc = hecke_.one(Algebra::Iwahori);
    HeckeElt z = hecke_.zeta();
    for (long i = 0; i < m; ++i) acc = hecke_.mul(acc, z);
    return hecke_to_deg0(acc);
}

GradedExtElt ExtAlg::central_u(long m) const {
    HeckeElt h = hecke_.sub(hecke_.zeta(), hecke_.one(Algebra::Iwahori));
    HeckeElt z = hecke_.zeta();
    for (long i = 0; i < m; ++i) h = hecke_.mul(h, z);
    GradedExtElt out;
    for (const auto& [w, c] : h.terms) {
        if (w.w.is_identity()) throw std::logic_error("central_u: element not in the augmentation part");
        out.comp[1][w.w] = c;
    }
    return out;
}

GradedExtElt ExtAlg::beta_pair(long n) const {
    return add(beta_sym(zigzag0(n)), beta_sym(zigzag1(n)));
}

GradedExtElt ExtAlg::psi_pair(long n) const {
    return add(psi_sym(zigzag0(n)), psi_sym(zigzag1(n)));
}

namespace {

// Symbols of one kind up to a length bound, in canonical order.
std::vector<WeylElt> kind_symbols(ExtKind kind, long max_len) {
    std::vector<WeylElt> out = elements_up_to_length(max_len);
    if (kind == ExtKind::X || kind == ExtKind::Alpha)
        std::erase_if(out, [](const WeylElt& w) { return w.is_identity(); });
    return out;
}

} // namespace

std::vector<GradedExtElt> ExtAlg::expected_center(int degree, long max_len) const {
    std::vector<GradedExtElt> out;
    switch (degree) {
    case 0:
        for (long m = 0; 2 * m <= max_len; ++m) out.push_back(zeta_pow(m));
        break;
    case 1:
        for (long m = 0; 2 * m + 2 <= max_len; ++m) out.push_back(central_u(m));
        break;
    case 2:
        for (long n = 0; 2 * n + 1 <= max_len; ++n) out.push_back(beta_pair(n));
        out.push_back(beta_sym(WeylElt::s(0)));
        break;
    default:
        out.push_back(phi1());
        for (long n = 0; 2 * n + 1 <= max_len; ++n) out.push_back(psi_pair(n));
        out.push_back(psi_sym(WeylElt::s(0)));
        break;
    }
    return out;
}

CentralizerReport ExtAlg::centralizer(long max_len) const {
    if (max_len < 1) throw std::invalid_argument("centralizer: max_len >= 1 required");
    const Fp& fp = field();
    CentralizerReport report;
    report.max_len = max_len;
    long window = 2 * max_len + 2;

    for (int d = 0; d < 4; ++d) {
        std::vector<WeylElt> unknowns = kind_symbols(static_cast<ExtKind>(d), max_len);
        size_t n = unknowns.size();

        // Constraint rows: coefficients of [e_i, g] per result symbol, for
        // every basis g within the window whose degree can interact.
        FpMat mat;
        mat.cols = n;
        for (int dg = 0; dg + d <= 3; ++dg) {
            for (const WeylElt& gw : kind_symbols(static_cast<ExtKind>(dg), window)) {
                GradedExtElt g = basis(static_cast<ExtKind>(dg), gw);
                std::vector<GradedExtElt> comms(n);
                std::map<WeylElt, size_t> symbols;
                int rdeg = d + dg;
                for (size_t i = 0; i < n; ++i) {
                    GradedExtElt e = basis(static_cast<ExtKind>(d), unknowns[i]);
                    comms[i] = sub(mul(e, g), mul(g, e));
                    for (const auto& [w, c] : comms[i].comp[static_cast<size_t>(rdeg)]) {
                        (void)c;
                        symbols.emplace(w, symbols.size());
                    }
                }
                if (symbols.empty()) continue;
                std::vector<std::vector<uint32_t>> rows(symbols.size(), std::vector<uint32_t>(n, 0));
                for (size_t i = 0; i < n; ++i)
                    for (const auto& [w, c] : comms[i].comp[static_cast<size_t>(rdeg)])
                        rows[symbols.at(w)][i] = c;
                for (auto& r : rows) mat.add_row(std::move(r));
            }
        }

        auto kernel = kernel_basis(mat, fp);
        FpMat computed{n, kernel};
        rref(computed, fp);

        FpMat expected{n, {}};
        auto predicted = expected_center(d, max_len);
        for (const auto& z : predicted) {
            std::vector<uint32_t> row(n, 0);
            for (size_t i = 0; i < n; ++i) row[i] = z.coeff(d, unknowns[i]);
            expected.add_row(std::move(row));
        }
        rref(expected, fp);

        CentralizerDegreeReport& dr = report.degrees[static_cast<size_t>(d)];
        dr.degree = d;
        dr.dimension = computed.rows.size();
        dr.expected_dimension = expected.rows.size();
        dr.matches_expected = computed.rows == expected.rows;
        for (const auto& row : computed.rows) {
            GradedExtElt z;
            for (size_t i = 0; i < n; ++i)
                if (row[i]) z.comp[static_cast<size_t>(d)][unknowns[i]] = row[i];
            dr.basis.push_back(std::move(z));
        }
    }
    report.all_match = true;
    for (const auto& dr : report.degrees) report.all_match = report.all_match && dr.matches_expected;
    return report;
}

FinGenReport ExtAlg::finite_generation_check(long max_len) const {
    const Fp& fp = field();
    FinGenReport report;
    report.max_len = max_len;

    long idx_max = max_len / 2 + 2;
    std::vector<GradedExtElt> center;
    for (long m = 0; m <= idx_max; ++m) center.push_back(zeta_pow(m));
    for (long m = 0; m <= idx_max; ++m) center.push_back(central_u(m));
    for (long n = 0; n <= idx_max; ++n) center.push_back(beta_pair(n));
    center.push_back(beta_sym(WeylElt::s(0)));
    center.push_back(phi1());
    for (long n = 0; n <= idx_max; ++n) center.push_back(psi_pair(n));
    center.push_back(psi_sym(WeylElt::s(0)));

    std::vector<GradedExtElt> gens = {
        one(),
        basis(ExtKind::Tau, WeylElt::s(0)),
        basis(ExtKind::Tau, WeylElt::s(1)),
        basis(ExtKind::Tau, WeylElt::theta_pow(1)),
        basis(ExtKind::X, WeylElt::s(0)),
        basis(ExtKind::X, WeylElt::s(1)),
        basis(ExtKind::X, WeylElt::theta_pow(1)),
        basis(ExtKind::X, WeylElt::theta_pow(-1)),
    };

    for (int d = 0; d < 4; ++d) {
        std::vector<GradedExtElt> products;
        for (const auto& z : center)
            for (const auto& s : gens) {
                GradedExtElt prod = mul(z, s);
                if (prod.is_zero()) continue;
                if (prod.degree() == d) products.push_back(std::move(prod));
            }
        long support = max_len;
        for (const auto& prod : products)
            for (const auto& [w, c] : prod.comp[static_cast<size_t>(d)]) {
                (void)c;
                support = std::max(support, w.length());
            }
        std::vector<WeylElt> symbols = kind_symbols(static_cast<ExtKind>(d), support);
        std::map<WeylElt, size_t> index;
        for (size_t i = 0; i < symbols.size(); ++i) index[symbols[i]] = i;
        FpMat span{symbols.size(), {}};
        for (const auto& prod : products) {
            std::vector<uint32_t> row(symbols.size(), 0);
            for (const auto& [w, c] : prod.comp[static_cast<size_t>(d)]) row[index.at(w)] = c;
            span.add_row(std::move(row));
        }
        rref(span, fp);
        for (const WeylElt& w : kind_symbols(static_cast<ExtKind>(d), max_len)) {
            std::vector<uint32_t> target(symbols.size(), 0);
            target[index.at(w)] = 1;
            ++report.checked;
            if (!in_span(span, std::move(target), fp))
                report.failures.push_back(sl2hecke::to_string(static_cast<ExtKind>(d)) + "[" +
                                          sl2hecke::to_string(w) + "]");
        }
    }
    report.ok = report.failures.empty();
    return report;
}

std::string ExtAlg::to_string(const GradedExtElt& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (int d = 0; d < 4; ++d)
        for (const auto& [w, c] : a.comp[static_cast<size_t>(d)]) {
            if (!out.empty()) out += " + ";
            out += std::to_string(c) + "*" + sl2hecke::to_string(static_cast<ExtKind>(d)) + "[" +
                   sl2hecke::to_string(w) + "]";
        }
    return out;
}

} // namespace sl2hecke
