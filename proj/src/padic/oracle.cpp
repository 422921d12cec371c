#include "sl2hecke/padic/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2hecke::padic {

namespace {

uint64_t splitmix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

FlatSet::FlatSet(size_t expected) {
    size_t cap = 64;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, kEmpty);
}

void FlatSet::grow() {
    std::vector<uint64_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    size_ = 0;
    for (uint64_t k : old)
        if (k != kEmpty) insert(k);
}

bool FlatSet::insert(uint64_t key) {
    if (2 * (size_ + 1) > slots_.size()) grow();
    size_t mask = slots_.size() - 1;
    size_t i = splitmix(key) & mask;
    while (slots_[i] != kEmpty) {
        if (slots_[i] == key) return false;
        i = (i + 1) & mask;
    }
    slots_[i] = key;
    ++size_;
    return true;
}

bool FlatSet::contains(uint64_t key) const {
    size_t mask = slots_.size() - 1;
    size_t i = splitmix(key) & mask;
    while (slots_[i] != kEmpty) {
        if (slots_[i] == key) return true;
        i = (i + 1) & mask;
    }
    return false;
}

std::vector<uint64_t> subgroup_closure(const ResidueRing& R, const std::vector<Mat2>& gens,
                                       uint64_t cap) {
    std::vector<uint64_t> elements;
    FlatSet seen(1024);
    uint64_t id = mat2_pack(R, mat2_identity(R));
    seen.insert(id);
    elements.push_back(id);
    std::vector<uint64_t> packed_gens;
    for (const auto& g : gens) packed_gens.push_back(mat2_pack(R, g));
    for (size_t head = 0; head < elements.size(); ++head) {
        Mat2 x = mat2_unpack(R, elements[head]);
        for (const auto& g : gens) {
            uint64_t key = mat2_pack(R, mat2_mul(R, x, g));
            if (seen.insert(key)) {
                if (elements.size() + 1 > cap) throw std::length_error("subgroup_closure: cap exceeded");
                elements.push_back(key);
            }
        }
    }
    return elements;
}

EnumeratedGroup enumerate_group(const GroupDescriptor& desc, const ResidueRing& R, uint64_t cap) {
    if (desc.order(R) > cap) throw std::length_error("enumerate_group: predicted order exceeds cap");
    EnumeratedGroup out{desc, {}, FlatSet(1024)};
    out.elements = subgroup_closure(R, desc.generators(R), cap);
    for (uint64_t k : out.elements) out.index.insert(k);
    return out;
}

FrattiniQuotient frattini_quotient(const GroupDescriptor& desc, const ResidueRing& R, uint64_t cap,
                                   bool with_basis) {
    // Only the Frattini subgroup is enumerated, so the cap applies to the
    // closure; the ambient order comes from the counting formula.
    std::vector<Mat2> gens = desc.generators(R);
    uint32_t p = R.p();

    // Seeds: commutators and p-th powers of the generators; Phi is their
    // normal closure.  Conjugation stability is rechecked after every
    // enlargement of the seed set.
    std::vector<Mat2> seeds;
    FlatSet seed_keys(64);
    uint64_t id = mat2_pack(R, mat2_identity(R));
    seed_keys.insert(id);
    auto add_seed = [&](const Mat2& s) {
        if (seed_keys.insert(mat2_pack(R, s))) seeds.push_back(s);
    };
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = i + 1; j < gens.size(); ++j) {
            Mat2 comm = mat2_mul(R, mat2_mul(R, gens[i], gens[j]),
                                 mat2_mul(R, mat2_inv(R, gens[i]), mat2_inv(R, gens[j])));
            add_seed(comm);
        }
        Mat2 power = mat2_identity(R);
        for (uint32_t e = 0; e < p; ++e) power = mat2_mul(R, power, gens[i]);
        add_seed(power);
    }

    std::vector<uint64_t> closure;
    for (;;) {
        closure = subgroup_closure(R, seeds, cap);
        FlatSet inside(closure.size());
        for (uint64_t k : closure) inside.insert(k);
        bool stable = true;
        size_t fixed = seeds.size();
        for (const auto& t : gens)
            for (size_t si = 0; si < fixed; ++si) {
                Mat2 conj = mat2_mul(R, mat2_mul(R, t, seeds[si]), mat2_inv(R, t));
                if (!inside.contains(mat2_pack(R, conj))) {
                    add_seed(conj);
                    stable = false;
                }
            }
        if (stable) break;
    }

    FrattiniQuotient out;
    out.desc = desc;
    out.group_order = desc.order(R);
    out.phi_order = static_cast<uint64_t>(closure.size());
    out.phi_elements = std::move(closure);
    out.phi_index = FlatSet(out.phi_elements.size());
    for (uint64_t k : out.phi_elements) out.phi_index.insert(k);

    BigInt index = out.group_order / out.phi_order;
    if (index * out.phi_order != out.group_order)
        throw std::logic_error("frattini_quotient: Frattini subgroup does not divide the order");
    uint32_t rank = 0;
    while (index > 1) {
        if (index % p != 0) throw std::logic_error("frattini_quotient: quotient is not a p-group");
        index /= p;
        ++rank;
    }
    out.rank = rank;

    if (!with_basis || rank == 0) return out;

    // Basis of the quotient: greedily extend by generators (and their
    // products when a single pass is not enough).
    FlatSet span(out.phi_elements.size());
    std::vector<uint64_t> span_elems = out.phi_elements;
    for (uint64_t k : span_elems) span.insert(k);
    std::vector<Mat2> candidates = gens;
    for (size_t i = 0; i < candidates.size() && out.basis.size() < rank; ++i) {
        Mat2 g = candidates[i];
        if (span.contains(mat2_pack(R, g))) continue;
        out.basis.push_back(g);
        // extend the span set: multiply every element by powers of g
        std::vector<uint64_t> extended;
        Mat2 power = mat2_mul(R, mat2_identity(R), g);
        for (uint32_t e = 1; e < p; ++e) {
            for (uint64_t k : span_elems) {
                uint64_t nk = mat2_pack(R, mat2_mul(R, mat2_unpack(R, k), power));
                if (span.insert(nk)) extended.push_back(nk);
            }
            power = mat2_mul(R, power, g);
        }
        for (uint64_t k : extended) span_elems.push_back(k);
        for (const auto& h : gens) candidates.push_back(mat2_mul(R, candidates[i], h));
    }
    if (out.basis.size() != rank) throw std::logic_error("frattini_quotient: basis search failed");
    return out;
}

std::vector<uint32_t> quotient_coordinates(const FrattiniQuotient& q, const ResidueRing& R,
                                           const Mat2& g) {
    uint32_t p = R.p();
    uint32_t rank = q.rank;
    std::vector<uint32_t> coords(rank, 0);
    if (rank == 0) {
        if (!q.phi_index.contains(mat2_pack(R, g)))
            throw std::invalid_argument("quotient_coordinates: element outside the group");
        return coords;
    }
    std::vector<Mat2> inv_basis;
    for (const auto& b : q.basis) inv_basis.push_back(mat2_inv(R, b));
    // exhaustive over the p^rank exponent tuples
    std::vector<uint32_t> e(rank, 0);
    for (;;) {
        Mat2 acc = g;
        for (uint32_t i = 0; i < rank; ++i)
            for (uint32_t k = 0; k < e[i]; ++k) acc = mat2_mul(R, acc, inv_basis[i]);
        if (q.phi_index.contains(mat2_pack(R, acc))) return e;
        uint32_t i = 0;
        while (i < rank && ++e[i] == p) e[i++] = 0;
        if (i == rank) throw std::invalid_argument("quotient_coordinates: element outside the group");
    }
}

uint32_t h1_dimension(const GroupDescriptor& desc, const ResidueRing& R, uint64_t cap) {
    return frattini_quotient(desc, R, cap).rank;
}

namespace {

std::vector<Mat2> coset_transversal(const GroupDescriptor& big, const GroupDescriptor& sub,
                                    const ResidueRing& R, const BigInt& index) {
    std::vector<Mat2> reps = {mat2_identity(R)};
    std::vector<Mat2> gens = big.generators(R);
    auto coset_of = [&](const Mat2& x) -> long {
        for (size_t i = 0; i < reps.size(); ++i) {
            Mat2 d = mat2_mul(R, mat2_inv(R, reps[i]), x);
            if (sub.contains(R, d)) return static_cast<long>(i);
        }
        return -1;
    };
    for (size_t head = 0; head < reps.size(); ++head)
        for (const auto& g : gens) {
            Mat2 x = mat2_mul(R, reps[head], g);
            if (coset_of(x) < 0) reps.push_back(x);
        }
    if (BigInt(static_cast<uint64_t>(reps.size())) != index)
        throw std::logic_error("coset_transversal: index mismatch");
    return reps;
}

std::vector<std::vector<uint32_t>> transfer_on_basis(const GroupDescriptor& big,
                                                     const GroupDescriptor& sub,
                                                     const ResidueRing& R,
                                                     const FrattiniQuotient& big_q,
                                                     const FrattiniQuotient& sub_q,
                                                     const std::vector<Mat2>& reps) {
    std::vector<std::vector<uint32_t>> cols;
    for (const auto& g : big_q.basis) {
        // Ver(g) = prod over cosets t of t'^-1 g t with g t in t' H
        Mat2 acc = mat2_identity(R);
        for (const auto& t : reps) {
            Mat2 x = mat2_mul(R, g, t);
            bool found = false;
            for (const auto& t2 : reps) {
                Mat2 h = mat2_mul(R, mat2_inv(R, t2), x);
                if (sub.contains(R, h)) {
                    acc = mat2_mul(R, acc, h);
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("transfer_map: transversal does not cover");
        }
        cols.push_back(quotient_coordinates(sub_q, R, acc));
    }
    (void)big;
    return cols;
}

} // namespace

TransferMap transfer_map(const GroupDescriptor& big, const GroupDescriptor& sub,
                         const ResidueRing& R, bool verify_transversal, uint64_t cap) {
    BigInt index = big.order(R) / sub.order(R);
    if (index * sub.order(R) != big.order(R))
        throw std::invalid_argument("transfer_map: subgroup order does not divide");
    FrattiniQuotient big_q = frattini_quotient(big, R, cap, true);
    FrattiniQuotient sub_q = frattini_quotient(sub, R, cap, true);
    std::vector<Mat2> reps = coset_transversal(big, sub, R, index);

    TransferMap out;
    out.matrix = transfer_on_basis(big, sub, R, big_q, sub_q, reps);
    if (verify_transversal) {
        // translate the transversal on the right by a subgroup element
        std::vector<Mat2> sub_gens = sub.generators(R);
        Mat2 shift = mat2_identity(R);
        for (const auto& s : sub_gens) shift = mat2_mul(R, shift, s);
        std::vector<Mat2> reps2;
        for (size_t i = 0; i < reps.size(); ++i)
            reps2.push_back(i % 2 ? mat2_mul(R, reps[i], shift) : reps[i]);
        auto again = transfer_on_basis(big, sub, R, big_q, sub_q, reps2);
        out.transversal_independent = again == out.matrix;
    }
    return out;
}

uint32_t index_mod_p(const WeylElt& w, LevelPair pair, const ResidueRing& R) {
    make_level_pair(pair.lower, pair.upper);
    if (R.m() < static_cast<uint32_t>(w.length()) + 2)
        throw std::invalid_argument("index_mod_p: precision m >= l(w) + 2 required");
    GroupDescriptor upper = pair.upper == Level::K ? GroupDescriptor::K_w(w) : GroupDescriptor::J_w(w);
    GroupDescriptor lower = pair.lower == Level::I ? GroupDescriptor::I_w(w) : GroupDescriptor::J_w(w);
    BigInt up = upper.order(R), low = lower.order(R);
    BigInt ratio = up / low;
    if (ratio * low != up) throw std::logic_error("index_mod_p: index is not integral");
    return static_cast<uint32_t>(ratio % R.p());
}

uint32_t cartan_invariant(const QMat2& g, uint32_t p) {
    if (g.det() != 1) throw std::invalid_argument("cartan_invariant: determinant must be 1");
    long v = min_entry_val(g, p);
    return v >= 0 ? 0 : static_cast<uint32_t>(-v);
}

namespace {

bool in_K_theta_minus_pattern(const QMat2& g, uint32_t p, long n) {
    // K_{theta^-n} = (O^x, O; M^{2n}, O^x) for n >= 0
    if (g.det() != 1) return false;
    const long INF = 1'000'000;
    if (val_p_or(g.a(), p, INF) < 0) return false;
    if (val_p_or(g.d(), p, INF) < 0) return false;
    if (val_p_or(g.b(), p, INF) < 0) return false;
    if (val_p_or(g.c(), p, INF) < 2 * n) return false;
    if (n > 0) return true;
    // for n = 0 (K itself) integrality is all that is needed
    return true;
}

} // namespace

size_t double_coset_count(uint32_t n, uint32_t p) {
    if (n > 2) throw std::invalid_argument("double_coset_count: n in {0, 1, 2}");
    QMat2 theta = mat_theta(p, 1);
    QMat2 theta_inv = mat_theta(p, -1);
    QMat2 theta_n = mat_theta(p, n); // diagonal, coincides with theta^n

    // Representatives of K / K_theta.
    std::vector<QMat2> a_reps;
    for (long y = 0; y < static_cast<long>(p) * p; ++y)
        a_reps.push_back(mul(mat_s0(), mat_x_plus(y)));
    for (long y = 0; y < static_cast<long>(p); ++y) a_reps.push_back(mat_x_plus(BigRat(p) * y));

    // Left-coset representatives of the slice, filtered through K theta K.
    std::vector<QMat2> reps;
    for (const auto& a : a_reps) {
        QMat2 h = mul(mul(theta_inv, inverse(a)), theta_n);
        if (cartan_invariant(h, p) == 1) reps.push_back(h);
    }

    // Merge under the right action of K_{theta^-n}, generated (densely) by
    // the elementary matrices at its boundary valuations and a torus
    // generator.
    std::vector<QMat2> action = {mat_x_plus(1), mat_x_minus(pow_int(p, 2 * static_cast<long>(n))),
                                 mat_coroot(2)};
    auto same_left_coset = [&](const QMat2& x, const QMat2& y) {
        return in_K_theta_minus_pattern(mul(x, inverse(y)), p, 1);
    };
    std::vector<long> orbit(reps.size(), -1);
    size_t orbits = 0;
    for (size_t start = 0; start < reps.size(); ++start) {
        if (orbit[start] >= 0) continue;
        long label = static_cast<long>(orbits++);
        orbit[start] = label;
        std::vector<size_t> queue = {start};
        while (!queue.empty()) {
            size_t cur = queue.back();
            queue.pop_back();
            for (const auto& g : action) {
                QMat2 moved = mul(reps[cur], g);
                bool matched = false;
                for (size_t j = 0; j < reps.size(); ++j)
                    if (same_left_coset(moved, reps[j])) {
                        matched = true;
                        if (orbit[j] < 0) {
                            orbit[j] = label;
                            queue.push_back(j);
                        }
                        break;
                    }
                if (!matched) throw std::logic_error("double_coset_count: orbit left the rep list");
            }
        }
    }
    return orbits;
}

} // namespace sl2hecke::padic
