#include "sl2hecke/json_io.hpp"

#include <stdexcept>

namespace sl2hecke {

using nlohmann::json;

json to_json(const HeckeAlg& alg, const HeckeElt& a) {
    json terms = json::array();
    for (const auto& [w, c] : a.terms) {
        json t{{"w", to_string(w.w)}, {"c", c}};
        if (a.alg == Algebra::ProP) t["t"] = w.t;
        terms.push_back(std::move(t));
    }
    return json{{"algebra", to_string(a.alg)}, {"p", alg.p()}, {"terms", std::move(terms)}};
}

HeckeElt hecke_from_json(const HeckeAlg& alg, const json& j) {
    std::string tag = j.at("algebra").get<std::string>();
    Algebra a;
    if (tag == "pro_p")
        a = Algebra::ProP;
    else if (tag == "iwahori")
        a = Algebra::Iwahori;
    else if (tag == "spherical")
        a = Algebra::Spherical;
    else
        throw std::invalid_argument("hecke_from_json: unknown algebra tag " + tag);
    if (j.contains("p") && j.at("p").get<uint32_t>() != alg.p())
        throw std::invalid_argument("hecke_from_json: prime mismatch");
    HeckeElt out = alg.zero(a);
    for (const auto& t : j.at("terms")) {
        WeylElt w = parse_weyl(t.at("w").get<std::string>());
        uint32_t torus = t.contains("t") ? t.at("t").get<uint32_t>() : 0;
        if (a != Algebra::ProP && torus != 0)
            throw std::invalid_argument("hecke_from_json: torus exponent outside the pro-p level");
        HeckeElt sym = a == Algebra::ProP ? alg.basis_prop({w, torus})
                       : a == Algebra::Iwahori ? alg.basis_iwahori(w)
                                               : alg.basis_spherical(w);
        alg.axpy(out, t.at("c").get<uint32_t>(), sym);
    }
    return out;
}

json to_json(const ExtAlg& alg, const GradedExtElt& a) {
    json terms = json::array();
    for (int d = 0; d < 4; ++d)
        for (const auto& [w, c] : a.comp[static_cast<size_t>(d)])
            terms.push_back(json{{"deg", d},
                                 {"kind", to_string(static_cast<ExtKind>(d))},
                                 {"w", to_string(w)},
                                 {"c", c}});
    return json{{"algebra", "ext_iwahori"}, {"p", alg.p()}, {"terms", std::move(terms)}};
}

GradedExtElt ext_from_json(const ExtAlg& alg, const json& j) {
    if (j.at("algebra").get<std::string>() != "ext_iwahori")
        throw std::invalid_argument("ext_from_json: wrong algebra tag");
    GradedExtElt out;
    for (const auto& t : j.at("terms")) {
        std::string kind = t.at("kind").get<std::string>();
        ExtKind k;
        if (kind == "tau")
            k = ExtKind::Tau;
        else if (kind == "x")
            k = ExtKind::X;
        else if (kind == "alpha")
            k = ExtKind::Alpha;
        else if (kind == "phi")
            k = ExtKind::Phi;
        else
            throw std::invalid_argument("ext_from_json: unknown kind " + kind);
        if (t.contains("deg") && t.at("deg").get<int>() != static_cast<int>(k))
            throw std::invalid_argument("ext_from_json: degree does not match the kind");
        alg.axpy(out, t.at("c").get<uint32_t>(), alg.basis(k, parse_weyl(t.at("w").get<std::string>())));
    }
    return out;
}

json to_json(const SphericalAlg& alg, const SphericalExtElt& a) {
    json terms = json::array();
    static const char* kinds[4] = {"T", "uT", "B", "Psi"};
    for (int d = 0; d < 4; ++d)
        for (const auto& [idx, c] : a.comp[static_cast<size_t>(d)]) {
            if (d == 3 && idx < 0)
                terms.push_back(json{{"deg", d}, {"kind", "Phi1"}, {"c", c}});
            else
                terms.push_back(json{{"deg", d}, {"kind", kinds[d]}, {"n", idx}, {"c", c}});
        }
    return json{{"algebra", "spherical_ext"}, {"p", alg.ext().p()}, {"terms", std::move(terms)}};
}

json to_json(const ExtAlg& alg, const CentralizerReport& report) {
    json degrees = json::array();
    for (const auto& dr : report.degrees) {
        json basis = json::array();
        for (const auto& z : dr.basis) basis.push_back(to_json(alg, z));
        degrees.push_back(json{{"degree", dr.degree},
                               {"dimension", dr.dimension},
                               {"expected_dimension", dr.expected_dimension},
                               {"matches_expected", dr.matches_expected},
                               {"basis", std::move(basis)}});
    }
    return json{{"max_len", report.max_len}, {"degrees", std::move(degrees)}, {"all_match", report.all_match}};
}

json to_json(const SphericalAlg& alg, const SphericalReport& report) {
    (void)alg;
    return json{{"commutative", report.commutative},
                {"graded_commutative", report.graded_commutative},
                {"witness", report.witness},
                {"kernel_dim", report.kernel_dim},
                {"splitting_ok", report.splitting_ok},
                {"max_index", report.max_index}};
}

json to_json(const OracleReport& report) {
    return json{{"group", report.group},     {"p", report.p},
                {"f", report.f},             {"m", report.m},
                {"order", report.order},     {"frattini_invariants", report.frattini_invariants},
                {"stable", report.stable}};
}

} // namespace sl2hecke
