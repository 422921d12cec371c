#pragma once

#include "sl2hecke/ext_spherical.hpp"
#include "sl2hecke/hecke.hpp"

#include <json.hpp>

namespace sl2hecke {

/// {"algebra": ..., "p": ..., "terms": [{"w": "s0*theta^2", "c": 3}, ...]}
/// with terms ordered by (length, eps, n, torus exponent); pro-p terms
/// carry the torus exponent "t".
nlohmann::json to_json(const HeckeAlg& alg, const HeckeElt& a);
HeckeElt hecke_from_json(const HeckeAlg& alg, const nlohmann::json& j);

/// Extends the Hecke schema with "deg" and the basis-symbol "kind"
/// ("tau", "x", "alpha", "phi").
nlohmann::json to_json(const ExtAlg& alg, const GradedExtElt& a);
GradedExtElt ext_from_json(const ExtAlg& alg, const nlohmann::json& j);

/// Canonical spherical coordinates, "algebra": "spherical_ext".
nlohmann::json to_json(const SphericalAlg& alg, const SphericalExtElt& a);

nlohmann::json to_json(const ExtAlg& alg, const CentralizerReport& report);
nlohmann::json to_json(const SphericalAlg& alg, const SphericalReport& report);

struct OracleReport {
    std::string group;
    uint32_t p = 0, f = 0, m = 0;
    std::string order;
    std::vector<uint32_t> frattini_invariants;
    bool stable = false;
};
nlohmann::json to_json(const OracleReport& report);

} // namespace sl2hecke
