#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sl2hecke {

/// Run configuration shared by the CLI and the verification suite.
struct RunConfig {
    uint32_t p = 5;
    uint32_t f = 1;        // oracle only
    long max_len = 6;
    uint32_t precision = 3;
    uint64_t seed = 0;
    void validate() const;
};

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string details;
};

/// Verification checks, one per named statement; "all" aggregates them.
std::vector<std::string> check_ids();
bool is_check_id(const std::string& id);
CheckResult run_check(const std::string& id, const RunConfig& config);
std::vector<CheckResult> run_all_checks(const RunConfig& config);

} // namespace sl2hecke
