#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace braids {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckParams {
    int n_max = 5;
    std::uint64_t seed = 1729;
};

struct CheckOutcome {
    CheckStatus status = CheckStatus::Fail;
    std::string detail;
};

struct CheckDef {
    std::string id;
    std::string citation;
    std::function<CheckOutcome(const CheckParams&)> run;
};

struct CheckResult {
    std::string id;
    std::string citation;
    CheckStatus status = CheckStatus::Fail;
    double millis = 0.0;
    std::string detail;
};

const std::vector<CheckDef>& check_registry();

bool glob_match(const std::string& pattern, const std::string& text);

// Runs the checks matching the glob, in registry order, on a worker pool.
// Throws Error if no check id matches.
std::vector<CheckResult> run_checks(const std::string& filter, const CheckParams& params);

const char* status_name(CheckStatus s);

}  // namespace braids
