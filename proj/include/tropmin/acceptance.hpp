#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tropmin {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // failure notes or summary counts
};

/// The verification suite behind `verify-all`: every check runs at its
/// stated tolerance (exact integer comparisons throughout) with the
/// given seed driving the randomized families.
std::vector<CriterionResult> run_acceptance(uint64_t seed);

}  // namespace tropmin
