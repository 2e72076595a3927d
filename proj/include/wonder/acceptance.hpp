#pragma once
// The end-to-end acceptance suite: ten criteria, each with its own pinned
// limits. Shared by the acceptance binary and `wonder acceptance`.

#include <cstdint>
#include <string>
#include <vector>

namespace wonder {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// seed drives the sampled criteria (8 and 10)
std::vector<CriterionResult> run_acceptance(std::uint32_t seed = 20240917);
CriterionResult run_criterion(int id, std::uint32_t seed = 20240917);

}  // namespace wonder
