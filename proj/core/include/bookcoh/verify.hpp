#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bookcoh/cohomology.hpp"

namespace bookcoh {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // empty on success
};

struct VerifyOptions {
    int n = 3;
    std::uint64_t seed = 1;
    int trials = 200;
};

/// Runs every invariant suite — combinatorics, bracket algebra, homotopy
/// operators and cohomology — for the given dimension.  Deterministic for
/// a fixed seed.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// Product of two classes in the quotient ring by the Euler ideal:
/// representatives are wedged and reduced back to admissible coordinates.
CohomologyClass class_product(const CohomologyClass& a, const CohomologyClass& b);

}  // namespace bookcoh
