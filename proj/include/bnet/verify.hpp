#pragma once

#include <string>
#include <vector>

#include "bnet/enumerate.hpp"

namespace bnet {

struct SuiteResult {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> notes;
    bool passed() const { return failures == 0; }
};

struct VerifyOptions {
    int max_crossings = 8;         // projective census up to n_check = max_crossings + 1
    int sphere_max_vertices = 16;  // sphere census bound
    bool theorem9_only = false;
    int jobs = 1;
    unsigned rng_seed = 0x5eed;
    int random_roundtrips = 2000;
};

/// The executable property suites behind `verify`: structure and class
/// membership of both censuses, the Prop 7 and Thm 8 characterizations,
/// Theorem 9 uniqueness, the Lemma 10/11 cross-checks, move round trips,
/// duality transport, and the filter-vs-generator cross-validation.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace bnet
