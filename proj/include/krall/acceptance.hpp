#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace krall {

struct AcceptanceResult {
    struct Criterion {
        int id;
        std::string name;
        bool pass;
        std::string detail;  // first failure detail when not passing
    };
    std::vector<Criterion> criteria;
    bool all_pass = true;
};

/// Runs the full acceptance suite, printing one pass/fail line per criterion.
/// Every check is exact (tolerance zero). The seed drives only the
/// randomized lemma property suites.
AcceptanceResult run_acceptance(std::ostream& out, uint64_t seed);

}  // namespace krall
