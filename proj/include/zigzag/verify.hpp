#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zigzag/semifinite.hpp"

namespace zigzag {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::vector<std::string> failures;  // first few only
    std::vector<std::string> notes;     // measured quantities worth reporting
    double seconds = 0;

    void expect(bool ok, const std::string& what);
};

struct VerifyOptions {
    std::size_t level = 10;     // level cap for exhaustive scans
    std::size_t degree = kDefaultDegreeCap;
    std::uint64_t seed = 1;
};

// The three worked models: "+* -1 +1 -*", "+1 -* +* -1 +*" and "-1 +* -* +1 -* +* -* +1".
std::vector<GrowthModel> example_models();

SuiteResult check_dim(std::size_t max_nm = 4, std::size_t max_N = 6);
SuiteResult check_pieri(std::size_t max_word_length = 7, std::size_t degree_cap = kDefaultDegreeCap);
SuiteResult check_kerov(std::size_t max_level = 8, std::size_t tuples = 20, std::size_t max_intervals = 4,
                        std::uint64_t seed = 1);
SuiteResult check_finite_harmonicity(std::size_t paintboxes = 10, std::size_t level = 10, std::uint64_t seed = 1);
SuiteResult check_coideals(std::size_t level = 12);
SuiteResult check_injection(std::size_t level = 10);
SuiteResult check_trichotomy(std::size_t level = 10);
SuiteResult check_approx(std::size_t max_nm = 3, std::size_t max_N = 6);
SuiteResult check_limit(std::size_t level = 9);
SuiteResult check_ring(std::size_t max_a = 3, std::size_t max_b = 6, std::size_t degree_cap = kDefaultDegreeCap);
SuiteResult check_distinct(std::size_t level = 10);

std::vector<std::string> suite_names();  // includes "all"
// Runs one named suite, or every suite for "all". Throws PreconditionError for unknown names.
std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& opts);

}  // namespace zigzag
