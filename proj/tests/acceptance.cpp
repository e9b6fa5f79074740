// One line per acceptance criterion. All comparisons are exact (tolerance 0); the
// time limits are wall-clock bounds on each criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "zigzag/verify.hpp"

using namespace zigzag;

namespace {

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<SuiteResult()> run;
};

SuiteResult limit_criterion() {
    SuiteResult r = check_limit(9);
    const auto ex = check_limit_formula(example_models()[0], 9);
    r.expect(ex.n == 1, "two-strip model: n=" + std::to_string(ex.n) + ", expected 1");
    r.expect(ex.constant == 1, "two-strip model: const=" + to_string(ex.constant) + ", expected 1");
    return r;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Pieri rule, all words of length <= 7", 60, [] { return check_pieri(7); }},
        {2, "path-count closed form, 2 <= n,m <= 4, N <= 6", 1, [] { return check_dim(4, 6); }},
        {3, "Kerov oracle equivalence, levels <= 8, 20 tuples", 120, [] { return check_kerov(8, 20, 4, 1); }},
        {4, "finite harmonicity and support, 10 paintboxes, level <= 10", 300,
         [] { return check_finite_harmonicity(10, 10, 1); }},
        {5, "coideal identities of the two worked templates, level <= 12", 120, [] { return check_coideals(12); }},
        {6, "injection lemma, level <= 10", 120, [] { return check_injection(10); }},
        {7, "semifinite trichotomy, harmonicity and closed form, level <= 10", 300, [] { return check_trichotomy(10); }},
        {8, "approximating sequence, n,m in {2,3}, N <= 6", 60, [] { return check_approx(3, 6); }},
        {9, "epsilon limit, level <= 9; two-strip model n = 1, const = 1", 180, limit_criterion},
        {10, "ring identity, |a| <= 3, |b| <= 6", 300, [] { return check_ring(3, 6); }},
        {11, "distinctness of 10 model pairs, level <= 10", 60, [] { return check_distinct(10); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        SuiteResult r = c.run();
        const bool in_time = r.seconds <= c.limit_seconds;
        const bool ok = r.passed && in_time;
        failed += !ok;
        std::printf("%s criterion %2d: %s | checks=%zu tolerance=0 time=%.2fs limit=%.0fs\n", ok ? "PASS" : "FAIL", c.id,
                    c.title, r.checks, r.seconds, c.limit_seconds);
        for (const auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
        for (const auto& f : r.failures) std::printf("    fail: %s\n", f.c_str());
        if (!in_time) std::printf("    fail: time limit exceeded\n");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
