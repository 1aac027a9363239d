// Acceptance suite: runs every built-in verification check at full
// scale and prints one PASS/FAIL line per criterion.  Exit code 0 only
// when every check holds inside its wall-clock budget.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "baric/selftest.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 2025;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);

    std::vector<baric::CheckResult> results = baric::run_builtin_checks(seed);
    bool all = true;
    for (const baric::CheckResult& r : results) {
        all &= r.pass;
        std::printf("%s  %-45s (%6.2f s / %6.2f s budget)  %s\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.seconds, r.budget_seconds, r.detail.c_str());
    }
    std::printf("%s\n", all ? "acceptance: all criteria hold" : "acceptance: FAILURES");
    return all ? 0 : 1;
}
