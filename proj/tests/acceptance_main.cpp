// Acceptance battery: one pass/fail line per criterion, nonzero exit on
// any failure.  `braidlab suite` runs the same checks.

#include <cstdio>
#include <cstdlib>

#include "braidlab/acceptance.hpp"

int main(int argc, char** argv) {
    int jobs = argc > 1 ? std::atoi(argv[1]) : 0;
    auto reports = braidlab::run_acceptance_suite(jobs);
    bool ok = true;
    double total_ms = 0;
    for (const auto& r : reports) {
        bool passed = r.passed();
        ok = ok && passed;
        std::printf("[%s] %-28s (%.1f ms)\n", passed ? "PASS" : "FAIL", r.command.c_str(),
                    r.timing_ms);
        if (!passed)
            for (const auto& [name, value] : r.details)
                std::printf("       %s = %s\n", name.c_str(), value.c_str());
        total_ms += r.timing_ms;
    }
    std::printf("%zu checks, %s, %.1f ms total\n", reports.size(), ok ? "all passed" : "FAILURES",
                total_ms);
    return ok ? 0 : 1;
}
