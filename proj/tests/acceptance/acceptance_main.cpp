// Acceptance suite runner: one pass/fail line per criterion, exit status 0
// only when every criterion passes.

#include <cstdio>
#include <cstring>
#include <iostream>

#include "acceptance/selftest.hpp"

int main(int argc, char** argv) {
    int max_weight = 8;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--max-weight") == 0 && i + 1 < argc)
            max_weight = std::atoi(argv[++i]);
    }
    auto results = schurkit::selftest::run_acceptance(max_weight);
    bool ok = true;
    double total = 0;
    for (const auto& r : results) {
        std::cout << schurkit::selftest::format_result_line(r) << "\n";
        ok = ok && r.passed;
        total += r.seconds;
    }
    std::printf("%s  (%zu criteria, %.2fs total)\n",
                ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", results.size(), total);
    return ok ? 0 : 1;
}
