// Acceptance gate: runs the pinned reproduction checklist and prints one
// pass/fail line per criterion. Exit code 0 only when every criterion holds.

#include <cstdio>

#include <chebint/repro.hpp>

int main() {
    const auto results = chebint::repro::run_checks();
    bool all_passed = true;
    for (const auto& r : results) {
        std::printf("[%d/%zu] %s  %s\n", r.id, results.size(), r.passed ? "PASS" : "FAIL",
                    r.name.c_str());
        if (!r.passed) {
            std::printf("        expected: %s\n", r.expected.c_str());
            std::printf("        actual:   %s\n", r.actual.c_str());
            all_passed = false;
        }
    }
    std::printf("%s\n", all_passed ? "acceptance: all criteria passed"
                                   : "acceptance: some criteria FAILED");
    return all_passed ? 0 : 1;
}
