// Acceptance suite: runs every bundled verification check at full strength
// and prints one PASS/FAIL line per criterion. Exit status is nonzero if any
// check fails. `--quick` skips the seeded statistical checks; `--seed N`
// overrides the default seed.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "selfcheck.hpp"

int main(int argc, char** argv) {
    bool full = true;
    std::uint64_t seed = arclab::DEFAULT_SEED;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            full = false;
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::fprintf(stderr, "usage: %s [--quick] [--seed N]\n", argv[0]);
            return 2;
        }
    }

    std::vector<arclab::CheckResult> results = arclab::run_verification_suite(full, seed);
    for (const arclab::CheckResult& r : results)
        std::printf("[%s] %2d. %s — %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.seconds);

    std::size_t passed = 0;
    for (const arclab::CheckResult& r : results) passed += r.pass;
    std::printf("%zu/%zu checks passed (seed %llu)\n", passed, results.size(),
                static_cast<unsigned long long>(seed));
    return passed == results.size() ? 0 : 1;
}
