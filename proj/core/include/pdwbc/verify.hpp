#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pdwbc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    int total() const { return static_cast<int>(checks.size()); }
    int passed() const;
    bool all_passed() const { return passed() == total(); }
};

inline constexpr std::uint64_t kDefaultVerifySeed = 0xC0FFEE;

/*
 * Exact identity suites behind the `verify` CLI subcommand. Each check is a
 * seeded deterministic trial or an exact grid identity; a suite passes only
 * if every check does.
 */
SuiteReport verify_qism(std::uint64_t seed = kDefaultVerifySeed);
SuiteReport verify_partition(std::uint64_t seed = kDefaultVerifySeed, int max_n = 5);
SuiteReport verify_onepoint(std::uint64_t seed = kDefaultVerifySeed, int max_s = 6);
SuiteReport verify_ode(int max_s = 6);
SuiteReport verify_asym(std::uint64_t seed = kDefaultVerifySeed);

std::vector<SuiteReport> verify_all(std::uint64_t seed = kDefaultVerifySeed, int max_s = 6);

} // namespace pdwbc
