#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steinitz/dataset.hpp"

namespace steinitz {

struct EntryResult {
    std::size_t index = 0;
    std::string label;
    enum class Status { Pass, Fail, Skip } status = Status::Skip;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::string source; // dataset path or random(...) description
    std::vector<EntryResult> entries;
    std::size_t passed = 0, failed = 0, skipped = 0;
    bool all_pass() const { return failed == 0; }
    void push(EntryResult r);
};

/// Names: theorem1, lemma3, theorem3, theorem4, theorem5, dm, steinitz, curve.
std::vector<std::string> verify_suite_names();
SuiteReport run_verify_suite(const Dataset& ds, const std::string& suite,
                             const std::string& source);

/// Names: theorem1, lemma3, theorem3, theorem4, theorem5, steinitz.
std::vector<std::string> random_suite_names();
SuiteReport run_random_suite(const std::string& suite, unsigned count,
                             std::uint64_t seed, unsigned max_rank);

struct ClassGroupReport {
    Int D, disc;
    std::size_t h = 0;
    std::vector<std::string> forms;
    std::string split2;      // description of the splitting of 2
    bool two_checks = true;  // product/square of primes above 2 equals (2)
};
ClassGroupReport run_classgroup(const Int& d);

std::string render_text(const SuiteReport& r);
std::string render_json(const SuiteReport& r);
std::string render_text(const ClassGroupReport& r);
std::string render_json(const ClassGroupReport& r);

} // namespace steinitz
