#pragma once

#include "skw/instances.hpp"

namespace skw {

struct CheckRecord {
    std::string name;
    std::string status; // "pass" | "fail" | "error" | "skipped"
    std::string detail;
    std::uint64_t seed = 0;
    double ms = 0.0;
    bool ok() const { return status == "pass" || status == "skipped"; }
};

struct Report {
    std::string suite;
    std::string instance;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;

    bool all_pass() const;
    bool has_validation_error() const;
    // Deterministic serialization: records sorted by name; timings included
    // only on request since they vary between runs.
    std::string to_json(bool timings = false) const;
    // 0 = pass, 1 = validation error, 2 = property violation.
    int exit_code() const;
};

const std::vector<std::string>& suite_names();
Report run_suite(const std::string& suite, const Instance& inst, std::uint64_t seed);

} // namespace skw
