#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace gwmirror {

// Outcome of verifying one identity. `anchor` is a short human-readable
// statement of the identity being checked.
struct CheckResult {
    std::string identity;
    std::string anchor;
    bool passed = true;
    std::string first_failure;  // empty when passed
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void merge(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
    const CheckResult* first_failed() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

}  // namespace gwmirror
