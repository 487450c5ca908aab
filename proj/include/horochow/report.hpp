#pragma once

#include <string>
#include <vector>

namespace horochow {

/// Outcome of one verification check.
struct CheckResult {
    enum class Status { Pass, Fail, Error };

    std::string id;       ///< stable dotted identifier, e.g. "g2.ring.hilbert"
    Status status = Status::Error;
    std::string summary;  ///< short human-readable statement of what was checked
    std::string lhs;      ///< rendered left-hand side, when applicable
    std::string rhs;      ///< rendered right-hand side, when applicable
    std::string detail;   ///< diagnostics on failure, notes otherwise

    bool passed() const { return status == Status::Pass; }
};

/// Ordered list of check results.
struct CheckReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }
    void append(CheckReport other) {
        for (auto& c : other.checks) checks.push_back(std::move(c));
    }
};

}  // namespace horochow
