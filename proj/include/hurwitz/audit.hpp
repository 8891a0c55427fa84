#pragma once

#include "hurwitz/enumerate.hpp"

#include <string>
#include <vector>

namespace hurwitz {

/// Types audited: every pair of partitions of d <= max_degree and every
/// genus with 1 <= r <= max_branch_points.
struct AuditRange {
    int max_degree = 4;
    int max_branch_points = 6;
};

struct AuditCheck {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::vector<std::string> samples;  ///< first few failing inputs

    void record(bool ok, const std::string& what);
    bool passed() const { return failures == 0; }
};

struct AuditReport {
    std::vector<AuditCheck> checks;
    /// Facts that are reported without a pass/fail verdict.
    std::vector<std::string> observations;

    bool passed() const;
};

AuditReport run_audit(const AuditRange& range, const SearchLimits& limits = {});

}  // namespace hurwitz
