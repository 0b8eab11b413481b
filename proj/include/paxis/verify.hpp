#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "paxis/pipeline.hpp"

namespace paxis {

enum class CheckStatus { pass, fail, skipped };

struct PropertyCheck {
    int n = 0;
    std::string property;
    CheckStatus status = CheckStatus::pass;
    std::string detail;  // counterexample on failure, reason when skipped
};

/// Largest n at which the subset oracle is cross-checked against the clique search.
inline constexpr int kOracleCheckMaxN = 14;
/// Largest n covered by the fixed radius bounds (deg <= 2, clique invariants <= 4).
inline constexpr int kRadiusBoundMaxN = 30;

/// Every structural property for one n. Axis-dependent checks are skipped for axisless n.
std::vector<PropertyCheck> verify_result(const PipelineResult& result);

struct VerifyReport {
    std::vector<PropertyCheck> checks;

    bool ok() const;
    std::size_t failures() const;
    void print(std::ostream& out) const;
};

VerifyReport verify_range(int n_min, int n_max, unsigned threads = 1);

/// p(n) by the standard largest-part recurrence; independent of partition enumeration.
std::size_t partition_count(int n);

}  // namespace paxis
