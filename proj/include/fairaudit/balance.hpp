#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairaudit/types.hpp"

namespace fairaudit {

/// Exact per-group counts; the prior of group i is the rational
/// counts[i] / total, materialized as a double only for display.
struct ClassDistribution {
    std::string attribute;
    std::vector<std::string> labels;  // sorted
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;

    double prior(std::size_t i) const {
        return static_cast<double>(counts[i]) / static_cast<double>(total);
    }
};

/// Subject counts per group. Throws on an empty roster.
ClassDistribution priors(const Roster& roster, const GroupingScheme& grouping);

/// Builds a distribution from caller-supplied counts (for example sample
/// counts instead of subject counts). Throws on duplicates or no labels.
ClassDistribution distribution_from_counts(
    std::string attribute, std::vector<std::pair<std::string, std::uint64_t>> counts);

struct RebalanceStrategy {
    enum class Kind { AugmentMax, SubsampleMin, Target };

    Kind kind = Kind::AugmentMax;
    std::uint64_t target = 0;  // Kind::Target only

    /// Accepts "augment-max", "subsample-min", or "target:N" with N >= 0.
    static RebalanceStrategy parse(std::string_view token);

    std::string tag() const;
};

/// Per-group count deltas toward the strategy's target.
struct RebalancePlan {
    std::string strategy;
    std::string attribute;
    std::vector<std::string> labels;
    std::vector<std::uint64_t> current;
    std::vector<std::uint64_t> target;
    std::vector<std::int64_t> delta;  // current + delta == target
};

RebalancePlan plan_rebalance(const ClassDistribution& dist, const RebalanceStrategy& strategy);

}  // namespace fairaudit
