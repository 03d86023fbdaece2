#include "fairaudit/balance.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace fairaudit {

ClassDistribution priors(const Roster& roster, const GroupingScheme& grouping) {
    if (roster.empty()) throw std::invalid_argument("priors: empty roster");
    ClassDistribution dist;
    dist.attribute = grouping.attribute;
    dist.labels = grouping.labels;
    dist.counts.assign(grouping.group_count(), 0);
    for (const auto gi : grouping.group_of) ++dist.counts[gi];
    dist.total = roster.size();
    return dist;
}

ClassDistribution distribution_from_counts(
    std::string attribute, std::vector<std::pair<std::string, std::uint64_t>> counts) {
    if (counts.empty()) throw std::invalid_argument("distribution_from_counts: no labels");
    std::sort(counts.begin(), counts.end());
    ClassDistribution dist;
    dist.attribute = std::move(attribute);
    for (const auto& [label, count] : counts) {
        if (!dist.labels.empty() && dist.labels.back() == label)
            throw std::invalid_argument("distribution_from_counts: duplicate label '" + label +
                                        "'");
        dist.labels.push_back(label);
        dist.counts.push_back(count);
        dist.total += count;
    }
    return dist;
}

RebalanceStrategy RebalanceStrategy::parse(std::string_view token) {
    if (token == "augment-max") return {Kind::AugmentMax, 0};
    if (token == "subsample-min") return {Kind::SubsampleMin, 0};
    constexpr std::string_view prefix = "target:";
    if (token.substr(0, prefix.size()) == prefix) {
        const auto digits = token.substr(prefix.size());
        std::uint64_t n = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
            throw std::invalid_argument("strategy target must be a non-negative integer: '" +
                                        std::string(token) + "'");
        return {Kind::Target, n};
    }
    throw std::invalid_argument("unknown strategy '" + std::string(token) +
                                "' (expected augment-max, subsample-min, or target:N)");
}

std::string RebalanceStrategy::tag() const {
    switch (kind) {
        case Kind::AugmentMax: return "augment-max";
        case Kind::SubsampleMin: return "subsample-min";
        case Kind::Target: return "target:" + std::to_string(target);
    }
    return {};
}

RebalancePlan plan_rebalance(const ClassDistribution& dist, const RebalanceStrategy& strategy) {
    if (dist.labels.empty()) throw std::invalid_argument("plan_rebalance: empty distribution");

    std::uint64_t target = 0;
    switch (strategy.kind) {
        case RebalanceStrategy::Kind::AugmentMax:
            target = *std::max_element(dist.counts.begin(), dist.counts.end());
            break;
        case RebalanceStrategy::Kind::SubsampleMin:
            target = *std::min_element(dist.counts.begin(), dist.counts.end());
            break;
        case RebalanceStrategy::Kind::Target:
            target = strategy.target;
            break;
    }

    RebalancePlan plan;
    plan.strategy = strategy.tag();
    plan.attribute = dist.attribute;
    plan.labels = dist.labels;
    plan.current = dist.counts;
    plan.target.assign(dist.labels.size(), target);
    for (const auto current : dist.counts)
        plan.delta.push_back(static_cast<std::int64_t>(target) -
                             static_cast<std::int64_t>(current));
    return plan;
}

}  // namespace fairaudit
