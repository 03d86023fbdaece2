#pragma once

#include <span>
#include <string>
#include <vector>

#include "fairaudit/metrics.hpp"
#include "fairaudit/types.hpp"

namespace fairaudit {

/// Per-group selection rate, TPR and FPR for one identity class, aligned
/// with the grouping's label order.
///
///   selection[g] = #(records in g predicted c) / #(records in g)
///   tpr[g]       = over records in g whose true identity is c
///   fpr[g]       = over records in g whose true identity is not c
struct GroupRates {
    std::vector<std::string> labels;
    std::vector<Rate> selection;
    std::vector<Rate> tpr;
    std::vector<Rate> fpr;
};

/// Rates for one class across all groups. Every record's identities must
/// exist in the roster; the grouping must have at least two groups.
GroupRates group_rates(std::span<const PredictionRecord> log,
                       const Roster& roster,
                       const GroupingScheme& grouping,
                       std::string_view class_id);

/// Max-minus-min selection rate across groups (zero-filled rates count as 0).
double dpd_class(const GroupRates& rates);
/// Max-minus-min true positive rate across groups.
double tpd_class(const GroupRates& rates);
/// Max-minus-min false positive rate across groups.
double fpd_class(const GroupRates& rates);
/// The larger of tpd_class and fpd_class.
double eod_class(const GroupRates& rates);

/// One-vs-rest fairness scores aggregated over all roster identities,
/// percent scale. eod averages the class-wise max(tpd, fpd).
struct FairnessSummary {
    double dpd = 0.0;
    double tpd = 0.0;
    double fpd = 0.0;
    double eod = 0.0;
};

/// Per-class dpd/tpd/fpd/eod, unweighted mean over the sorted roster, x100.
/// Per-class tallies may run on `threads` threads; integer counts merge
/// associatively and the final mean uses the fixed sorted-identity order, so
/// the result is identical for any thread count. Throws on an empty log,
/// empty roster, or a grouping with fewer than two groups.
FairnessSummary fairness_summary(std::span<const PredictionRecord> log,
                                 const Roster& roster,
                                 const GroupingScheme& grouping,
                                 unsigned threads = 1);

}  // namespace fairaudit
