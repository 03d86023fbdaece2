#pragma once

#include <span>
#include <string>
#include <vector>

#include "fairaudit/types.hpp"

namespace fairaudit {

/// One-vs-rest confusion cells for a single identity class.
struct ConfusionCounts {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;

    std::uint64_t total() const { return tp + fp + fn + tn; }

    friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

/// A rate under the zero-fill convention: when the denominator is zero the
/// value is 0 and defined is false. Flagged values still participate in
/// averages and max/min spreads as 0.
struct Rate {
    double value = 0.0;
    bool defined = false;

    static Rate of(std::uint64_t numerator, std::uint64_t denominator);
};

Rate precision(const ConfusionCounts& c);  // tp / (tp + fp)
Rate recall(const ConfusionCounts& c);     // tp / (tp + fn)
Rate f1(const ConfusionCounts& c);         // 2tp / (2tp + fp + fn)

/// Exact one-vs-rest counts for `class_id` over the whole log. The class may
/// be absent from the log (all samples then land in tn).
ConfusionCounts confusion_for_class(std::span<const PredictionRecord> log,
                                    std::string_view class_id);

/// Unweighted means of per-class precision/recall/F1, all in [0,1].
/// undefined_* count how many per-class rates were zero-filled.
struct MacroMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t class_count = 0;
    std::size_t undefined_precision = 0;
    std::size_t undefined_recall = 0;
    std::size_t undefined_f1 = 0;
};

/// Macro metrics over the given class set. Classes are deduplicated and the
/// mean is accumulated in sorted class order, so the result does not depend
/// on input order or on `threads`. Throws std::invalid_argument on an empty
/// class set.
MacroMetrics macro_over_classes(std::span<const PredictionRecord> log,
                                std::vector<std::string> classes,
                                unsigned threads = 1);

/// Macro metrics restricted to the identity classes whose profile maps to
/// `group_label`; confusion counts still run over the full log, so false
/// positives may originate from any group. Throws on an unknown label.
MacroMetrics group_row_metrics(std::span<const PredictionRecord> log,
                               const Roster& roster,
                               const GroupingScheme& grouping,
                               std::string_view group_label,
                               unsigned threads = 1);

}  // namespace fairaudit
