#include "fairaudit/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "fairaudit/detail/parallel.hpp"

namespace fairaudit {

Rate Rate::of(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) return {0.0, false};
    return {static_cast<double>(numerator) / static_cast<double>(denominator), true};
}

Rate precision(const ConfusionCounts& c) { return Rate::of(c.tp, c.tp + c.fp); }

Rate recall(const ConfusionCounts& c) { return Rate::of(c.tp, c.tp + c.fn); }

Rate f1(const ConfusionCounts& c) { return Rate::of(2 * c.tp, 2 * c.tp + c.fp + c.fn); }

ConfusionCounts confusion_for_class(std::span<const PredictionRecord> log,
                                    std::string_view class_id) {
    ConfusionCounts c;
    for (const auto& rec : log) {
        const bool is_true = rec.true_subject == class_id;
        const bool is_pred = rec.predicted_subject == class_id;
        if (is_true && is_pred)
            ++c.tp;
        else if (!is_true && is_pred)
            ++c.fp;
        else if (is_true && !is_pred)
            ++c.fn;
        else
            ++c.tn;
    }
    return c;
}

namespace {

struct Cell {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
};

}  // namespace

MacroMetrics macro_over_classes(std::span<const PredictionRecord> log,
                                std::vector<std::string> classes,
                                unsigned threads) {
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    if (classes.empty()) throw std::invalid_argument("macro_over_classes: empty class set");

    const std::size_t k = classes.size();
    std::unordered_map<std::string_view, std::size_t> slot;
    slot.reserve(k);
    for (std::size_t i = 0; i < k; ++i) slot.emplace(classes[i], i);

    const auto ranges = detail::chunk_ranges(log.size(), threads);
    std::vector<std::vector<Cell>> parts(ranges.size(), std::vector<Cell>(k));
    detail::parallel_chunks(log.size(), threads,
                            [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                                auto& cells = parts[chunk];
                                for (std::size_t i = begin; i < end; ++i) {
                                    const auto& rec = log[i];
                                    const auto t = slot.find(rec.true_subject);
                                    if (rec.true_subject == rec.predicted_subject) {
                                        if (t != slot.end()) ++cells[t->second].tp;
                                        continue;
                                    }
                                    if (t != slot.end()) ++cells[t->second].fn;
                                    const auto p = slot.find(rec.predicted_subject);
                                    if (p != slot.end()) ++cells[p->second].fp;
                                }
                            });

    // Integer merge is associative, so the counts are thread-count invariant.
    std::vector<Cell> cells(k);
    for (const auto& part : parts) {
        for (std::size_t i = 0; i < k; ++i) {
            cells[i].tp += part[i].tp;
            cells[i].fp += part[i].fp;
            cells[i].fn += part[i].fn;
        }
    }

    const std::uint64_t total = log.size();
    MacroMetrics m;
    m.class_count = k;
    double sum_p = 0.0, sum_r = 0.0, sum_f = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& cell = cells[i];
        const ConfusionCounts c{cell.tp, cell.fp, cell.fn,
                                total - cell.tp - cell.fp - cell.fn};
        const Rate p = precision(c);
        const Rate r = recall(c);
        const Rate f = f1(c);
        sum_p += p.value;
        sum_r += r.value;
        sum_f += f.value;
        if (!p.defined) ++m.undefined_precision;
        if (!r.defined) ++m.undefined_recall;
        if (!f.defined) ++m.undefined_f1;
    }
    const double n = static_cast<double>(k);
    m.precision = sum_p / n;
    m.recall = sum_r / n;
    m.f1 = sum_f / n;
    return m;
}

MacroMetrics group_row_metrics(std::span<const PredictionRecord> log,
                               const Roster& roster,
                               const GroupingScheme& grouping,
                               std::string_view group_label,
                               unsigned threads) {
    const auto gi = grouping.label_index(group_label);
    if (!gi)
        throw std::invalid_argument("group_row_metrics: unknown group label '" +
                                    std::string(group_label) + "'");
    std::vector<std::string> classes;
    for (std::size_t i = 0; i < roster.size(); ++i) {
        if (grouping.group_of[i] == *gi) classes.push_back(roster.at(i).subject_id);
    }
    return macro_over_classes(log, std::move(classes), threads);
}

}  // namespace fairaudit
