#include "fairaudit/fairness.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "fairaudit/detail/parallel.hpp"

namespace fairaudit {

namespace {

// Joint integer tallies over (class, group). Everything downstream is a
// plain division of these, which keeps the whole pipeline exact until the
// last step.
struct FairnessTally {
    std::size_t n = 0;  // classes
    std::size_t g = 0;  // groups
    std::vector<std::uint64_t> group_size;      // [g]
    std::vector<std::uint64_t> predicted;       // [n*g] records in group predicted class
    std::vector<std::uint64_t> true_positive;   // [n*g] correct records of class in group
    std::vector<std::uint64_t> positives;       // [n*g] records of class in group

    FairnessTally(std::size_t classes, std::size_t groups)
        : n(classes), g(groups), group_size(groups, 0), predicted(classes * groups, 0),
          true_positive(classes * groups, 0), positives(classes * groups, 0) {}
};

FairnessTally tally_log(std::span<const PredictionRecord> log, const Roster& roster,
                        const GroupingScheme& grouping, unsigned threads) {
    const std::size_t n = roster.size();
    const std::size_t g = grouping.group_count();

    std::unordered_map<std::string_view, std::size_t> index;
    index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) index.emplace(roster.at(i).subject_id, i);

    const auto ranges = detail::chunk_ranges(log.size(), threads);
    std::vector<FairnessTally> parts(ranges.size(), FairnessTally(n, g));
    detail::parallel_chunks(
        log.size(), threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            auto& t = parts[chunk];
            for (std::size_t i = begin; i < end; ++i) {
                const auto& rec = log[i];
                const auto ti = index.find(rec.true_subject);
                if (ti == index.end())
                    throw std::invalid_argument("prediction log references unknown subject '" +
                                                rec.true_subject + "'");
                const auto pi = index.find(rec.predicted_subject);
                if (pi == index.end())
                    throw std::invalid_argument("prediction log references unknown subject '" +
                                                rec.predicted_subject + "'");
                const std::size_t gi = grouping.group_of[ti->second];
                ++t.group_size[gi];
                ++t.positives[ti->second * g + gi];
                ++t.predicted[pi->second * g + gi];
                if (ti->second == pi->second) ++t.true_positive[ti->second * g + gi];
            }
        });

    FairnessTally merged(n, g);
    for (const auto& part : parts) {
        for (std::size_t i = 0; i < g; ++i) merged.group_size[i] += part.group_size[i];
        for (std::size_t i = 0; i < n * g; ++i) {
            merged.predicted[i] += part.predicted[i];
            merged.true_positive[i] += part.true_positive[i];
            merged.positives[i] += part.positives[i];
        }
    }
    return merged;
}

GroupRates rates_from_tally(const FairnessTally& t, const GroupingScheme& grouping,
                            std::size_t class_index) {
    GroupRates r;
    r.labels = grouping.labels;
    const std::size_t g = t.g;
    r.selection.reserve(g);
    r.tpr.reserve(g);
    r.fpr.reserve(g);
    for (std::size_t gi = 0; gi < g; ++gi) {
        const std::uint64_t sel = t.predicted[class_index * g + gi];
        const std::uint64_t tp = t.true_positive[class_index * g + gi];
        const std::uint64_t pos = t.positives[class_index * g + gi];
        const std::uint64_t size = t.group_size[gi];
        r.selection.push_back(Rate::of(sel, size));
        r.tpr.push_back(Rate::of(tp, pos));
        r.fpr.push_back(Rate::of(sel - tp, size - pos));
    }
    return r;
}

double spread(const std::vector<Rate>& rates) {
    double mx = rates.front().value;
    double mn = rates.front().value;
    for (const Rate& r : rates) {
        mx = std::max(mx, r.value);
        mn = std::min(mn, r.value);
    }
    return mx - mn;
}

void require_groups(const GroupRates& rates, const char* op) {
    if (rates.labels.size() < 2)
        throw std::invalid_argument(std::string(op) + ": need at least 2 groups");
}

}  // namespace

GroupRates group_rates(std::span<const PredictionRecord> log, const Roster& roster,
                       const GroupingScheme& grouping, std::string_view class_id) {
    if (grouping.group_count() < 2)
        throw std::invalid_argument("group_rates: need at least 2 groups");
    const FairnessTally t = tally_log(log, roster, grouping, 1);
    const auto idx = roster.index_of(class_id);
    if (idx) return rates_from_tally(t, grouping, *idx);

    // Class absent from the roster: empty selection per group, no positives.
    GroupRates r;
    r.labels = grouping.labels;
    for (std::size_t gi = 0; gi < grouping.group_count(); ++gi) {
        r.selection.push_back(Rate::of(0, t.group_size[gi]));
        r.tpr.push_back(Rate::of(0, 0));
        r.fpr.push_back(Rate::of(0, t.group_size[gi]));
    }
    return r;
}

double dpd_class(const GroupRates& rates) {
    require_groups(rates, "dpd_class");
    return spread(rates.selection);
}

double tpd_class(const GroupRates& rates) {
    require_groups(rates, "tpd_class");
    return spread(rates.tpr);
}

double fpd_class(const GroupRates& rates) {
    require_groups(rates, "fpd_class");
    return spread(rates.fpr);
}

double eod_class(const GroupRates& rates) {
    return std::max(tpd_class(rates), fpd_class(rates));
}

FairnessSummary fairness_summary(std::span<const PredictionRecord> log, const Roster& roster,
                                 const GroupingScheme& grouping, unsigned threads) {
    if (log.empty()) throw std::invalid_argument("fairness_summary: empty prediction log");
    if (roster.empty()) throw std::invalid_argument("fairness_summary: empty roster");
    if (grouping.group_count() < 2)
        throw std::invalid_argument("fairness_summary: need at least 2 groups");

    const FairnessTally t = tally_log(log, roster, grouping, threads);

    // Fixed summation order over the sorted roster; bit-reproducible for any
    // thread count.
    double sum_dpd = 0.0, sum_tpd = 0.0, sum_fpd = 0.0, sum_eod = 0.0;
    for (std::size_t c = 0; c < roster.size(); ++c) {
        const GroupRates rates = rates_from_tally(t, grouping, c);
        const double d = dpd_class(rates);
        const double tp = tpd_class(rates);
        const double fp = fpd_class(rates);
        sum_dpd += d;
        sum_tpd += tp;
        sum_fpd += fp;
        sum_eod += std::max(tp, fp);
    }
    const double n = static_cast<double>(roster.size());
    return {100.0 * (sum_dpd / n), 100.0 * (sum_tpd / n), 100.0 * (sum_fpd / n),
            100.0 * (sum_eod / n)};
}

}  // namespace fairaudit
