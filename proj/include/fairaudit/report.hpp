#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fairaudit/balance.hpp"
#include "fairaudit/fairness.hpp"
#include "fairaudit/ingest.hpp"
#include "fairaudit/metrics.hpp"
#include "fairaudit/types.hpp"

namespace fairaudit {

inline constexpr std::string_view kToolName = "fairaudit";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { Table, Csv, Json };
std::optional<ReportFormat> report_format_from_token(std::string_view token);

/// One performance row, percent scale. attribute/label are empty for the
/// baseline row.
struct PerformanceRow {
    std::string attribute;
    std::string label;
    MacroMetrics metrics;
};

struct FairnessRow {
    std::string attribute;
    bool defined = true;  // false when the log was empty
    FairnessSummary summary;
};

/// All numeric fields are percent-scale doubles at full precision; rounding
/// to 2 decimals (half-even) happens only in table/CSV rendering.
struct AuditReport {
    std::string tool_version;
    std::string subjects_digest;
    std::string predictions_digest;
    std::uint64_t subject_count = 0;
    std::uint64_t record_count = 0;
    PerformanceRow baseline;
    std::vector<PerformanceRow> groups;    // sorted by (attribute, label)
    std::vector<FairnessRow> fairness;     // sorted by attribute
};

/// Builds the full report: baseline macro metrics, per-group rows and one
/// fairness summary per attribute. Attributes must be drawn from
/// {age, gender, ethnicity}. An empty log yields zeroed rows with the
/// fairness entries flagged undefined instead of an error.
AuditReport build_audit_report(std::span<const PredictionRecord> log,
                               const Roster& roster,
                               std::vector<std::string> attributes,
                               unsigned threads = 1);

/// Pure rendering; identical reports give byte-identical output per format.
std::string render_report(const AuditReport& report, ReportFormat format);

std::string render_plan(const RebalancePlan& plan, ReportFormat format);
std::string render_validation(const ValidationReport& report);

/// Half-even rounding to 2 decimals at the presentation boundary.
std::string format_percent(double value);

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace fairaudit
