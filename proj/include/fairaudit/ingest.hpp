#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fairaudit/types.hpp"

namespace fairaudit {

/// Age bin labels: <25 -> "under25", 25..30 -> "25-30", 31..35 -> "31-35",
/// >35 -> "over35". Boundaries of the two middle bins are inclusive.
/// Throws std::invalid_argument for nonpositive ages.
std::string bin_age(int age_years);

/// Total partition of the roster by "age", "gender", or "ethnicity".
/// Throws on an unknown attribute or a profile with an empty label.
GroupingScheme apply_grouping(const Roster& roster, std::string_view attribute);

/// Parses subjects from CSV (header `subject_id,age,gender,ethnicity`) or
/// line-delimited JSON with the same field names; the format is detected
/// from the first byte. Rejections carry the 1-based line number.
Roster parse_subjects(std::istream& in);

/// Parses predictions from CSV (header `sample_id,true_subject,
/// predicted_subject,modality,masked`) or line-delimited JSON. Both subject
/// references must exist in the roster. Records keep file order; an empty
/// data section yields an empty log.
std::vector<PredictionRecord> parse_predictions(std::istream& in, const Roster& roster);

void write_subjects_csv(std::ostream& out, const Roster& roster);
void write_predictions_csv(std::ostream& out, std::span<const PredictionRecord> log);

/// CSV-escapes one field (RFC-style double quotes). Fields with embedded
/// newlines are rejected since the readers are line-based.
std::string csv_field(std::string_view value);

/// Referential report over a log/roster pair. Never mutates its inputs;
/// warnings do not make ok() false.
struct ValidationReport {
    struct GroupTotal {
        std::string attribute;
        std::string label;
        std::uint64_t samples = 0;
    };

    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    std::vector<std::pair<std::string, std::uint64_t>> samples_per_subject;  // roster order
    std::vector<GroupTotal> samples_per_group;

    bool ok() const { return violations.empty(); }
};

ValidationReport validate(std::span<const PredictionRecord> log, const Roster& roster);

}  // namespace fairaudit
