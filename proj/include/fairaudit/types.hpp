#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fairaudit {

enum class Modality { Visual, Thermal };
enum class MaskState { No, Yes };

std::string_view to_token(Modality m);
std::string_view to_token(MaskState m);
std::optional<Modality> modality_from_token(std::string_view token);
std::optional<MaskState> mask_from_token(std::string_view token);

/// One enrolled identity with its demographic attributes.
struct SubjectProfile {
    std::string subject_id;
    int age_years = 0;
    std::string gender;
    std::string ethnicity;

    friend bool operator==(const SubjectProfile&, const SubjectProfile&) = default;
};

/// One test sample: ground truth, prediction, and capture condition.
struct PredictionRecord {
    std::string sample_id;
    std::string true_subject;
    std::string predicted_subject;
    Modality modality = Modality::Visual;
    MaskState masked = MaskState::No;

    friend bool operator==(const PredictionRecord&, const PredictionRecord&) = default;
};

/// Enrolled identities, unique and sorted by subject_id. Sorting happens on
/// construction so every downstream aggregation sees one canonical order.
class Roster {
public:
    Roster() = default;

    /// Sorts by subject_id. Throws std::invalid_argument on duplicate ids or
    /// ages outside [1, 120].
    explicit Roster(std::vector<SubjectProfile> subjects);

    const std::vector<SubjectProfile>& subjects() const { return subjects_; }
    std::size_t size() const { return subjects_.size(); }
    bool empty() const { return subjects_.empty(); }
    const SubjectProfile& at(std::size_t i) const { return subjects_[i]; }

    std::optional<std::size_t> index_of(std::string_view subject_id) const;

private:
    std::vector<SubjectProfile> subjects_;
};

/// Partition of a roster by one demographic attribute. Labels are sorted and
/// unique; group_of maps each roster index to an index into labels.
struct GroupingScheme {
    std::string attribute;
    std::vector<std::string> labels;
    std::vector<std::uint32_t> group_of;

    std::size_t group_count() const { return labels.size(); }
    std::optional<std::size_t> label_index(std::string_view label) const;
};

/// Input rejection with a 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace fairaudit
