#include "fairaudit/types.hpp"

#include <algorithm>

namespace fairaudit {

std::string_view to_token(Modality m) {
    return m == Modality::Visual ? "visual" : "thermal";
}

std::string_view to_token(MaskState m) {
    return m == MaskState::Yes ? "yes" : "no";
}

std::optional<Modality> modality_from_token(std::string_view token) {
    if (token == "visual") return Modality::Visual;
    if (token == "thermal") return Modality::Thermal;
    return std::nullopt;
}

std::optional<MaskState> mask_from_token(std::string_view token) {
    if (token == "yes") return MaskState::Yes;
    if (token == "no") return MaskState::No;
    return std::nullopt;
}

Roster::Roster(std::vector<SubjectProfile> subjects) : subjects_(std::move(subjects)) {
    std::sort(subjects_.begin(), subjects_.end(),
              [](const SubjectProfile& a, const SubjectProfile& b) {
                  return a.subject_id < b.subject_id;
              });
    for (std::size_t i = 0; i < subjects_.size(); ++i) {
        const auto& s = subjects_[i];
        if (s.subject_id.empty())
            throw std::invalid_argument("roster: empty subject_id");
        if (i > 0 && s.subject_id == subjects_[i - 1].subject_id)
            throw std::invalid_argument("roster: duplicate subject_id '" + s.subject_id + "'");
        if (s.age_years < 1 || s.age_years > 120)
            throw std::invalid_argument("roster: subject '" + s.subject_id +
                                        "' age out of range [1,120]");
    }
}

std::optional<std::size_t> Roster::index_of(std::string_view subject_id) const {
    auto it = std::lower_bound(subjects_.begin(), subjects_.end(), subject_id,
                               [](const SubjectProfile& s, std::string_view id) {
                                   return s.subject_id < id;
                               });
    if (it == subjects_.end() || it->subject_id != subject_id) return std::nullopt;
    return static_cast<std::size_t>(it - subjects_.begin());
}

std::optional<std::size_t> GroupingScheme::label_index(std::string_view label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace fairaudit
