#include "fairaudit/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_map>

#include <json.hpp>

namespace fairaudit {

namespace {

constexpr std::string_view kSubjectsHeader = "subject_id,age,gender,ethnicity";
constexpr std::string_view kPredictionsHeader =
    "sample_id,true_subject,predicted_subject,modality,masked";

bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

std::vector<std::string> read_all_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (read_line(in, line)) lines.push_back(std::move(line));
    return lines;
}

bool looks_like_jsonl(const std::vector<std::string>& lines) {
    for (const auto& line : lines) {
        const auto pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos) continue;
        return line[pos] == '{';
    }
    return false;
}

// RFC-style splitter: double-quoted fields with "" escapes; embedded
// newlines are not supported because parsing is line-based.
std::vector<std::string> split_csv(const std::string& line, std::size_t lineno) {
    std::vector<std::string> out;
    std::string field;
    std::size_t i = 0;
    const std::size_t n = line.size();
    for (;;) {
        field.clear();
        if (i < n && line[i] == '"') {
            ++i;
            for (;;) {
                if (i >= n) throw ParseError(lineno, "unterminated quoted field");
                const char c = line[i];
                if (c == '"') {
                    if (i + 1 < n && line[i + 1] == '"') {
                        field.push_back('"');
                        i += 2;
                    } else {
                        ++i;
                        break;
                    }
                } else {
                    field.push_back(c);
                    ++i;
                }
            }
            if (i < n && line[i] != ',')
                throw ParseError(lineno, "malformed quoting: expected ',' after closing quote");
        } else {
            while (i < n && line[i] != ',') {
                if (line[i] == '"')
                    throw ParseError(lineno, "malformed quoting: '\"' inside unquoted field");
                field.push_back(line[i]);
                ++i;
            }
        }
        out.push_back(field);
        if (i >= n) break;
        ++i;  // separator
        if (i == n) {
            out.emplace_back();
            break;
        }
    }
    return out;
}

void check_header(const std::vector<std::string>& fields, std::string_view expected,
                  std::size_t lineno) {
    std::string joined;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) joined.push_back(',');
        joined += fields[i];
    }
    if (joined != expected)
        throw ParseError(lineno, "bad header '" + joined + "': expected '" +
                                     std::string(expected) + "'");
}

int parse_age(const std::string& field, std::size_t lineno) {
    int value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || field.empty())
        throw ParseError(lineno, "non-integer age '" + field + "'");
    if (value < 1 || value > 120)
        throw ParseError(lineno, "age out of range [1,120]: '" + field + "'");
    return value;
}

nlohmann::json parse_json_object(const std::string& line, std::size_t lineno) {
    auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object())
        throw ParseError(lineno, "invalid JSON object");
    return j;
}

std::string json_string_field(const nlohmann::json& j, const char* key, std::size_t lineno) {
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(lineno, std::string("missing field '") + key + "'");
    if (!it->is_string())
        throw ParseError(lineno, std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
}

void reject_extra_json_fields(const nlohmann::json& j,
                              std::initializer_list<std::string_view> allowed,
                              std::size_t lineno) {
    for (const auto& item : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            throw ParseError(lineno, "unknown field '" + item.key() + "'");
    }
}

}  // namespace

std::string bin_age(int age_years) {
    if (age_years < 1) throw std::invalid_argument("bin_age: nonpositive age");
    if (age_years < 25) return "under25";
    if (age_years <= 30) return "25-30";
    if (age_years <= 35) return "31-35";
    return "over35";
}

GroupingScheme apply_grouping(const Roster& roster, std::string_view attribute) {
    if (attribute != "age" && attribute != "gender" && attribute != "ethnicity")
        throw std::invalid_argument("apply_grouping: unknown attribute '" +
                                    std::string(attribute) + "'");

    std::vector<std::string> per_subject;
    per_subject.reserve(roster.size());
    for (std::size_t i = 0; i < roster.size(); ++i) {
        const auto& s = roster.at(i);
        std::string label;
        if (attribute == "age") {
            label = bin_age(s.age_years);
        } else {
            label = attribute == "gender" ? s.gender : s.ethnicity;
            if (label.empty())
                throw std::invalid_argument("apply_grouping: subject '" + s.subject_id +
                                            "' has empty " + std::string(attribute));
        }
        per_subject.push_back(std::move(label));
    }

    GroupingScheme scheme;
    scheme.attribute = std::string(attribute);
    scheme.labels = per_subject;
    std::sort(scheme.labels.begin(), scheme.labels.end());
    scheme.labels.erase(std::unique(scheme.labels.begin(), scheme.labels.end()),
                        scheme.labels.end());
    scheme.group_of.reserve(roster.size());
    for (const auto& label : per_subject)
        scheme.group_of.push_back(static_cast<std::uint32_t>(*scheme.label_index(label)));
    return scheme;
}

Roster parse_subjects(std::istream& in) {
    const auto lines = read_all_lines(in);
    std::vector<SubjectProfile> profiles;
    std::unordered_map<std::string, std::size_t> seen;  // id -> first line

    if (looks_like_jsonl(lines)) {
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const std::size_t lineno = i + 1;
            const auto j = parse_json_object(lines[i], lineno);
            reject_extra_json_fields(j, {"subject_id", "age", "gender", "ethnicity"}, lineno);
            SubjectProfile p;
            p.subject_id = json_string_field(j, "subject_id", lineno);
            const auto age = j.find("age");
            if (age == j.end()) throw ParseError(lineno, "missing field 'age'");
            if (!age->is_number_integer() && !age->is_number_unsigned())
                throw ParseError(lineno, "non-integer age");
            const auto v = age->get<std::int64_t>();
            if (v < 1 || v > 120)
                throw ParseError(lineno, "age out of range [1,120]: '" + std::to_string(v) + "'");
            p.age_years = static_cast<int>(v);
            p.gender = json_string_field(j, "gender", lineno);
            p.ethnicity = json_string_field(j, "ethnicity", lineno);
            if (p.subject_id.empty()) throw ParseError(lineno, "empty subject_id");
            const auto [it, inserted] = seen.emplace(p.subject_id, lineno);
            if (!inserted)
                throw ParseError(lineno, "duplicate subject_id '" + p.subject_id +
                                             "' (first seen on line " +
                                             std::to_string(it->second) + ")");
            profiles.push_back(std::move(p));
        }
        return Roster(std::move(profiles));
    }

    if (lines.empty()) throw ParseError(1, "missing header '" + std::string(kSubjectsHeader) + "'");
    check_header(split_csv(lines[0], 1), kSubjectsHeader, 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const auto fields = split_csv(lines[i], lineno);
        if (fields.size() != 4)
            throw ParseError(lineno, "expected 4 fields, got " + std::to_string(fields.size()));
        SubjectProfile p;
        p.subject_id = fields[0];
        if (p.subject_id.empty()) throw ParseError(lineno, "empty subject_id");
        p.age_years = parse_age(fields[1], lineno);
        p.gender = fields[2];
        p.ethnicity = fields[3];
        const auto [it, inserted] = seen.emplace(p.subject_id, lineno);
        if (!inserted)
            throw ParseError(lineno, "duplicate subject_id '" + p.subject_id +
                                         "' (first seen on line " + std::to_string(it->second) +
                                         ")");
        profiles.push_back(std::move(p));
    }
    return Roster(std::move(profiles));
}

std::vector<PredictionRecord> parse_predictions(std::istream& in, const Roster& roster) {
    const auto lines = read_all_lines(in);
    std::vector<PredictionRecord> log;
    std::unordered_map<std::string, std::size_t> seen;  // sample id -> first line

    const auto check_subject = [&](const std::string& id, std::size_t lineno) {
        if (!roster.index_of(id))
            throw ParseError(lineno, "unknown subject '" + id + "'");
    };
    const auto check_sample = [&](const std::string& id, std::size_t lineno) {
        if (id.empty()) throw ParseError(lineno, "empty sample_id");
        const auto [it, inserted] = seen.emplace(id, lineno);
        if (!inserted)
            throw ParseError(lineno, "duplicate sample_id '" + id + "' (first seen on line " +
                                         std::to_string(it->second) + ")");
    };

    if (looks_like_jsonl(lines)) {
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const std::size_t lineno = i + 1;
            const auto j = parse_json_object(lines[i], lineno);
            reject_extra_json_fields(
                j, {"sample_id", "true_subject", "predicted_subject", "modality", "masked"},
                lineno);
            PredictionRecord r;
            r.sample_id = json_string_field(j, "sample_id", lineno);
            r.true_subject = json_string_field(j, "true_subject", lineno);
            r.predicted_subject = json_string_field(j, "predicted_subject", lineno);
            const auto modality = modality_from_token(json_string_field(j, "modality", lineno));
            if (!modality) throw ParseError(lineno, "invalid modality token");
            const auto masked = mask_from_token(json_string_field(j, "masked", lineno));
            if (!masked) throw ParseError(lineno, "invalid masked token");
            r.modality = *modality;
            r.masked = *masked;
            check_sample(r.sample_id, lineno);
            check_subject(r.true_subject, lineno);
            check_subject(r.predicted_subject, lineno);
            log.push_back(std::move(r));
        }
        return log;
    }

    if (lines.empty())
        throw ParseError(1, "missing header '" + std::string(kPredictionsHeader) + "'");
    check_header(split_csv(lines[0], 1), kPredictionsHeader, 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const auto fields = split_csv(lines[i], lineno);
        if (fields.size() != 5)
            throw ParseError(lineno, "expected 5 fields, got " + std::to_string(fields.size()));
        PredictionRecord r;
        r.sample_id = fields[0];
        r.true_subject = fields[1];
        r.predicted_subject = fields[2];
        const auto modality = modality_from_token(fields[3]);
        if (!modality) throw ParseError(lineno, "invalid modality token '" + fields[3] + "'");
        const auto masked = mask_from_token(fields[4]);
        if (!masked) throw ParseError(lineno, "invalid masked token '" + fields[4] + "'");
        r.modality = *modality;
        r.masked = *masked;
        check_sample(r.sample_id, lineno);
        check_subject(r.true_subject, lineno);
        check_subject(r.predicted_subject, lineno);
        log.push_back(std::move(r));
    }
    return log;
}

std::string csv_field(std::string_view value) {
    if (value.find_first_of("\r\n") != std::string_view::npos)
        throw std::invalid_argument("csv_field: embedded newline in field");
    if (value.find_first_of(",\"") == std::string_view::npos) return std::string(value);
    std::string out;
    out.reserve(value.size() + 2);
    out.push_back('"');
    for (const char c : value) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_subjects_csv(std::ostream& out, const Roster& roster) {
    out << kSubjectsHeader << '\n';
    for (const auto& s : roster.subjects()) {
        out << csv_field(s.subject_id) << ',' << s.age_years << ',' << csv_field(s.gender) << ','
            << csv_field(s.ethnicity) << '\n';
    }
}

void write_predictions_csv(std::ostream& out, std::span<const PredictionRecord> log) {
    out << kPredictionsHeader << '\n';
    for (const auto& r : log) {
        out << csv_field(r.sample_id) << ',' << csv_field(r.true_subject) << ','
            << csv_field(r.predicted_subject) << ',' << to_token(r.modality) << ','
            << to_token(r.masked) << '\n';
    }
}

ValidationReport validate(std::span<const PredictionRecord> log, const Roster& roster) {
    ValidationReport report;

    std::vector<std::uint64_t> per_subject(roster.size(), 0);
    std::unordered_map<std::string_view, std::size_t> seen_samples;
    seen_samples.reserve(log.size());
    for (std::size_t i = 0; i < log.size(); ++i) {
        const auto& r = log[i];
        const auto [it, inserted] = seen_samples.emplace(r.sample_id, i);
        if (!inserted)
            report.violations.push_back("duplicate sample_id '" + r.sample_id + "' (records " +
                                        std::to_string(it->second + 1) + " and " +
                                        std::to_string(i + 1) + ")");
        const auto ti = roster.index_of(r.true_subject);
        if (!ti)
            report.violations.push_back("record " + std::to_string(i + 1) + " (sample '" +
                                        r.sample_id + "') references unknown subject '" +
                                        r.true_subject + "'");
        else
            ++per_subject[*ti];
        if (!roster.index_of(r.predicted_subject))
            report.violations.push_back("record " + std::to_string(i + 1) + " (sample '" +
                                        r.sample_id + "') references unknown subject '" +
                                        r.predicted_subject + "'");
    }

    for (std::size_t i = 0; i < roster.size(); ++i) {
        report.samples_per_subject.emplace_back(roster.at(i).subject_id, per_subject[i]);
        if (per_subject[i] == 0)
            report.warnings.push_back("subject '" + roster.at(i).subject_id + "' has no samples");
    }

    for (const char* attribute : {"age", "ethnicity", "gender"}) {
        GroupingScheme grouping;
        try {
            grouping = apply_grouping(roster, attribute);
        } catch (const std::invalid_argument& e) {
            report.warnings.push_back(std::string("attribute ") + attribute +
                                      " not groupable: " + e.what());
            continue;
        }
        std::vector<std::uint64_t> totals(grouping.group_count(), 0);
        for (std::size_t i = 0; i < roster.size(); ++i)
            totals[grouping.group_of[i]] += per_subject[i];
        for (std::size_t gi = 0; gi < grouping.group_count(); ++gi)
            report.samples_per_group.push_back({attribute, grouping.labels[gi], totals[gi]});
    }
    return report;
}

}  // namespace fairaudit
