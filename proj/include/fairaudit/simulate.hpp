#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "fairaudit/types.hpp"

namespace fairaudit {

/// Sample budget per subject when the spec leaves a subject unlisted.
inline constexpr std::uint64_t kDefaultSamplesPerSubject = 478;

struct PerfectModel {};

/// Predicted identity drawn uniformly over the full roster, true subject
/// included, so the expected per-class recall is 1/N.
struct UniformModel {};

/// Predicts the true identity with probability p, otherwise uniformly one of
/// the other N-1 identities.
struct AccuracyModel {
    double p = 1.0;
};

/// AccuracyModel with p looked up by the true subject's group under the
/// given attribute. The mapping must cover every group label exactly.
struct GroupAccuracyModel {
    std::string attribute;
    std::map<std::string, double> p_by_label;
};

using ClassifierModel = std::variant<PerfectModel, UniformModel, AccuracyModel, GroupAccuracyModel>;

/// Deterministic description of one synthetic classifier run. Identical
/// specs (seed included) produce byte-identical serialized logs.
struct SimSpec {
    Roster roster;
    std::map<std::string, std::uint64_t> samples_per_subject;  // unlisted -> default_samples
    std::uint64_t default_samples = kDefaultSamplesPerSubject;
    ClassifierModel model = PerfectModel{};
    std::uint64_t seed = 0;
};

/// Generates the synthetic log: subjects in sorted subject_id order, sample
/// indices sequential, one SplitMix64 substream per subject. Per-subject
/// generation may run on `threads` threads; assembly follows the sorted
/// order so the output is independent of scheduling.
std::vector<PredictionRecord> simulate(const SimSpec& spec, unsigned threads = 1);

/// The fixed 80-subject roster with gender counts 45/35, ethnicity counts
/// 60/3/17 and age-bin counts 31/26/10/13. Attribute values are dealt by
/// fixed stride permutations so the groups cross instead of coinciding;
/// ages cycle deterministically inside each bin.
Roster paper_roster();

}  // namespace fairaudit
