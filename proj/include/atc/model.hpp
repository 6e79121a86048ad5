#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atc/preprocess.hpp"
#include "atc/weighting.hpp"

namespace atc {

/// A category's keyword table. Weights are scaled so the strongest keyword
/// has weight exactly 1.0; all weights are in (0, 1].
struct CategoryProfile {
    std::string name;
    std::map<std::string, double> keywords;
    std::int64_t doc_count = 0;
};

struct ModelConfig {
    std::int64_t profile_size = 50;
    LogBase log_base = LogBase::base10;
    std::string stopword_digest;
    std::string stemmer_digest;
};

/// Trained artifact: pooled vocabulary, per-category keyword profiles
/// (ascending by name) and the preprocessing fingerprints that classify
/// runs are checked against.
struct CategoryModel {
    Vocabulary vocab;
    std::vector<CategoryProfile> profiles;
    ModelConfig config;

    const CategoryProfile* find_profile(std::string_view name) const;
};

struct TrainingSet {
    /// (category name, document); every category needs at least one entry.
    std::vector<std::pair<std::string, RawDocument>> docs;
};

/// Preprocesses every document, builds one vocabulary over the pooled
/// corpus and one profile per category. Deterministic: identical training
/// sets give byte-identical serialized models regardless of document order.
/// Throws EmptyCorpusError / EmptyCategoryError.
CategoryModel train(const TrainingSet& ts, const StopWordList& stops, const StemmerConfig& cfg,
                    std::int64_t profile_size = 50, LogBase base = LogBase::base10);

/// Aggregates tf * idf per word over the category's bags, keeps the
/// profile_size largest and scales by the maximum. Throws
/// EmptyCategoryError when no word has a positive aggregate.
CategoryProfile build_profile(std::string name, std::span<const Bag> bags,
                              const Vocabulary& vocab, std::int64_t profile_size,
                              LogBase base = LogBase::base10);

/// Canonical line-oriented text form (the exact bytes save_model writes).
std::string serialize_model(const CategoryModel& m);

/// Parses serialize_model output. Throws FormatError(line) / VersionError.
CategoryModel parse_model(std::string_view text);

void save_model(const CategoryModel& m, const std::filesystem::path& path);
CategoryModel load_model(const std::filesystem::path& path);

}  // namespace atc
