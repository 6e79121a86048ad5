#pragma once

#include <string>
#include <utility>
#include <vector>

#include "atc/model.hpp"
#include "atc/weighting.hpp"

namespace atc {

/// The one or two highest-weight terms of a document. degraded marks
/// results computed from a single keyword.
struct KeywordSet {
    std::vector<WeightedTerm> keywords;
    bool degraded = false;
};

/// Takes the top two positive-weight terms from a weigh_document result.
/// Throws NoKeywordsError when no candidate exists.
KeywordSet select_keywords(const std::vector<WeightedTerm>& weighted);

/// Mean profile weight of the keywords, scaled to [0, 100]. Keywords
/// absent from the profile contribute 0.
double match_percentage(const KeywordSet& ks, const CategoryProfile& profile);

struct ClassificationResult {
    std::string doc_id;
    KeywordSet keywords;
    std::vector<std::pair<std::string, double>> scores;   // category name asc
    std::string best;
    bool degraded = false;
};

/// Full pipeline against a trained model. Throws UnclassifiableError when
/// the document yields no keywords and ConfigMismatchError when the stop
/// list or stemmer config differs from the one the model was trained with.
ClassificationResult classify_document(const RawDocument& doc, const CategoryModel& m,
                                       const StopWordList& stops, const StemmerConfig& cfg);

}  // namespace atc
