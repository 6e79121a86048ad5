#include "atc/classify.hpp"

#include "atc/errors.hpp"

namespace atc {

KeywordSet select_keywords(const std::vector<WeightedTerm>& weighted) {
    KeywordSet ks;
    for (const auto& term : weighted) {
        if (term.unseen || term.weight <= 0.0) continue;
        ks.keywords.push_back(term);
        if (ks.keywords.size() == 2) break;
    }
    if (ks.keywords.empty()) throw NoKeywordsError();
    ks.degraded = ks.keywords.size() < 2;
    return ks;
}

double match_percentage(const KeywordSet& ks, const CategoryProfile& profile) {
    double sum = 0.0;
    for (const auto& term : ks.keywords) {
        auto it = profile.keywords.find(term.word);
        if (it != profile.keywords.end()) sum += it->second;
    }
    return 100.0 * sum / static_cast<double>(ks.keywords.size());
}

ClassificationResult classify_document(const RawDocument& doc, const CategoryModel& m,
                                       const StopWordList& stops, const StemmerConfig& cfg) {
    if (stops.digest() != m.config.stopword_digest)
        throw ConfigMismatchError("stop word list differs from the one the model was trained with"
                                  " (model " + m.config.stopword_digest + ", current " +
                                  stops.digest() + ")");
    if (cfg.digest() != m.config.stemmer_digest)
        throw ConfigMismatchError("stemmer config differs from the one the model was trained with"
                                  " (model " + m.config.stemmer_digest + ", current " +
                                  cfg.digest() + ")");

    Bag bag = preprocess_document(doc, stops, cfg);
    std::vector<WeightedTerm> weighted = weigh_document(bag, m.vocab, m.config.log_base);

    ClassificationResult result;
    result.doc_id = doc.id;
    try {
        result.keywords = select_keywords(weighted);
    } catch (const NoKeywordsError&) {
        throw UnclassifiableError(doc.id);
    }
    result.degraded = result.keywords.degraded;

    result.scores.reserve(m.profiles.size());
    for (const auto& profile : m.profiles)
        result.scores.emplace_back(profile.name, match_percentage(result.keywords, profile));

    // Highest score wins; ties go to the lexicographically smallest name,
    // which is the first one in ascending profile order.
    const std::pair<std::string, double>* best = nullptr;
    for (const auto& entry : result.scores)
        if (best == nullptr || entry.second > best->second) best = &entry;
    result.best = best->first;
    return result;
}

}  // namespace atc
