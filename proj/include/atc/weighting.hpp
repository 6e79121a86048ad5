#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "atc/preprocess.hpp"

namespace atc {

/// Training-corpus statistics: document count and per-word document
/// frequency. Immutable after build; words absent from df have df = 0.
struct Vocabulary {
    std::int64_t doc_count = 0;                  // n
    std::map<std::string, std::int64_t> df;

    std::int64_t df_of(std::string_view word) const {
        auto it = df.find(std::string(word));
        return it == df.end() ? 0 : it->second;
    }
};

enum class LogBase { base10, natural };

std::string_view log_base_name(LogBase base);    // "10" / "e"
LogBase log_base_from_name(std::string_view name);

/// Throws EmptyCorpusError on an empty list. The result is independent of
/// bag order.
Vocabulary build_vocabulary(const std::vector<Bag>& bags);

/// log(n / df(word)) in the given base; 0 when the word is in every
/// document. Throws UnseenTermError when df(word) = 0.
double idf(const Vocabulary& vocab, std::string_view word, LogBase base = LogBase::base10);

struct WeightedTerm {
    std::string word;
    std::int64_t tf = 0;
    double weight = 0.0;
    bool unseen = false;   // df = 0: no idf, barred from keyword selection
};

/// One term per bag entry, weight = tf * idf, sorted by (weight descending,
/// word ascending). Unseen words carry weight 0 and the unseen flag.
std::vector<WeightedTerm> weigh_document(const Bag& bag, const Vocabulary& vocab,
                                         LogBase base = LogBase::base10);

}  // namespace atc
