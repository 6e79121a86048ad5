#include "atc/weighting.hpp"

#include <algorithm>
#include <cmath>

#include "atc/errors.hpp"

namespace atc {

std::string_view log_base_name(LogBase base) {
    return base == LogBase::base10 ? "10" : "e";
}

LogBase log_base_from_name(std::string_view name) {
    if (name == "10") return LogBase::base10;
    if (name == "e") return LogBase::natural;
    throw Error("unknown log base '" + std::string(name) + "' (expected '10' or 'e')");
}

Vocabulary build_vocabulary(const std::vector<Bag>& bags) {
    if (bags.empty()) throw EmptyCorpusError();
    Vocabulary vocab;
    vocab.doc_count = static_cast<std::int64_t>(bags.size());
    for (const auto& bag : bags) {
        for (const auto& [word, tf] : bag) {
            (void)tf;
            ++vocab.df[word];
        }
    }
    return vocab;
}

double idf(const Vocabulary& vocab, std::string_view word, LogBase base) {
    std::int64_t df = vocab.df_of(word);
    if (df == 0) throw UnseenTermError(std::string(word));
    if (df == vocab.doc_count) return 0.0;
    double ratio = static_cast<double>(vocab.doc_count) / static_cast<double>(df);
    return base == LogBase::base10 ? std::log10(ratio) : std::log(ratio);
}

std::vector<WeightedTerm> weigh_document(const Bag& bag, const Vocabulary& vocab, LogBase base) {
    std::vector<WeightedTerm> terms;
    terms.reserve(bag.size());
    for (const auto& [word, tf] : bag) {
        WeightedTerm t;
        t.word = word;
        t.tf = tf;
        if (vocab.df_of(word) == 0) {
            t.unseen = true;
        } else {
            t.weight = static_cast<double>(tf) * idf(vocab, word, base);
        }
        terms.push_back(std::move(t));
    }
    std::sort(terms.begin(), terms.end(), [](const WeightedTerm& a, const WeightedTerm& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.word < b.word;
    });
    return terms;
}

}  // namespace atc
