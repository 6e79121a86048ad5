#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace atc {

struct RawDocument {
    std::string id;
    std::string text;
};

/// Term-frequency bag: normalized stemmed word -> occurrence count.
using Bag = std::map<std::string, std::int64_t>;

/// Immutable stop word set. Entries are normalized at construction so
/// membership is checked against normalized tokens.
class StopWordList {
public:
    /// The compiled-in 162-word Arabic list (same content as
    /// data/stopwords_ar.txt).
    static const StopWordList& builtin();

    /// Loads a UTF-8 word-per-line file. '#' lines and blank lines are
    /// ignored. Throws IoError / EncodingError.
    static StopWordList from_file(const std::filesystem::path& path);

    static StopWordList from_words(const std::vector<std::string>& words,
                                   std::string source = "memory");

    bool contains(std::string_view normalized_token) const;
    std::size_t size() const { return words_.size(); }
    const std::string& source() const { return source_; }

    /// Entries in ascending code-point order.
    std::vector<std::string> sorted_words() const;

    /// Stable 16-hex-digit fingerprint of the entry set.
    const std::string& digest() const { return digest_; }

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };
    std::unordered_set<std::string, Hash, std::equal_to<>> words_;
    std::string source_;
    std::string digest_;
};

/// Light-stemmer affix lists, longest first; at most one prefix and one
/// suffix are removed and only when the remainder keeps at least
/// min_stem_len code points.
struct StemmerConfig {
    std::vector<std::string> prefixes;
    std::vector<std::string> suffixes;
    std::size_t min_stem_len = 2;

    static const StemmerConfig& builtin();

    /// Loads a UTF-8 file with "[prefixes]" / "[suffixes]" sections, one
    /// affix per line. Throws IoError / EncodingError / FormatError.
    static StemmerConfig from_file(const std::filesystem::path& path);

    /// Normalizes entries, drops duplicates and sorts longest-first.
    void canonicalize();

    std::string digest() const;
};

/// Splits on every code point that is not a letter, digit or combining
/// mark. Empty input gives an empty list.
std::vector<std::string> tokenize(std::string_view text);

/// Strips Arabic diacritics and tatweel, folds hamza-carrier alef forms to
/// bare alef and ta marbuta to ha, lowercases cased letters. Idempotent.
std::string normalize_token(std::string_view token);

/// Returns the token unchanged, or nullopt for tokens that are empty,
/// shorter than 2 code points, contain a digit, contain no letter, or are
/// stop words. Expects normalized input.
std::optional<std::string> filter_token(std::string_view token, const StopWordList& stops);

std::string stem(std::string_view token, const StemmerConfig& cfg);

/// tokenize -> normalize -> filter -> stem -> count. Stemmed forms that
/// land on a stop word are dropped as well, so the output never contains
/// stop list entries. An empty bag is a legal result.
Bag preprocess_text(std::string_view text, const StopWordList& stops, const StemmerConfig& cfg);

inline Bag preprocess_document(const RawDocument& doc, const StopWordList& stops,
                               const StemmerConfig& cfg) {
    return preprocess_text(doc.text, stops, cfg);
}

}  // namespace atc
