#include "atc/preprocess.hpp"

#include <algorithm>
#include <utility>

#include "atc/errors.hpp"
#include "atc/unicode.hpp"
#include "util.hpp"

namespace atc {

namespace {

#include "stopwords_data.inc"

// Hamza-carrier alef family folded to bare alef.
bool is_hamza_alef_form(char32_t cp) {
    return cp == 0x0621 ||                    // standalone hamza
           (cp >= 0x0622 && cp <= 0x0626);    // alef madda/hamza forms, waw/ya carriers
}

constexpr char32_t kAlef = 0x0627;
constexpr char32_t kTaMarbuta = 0x0629;
constexpr char32_t kHa = 0x0647;

bool is_token_cp(char32_t cp) {
    return uni::is_letter(cp) || uni::is_number(cp) || uni::is_mark(cp);
}

std::vector<std::string> parse_word_lines(const std::string& text) {
    std::vector<std::string> words;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line(text.data() + pos,
                              (eol == std::string::npos ? text.size() : eol) - pos);
        pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (line.empty() || line.front() == '#') continue;
        words.emplace_back(line);
    }
    return words;
}

}  // namespace

const StopWordList& StopWordList::builtin() {
    static const StopWordList list = [] {
        std::vector<std::string> words(std::begin(kBuiltinStopWords), std::end(kBuiltinStopWords));
        return from_words(words, "builtin");
    }();
    return list;
}

StopWordList StopWordList::from_file(const std::filesystem::path& path) {
    std::string text =
        detail::decode_utf8_text(detail::read_file_bytes(path), path.string());
    return from_words(parse_word_lines(text), path.string());
}

StopWordList StopWordList::from_words(const std::vector<std::string>& words, std::string source) {
    StopWordList list;
    list.source_ = std::move(source);
    for (const auto& w : words) {
        std::string n = normalize_token(w);
        if (!n.empty()) list.words_.insert(std::move(n));
    }
    std::uint64_t h = detail::fnv1a("stopwords\n");
    for (const auto& w : list.sorted_words()) {
        h = detail::fnv1a(w, h);
        h = detail::fnv1a("\n", h);
    }
    list.digest_ = detail::hex16(h);
    return list;
}

bool StopWordList::contains(std::string_view normalized_token) const {
    return words_.find(normalized_token) != words_.end();
}

std::vector<std::string> StopWordList::sorted_words() const {
    std::vector<std::string> out(words_.begin(), words_.end());
    std::sort(out.begin(), out.end());
    return out;
}

const StemmerConfig& StemmerConfig::builtin() {
    static const StemmerConfig cfg = [] {
        StemmerConfig c;
        c.prefixes = {"وال", "بال", "كال", "فال", "لل", "ال", "و", "ف", "ب", "ك", "ل"};
        // "ية" collapses onto "يه" under normalization in canonicalize().
        c.suffixes = {"ها", "ان", "ات", "ون", "ين", "يه", "ية", "ه", "ي", "ا"};
        c.min_stem_len = 2;
        c.canonicalize();
        return c;
    }();
    return cfg;
}

StemmerConfig StemmerConfig::from_file(const std::filesystem::path& path) {
    std::string text =
        detail::decode_utf8_text(detail::read_file_bytes(path), path.string());
    StemmerConfig cfg;
    std::vector<std::string>* section = nullptr;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, (eol == std::string::npos ? text.size() : eol) - pos);
        pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.erase(0, 1);
        if (line.empty() || line.front() == '#') continue;
        if (line == "[prefixes]") {
            section = &cfg.prefixes;
        } else if (line == "[suffixes]") {
            section = &cfg.suffixes;
        } else if (line.front() == '[') {
            throw FormatError(line_no, "unknown section '" + line + "'");
        } else if (section == nullptr) {
            throw FormatError(line_no, "affix '" + line + "' outside [prefixes]/[suffixes]");
        } else {
            section->push_back(line);
        }
    }
    cfg.canonicalize();
    if (cfg.prefixes.empty()) throw FormatError(line_no, "no prefixes given");
    if (cfg.suffixes.empty()) throw FormatError(line_no, "no suffixes given");
    return cfg;
}

void StemmerConfig::canonicalize() {
    if (min_stem_len < 2) throw Error("min_stem_len must be at least 2");
    auto clean = [](std::vector<std::string>& list) {
        std::vector<std::string> out;
        for (const auto& a : list) {
            std::string n = normalize_token(a);
            if (n.empty()) continue;
            if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
        }
        std::stable_sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
            return uni::cp_count(a) > uni::cp_count(b);
        });
        list = std::move(out);
    };
    clean(prefixes);
    clean(suffixes);
}

std::string StemmerConfig::digest() const {
    std::uint64_t h = detail::fnv1a("stemmer\n");
    h = detail::fnv1a("prefixes\n", h);
    for (const auto& a : prefixes) {
        h = detail::fnv1a(a, h);
        h = detail::fnv1a("\n", h);
    }
    h = detail::fnv1a("suffixes\n", h);
    for (const auto& a : suffixes) {
        h = detail::fnv1a(a, h);
        h = detail::fnv1a("\n", h);
    }
    h = detail::fnv1a("min " + std::to_string(min_stem_len), h);
    return detail::hex16(h);
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = uni::decode_at(text, i);
        if (is_token_cp(cp)) {
            uni::append_utf8(current, cp);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::string normalize_token(std::string_view token) {
    std::string out;
    out.reserve(token.size());
    std::size_t i = 0;
    while (i < token.size()) {
        char32_t cp = uni::decode_at(token, i);
        if (cp == uni::kTatweel || uni::is_arabic_diacritic(cp)) continue;
        if (is_hamza_alef_form(cp)) {
            uni::append_utf8(out, kAlef);
        } else if (cp == kTaMarbuta) {
            uni::append_utf8(out, kHa);
        } else {
            uni::append_utf8(out, uni::to_lower(cp));
        }
    }
    return out;
}

std::optional<std::string> filter_token(std::string_view token, const StopWordList& stops) {
    if (token.empty()) return std::nullopt;
    std::size_t cps = 0;
    bool has_letter = false;
    std::size_t i = 0;
    while (i < token.size()) {
        char32_t cp = uni::decode_at(token, i);
        ++cps;
        if (uni::is_number(cp)) return std::nullopt;
        if (uni::is_letter(cp)) has_letter = true;
    }
    if (cps < 2 || !has_letter) return std::nullopt;
    if (stops.contains(token)) return std::nullopt;
    return std::string(token);
}

std::string stem(std::string_view token, const StemmerConfig& cfg) {
    std::string_view rest = token;
    std::size_t rest_cps = uni::cp_count(rest);

    for (const auto& p : cfg.prefixes) {
        if (rest.size() <= p.size() || rest.substr(0, p.size()) != p) continue;
        std::size_t affix_cps = uni::cp_count(p);
        if (rest_cps - affix_cps < cfg.min_stem_len) continue;
        rest.remove_prefix(p.size());
        rest_cps -= affix_cps;
        break;
    }
    for (const auto& s : cfg.suffixes) {
        if (rest.size() <= s.size() || rest.substr(rest.size() - s.size()) != s) continue;
        std::size_t affix_cps = uni::cp_count(s);
        if (rest_cps - affix_cps < cfg.min_stem_len) continue;
        rest.remove_suffix(s.size());
        break;
    }
    return std::string(rest);
}

Bag preprocess_text(std::string_view text, const StopWordList& stops, const StemmerConfig& cfg) {
    Bag bag;
    for (const auto& raw : tokenize(text)) {
        std::string normalized = normalize_token(raw);
        auto kept = filter_token(normalized, stops);
        if (!kept) continue;
        std::string stemmed = stem(*kept, cfg);
        if (stops.contains(stemmed)) continue;
        ++bag[std::move(stemmed)];
    }
    return bag;
}

}  // namespace atc
