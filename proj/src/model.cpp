#include "atc/model.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <system_error>

#include "atc/errors.hpp"
#include "util.hpp"

namespace atc {

namespace {

std::string double_to_string(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

bool parse_int64(std::string_view s, std::int64_t& out) {
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && end == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && end == s.data() + s.size();
}

bool is_hex16(std::string_view s) {
    if (s.size() != 16) return false;
    return s.find_first_not_of("0123456789abcdef") == std::string_view::npos;
}

// Line reader that tracks 1-based line numbers over a text blob.
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    bool next(std::string_view& line) {
        if (pos_ > text_.size()) return false;
        std::size_t eol = text_.find('\n', pos_);
        if (eol == std::string_view::npos) {
            line = text_.substr(pos_);
            pos_ = text_.size() + 1;
            if (line.empty()) return false;   // no trailing fragment
        } else {
            line = text_.substr(pos_, eol - pos_);
            pos_ = eol + 1;
        }
        ++line_no_;
        return true;
    }

    std::size_t line_no() const { return line_no_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
};

}  // namespace

const CategoryProfile* CategoryModel::find_profile(std::string_view name) const {
    auto it = std::lower_bound(profiles.begin(), profiles.end(), name,
                               [](const CategoryProfile& p, std::string_view v) {
                                   return p.name < v;
                               });
    if (it == profiles.end() || it->name != name) return nullptr;
    return &*it;
}

CategoryModel train(const TrainingSet& ts, const StopWordList& stops, const StemmerConfig& cfg,
                    std::int64_t profile_size, LogBase base) {
    if (ts.docs.empty()) throw EmptyCorpusError();
    if (profile_size < 1) throw Error("profile_size must be at least 1");

    std::map<std::string, std::vector<Bag>> by_category;
    std::vector<Bag> pooled;
    pooled.reserve(ts.docs.size());
    for (const auto& [category, doc] : ts.docs) {
        if (category.empty()) throw Error("empty category name in training set");
        if (category.find('\n') != std::string::npos)
            throw Error("category name must not contain a newline: '" + category + "'");
        Bag bag = preprocess_document(doc, stops, cfg);
        by_category[category].push_back(bag);
        pooled.push_back(std::move(bag));
    }

    CategoryModel m;
    m.vocab = build_vocabulary(pooled);
    m.config.profile_size = profile_size;
    m.config.log_base = base;
    m.config.stopword_digest = stops.digest();
    m.config.stemmer_digest = cfg.digest();
    for (const auto& [name, bags] : by_category)
        m.profiles.push_back(build_profile(name, bags, m.vocab, profile_size, base));
    return m;
}

CategoryProfile build_profile(std::string name, std::span<const Bag> bags,
                              const Vocabulary& vocab, std::int64_t profile_size, LogBase base) {
    // Summing integer tf first keeps the aggregate independent of bag
    // order; a floating-point sum over bags would leak the order into the
    // serialized weights.
    std::map<std::string, std::int64_t> total_tf;
    for (const auto& bag : bags)
        for (const auto& [word, tf] : bag) total_tf[word] += tf;

    std::vector<std::pair<std::string, double>> aggregates;
    for (const auto& [word, tf] : total_tf) {
        std::int64_t df = vocab.df_of(word);
        if (df == 0 || df == vocab.doc_count) continue;   // unseen or zero idf
        aggregates.emplace_back(word, static_cast<double>(tf) * idf(vocab, word, base));
    }
    if (aggregates.empty()) throw EmptyCategoryError(name);

    std::sort(aggregates.begin(), aggregates.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
              });
    if (std::cmp_greater(aggregates.size(), profile_size))
        aggregates.resize(static_cast<std::size_t>(profile_size));

    CategoryProfile profile;
    profile.name = std::move(name);
    profile.doc_count = static_cast<std::int64_t>(bags.size());
    const double max_aggregate = aggregates.front().second;
    for (auto& [word, agg] : aggregates)
        profile.keywords.emplace(std::move(word), agg / max_aggregate);
    return profile;
}

std::string serialize_model(const CategoryModel& m) {
    std::string out;
    out += "ATCM 1\n";
    out += "config " + std::to_string(m.config.profile_size) + " ";
    out += std::string(log_base_name(m.config.log_base)) + " ";
    out += m.config.stopword_digest + " " + m.config.stemmer_digest + "\n";
    out += "n " + std::to_string(m.vocab.doc_count) + "\n";
    for (const auto& [word, df] : m.vocab.df)
        out += "df " + word + " " + std::to_string(df) + "\n";
    for (const auto& profile : m.profiles) {
        out += "category " + profile.name + " " + std::to_string(profile.doc_count) + "\n";
        for (const auto& [word, weight] : profile.keywords)
            out += "kw " + word + " " + double_to_string(weight) + "\n";
        out += "end\n";
    }
    return out;
}

CategoryModel parse_model(std::string_view text) {
    LineReader reader(text);
    std::string_view line;

    auto fail = [&](const std::string& what) -> FormatError {
        return FormatError(reader.line_no(), what);
    };

    if (!reader.next(line)) throw FormatError(1, "empty file, expected 'ATCM 1' header");
    if (!line.starts_with("ATCM ")) throw fail("expected 'ATCM <version>' header");
    std::int64_t version = 0;
    if (!parse_int64(line.substr(5), version)) throw fail("malformed version number");
    if (version != 1)
        throw VersionError("unsupported model format version " + std::to_string(version));

    CategoryModel m;
    if (!reader.next(line)) throw FormatError(2, "missing config line");
    {
        if (!line.starts_with("config ")) throw fail("expected 'config' line");
        std::string_view rest = line.substr(7);
        std::vector<std::string_view> fields;
        while (!rest.empty()) {
            std::size_t sp = rest.find(' ');
            fields.push_back(rest.substr(0, sp));
            rest = (sp == std::string_view::npos) ? std::string_view{} : rest.substr(sp + 1);
        }
        if (fields.size() != 4) throw fail("config needs 4 fields");
        if (!parse_int64(fields[0], m.config.profile_size) || m.config.profile_size < 1)
            throw fail("bad profile_size");
        if (fields[1] == "10") {
            m.config.log_base = LogBase::base10;
        } else if (fields[1] == "e") {
            m.config.log_base = LogBase::natural;
        } else {
            throw fail("bad log base (expected '10' or 'e')");
        }
        if (!is_hex16(fields[2]) || !is_hex16(fields[3])) throw fail("bad digest");
        m.config.stopword_digest = std::string(fields[2]);
        m.config.stemmer_digest = std::string(fields[3]);
    }

    if (!reader.next(line)) throw FormatError(3, "missing 'n' line");
    if (!line.starts_with("n ") || !parse_int64(line.substr(2), m.vocab.doc_count) ||
        m.vocab.doc_count < 1)
        throw fail("expected 'n <count>' with count >= 1");

    bool have_line = reader.next(line);
    while (have_line && line.starts_with("df ")) {
        std::string_view rest = line.substr(3);
        std::size_t sp = rest.find(' ');
        if (sp == std::string_view::npos || sp == 0) throw fail("expected 'df <word> <count>'");
        std::string word(rest.substr(0, sp));
        std::int64_t count = 0;
        if (!parse_int64(rest.substr(sp + 1), count) || count < 1 || count > m.vocab.doc_count)
            throw fail("df count out of range for '" + word + "'");
        if (!m.vocab.df.emplace(std::move(word), count).second)
            throw fail("duplicate df entry");
        have_line = reader.next(line);
    }

    while (have_line) {
        if (!line.starts_with("category ")) throw fail("expected 'category' line");
        std::string_view rest = line.substr(9);
        std::size_t sp = rest.rfind(' ');
        if (sp == std::string_view::npos || sp == 0) throw fail("expected 'category <name> <doc_count>'");
        CategoryProfile profile;
        profile.name = std::string(rest.substr(0, sp));
        if (!parse_int64(rest.substr(sp + 1), profile.doc_count) || profile.doc_count < 1)
            throw fail("bad doc_count for category '" + profile.name + "'");
        if (std::any_of(m.profiles.begin(), m.profiles.end(),
                        [&](const CategoryProfile& p) { return p.name == profile.name; }))
            throw fail("duplicate category '" + profile.name + "'");

        bool closed = false;
        double max_weight = 0.0;
        while ((have_line = reader.next(line))) {
            if (line == "end") {
                closed = true;
                break;
            }
            if (!line.starts_with("kw ")) throw fail("expected 'kw' or 'end'");
            std::string_view kw = line.substr(3);
            std::size_t wsp = kw.find(' ');
            if (wsp == std::string_view::npos || wsp == 0) throw fail("expected 'kw <word> <weight>'");
            std::string word(kw.substr(0, wsp));
            double weight = 0.0;
            if (!parse_double(kw.substr(wsp + 1), weight) || !(weight > 0.0) || weight > 1.0)
                throw fail("keyword weight out of (0, 1] for '" + word + "'");
            max_weight = std::max(max_weight, weight);
            if (!profile.keywords.emplace(std::move(word), weight).second)
                throw fail("duplicate keyword");
        }
        if (!closed) throw fail("category '" + profile.name + "' not terminated by 'end'");
        if (std::cmp_greater(profile.keywords.size(), m.config.profile_size))
            throw fail("profile larger than profile_size");
        if (!profile.keywords.empty() && max_weight != 1.0)
            throw fail("profile '" + profile.name + "' maximum weight must be exactly 1");
        m.profiles.push_back(std::move(profile));
        have_line = reader.next(line);
    }
    if (m.profiles.empty())
        throw FormatError(reader.line_no(), "model has no categories");
    std::sort(m.profiles.begin(), m.profiles.end(),
              [](const CategoryProfile& a, const CategoryProfile& b) { return a.name < b.name; });
    return m;
}

void save_model(const CategoryModel& m, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    std::string text = serialize_model(m);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

CategoryModel load_model(const std::filesystem::path& path) {
    std::string bytes = detail::read_file_bytes(path);
    return parse_model(bytes);
}

}  // namespace atc
