#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "atc/errors.hpp"
#include "atc/preprocess.hpp"
#include "atc/unicode.hpp"
#include "testutil.hpp"

using namespace atc;
using atctest::Rng;
using atctest::TempDir;
using atctest::write_file;

namespace {

std::string random_unicode_string(Rng& rng, std::size_t max_len) {
    std::string s;
    std::size_t len = rng.below(max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
        char32_t cp;
        switch (rng.below(4)) {
            case 0: cp = static_cast<char32_t>(0x20 + rng.below(0x60)); break;       // ASCII
            case 1: cp = static_cast<char32_t>(0x0600 + rng.below(0x100)); break;    // Arabic
            case 2: cp = static_cast<char32_t>(0xC0 + rng.below(0x300)); break;      // Latin/Greek
            default: cp = static_cast<char32_t>(rng.below(0x110000)); break;
        }
        if (cp >= 0xD800 && cp <= 0xDFFF) cp = 0xFFFD;
        uni::append_utf8(s, cp);
    }
    return s;
}

}  // namespace

TEST_CASE("tokenize splits on separators") {
    CHECK(tokenize("") == std::vector<std::string>{});
    CHECK(tokenize("في السوق، اليوم") == std::vector<std::string>{"في", "السوق", "اليوم"});
    CHECK(tokenize("abc-123 x") == std::vector<std::string>{"abc", "123", "x"});
    CHECK(tokenize("  \t\n") == std::vector<std::string>{});
    CHECK(tokenize("a.b,c") == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("normalize_token folds variants") {
    CHECK(normalize_token("إسلام") == "اسلام");
    CHECK(normalize_token("أحمد") == "احمد");
    CHECK(normalize_token("آت") == "ات");
    CHECK(normalize_token("مدرسة") == "مدرسه");
    CHECK(normalize_token("مؤمن") == "مامن");
    CHECK(normalize_token("ABC") == "abc");
    CHECK(normalize_token("كتاب") == "كتاب");
    // tashkeel and tatweel are stripped
    CHECK(normalize_token("كِتَابٌ") == "كتاب");
    CHECK(normalize_token("كتـــاب") == "كتاب");
}

TEST_CASE("normalize_token is idempotent on random input") {
    Rng rng(0x5eed501);
    for (int i = 0; i < 2000; ++i) {
        std::string s = random_unicode_string(rng, 24);
        std::string once = normalize_token(s);
        CHECK(normalize_token(once) == once);
    }
}

TEST_CASE("filter_token drops stops, short, digit and letterless tokens") {
    const auto& stops = StopWordList::builtin();
    CHECK(!filter_token("في", stops).has_value());
    CHECK(!filter_token("ب", stops).has_value());
    CHECK(filter_token("سوق", stops) == "سوق");
    CHECK(!filter_token("", stops).has_value());
    CHECK(!filter_token("42", stops).has_value());
    CHECK(!filter_token("ab3", stops).has_value());   // digit anywhere disqualifies
    CHECK(!filter_token("١٢", stops).has_value());    // Arabic-Indic digits too
}

TEST_CASE("stem removes one prefix and one suffix, longest first") {
    const auto& cfg = StemmerConfig::builtin();
    CHECK(stem("والمدرسه", cfg) == "مدرس");
    CHECK(stem("لل", cfg) == "لل");
    CHECK(stem("سوق", cfg) == "سوق");
    // longest prefix would leave too little, a shorter one applies
    CHECK(stem("والد", cfg) == "الد");
    CHECK(stem("اللاعبون", cfg) == "لاعب");
    CHECK(stem("abc", cfg) == "abc");
}

TEST_CASE("stem never empties a token") {
    const auto& cfg = StemmerConfig::builtin();
    Rng rng(0x5eed502);
    for (int i = 0; i < 2000; ++i) {
        std::string token = normalize_token(random_unicode_string(rng, 12));
        if (token.empty()) continue;
        std::string s = stem(token, cfg);
        CHECK(!s.empty());
        CHECK(s.size() <= token.size());
        CHECK((uni::cp_count(s) >= cfg.min_stem_len || s == token));
    }
}

TEST_CASE("preprocess_text counts surviving stems") {
    const auto& stops = StopWordList::builtin();
    const auto& cfg = StemmerConfig::builtin();
    CHECK(preprocess_text("في في في", stops, cfg).empty());
    CHECK(preprocess_text("سوق سوق عمل", stops, cfg) == Bag{{"سوق", 2}, {"عمل", 1}});
    StopWordList none = StopWordList::from_words({});
    CHECK(preprocess_text("abc abc", none, cfg) == Bag{{"abc", 2}});
}

TEST_CASE("stems that land on stop words are dropped") {
    const auto& stops = StopWordList::builtin();
    const auto& cfg = StemmerConfig::builtin();
    // "قالها" stems to "قال", which is a stop word
    REQUIRE(stops.contains("قال"));
    CHECK(stem("قالها", cfg) == "قال");
    CHECK(preprocess_text("قالها", stops, cfg).empty());
}

TEST_CASE("preprocess output keys are clean") {
    const auto& stops = StopWordList::builtin();
    const auto& cfg = StemmerConfig::builtin();
    Rng rng(0x5eed503);
    for (int i = 0; i < 500; ++i) {
        std::string text = random_unicode_string(rng, 60);
        for (const auto& [word, tf] : preprocess_text(text, stops, cfg)) {
            CHECK(tf > 0);
            CHECK(uni::cp_count(word) >= 2);
            CHECK(normalize_token(word) == word);
            CHECK(!stops.contains(word));
            std::size_t pos = 0;
            bool has_letter = false;
            while (pos < word.size()) {
                char32_t cp = uni::decode_at(word, pos);
                CHECK(!uni::is_number(cp));
                CHECK(!uni::is_arabic_diacritic(cp));
                CHECK(cp != uni::kTatweel);
                if (uni::is_letter(cp)) has_letter = true;
            }
            CHECK(has_letter);
        }
    }
}

TEST_CASE("preprocess is order-invariant and additive") {
    const auto& stops = StopWordList::builtin();
    const auto& cfg = StemmerConfig::builtin();
    Rng rng(0x5eed504);
    for (int i = 0; i < 100; ++i) {
        std::size_t n1 = 3 + rng.below(10), n2 = 3 + rng.below(10);
        std::vector<std::string> words;
        for (std::size_t k = 0; k < n1 + n2; ++k)
            words.push_back(atctest::make_word(rng.below(30)));
        std::string t1, t2;
        for (std::size_t k = 0; k < n1; ++k) t1 += (k ? " " : "") + words[k];
        for (std::size_t k = n1; k < n1 + n2; ++k) t2 += (k > n1 ? " " : "") + words[k];

        // additivity
        Bag sum = preprocess_text(t1, stops, cfg);
        for (const auto& [w, c] : preprocess_text(t2, stops, cfg)) sum[w] += c;
        CHECK(preprocess_text(t1 + " " + t2, stops, cfg) == sum);

        // order invariance
        std::vector<std::string> shuffled = words;
        for (std::size_t k = shuffled.size(); k > 1; --k)
            std::swap(shuffled[k - 1], shuffled[rng.below(k)]);
        std::string joined, joined_shuffled;
        for (const auto& w : words) joined += (joined.empty() ? "" : " ") + w;
        for (const auto& w : shuffled)
            joined_shuffled += (joined_shuffled.empty() ? "" : " ") + w;
        CHECK(preprocess_text(joined, stops, cfg) ==
              preprocess_text(joined_shuffled, stops, cfg));
    }
}

TEST_CASE("builtin stop list has 162 normalization-fixed entries") {
    const auto& stops = StopWordList::builtin();
    CHECK(stops.size() == 162);
    CHECK(stops.source() == "builtin");
    for (const auto& w : stops.sorted_words()) CHECK(normalize_token(w) == w);
    CHECK(stops.contains("في"));
    CHECK(stops.contains("هذا"));
}

TEST_CASE("builtin stop list matches the shipped file") {
    StopWordList shipped =
        StopWordList::from_file(std::string(ATC_DATA_DIR) + "/stopwords_ar.txt");
    CHECK(shipped.size() == StopWordList::builtin().size());
    CHECK(shipped.digest() == StopWordList::builtin().digest());
}

TEST_CASE("stop word file loading normalizes, dedups and skips comments") {
    TempDir dir("stops");
    write_file(dir / "s.txt", "# comment\n\nمدرسة\nمدرسه\n  الكلمة  \n");
    StopWordList list = StopWordList::from_file((dir / "s.txt").string());
    CHECK(list.size() == 2);   // both ta-marbuta spellings collapse
    CHECK(list.contains("مدرسه"));
    CHECK(list.contains("الكلمه"));
    CHECK(!list.contains("مدرسة"));   // lookups are against normalized forms
}

TEST_CASE("stop list digest tracks content") {
    StopWordList a = StopWordList::from_words({"واحد", "اثنان"});
    StopWordList b = StopWordList::from_words({"اثنان", "واحد"});
    StopWordList c = StopWordList::from_words({"واحد"});
    CHECK(a.digest() == b.digest());   // order-insensitive
    CHECK(a.digest() != c.digest());
}

TEST_CASE("stemmer config file parsing") {
    TempDir dir("affix");
    write_file(dir / "a.txt", "[prefixes]\nال\nو\n[suffixes]\nها\nة\n");
    StemmerConfig cfg = StemmerConfig::from_file((dir / "a.txt").string());
    CHECK(cfg.prefixes == std::vector<std::string>{"ال", "و"});
    // "ة" normalizes to "ه"
    CHECK(cfg.suffixes == std::vector<std::string>{"ها", "ه"});
    CHECK(cfg.min_stem_len == 2);

    write_file(dir / "bad1.txt", "[roots]\nال\n");
    CHECK_THROWS_AS(StemmerConfig::from_file((dir / "bad1.txt").string()), FormatError);
    write_file(dir / "bad2.txt", "ال\n[prefixes]\n");
    CHECK_THROWS_AS(StemmerConfig::from_file((dir / "bad2.txt").string()), FormatError);
    write_file(dir / "bad3.txt", "[prefixes]\nال\n[suffixes]\n");
    CHECK_THROWS_AS(StemmerConfig::from_file((dir / "bad3.txt").string()), FormatError);
}

TEST_CASE("builtin stemmer config is sorted longest-first") {
    const auto& cfg = StemmerConfig::builtin();
    REQUIRE(!cfg.prefixes.empty());
    REQUIRE(!cfg.suffixes.empty());
    CHECK(cfg.min_stem_len == 2);
    for (const auto* list : {&cfg.prefixes, &cfg.suffixes})
        for (std::size_t i = 1; i < list->size(); ++i)
            CHECK(uni::cp_count((*list)[i - 1]) >= uni::cp_count((*list)[i]));
}

TEST_CASE("utf8 validation pinpoints the first bad byte") {
    CHECK(!uni::find_invalid_utf8("abc كتاب").has_value());
    CHECK(uni::find_invalid_utf8(std::string("ab\xFF") + "cd") == 2);
    CHECK(uni::find_invalid_utf8("\xC0\x80") == 0);            // overlong
    CHECK(uni::find_invalid_utf8("\xED\xA0\x80") == 0);        // surrogate
    CHECK(uni::find_invalid_utf8("ok\xE2\x82") == 2);          // truncated
}
