#include <doctest.h>

#include <string>

#include "atc/corpus_io.hpp"
#include "atc/errors.hpp"
#include "testutil.hpp"

using namespace atc;
using atctest::TempDir;
using atctest::write_file;

TEST_CASE("scan_corpus mirrors the directory layout deterministically") {
    TempDir dir("corpus");
    write_file(dir / "B" / "d2.txt", "two");
    write_file(dir / "A" / "d1.txt", "one");
    write_file(dir / "A" / "nested" / "d3.txt", "three");
    write_file(dir / "A" / ".hidden.txt", "ignored");
    write_file(dir.path() / "loose.txt", "not in a category");

    CorpusManifest manifest = scan_corpus(dir.path());
    REQUIRE(manifest.entries.size() == 3);
    CHECK(manifest.entries[0].first == "A");
    CHECK(manifest.doc_id(manifest.entries[0].second) == "A/d1.txt");
    CHECK(manifest.entries[1].first == "A");
    CHECK(manifest.doc_id(manifest.entries[1].second) == "A/nested/d3.txt");
    CHECK(manifest.entries[2].first == "B");
    CHECK(manifest.counts.at("A") == 2);
    CHECK(manifest.counts.at("B") == 1);

    CorpusManifest again = scan_corpus(dir.path());
    CHECK(again.entries == manifest.entries);
}

TEST_CASE("single category single file") {
    TempDir dir("corpus1");
    write_file(dir / "A" / "d1.txt", "text");
    CorpusManifest manifest = scan_corpus(dir.path());
    REQUIRE(manifest.entries.size() == 1);
    CHECK(manifest.entries[0].first == "A");
    CHECK(manifest.doc_id(manifest.entries[0].second) == "A/d1.txt");
}

TEST_CASE("empty category directories are reported with zero counts") {
    TempDir dir("corpus_empty_cat");
    write_file(dir / "full" / "d.txt", "text");
    std::filesystem::create_directories(dir / "hollow");
    CorpusManifest manifest = scan_corpus(dir.path());
    CHECK(manifest.counts.at("hollow") == 0);
    CHECK(manifest.entries.size() == 1);
}

TEST_CASE("scan_corpus errors") {
    TempDir dir("corpus_err");
    CHECK_THROWS_AS(scan_corpus(dir.path()), EmptyCorpusError);           // no categories
    std::filesystem::create_directories(dir / "empty1");
    CHECK_THROWS_AS(scan_corpus(dir.path()), EmptyCorpusError);           // no files
    CHECK_THROWS_AS(scan_corpus(dir.path() / "missing"), IoError);
    write_file(dir.path() / "file.txt", "x");
    CHECK_THROWS_AS(scan_corpus(dir.path() / "file.txt"), IoError);       // root must be a dir
}

TEST_CASE("read_document returns relative ids and strips the BOM") {
    TempDir dir("readdoc");
    write_file(dir / "A" / "d1.txt", "\xEF\xBB\xBFكتاب");
    RawDocument doc = read_document(dir / "A" / "d1.txt", dir.path());
    CHECK(doc.id == "A/d1.txt");
    CHECK(doc.text == "كتاب");

    RawDocument standalone = read_document(dir / "A" / "d1.txt");
    CHECK(standalone.id == (dir / "A" / "d1.txt").generic_string());
}

TEST_CASE("read_document reports the byte offset of invalid UTF-8") {
    TempDir dir("encoding");
    std::string bytes = "0123456789abcdefg";   // 17 valid bytes
    bytes += '\xFF';
    bytes += "tail";
    write_file(dir / "bad.txt", bytes);
    try {
        read_document(dir / "bad.txt", dir.path());
        FAIL("expected EncodingError");
    } catch (const EncodingError& e) {
        CHECK(e.offset() == 17);
        CHECK(std::string(e.what()).find("bad.txt") != std::string::npos);
    }
}

TEST_CASE("read_document io errors") {
    TempDir dir("io_err");
    CHECK_THROWS_AS(read_document(dir / "missing.txt", dir.path()), IoError);
    std::filesystem::create_directories(dir / "sub");
    CHECK_THROWS_AS(read_document(dir / "sub", dir.path()), IoError);     // not a regular file
}
