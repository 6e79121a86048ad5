#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "atc/preprocess.hpp"

namespace atc {

/// Result of scanning a category-per-directory corpus tree. Entries are
/// sorted by (category ascending, relative path ascending); document ids
/// are paths relative to the corpus root.
struct CorpusManifest {
    std::filesystem::path root;
    std::vector<std::pair<std::string, std::filesystem::path>> entries;   // (category, abs path)
    std::map<std::string, std::int64_t> counts;

    std::string doc_id(const std::filesystem::path& path) const;
};

/// Scans `<root>/<category>/<file>`; files may be nested deeper inside a
/// category. Hidden files and directories are skipped. Throws IoError /
/// EmptyCorpusError / DuplicateDocumentIdError.
CorpusManifest scan_corpus(const std::filesystem::path& root);

/// Reads a UTF-8 document; strips a leading byte-order mark. The id is the
/// path relative to `root`. Throws IoError / EncodingError(byte offset).
RawDocument read_document(const std::filesystem::path& path, const std::filesystem::path& root);

/// Same, with the path itself as the id (standalone files).
RawDocument read_document(const std::filesystem::path& path);

}  // namespace atc
