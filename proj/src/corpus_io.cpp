#include "atc/corpus_io.hpp"

#include <algorithm>
#include <set>

#include "atc/errors.hpp"
#include "util.hpp"

namespace atc {

namespace fs = std::filesystem;

namespace {

bool is_hidden(const fs::path& p) {
    std::string name = p.filename().string();
    return !name.empty() && name.front() == '.';
}

}  // namespace

std::string CorpusManifest::doc_id(const fs::path& path) const {
    fs::path rel = path.lexically_relative(root);
    return rel.empty() ? path.generic_string() : rel.generic_string();
}

CorpusManifest scan_corpus(const fs::path& root) {
    std::error_code ec;
    if (!fs::is_directory(root, ec))
        throw IoError("corpus root is not a directory: '" + root.string() + "'");

    CorpusManifest manifest;
    manifest.root = root;

    std::vector<fs::path> category_dirs;
    for (const auto& entry : fs::directory_iterator(root, ec)) {
        if (entry.is_directory() && !is_hidden(entry.path())) category_dirs.push_back(entry.path());
    }
    if (ec) throw IoError("cannot scan '" + root.string() + "': " + ec.message());

    std::set<std::string> ids;
    for (const auto& dir : category_dirs) {
        std::string category = dir.filename().string();
        manifest.counts[category] = 0;
        fs::recursive_directory_iterator it(dir, ec), end;
        if (ec) throw IoError("cannot scan '" + dir.string() + "': " + ec.message());
        for (; it != end; ++it) {
            if (is_hidden(it->path())) {
                if (it->is_directory()) it.disable_recursion_pending();
                continue;
            }
            if (!it->is_regular_file()) continue;
            std::string id = it->path().lexically_relative(root).generic_string();
            if (!ids.insert(id).second) throw DuplicateDocumentIdError(id);
            manifest.entries.emplace_back(category, it->path());
            ++manifest.counts[category];
        }
    }
    if (manifest.entries.empty()) throw EmptyCorpusError();

    std::sort(manifest.entries.begin(), manifest.entries.end(),
              [&](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second.lexically_relative(root).generic_string() <
                         b.second.lexically_relative(root).generic_string();
              });
    return manifest;
}

RawDocument read_document(const fs::path& path, const fs::path& root) {
    std::string bytes = detail::read_file_bytes(path);
    RawDocument doc;
    fs::path rel = path.lexically_relative(root);
    doc.id = rel.empty() ? path.generic_string() : rel.generic_string();
    doc.text = detail::decode_utf8_text(std::move(bytes), path.string());
    return doc;
}

RawDocument read_document(const fs::path& path) {
    RawDocument doc;
    doc.id = path.generic_string();
    doc.text = detail::decode_utf8_text(detail::read_file_bytes(path), path.string());
    return doc;
}

}  // namespace atc
