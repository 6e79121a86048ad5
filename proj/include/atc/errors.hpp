#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atc {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Invalid UTF-8 in an input file; reports the byte offset of the bad byte.
class EncodingError : public Error {
public:
    EncodingError(const std::string& where, std::size_t offset)
        : Error("invalid UTF-8 at byte offset " + std::to_string(offset) +
                (where.empty() ? "" : " in " + where)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class EmptyCorpusError : public Error {
public:
    using Error::Error;
    EmptyCorpusError() : Error("corpus contains no documents") {}
};

class EmptyCategoryError : public Error {
public:
    explicit EmptyCategoryError(const std::string& category,
                                const std::string& why = "has no usable terms after preprocessing")
        : Error("category '" + category + "' " + why), category_(category) {}
    const std::string& category() const { return category_; }

private:
    std::string category_;
};

/// Raised by idf() for a word the training corpus has never seen (df = 0).
class UnseenTermError : public Error {
public:
    explicit UnseenTermError(const std::string& word)
        : Error("term '" + word + "' does not appear in the training corpus") {}
};

class NoKeywordsError : public Error {
public:
    NoKeywordsError() : Error("document yields no keyword candidates") {}
};

class UnclassifiableError : public Error {
public:
    explicit UnclassifiableError(const std::string& doc_id)
        : Error("document '" + doc_id + "' is unclassifiable: no keyword candidates"),
          doc_id_(doc_id) {}
    const std::string& doc_id() const { return doc_id_; }

private:
    std::string doc_id_;
};

/// Stop list or stemmer config at classify time differs from the one the
/// model was trained with.
class ConfigMismatchError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    FormatError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class VersionError : public Error {
public:
    using Error::Error;
};

class UnknownCategoryError : public Error {
public:
    explicit UnknownCategoryError(const std::string& category)
        : Error("category '" + category + "' is not part of the model"),
          category_(category) {}
    const std::string& category() const { return category_; }

private:
    std::string category_;
};

class DuplicateDocumentIdError : public Error {
public:
    explicit DuplicateDocumentIdError(const std::string& id)
        : Error("duplicate document id '" + id + "'") {}
};

}  // namespace atc
