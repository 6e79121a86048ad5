#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "atc/classify.hpp"
#include "atc/corpus_io.hpp"
#include "atc/model.hpp"

namespace atc {

enum class OutputFormat { table, csv };

struct EvaluationRow {
    std::string doc_id;
    std::string true_category;
    std::string predicted;        // empty when unclassifiable
    bool degraded = false;
    std::vector<double> scores;   // aligned with EvaluationReport::categories
};

struct EvaluationReport {
    std::vector<std::string> categories;   // model categories, ascending
    std::vector<EvaluationRow> rows;       // manifest order
    std::int64_t correct = 0;
    std::int64_t unclassifiable = 0;
    /// category -> (correct, total) over documents with that true label.
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> per_category;
    /// rows: true category; columns: predicted category plus a final
    /// "unclassifiable" column.
    std::vector<std::vector<std::int64_t>> confusion;

    std::int64_t total() const { return static_cast<std::int64_t>(rows.size()); }
    /// Percent correct over all documents, unclassifiable ones included.
    double accuracy_percent() const;
};

/// Classifies every manifest document against the model. Throws
/// UnknownCategoryError when the corpus has a label the model lacks.
EvaluationReport evaluate(const CategoryModel& m, const CorpusManifest& manifest,
                          const StopWordList& stops, const StemmerConfig& cfg);

/// Match-percentage matrix. Table: categories as rows, one column per
/// document, "NN.N%" cells. Csv: documents as rows, header line first.
std::string emit_match_table(const EvaluationReport& r, OutputFormat format);

/// Full report: the match matrix plus summary, per-category accuracy and
/// confusion matrix in table mode; the csv matrix alone in csv mode.
std::string emit_report(const EvaluationReport& r, OutputFormat format);

std::string percent_1dp(double value);

/// Per-document classification rendering shared by the CLI and tests.
std::string format_result_table(const ClassificationResult& r);
std::string classification_csv_header(const std::vector<std::string>& categories);
std::string format_result_csv(const ClassificationResult& r);
std::string unclassifiable_csv_row(const std::string& doc_id, std::size_t category_count);

}  // namespace atc
