#include "atc/eval.hpp"

#include <algorithm>
#include <cstdio>

#include "atc/errors.hpp"
#include "atc/unicode.hpp"

namespace atc {

namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

// Left-justified column layout, widths in code points.
std::string render_table(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths;
    for (const auto& row : cells) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], uni::cp_count(row[c]));
    }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += " | ";
            line += row[c];
            if (c + 1 < row.size())
                line.append(widths[c] - uni::cp_count(row[c]), ' ');
        }
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace

std::string percent_1dp(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", value);
    return buf;
}

double EvaluationReport::accuracy_percent() const {
    if (rows.empty()) return 0.0;
    return 100.0 * static_cast<double>(correct) / static_cast<double>(total());
}

EvaluationReport evaluate(const CategoryModel& m, const CorpusManifest& manifest,
                          const StopWordList& stops, const StemmerConfig& cfg) {
    EvaluationReport report;
    for (const auto& profile : m.profiles) report.categories.push_back(profile.name);
    for (const auto& [category, count] : manifest.counts) {
        (void)count;
        if (m.find_profile(category) == nullptr) throw UnknownCategoryError(category);
        report.per_category[category] = {0, 0};
    }
    report.confusion.assign(report.categories.size(),
                            std::vector<std::int64_t>(report.categories.size() + 1, 0));

    auto category_index = [&](const std::string& name) {
        return static_cast<std::size_t>(
            std::lower_bound(report.categories.begin(), report.categories.end(), name) -
            report.categories.begin());
    };

    for (const auto& [category, path] : manifest.entries) {
        RawDocument doc = read_document(path, manifest.root);
        EvaluationRow row;
        row.doc_id = doc.id;
        row.true_category = category;
        auto& [cat_correct, cat_total] = report.per_category[category];
        ++cat_total;
        try {
            ClassificationResult result = classify_document(doc, m, stops, cfg);
            row.predicted = result.best;
            row.degraded = result.degraded;
            row.scores.reserve(result.scores.size());
            for (const auto& [name, score] : result.scores) {
                (void)name;
                row.scores.push_back(score);
            }
            ++report.confusion[category_index(category)][category_index(result.best)];
            if (result.best == category) {
                ++report.correct;
                ++cat_correct;
            }
        } catch (const UnclassifiableError&) {
            ++report.unclassifiable;
            ++report.confusion[category_index(category)].back();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string emit_match_table(const EvaluationReport& r, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::string out = "document";
        for (const auto& category : r.categories) out += "," + csv_field(category);
        out += '\n';
        for (const auto& row : r.rows) {
            out += csv_field(row.doc_id);
            if (row.scores.empty()) {
                out.append(r.categories.size(), ',');
            } else {
                for (double score : row.scores) out += "," + percent_1dp(score);
            }
            out += '\n';
        }
        return out;
    }

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"category"};
    for (const auto& row : r.rows) header.push_back(row.doc_id);
    cells.push_back(std::move(header));
    for (std::size_t c = 0; c < r.categories.size(); ++c) {
        std::vector<std::string> line{r.categories[c]};
        for (const auto& row : r.rows)
            line.push_back(row.scores.empty() ? "-" : percent_1dp(row.scores[c]) + "%");
        cells.push_back(std::move(line));
    }
    return render_table(cells);
}

std::string emit_report(const EvaluationReport& r, OutputFormat format) {
    if (format == OutputFormat::csv) return emit_match_table(r, format);

    std::string out = "match matrix\n";
    out += emit_match_table(r, format);
    out += "\n";
    out += "documents " + std::to_string(r.total()) + "\n";
    out += "classified " + std::to_string(r.total() - r.unclassifiable) + "\n";
    out += "unclassifiable " + std::to_string(r.unclassifiable) + "\n";
    out += "correct " + std::to_string(r.correct) + "\n";
    out += "accuracy " + percent_1dp(r.accuracy_percent()) + "%\n";
    out += "\nper-category accuracy\n";
    for (const auto& [category, stat] : r.per_category) {
        const auto& [correct, total] = stat;
        out += category + " ";
        out += total == 0 ? "-" : percent_1dp(100.0 * static_cast<double>(correct) /
                                              static_cast<double>(total)) + "%";
        out += " (" + std::to_string(correct) + "/" + std::to_string(total) + ")\n";
    }
    out += "\nconfusion matrix (rows true, columns predicted)\n";
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"true"};
    header.insert(header.end(), r.categories.begin(), r.categories.end());
    header.push_back("unclassifiable");
    cells.push_back(std::move(header));
    for (std::size_t i = 0; i < r.categories.size(); ++i) {
        std::vector<std::string> line{r.categories[i]};
        for (std::int64_t count : r.confusion[i]) line.push_back(std::to_string(count));
        cells.push_back(std::move(line));
    }
    out += render_table(cells);
    return out;
}

std::string format_result_table(const ClassificationResult& r) {
    std::string out = "document " + r.doc_id + "\n";
    out += "  keywords:";
    for (const auto& term : r.keywords.keywords) out += " " + term.word;
    out += '\n';
    out += "  best: " + r.best + (r.degraded ? " (degraded)" : "") + "\n";
    for (const auto& [category, score] : r.scores)
        out += "  " + category + " " + percent_1dp(score) + "%\n";
    return out;
}

std::string classification_csv_header(const std::vector<std::string>& categories) {
    std::string out = "document,best,degraded";
    for (const auto& category : categories) out += "," + csv_field(category);
    out += '\n';
    return out;
}

std::string format_result_csv(const ClassificationResult& r) {
    std::string out = csv_field(r.doc_id) + "," + csv_field(r.best) + ",";
    out += r.degraded ? "1" : "0";
    for (const auto& [category, score] : r.scores) {
        (void)category;
        out += "," + percent_1dp(score);
    }
    out += '\n';
    return out;
}

std::string unclassifiable_csv_row(const std::string& doc_id, std::size_t category_count) {
    std::string out = csv_field(doc_id) + ",UNCLASSIFIABLE,";
    out.append(category_count, ',');
    out += '\n';
    return out;
}

}  // namespace atc
