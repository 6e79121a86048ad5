#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atc/classify.hpp"
#include "atc/corpus_io.hpp"
#include "atc/errors.hpp"
#include "atc/eval.hpp"
#include "atc/model.hpp"
#include "atc/preprocess.hpp"

namespace {

struct Options {
    std::string corpus;
    std::string model;
    std::vector<std::string> inputs;
    std::string stopwords;
    std::string affixes;
    std::string report;
    std::string category;
    std::string format = "table";
    std::int64_t profile_size = 50;
};

atc::StopWordList load_stops(const Options& opt) {
    return opt.stopwords.empty() ? atc::StopWordList::builtin()
                                 : atc::StopWordList::from_file(opt.stopwords);
}

atc::StemmerConfig load_affixes(const Options& opt) {
    return opt.affixes.empty() ? atc::StemmerConfig::builtin()
                               : atc::StemmerConfig::from_file(opt.affixes);
}

atc::OutputFormat parse_format(const std::string& format) {
    return format == "csv" ? atc::OutputFormat::csv : atc::OutputFormat::table;
}

int cmd_train(const Options& opt) {
    atc::StopWordList stops = load_stops(opt);
    atc::StemmerConfig cfg = load_affixes(opt);
    atc::CorpusManifest manifest = atc::scan_corpus(opt.corpus);
    for (const auto& [category, count] : manifest.counts)
        if (count == 0) throw atc::EmptyCategoryError(category, "contains no documents");

    atc::TrainingSet ts;
    ts.docs.reserve(manifest.entries.size());
    for (const auto& [category, path] : manifest.entries)
        ts.docs.emplace_back(category, atc::read_document(path, manifest.root));

    atc::CategoryModel model = atc::train(ts, stops, cfg, opt.profile_size);
    atc::save_model(model, opt.model);
    std::cout << "categories=" << model.profiles.size() << " n=" << model.vocab.doc_count
              << " vocab=" << model.vocab.df.size() << "\n";
    return 0;
}

int cmd_classify(const Options& opt) {
    atc::CategoryModel model = atc::load_model(opt.model);
    atc::StopWordList stops = load_stops(opt);
    atc::StemmerConfig cfg = load_affixes(opt);
    atc::OutputFormat format = parse_format(opt.format);

    std::vector<std::string> categories;
    for (const auto& profile : model.profiles) categories.push_back(profile.name);
    if (format == atc::OutputFormat::csv)
        std::cout << atc::classification_csv_header(categories);

    int unclassified = 0;
    for (const auto& input : opt.inputs) {
        atc::RawDocument doc = atc::read_document(input);
        try {
            atc::ClassificationResult result = atc::classify_document(doc, model, stops, cfg);
            std::cout << (format == atc::OutputFormat::csv ? atc::format_result_csv(result)
                                                           : atc::format_result_table(result));
        } catch (const atc::UnclassifiableError&) {
            ++unclassified;
            if (format == atc::OutputFormat::csv) {
                std::cout << atc::unclassifiable_csv_row(doc.id, categories.size());
            } else {
                std::cout << "document " << doc.id << "\n  UNCLASSIFIABLE\n";
            }
        }
    }
    return unclassified > 0 ? 2 : 0;
}

int cmd_evaluate(const Options& opt) {
    atc::CategoryModel model = atc::load_model(opt.model);
    atc::StopWordList stops = load_stops(opt);
    atc::StemmerConfig cfg = load_affixes(opt);
    atc::CorpusManifest manifest = atc::scan_corpus(opt.corpus);

    atc::EvaluationReport report = atc::evaluate(model, manifest, stops, cfg);
    std::string text = atc::emit_report(report, parse_format(opt.format));
    std::ofstream out(opt.report, std::ios::binary | std::ios::trunc);
    if (!out) throw atc::IoError("cannot open '" + opt.report + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw atc::IoError("failed writing '" + opt.report + "'");

    std::cout << "accuracy=" << atc::percent_1dp(report.accuracy_percent()) << "%\n";
    return 0;
}

int cmd_inspect(const Options& opt) {
    atc::CategoryModel model = atc::load_model(opt.model);
    if (!opt.category.empty() && model.find_profile(opt.category) == nullptr)
        throw atc::UnknownCategoryError(opt.category);

    std::cout << "n=" << model.vocab.doc_count << " vocab=" << model.vocab.df.size()
              << " categories=" << model.profiles.size()
              << " profile_size=" << model.config.profile_size
              << " log_base=" << atc::log_base_name(model.config.log_base) << "\n";

    for (const auto& profile : model.profiles) {
        if (!opt.category.empty() && profile.name != opt.category) continue;
        std::cout << "category " << profile.name << " docs=" << profile.doc_count
                  << " keywords=" << profile.keywords.size() << "\n";
        std::vector<std::pair<std::string, double>> keywords(profile.keywords.begin(),
                                                             profile.keywords.end());
        std::sort(keywords.begin(), keywords.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        char buf[32];
        for (const auto& [word, weight] : keywords) {
            std::snprintf(buf, sizeof buf, "%.6f", weight);
            std::cout << "  " << word << " " << buf << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arabic text categorization: train, classify, evaluate, inspect"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* train = app.add_subcommand("train", "Train a category model from a labeled corpus");
    train->add_option("--corpus", opt.corpus, "Corpus root (<root>/<category>/<file>)")
        ->required();
    train->add_option("--model", opt.model, "Output model file")->required();
    train->add_option("--stopwords", opt.stopwords, "Stop word file overriding the builtin list");
    train->add_option("--affixes", opt.affixes, "Affix config overriding the builtin stemmer");
    train->add_option("--profile-size", opt.profile_size, "Keywords kept per category")
        ->check(CLI::PositiveNumber);

    CLI::App* classify = app.add_subcommand("classify", "Classify documents against a model");
    classify->add_option("--model", opt.model, "Model file")->required();
    classify->add_option("--input", opt.inputs, "Document file(s)")->required();
    classify->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"table", "csv"}));
    classify->add_option("--stopwords", opt.stopwords, "Stop word file (must match the model)");
    classify->add_option("--affixes", opt.affixes, "Affix config (must match the model)");

    CLI::App* evaluate = app.add_subcommand("evaluate", "Evaluate a model on a labeled corpus");
    evaluate->add_option("--model", opt.model, "Model file")->required();
    evaluate->add_option("--corpus", opt.corpus, "Labeled test corpus root")->required();
    evaluate->add_option("--report", opt.report, "Report output file")->required();
    evaluate->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"table", "csv"}));
    evaluate->add_option("--stopwords", opt.stopwords, "Stop word file (must match the model)");
    evaluate->add_option("--affixes", opt.affixes, "Affix config (must match the model)");

    CLI::App* inspect = app.add_subcommand("inspect", "Print model statistics and keywords");
    inspect->add_option("--model", opt.model, "Model file")->required();
    inspect->add_option("--category", opt.category, "Show a single category");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (train->parsed()) return cmd_train(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (evaluate->parsed()) return cmd_evaluate(opt);
        if (inspect->parsed()) return cmd_inspect(opt);
    } catch (const atc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
