#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "atc/classify.hpp"
#include "atc/corpus_io.hpp"
#include "atc/errors.hpp"
#include "atc/eval.hpp"
#include "atc/model.hpp"
#include "atc/preprocess.hpp"
#include "atc/weighting.hpp"

namespace py = pybind11;

namespace {

const atc::StopWordList& stops_or_builtin(const atc::StopWordList* stops) {
    return stops ? *stops : atc::StopWordList::builtin();
}

const atc::StemmerConfig& cfg_or_builtin(const atc::StemmerConfig* cfg) {
    return cfg ? *cfg : atc::StemmerConfig::builtin();
}

atc::OutputFormat format_from_name(const std::string& name) {
    if (name == "table") return atc::OutputFormat::table;
    if (name == "csv") return atc::OutputFormat::csv;
    throw atc::Error("unknown format '" + name + "' (expected 'table' or 'csv')");
}

}  // namespace

PYBIND11_MODULE(_atc, m) {
    m.doc() = "Arabic text categorization core (TF-IDF keyword matching)";

    py::register_exception<atc::Error>(m, "Error");
    py::register_exception<atc::UnclassifiableError>(m, "UnclassifiableError");
    py::register_exception<atc::ConfigMismatchError>(m, "ConfigMismatchError");

    py::class_<atc::StopWordList>(m, "StopWordList")
        .def_static("builtin", [] { return atc::StopWordList::builtin(); })
        .def_static("load", &atc::StopWordList::from_file, py::arg("path"))
        .def_static("from_words", &atc::StopWordList::from_words, py::arg("words"),
                    py::arg("source") = "memory")
        .def("__contains__",
             [](const atc::StopWordList& s, const std::string& w) { return s.contains(w); })
        .def("__len__", &atc::StopWordList::size)
        .def_property_readonly("source", &atc::StopWordList::source)
        .def("words", &atc::StopWordList::sorted_words)
        .def("digest", &atc::StopWordList::digest);

    py::class_<atc::StemmerConfig>(m, "StemmerConfig")
        .def(py::init([](std::vector<std::string> prefixes, std::vector<std::string> suffixes,
                         std::size_t min_stem_len) {
                 atc::StemmerConfig cfg;
                 cfg.prefixes = std::move(prefixes);
                 cfg.suffixes = std::move(suffixes);
                 cfg.min_stem_len = min_stem_len;
                 cfg.canonicalize();
                 return cfg;
             }),
             py::arg("prefixes"), py::arg("suffixes"), py::arg("min_stem_len") = 2)
        .def_static("builtin", [] { return atc::StemmerConfig::builtin(); })
        .def_static("load", &atc::StemmerConfig::from_file, py::arg("path"))
        .def_readonly("prefixes", &atc::StemmerConfig::prefixes)
        .def_readonly("suffixes", &atc::StemmerConfig::suffixes)
        .def_readonly("min_stem_len", &atc::StemmerConfig::min_stem_len)
        .def("digest", &atc::StemmerConfig::digest);

    m.def("tokenize", [](const std::string& text) { return atc::tokenize(text); },
          py::arg("text"));
    m.def("normalize_token",
          [](const std::string& token) { return atc::normalize_token(token); },
          py::arg("token"));
    m.def(
        "filter_token",
        [](const std::string& token, const atc::StopWordList* stops) {
            return atc::filter_token(token, stops_or_builtin(stops));
        },
        py::arg("token"), py::arg("stops") = nullptr);
    m.def(
        "stem",
        [](const std::string& token, const atc::StemmerConfig* cfg) {
            return atc::stem(token, cfg_or_builtin(cfg));
        },
        py::arg("token"), py::arg("cfg") = nullptr);
    m.def(
        "preprocess",
        [](const std::string& text, const atc::StopWordList* stops,
           const atc::StemmerConfig* cfg) {
            return atc::preprocess_text(text, stops_or_builtin(stops), cfg_or_builtin(cfg));
        },
        py::arg("text"), py::arg("stops") = nullptr, py::arg("cfg") = nullptr);

    py::class_<atc::ClassificationResult>(m, "Result")
        .def_readonly("doc_id", &atc::ClassificationResult::doc_id)
        .def_readonly("best", &atc::ClassificationResult::best)
        .def_readonly("degraded", &atc::ClassificationResult::degraded)
        .def_property_readonly("keywords",
                               [](const atc::ClassificationResult& r) {
                                   std::vector<std::string> words;
                                   for (const auto& term : r.keywords.keywords)
                                       words.push_back(term.word);
                                   return words;
                               })
        .def_property_readonly("scores",
                               [](const atc::ClassificationResult& r) {
                                   py::dict scores;
                                   for (const auto& [name, score] : r.scores)
                                       scores[py::str(name)] = score;
                                   return scores;
                               })
        .def("to_text", &atc::format_result_table)
        .def("__repr__", [](const atc::ClassificationResult& r) {
            return "<Result doc_id='" + r.doc_id + "' best='" + r.best + "'>";
        });

    py::class_<atc::EvaluationReport>(m, "Report")
        .def_property_readonly("accuracy", &atc::EvaluationReport::accuracy_percent)
        .def_readonly("correct", &atc::EvaluationReport::correct)
        .def_readonly("unclassifiable", &atc::EvaluationReport::unclassifiable)
        .def_property_readonly("total", &atc::EvaluationReport::total)
        .def_readonly("categories", &atc::EvaluationReport::categories)
        .def_property_readonly("rows",
                               [](const atc::EvaluationReport& r) {
                                   py::list rows;
                                   for (const auto& row : r.rows)
                                       rows.append(py::make_tuple(row.doc_id, row.true_category,
                                                                  row.predicted, row.degraded));
                                   return rows;
                               })
        .def(
            "match_table",
            [](const atc::EvaluationReport& r, const std::string& format) {
                return atc::emit_match_table(r, format_from_name(format));
            },
            py::arg("format") = "table")
        .def(
            "to_text",
            [](const atc::EvaluationReport& r, const std::string& format) {
                return atc::emit_report(r, format_from_name(format));
            },
            py::arg("format") = "table");

    py::class_<atc::CategoryModel>(m, "Model")
        .def_property_readonly("categories",
                               [](const atc::CategoryModel& model) {
                                   std::vector<std::string> names;
                                   for (const auto& profile : model.profiles)
                                       names.push_back(profile.name);
                                   return names;
                               })
        .def_property_readonly(
            "doc_count", [](const atc::CategoryModel& model) { return model.vocab.doc_count; })
        .def_property_readonly(
            "vocab_size", [](const atc::CategoryModel& model) { return model.vocab.df.size(); })
        .def_property_readonly(
            "profile_size",
            [](const atc::CategoryModel& model) { return model.config.profile_size; })
        .def_property_readonly("log_base",
                               [](const atc::CategoryModel& model) {
                                   return std::string(log_base_name(model.config.log_base));
                               })
        .def("profile",
             [](const atc::CategoryModel& model, const std::string& name) {
                 const atc::CategoryProfile* profile = model.find_profile(name);
                 if (profile == nullptr) throw atc::UnknownCategoryError(name);
                 py::dict keywords;
                 for (const auto& [word, weight] : profile->keywords)
                     keywords[py::str(word)] = weight;
                 return keywords;
             },
             py::arg("name"))
        .def("save", &atc::save_model, py::arg("path"))
        .def("serialize", &atc::serialize_model)
        .def(
            "classify",
            [](const atc::CategoryModel& model, const std::string& text, const std::string& doc_id,
               const atc::StopWordList* stops, const atc::StemmerConfig* cfg) {
                return atc::classify_document({doc_id, text}, model, stops_or_builtin(stops),
                                              cfg_or_builtin(cfg));
            },
            py::arg("text"), py::arg("doc_id") = "", py::arg("stops") = nullptr,
            py::arg("cfg") = nullptr)
        .def(
            "weigh",
            [](const atc::CategoryModel& model, const std::string& text,
               const atc::StopWordList* stops, const atc::StemmerConfig* cfg) {
                atc::Bag bag = atc::preprocess_text(text, stops_or_builtin(stops),
                                                    cfg_or_builtin(cfg));
                py::list out;
                for (const auto& term :
                     atc::weigh_document(bag, model.vocab, model.config.log_base))
                    out.append(py::make_tuple(term.word, term.tf, term.weight, term.unseen));
                return out;
            },
            py::arg("text"), py::arg("stops") = nullptr, py::arg("cfg") = nullptr);

    m.def(
        "train",
        [](const std::vector<std::tuple<std::string, std::string, std::string>>& docs,
           const atc::StopWordList* stops, const atc::StemmerConfig* cfg,
           std::int64_t profile_size, const std::string& log_base) {
            atc::TrainingSet ts;
            for (const auto& [category, doc_id, text] : docs)
                ts.docs.push_back({category, {doc_id, text}});
            return atc::train(ts, stops_or_builtin(stops), cfg_or_builtin(cfg), profile_size,
                              atc::log_base_from_name(log_base));
        },
        py::arg("docs"), py::arg("stops") = nullptr, py::arg("cfg") = nullptr,
        py::arg("profile_size") = 50, py::arg("log_base") = "10",
        "Train from (category, doc_id, text) triples.");

    m.def(
        "train_dir",
        [](const std::filesystem::path& corpus, const atc::StopWordList* stops,
           const atc::StemmerConfig* cfg, std::int64_t profile_size,
           const std::string& log_base) {
            atc::CorpusManifest manifest = atc::scan_corpus(corpus);
            atc::TrainingSet ts;
            for (const auto& [category, path] : manifest.entries)
                ts.docs.emplace_back(category, atc::read_document(path, manifest.root));
            return atc::train(ts, stops_or_builtin(stops), cfg_or_builtin(cfg), profile_size,
                              atc::log_base_from_name(log_base));
        },
        py::arg("corpus"), py::arg("stops") = nullptr, py::arg("cfg") = nullptr,
        py::arg("profile_size") = 50, py::arg("log_base") = "10",
        "Train from a <root>/<category>/<file> corpus tree.");

    m.def("load_model", &atc::load_model, py::arg("path"));

    m.def(
        "evaluate_dir",
        [](const atc::CategoryModel& model, const std::filesystem::path& corpus,
           const atc::StopWordList* stops, const atc::StemmerConfig* cfg) {
            return atc::evaluate(model, atc::scan_corpus(corpus), stops_or_builtin(stops),
                                 cfg_or_builtin(cfg));
        },
        py::arg("model"), py::arg("corpus"), py::arg("stops") = nullptr,
        py::arg("cfg") = nullptr);
}
