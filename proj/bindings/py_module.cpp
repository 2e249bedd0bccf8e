// Python bindings for the narrative analysis core. The surface mirrors the
// C++ API at two levels: small numeric/text primitives that are convenient
// to exercise from Python, and the whole-corpus entry points that the CLI
// uses (returned as JSON text so callers can json.loads them).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "narrative/arc.hpp"
#include "narrative/axis.hpp"
#include "narrative/cast.hpp"
#include "narrative/cli.hpp"
#include "narrative/corpus.hpp"
#include "narrative/embedding.hpp"
#include "narrative/lexnet.hpp"
#include "narrative/pipeline.hpp"
#include "narrative/postag.hpp"
#include "narrative/slope.hpp"
#include "narrative/stats.hpp"

namespace py = pybind11;
using namespace narrative;

namespace {

RunConfig config_from(const std::map<std::string, std::string>& options) {
    RunConfig config;
    for (const auto& [key, value] : options) {
        apply_config_entry(config, key, value);
    }
    return config;
}

CoNetwork network_from_edges(
    const std::vector<std::tuple<std::string, std::string, std::uint64_t>>& edges) {
    CoNetwork network;
    for (const auto& [a, b, w] : edges) {
        if (a == b) {
            throw std::invalid_argument("self-loop edge: " + a);
        }
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        network.edges[key] += w;
    }
    for (const auto& [key, w] : network.edges) {
        network.nodes[key.first] += w;
        network.nodes[key.second] += w;
    }
    return network;
}

py::dict coefficient_dict(const Coefficient& c) {
    py::dict d;
    d["estimate"] = c.estimate;
    d["std_error"] = c.std_error;
    d["t"] = c.t;
    d["p"] = c.p;
    d["stars"] = std::string(c.stars);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Emotion arcs and gender co-occurrence structure in narrative text";
    m.attr("__version__") = "0.1.0";

    // --- text primitives ---------------------------------------------------
    m.def(
        "tokenize",
        [](const std::string& text) { return narrative::tokenize(text); },
        py::arg("text"),
        "Split text into (lowercased tokens, original-case tokens).");
    m.def(
        "split_segments",
        [](const std::string& text, const std::string& mode) {
            SegmentKind kind;
            if (mode == "sentence") {
                kind = SegmentKind::sentence;
            } else if (mode == "paragraph") {
                kind = SegmentKind::paragraph;
            } else {
                throw std::invalid_argument("mode must be 'sentence' or 'paragraph'");
            }
            std::vector<std::string> out;
            for (auto& segment : segment_text(text, kind)) {
                out.push_back(std::move(segment.raw_text));
            }
            return out;
        },
        py::arg("text"), py::arg("mode") = "sentence",
        "Segment text into sentences or paragraphs, returning raw segment text.");
    m.def(
        "tag_pos", [](const std::string& token) { return tag_pos(token); }, py::arg("token"),
        "Penn Treebank tag for one token (lexicon plus suffix rules).");

    // --- statistics --------------------------------------------------------
    m.def(
        "pearson",
        [](const std::vector<double>& xs, const std::vector<double>& ys) {
            return pearson(xs, ys);
        },
        py::arg("xs"), py::arg("ys"));
    m.def(
        "ols_simple",
        [](const std::vector<double>& xs, const std::vector<double>& ys) {
            auto fit = ols_simple(xs, ys);
            return std::make_pair(fit.slope, fit.intercept);
        },
        py::arg("xs"), py::arg("ys"), "Least-squares line, returned as (slope, intercept).");
    m.def(
        "ols_multi",
        [](const std::vector<std::vector<double>>& predictors,
           const std::vector<double>& outcome) {
            auto fit = ols_multi(predictors, outcome);
            py::dict d;
            py::list coefficients;
            for (const auto& c : fit.coefficients) {
                coefficients.append(coefficient_dict(c));
            }
            d["coefficients"] = coefficients;
            d["r_squared"] = fit.r_squared;
            d["f_statistic"] = fit.f_statistic;
            d["n_cases"] = fit.n_cases;
            return d;
        },
        py::arg("predictors"), py::arg("outcome"),
        "OLS with intercept; predictors is a list of columns.");
    m.def(
        "welch_t",
        [](double a_mean, double a_sd, std::size_t a_n, double b_mean, double b_sd,
           std::size_t b_n) {
            auto r = welch_t(a_mean, a_sd, a_n, b_mean, b_sd, b_n);
            py::dict d;
            d["t"] = r.t;
            d["df"] = r.df;
            d["p"] = r.p;
            d["stars"] = std::string(r.stars);
            return d;
        },
        py::arg("a_mean"), py::arg("a_sd"), py::arg("a_n"), py::arg("b_mean"), py::arg("b_sd"),
        py::arg("b_n"));
    m.def("student_t_two_sided", &student_t_two_sided, py::arg("t"), py::arg("df"));

    // --- embeddings and the happiness axis ---------------------------------
    py::class_<EmbeddingTable>(m, "EmbeddingTable")
        .def_property_readonly("dim", &EmbeddingTable::dim)
        .def("__len__", &EmbeddingTable::size)
        .def_property_readonly("source_label", &EmbeddingTable::source_label)
        .def(
            "find",
            [](const EmbeddingTable& table, const std::string& token)
                -> std::optional<std::vector<float>> {
                const Vector* v = table.find(token);
                if (v == nullptr) {
                    return std::nullopt;
                }
                return *v;
            },
            py::arg("token"), "Vector for a token (case-insensitive first), or None.")
        .def("__contains__", [](const EmbeddingTable& table, const std::string& token) {
            return table.find(token) != nullptr;
        });

    m.def(
        "load_embeddings",
        [](const std::string& path, const std::string& format,
           const std::optional<std::vector<std::string>>& vocab) {
            EmbeddingParseOptions options;
            if (vocab) {
                options.vocab_filter.emplace(vocab->begin(), vocab->end());
            }
            return load_embeddings(path, format, options);
        },
        py::arg("path"), py::arg("format") = "auto", py::arg("vocab") = std::nullopt,
        "Load a word2vec-binary or plain-text embedding file, optionally "
        "restricted to a vocabulary.");

    py::class_<SentimentAxis>(m, "SentimentAxis")
        .def_readonly("vector", &SentimentAxis::vector)
        .def_readonly("positive_words", &SentimentAxis::positive_words)
        .def_readonly("negative_words", &SentimentAxis::negative_words)
        .def_readonly("found_positive", &SentimentAxis::found_positive)
        .def_readonly("found_negative", &SentimentAxis::found_negative)
        .def_readonly("missing_words", &SentimentAxis::missing_words);

    m.def(
        "build_axis",
        [](const EmbeddingTable& table, std::optional<std::vector<std::string>> positives,
           std::optional<std::vector<std::string>> negatives) {
            return build_axis(table, positives.value_or(default_positive_seeds()),
                              negatives.value_or(default_negative_seeds()));
        },
        py::arg("table"), py::arg("positives") = std::nullopt,
        py::arg("negatives") = std::nullopt,
        "Sentiment direction: mean(positive seeds) - mean(negative seeds).");
    m.def(
        "word_happiness",
        [](const EmbeddingTable& table, const SentimentAxis& axis, const std::string& token) {
            return word_happiness(table, axis, token);
        },
        py::arg("table"), py::arg("axis"), py::arg("token"),
        "Cosine of a word against the axis, or None when out of vocabulary.");
    m.def(
        "validate_axis",
        [](const EmbeddingTable& table, const SentimentAxis& axis,
           const std::vector<std::pair<std::string, double>>& lexicon) {
            std::vector<LexiconEntry> entries;
            entries.reserve(lexicon.size());
            for (const auto& [word, score] : lexicon) {
                entries.push_back({word, score});
            }
            auto report = validate_axis(table, axis, entries);
            py::dict d;
            d["pearson_r"] = report.pearson_r;
            d["n_matched"] = report.n_matched;
            d["p_value"] = report.p_value;
            return d;
        },
        py::arg("table"), py::arg("axis"), py::arg("lexicon"),
        "Correlate axis scores with human word-happiness ratings.");

    // --- arcs and slopes ---------------------------------------------------
    m.def(
        "merge_clusters",
        [](const std::vector<std::size_t>& indices, std::size_t gap) {
            std::set<std::size_t> s(indices.begin(), indices.end());
            std::vector<std::pair<std::size_t, std::size_t>> out;
            for (const auto& cluster : merge_clusters(s, gap)) {
                out.emplace_back(cluster.start, cluster.end);
            }
            return out;
        },
        py::arg("indices"), py::arg("gap"),
        "Merge segment indices at most `gap` apart into (start, end) clusters.");

    // --- word networks -----------------------------------------------------
    m.def(
        "modularity",
        [](const std::vector<std::tuple<std::string, std::string, std::uint64_t>>& edges,
           const std::map<std::string, std::size_t>& assignment) {
            return modularity(network_from_edges(edges), assignment);
        },
        py::arg("edges"), py::arg("assignment"),
        "Weighted Newman modularity of a word -> community assignment.");
    m.def(
        "detect_communities",
        [](const std::vector<std::tuple<std::string, std::string, std::uint64_t>>& edges) {
            auto partition = detect_communities(network_from_edges(edges));
            py::dict d;
            d["assignment"] = partition.assignment;
            d["q"] = partition.q;
            d["community_sizes"] = partition.community_sizes;
            return d;
        },
        py::arg("edges"),
        "Community detection over weighted (a, b, multiplicity) edges; exact "
        "for networks of up to 10 nodes.");

    // --- whole-corpus entry points ------------------------------------------
    m.def(
        "validate_axis_json",
        [](const std::map<std::string, std::string>& options) {
            RunConfig config = config_from(options);
            validate_config(config, ConfigScope::axis_only);
            return json_text(validate_axis_report(config));
        },
        py::arg("options"),
        "Axis-validation report as JSON text; options use config-file keys "
        "(embeddings, sentiment_lexicon, ...).");
    m.def(
        "report_json",
        [](const std::map<std::string, std::string>& options) {
            RunConfig config = config_from(options);
            if (config.sentiment_lexicon_path.empty()) {
                throw std::invalid_argument("sentiment_lexicon is required for a report");
            }
            validate_config(config, ConfigScope::corpus);
            CorpusAnalysis analysis = analyze_corpus(config);
            return json_text(build_report(config, analysis));
        },
        py::arg("options"),
        "Full corpus report as JSON text; options use config-file keys.");
    m.def(
        "cli_main",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv;
            argv.push_back("narrative-arcs");
            for (const auto& arg : args) {
                argv.push_back(arg.c_str());
            }
            const int code = run_cli(static_cast<int>(argv.size()), argv.data());
            // In-process callers read the streams right after this returns;
            // don't leave output sitting in the C++ buffers.
            std::cout.flush();
            std::cerr.flush();
            return code;
        },
        py::arg("args"), "Run the command-line interface in-process; returns its exit code.");
}
