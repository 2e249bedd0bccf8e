#include "narrative/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "narrative/pipeline.hpp"

namespace fs = std::filesystem;

namespace narrative {

namespace {

fs::path out_path(const RunConfig& config, const std::string& name) {
    return fs::path(config.output_dir) / name;
}

void emit(const RunConfig& config, const std::string& filename,
          const nlohmann::ordered_json& j) {
    const std::string text = json_text(j);
    write_text_file(out_path(config, filename).string(), text);
    std::cout << text;
}

void write_arc_artifacts(const RunConfig& config, const CorpusAnalysis& analysis) {
    for (std::size_t i = 0; i < analysis.analyses.size(); ++i) {
        const StoryAnalysis& a = analysis.analyses[i];
        if (!a.analyzable) continue;
        const std::string stem = "arc_" + sanitize_story_id(a.story_id);
        write_text_file(out_path(config, stem + ".csv").string(), arc_csv(a));
        write_text_file(out_path(config, stem + ".svg").string(),
                        skyline_svg(a.scores, a.roster, a.cooccurrence));
    }
}

int run_arc(const RunConfig& config, const CorpusAnalysis& analysis,
            const std::string& story_id, const std::string& svg_path) {
    if (story_id.empty()) {
        write_arc_artifacts(config, analysis);
        emit(config, "arcs.json", arcs_section(analysis, true));
        return 0;
    }
    const StoryAnalysis* found = nullptr;
    for (const StoryAnalysis& a : analysis.analyses)
        if (a.story_id == story_id) found = &a;
    if (!found) {
        std::cerr << "error: no story with id '" << story_id << "'\n";
        return 2;
    }
    if (!found->analyzable) {
        std::cerr << "error: story '" << story_id << "' failed analysis: " << found->error
                  << '\n';
        return 2;
    }
    const std::string csv = arc_csv(*found);
    const std::string stem = "arc_" + sanitize_story_id(story_id);
    write_text_file(out_path(config, stem + ".csv").string(), csv);
    const std::string svg = skyline_svg(found->scores, found->roster, found->cooccurrence);
    write_text_file(svg_path.empty() ? out_path(config, stem + ".svg").string() : svg_path,
                    svg);
    std::cout << csv;
    return 0;
}

int run_network(const RunConfig& config, const CorpusAnalysis& analysis, Gender gender,
                WindowMode mode, std::optional<std::uint64_t> threshold_override) {
    const std::uint64_t threshold = threshold_override.value_or(
        mode == WindowMode::single ? config.label_threshold_single
                                   : config.label_threshold_cooccur);
    const std::vector<WindowSample> samples = pooled_windows(config, analysis, gender, mode);
    const CoNetwork net = build_network(samples);
    const std::string stem = "network_" + to_string(gender) + "_" + to_string(mode);
    write_text_file(out_path(config, stem + ".tsv").string(), network_tsv(net));
    write_text_file(out_path(config, stem + ".graphml").string(),
                    network_graphml(net, threshold));

    nlohmann::ordered_json communities;
    nlohmann::ordered_json summary;
    summary["gender"] = to_string(gender);
    summary["mode"] = to_string(mode);
    summary["label_threshold"] = threshold;
    summary["n_samples"] = samples.size();
    summary["n_nodes"] = net.n_nodes();
    summary["n_edges_distinct"] = net.n_edges_distinct();
    summary["n_edges_weighted"] = net.n_edges_weighted();
    if (net.nodes.empty()) {
        communities = {{"modularity", nullptr},
                       {"community_sizes", nlohmann::ordered_json::array()},
                       {"assignment", nlohmann::ordered_json::object()}};
        summary["modularity"] = nullptr;
        summary["n_communities"] = 0;
    } else {
        const CommunityPartition partition = detect_communities(net);
        nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
        for (const auto& [word, community] : partition.assignment)
            assignment[word] = community;
        communities = {{"modularity", partition.q},
                       {"community_sizes", partition.community_sizes},
                       {"assignment", std::move(assignment)}};
        summary["modularity"] = partition.q;
        summary["n_communities"] = partition.community_sizes.size();
    }
    write_text_file(out_path(config, stem + "_communities.json").string(),
                    json_text(communities));
    summary["tsv"] = stem + ".tsv";
    summary["graphml"] = stem + ".graphml";
    summary["communities"] = stem + "_communities.json";
    std::cout << json_text(summary);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Emotion arcs and gendered word networks for narrative corpora"};
    app.fallthrough(true);
    app.require_subcommand(1);

    std::string config_path;
    if (const char* env = std::getenv("NARRATIVE_ARCS_CONFIG")) config_path = env;
    app.add_option("--config", config_path, "key=value configuration file");

    // Global flags are recorded during parsing and applied over the config
    // file afterwards, so the command line always wins.
    std::vector<std::pair<std::string, std::string>> overrides;
    const auto config_option = [&](const std::string& flag, const std::string& key,
                                   const std::string& description) {
        app.add_option_function<std::string>(
            flag,
            [&overrides, key](const std::string& value) {
                overrides.emplace_back(key, value);
            },
            description);
    };
    config_option("--embeddings", "embeddings", "embedding file (word2vec binary or text)");
    config_option("--format", "format", "embedding format: binary|text|auto");
    config_option("--corpus", "corpus", "directory containing story files");
    config_option("--metadata", "metadata", "metadata CSV or JSON-lines file");
    config_option("--sentiment-lexicon", "sentiment_lexicon",
                  "word,score CSV for axis validation");
    config_option("--names-female", "names_female", "female first-name list");
    config_option("--names-male", "names_male", "male first-name list");
    config_option("--names-freq", "names_freq", "name,male_freq,female_freq CSV");
    config_option("--ambiguous", "ambiguous", "ambiguous-name policy: exclude|majority-list");
    config_option("--pos-lexicon", "pos_lexicon", "extra word TAG lines for the POS tagger");
    config_option("--stopwords", "stopwords", "stop-word list removed from windows");
    config_option("--kind", "kind", "only ingest synopsis|script|book stories");
    config_option("--gap", "gap", "cluster merge distance, 1..10");
    config_option("--span-mode", "span_mode", "slope span endpoints: start|end");
    config_option("--cooccur", "cooccur", "co-occurrence definition: leading|any");
    config_option("--period-bins", "period_bins", "years per period group");
    config_option("--output", "output", "output directory");
    config_option("--jobs", "jobs", "worker threads");
    app.add_flag_callback("--no-cache",
                          [&overrides] { overrides.emplace_back("cache", "false"); },
                          "recompute everything, ignore cached per-story analyses");

    // validate-axis
    CLI::App* cmd_validate = app.add_subcommand(
        "validate-axis", "correlate axis scores with a human happiness lexicon");

    // arc
    CLI::App* cmd_arc =
        app.add_subcommand("arc", "per-story emotion curves (CSV) and skyline SVG");
    std::string arc_story, arc_svg;
    cmd_arc->add_option("--story", arc_story, "emit a single story's CSV to stdout");
    cmd_arc->add_option("--svg", arc_svg, "skyline destination for --story");

    // slopes
    CLI::App* cmd_slopes = app.add_subcommand(
        "slopes", "happiness slopes across co-occurrence clusters, gender comparison");
    std::string slopes_group = "none";
    bool slopes_sweep = false;
    cmd_slopes->add_option("--group", slopes_group, "comparison groups: none|period|genre")
        ->check(CLI::IsMember({"none", "period", "genre"}));
    cmd_slopes->add_flag("--gap-sweep", slopes_sweep, "repeat comparisons for gaps 1..10");

    // levels
    CLI::App* cmd_levels = app.add_subcommand(
        "levels", "mean z-scores on co-occurrence vs own-only segments");

    // network
    CLI::App* cmd_network =
        app.add_subcommand("network", "word co-occurrence network for one gender");
    std::string network_gender, network_mode = "single";
    std::optional<std::uint64_t> network_threshold;
    cmd_network->add_option("--gender", network_gender, "female|male")
        ->required()
        ->check(CLI::IsMember({"female", "male"}));
    cmd_network->add_option("--mode", network_mode, "window selection: single|cooccur")
        ->check(CLI::IsMember({"single", "cooccur"}));
    cmd_network->add_option("--label-threshold", network_threshold,
                            "minimum links for a GraphML label");

    // verbs
    CLI::App* cmd_verbs = app.add_subcommand("verbs", "P(verb) in name windows per gender");
    std::string verbs_mode = "single";
    cmd_verbs->add_option("--mode", verbs_mode, "window selection: single|cooccur")
        ->check(CLI::IsMember({"single", "cooccur"}));

    // endorse
    CLI::App* cmd_endorse = app.add_subcommand(
        "endorse", "regress rating or votes on stereotype predictors");
    std::string endorse_outcome = "rating";
    cmd_endorse->add_option("--outcome", endorse_outcome, "rating|votes")
        ->check(CLI::IsMember({"rating", "votes"}));
    cmd_endorse->add_flag_callback(
        "--votes-raw", [&overrides] { overrides.emplace_back("log_votes", "false"); },
        "regress raw vote counts instead of log(votes)");

    // report
    CLI::App* cmd_report =
        app.add_subcommand("report", "run the whole pipeline, emit one combined JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    RunConfig config;
    try {
        if (!config_path.empty()) load_config_file(config, config_path);
        for (const auto& [key, value] : overrides) apply_config_entry(config, key, value);
        validate_config(config, cmd_validate->parsed() ? ConfigScope::axis_only
                                                       : ConfigScope::corpus);
        if (cmd_report->parsed() && config.sentiment_lexicon_path.empty())
            throw std::invalid_argument(
                "--sentiment-lexicon is required by the report subcommand");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (cmd_validate->parsed()) {
            emit(config, "axis_validation.json", validate_axis_report(config));
            return 0;
        }

        const CorpusAnalysis analysis = analyze_corpus(config, &std::cerr);

        if (cmd_arc->parsed()) return run_arc(config, analysis, arc_story, arc_svg);

        if (cmd_slopes->parsed()) {
            const GroupKey group = slopes_group == "period" ? GroupKey::period
                                   : slopes_group == "genre" ? GroupKey::genre
                                                             : GroupKey::none;
            write_text_file(out_path(config, "slope_fits.csv").string(),
                            slope_fits_csv(analysis));
            emit(config, "slopes.json",
                 slopes_section(config, analysis, group, slopes_sweep));
            return 0;
        }

        if (cmd_levels->parsed()) {
            emit(config, "levels.json", levels_section(analysis));
            return 0;
        }

        if (cmd_network->parsed()) {
            const Gender gender =
                network_gender == "male" ? Gender::male : Gender::female;
            return run_network(config, analysis, gender,
                               window_mode_from_string(network_mode), network_threshold);
        }

        if (cmd_verbs->parsed()) {
            const nlohmann::ordered_json all = verbs_section(config, analysis);
            nlohmann::ordered_json j;
            j["mode"] = verbs_mode;
            j["rates"] = all.at(verbs_mode);
            emit(config, "verbs.json", j);
            return 0;
        }

        if (cmd_endorse->parsed()) {
            const RowBuild rows = endorsement_rows(analysis);
            const Outcome outcome =
                endorse_outcome == "votes" ? Outcome::votes : Outcome::rating;
            nlohmann::ordered_json j;
            j["n_rows"] = rows.rows.size();
            j["exclusions"] = {{"no_rating", rows.exclusions.no_rating},
                               {"no_votes", rows.exclusions.no_votes},
                               {"no_female_increase", rows.exclusions.no_female_increase},
                               {"no_male_increase", rows.exclusions.no_male_increase},
                               {"no_leading", rows.exclusions.no_leading}};
            const RegressionReport report =
                endorsement_regression(rows.rows, outcome, config.log_votes);
            nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
            for (const auto& [name, coef] : report.coefficients)
                coeffs.push_back({{"name", name},
                                  {"estimate", coef.estimate},
                                  {"std_error", coef.std_error},
                                  {"t", coef.t},
                                  {"p", coef.p},
                                  {"stars", coef.stars}});
            j["regression"] = {{"outcome", report.outcome_label},
                               {"n_cases", report.n_cases},
                               {"r_squared", report.r_squared},
                               {"f_statistic", report.f_statistic},
                               {"coefficients", std::move(coeffs)}};
            emit(config, "endorse_" + endorse_outcome + ".json", j);
            std::cerr << format_regression_table(report);  // human-readable copy
            return 0;
        }

        if (cmd_report->parsed()) {
            write_arc_artifacts(config, analysis);
            write_text_file(out_path(config, "slope_fits.csv").string(),
                            slope_fits_csv(analysis));
            emit(config, "report.json", build_report(config, analysis));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace narrative
