#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "narrative/pipeline.hpp"
#include "narrative/postag.hpp"

namespace narrative {

namespace {

using nlohmann::ordered_json;

ordered_json opt_json(const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json axis_json(const SentimentAxis& axis) {
    ordered_json j;
    j["positive_seeds"] = axis.positive_words;
    j["negative_seeds"] = axis.negative_words;
    j["found_positive"] = axis.found_positive;
    j["found_negative"] = axis.found_negative;
    j["missing_words"] = axis.missing_words;
    j["dimension"] = axis.vector.size();
    return j;
}

}  // namespace

nlohmann::ordered_json validate_axis_report(const RunConfig& config,
                                            const EmbeddingTable& table) {
    const std::vector<LexiconEntry> lexicon =
        load_lexicon_csv_file(config.sentiment_lexicon_path);
    const SentimentAxis axis =
        build_axis(table, default_positive_seeds(), default_negative_seeds());
    const ValidationReport report = validate_axis(table, axis, lexicon);

    ordered_json j;
    j["embeddings"] = table.source_label();
    j["n_embeddings"] = table.size();
    j["axis"] = axis_json(axis);
    j["lexicon"] = config.sentiment_lexicon_path;
    j["n_lexicon_words"] = lexicon.size();
    j["validation"] = {{"pearson_r", report.pearson_r},
                       {"n_matched", report.n_matched},
                       {"p_value", report.p_value}};
    return j;
}

nlohmann::ordered_json validate_axis_report(const RunConfig& config) {
    EmbeddingParseOptions options;
    auto& vocab = options.vocab_filter.emplace();
    for (const std::string& w : default_positive_seeds()) vocab.insert(w);
    for (const std::string& w : default_negative_seeds()) vocab.insert(w);
    for (const LexiconEntry& e : load_lexicon_csv_file(config.sentiment_lexicon_path))
        vocab.insert(e.word);
    const EmbeddingTable table =
        load_embeddings(config.embeddings_path, config.embeddings_format, options);
    return validate_axis_report(config, table);
}

namespace {

void append_csv_double(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

std::string arc_csv(const StoryAnalysis& analysis) {
    std::vector<const HappinessCurve*> curves;
    if (analysis.has_pair) {
        curves.push_back(&analysis.female_curve);
        curves.push_back(&analysis.male_curve);
    }
    std::string out = "segment,raw,z";
    for (const HappinessCurve* curve : curves) {
        out += ",masked_" + curve->character;
        out += ",cumulative_" + curve->character;
        out += ",normalized01_" + curve->character;
    }
    out += '\n';
    for (std::size_t i = 0; i < analysis.scores.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        append_csv_double(out, analysis.scores[i].raw);
        out += ',';
        append_csv_double(out, analysis.scores[i].z);
        for (const HappinessCurve* curve : curves) {
            out += ',';
            append_csv_double(out, curve->masked[i]);
            out += ',';
            append_csv_double(out, curve->cumulative[i]);
            out += ',';
            append_csv_double(out, curve->normalized01[i]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json corpus_section(const CorpusAnalysis& analysis) {
    ordered_json failed = ordered_json::array();
    std::size_t n_analyzed = 0, n_pairs = 0;
    for (const StoryAnalysis& a : analysis.analyses) {
        if (a.analyzable) ++n_analyzed;
        else failed.push_back({{"id", a.story_id}, {"error", a.error}});
        if (a.has_pair) ++n_pairs;
    }
    ordered_json j;
    j["n_stories"] = analysis.stories.size();
    j["n_analyzed"] = n_analyzed;
    j["n_with_leading_pair"] = n_pairs;
    j["n_eligible"] = analysis.n_eligible;
    j["failed"] = std::move(failed);
    j["warnings"] = analysis.ingest_report.warnings;
    j["rejected_rows"] = analysis.ingest_report.rejected_rows;
    return j;
}

nlohmann::ordered_json arcs_section(const CorpusAnalysis& analysis,
                                    bool include_artifact_paths) {
    ordered_json stories = ordered_json::array();
    for (std::size_t i = 0; i < analysis.analyses.size(); ++i) {
        const StoryAnalysis& a = analysis.analyses[i];
        if (!a.analyzable) continue;
        ordered_json s;
        s["id"] = a.story_id;
        s["n_segments"] = analysis.stories[i].segments.size();
        s["eligible"] = a.eligible;
        s["leading_female"] = a.roster.leading_female
                                  ? ordered_json(*a.roster.leading_female)
                                  : ordered_json(nullptr);
        s["leading_male"] = a.roster.leading_male ? ordered_json(*a.roster.leading_male)
                                                  : ordered_json(nullptr);
        s["n_cooccur"] = a.cooccurrence.cooccur.size();
        if (a.has_pair) {
            s["final_cumulative"] = {{"female", a.female_curve.cumulative.back()},
                                     {"male", a.male_curve.cumulative.back()}};
        }
        if (include_artifact_paths) {
            s["csv"] = "arc_" + sanitize_story_id(a.story_id) + ".csv";
            s["svg"] = "arc_" + sanitize_story_id(a.story_id) + ".svg";
        }
        stories.push_back(std::move(s));
    }
    ordered_json j;
    j["stories"] = std::move(stories);
    return j;
}

std::vector<StorySlopes> story_slopes_table(const CorpusAnalysis& analysis) {
    std::vector<StorySlopes> table;
    for (std::size_t i = 0; i < analysis.analyses.size(); ++i) {
        const StoryAnalysis& a = analysis.analyses[i];
        if (!a.eligible || !a.has_pair) continue;
        StorySlopes row;
        row.story_id = a.story_id;
        row.year = analysis.stories[i].meta.year;
        row.genres = analysis.stories[i].meta.genres;
        row.female_increase = a.female_summary.increase;
        row.female_decrease = a.female_summary.decrease;
        row.male_increase = a.male_summary.increase;
        row.male_decrease = a.male_summary.decrease;
        table.push_back(std::move(row));
    }
    return table;
}

std::pair<std::optional<double>, std::optional<double>> slopes_for_gap(
    const StoryAnalysis& analysis, std::size_t gap, SpanMode span_mode, Gender gender) {
    const HappinessCurve& curve =
        gender == Gender::female ? analysis.female_curve : analysis.male_curve;
    const std::vector<CooccurrenceCluster> clusters =
        merge_clusters(analysis.cooccurrence.cooccur, gap);
    const SlopeSummary summary = summarize_slopes(fit_spans(curve, clusters, span_mode));
    return {summary.increase, summary.decrease};
}

namespace {

ordered_json comparison_json(const GenderComparison& cmp) {
    ordered_json j;
    j["group"] = cmp.group_label;
    j["female_mean"] = cmp.female_n ? ordered_json(cmp.female_mean) : ordered_json(nullptr);
    j["female_sd"] = cmp.female_n >= 2 ? ordered_json(cmp.female_sd) : ordered_json(nullptr);
    j["female_n"] = cmp.female_n;
    j["male_mean"] = cmp.male_n ? ordered_json(cmp.male_mean) : ordered_json(nullptr);
    j["male_sd"] = cmp.male_n >= 2 ? ordered_json(cmp.male_sd) : ordered_json(nullptr);
    j["male_n"] = cmp.male_n;
    j["undersized"] = cmp.undersized;
    if (cmp.undersized) {
        j["t"] = nullptr;
        j["p"] = nullptr;
    } else {
        j["t"] = cmp.t_statistic;
        j["p"] = cmp.p_value;
    }
    j["stars"] = cmp.stars;
    return j;
}

ordered_json comparisons_json(const std::vector<StorySlopes>& table, GroupKey group_key,
                              int period_bin_years) {
    ordered_json j;
    for (const SlopeMetric metric : {SlopeMetric::increase, SlopeMetric::decrease}) {
        ordered_json arr = ordered_json::array();
        for (const GenderComparison& cmp :
             compare_corpus(table, group_key, metric, period_bin_years))
            arr.push_back(comparison_json(cmp));
        j[metric == SlopeMetric::increase ? "increase" : "decrease"] = std::move(arr);
    }
    return j;
}

}  // namespace

nlohmann::ordered_json slopes_section(const RunConfig& config,
                                      const CorpusAnalysis& analysis, GroupKey group_key,
                                      bool gap_sweep) {
    const std::vector<StorySlopes> table = story_slopes_table(analysis);

    ordered_json per_story = ordered_json::array();
    for (const StorySlopes& row : table) {
        ordered_json s;
        s["story_id"] = row.story_id;
        s["year"] = row.year ? ordered_json(*row.year) : ordered_json(nullptr);
        s["genres"] = row.genres;
        s["female_increase"] = opt_json(row.female_increase);
        s["female_decrease"] = opt_json(row.female_decrease);
        s["male_increase"] = opt_json(row.male_increase);
        s["male_decrease"] = opt_json(row.male_decrease);
        per_story.push_back(std::move(s));
    }

    ordered_json j;
    j["gap"] = config.gap;
    j["span_mode"] =
        config.span_mode == SpanMode::start_to_start ? "start_to_start" : "end_to_start";
    j["cooccur_mode"] = config.cooccur_mode == CooccurMode::leading ? "leading" : "any";
    j["n_stories"] = table.size();
    j["per_story"] = std::move(per_story);
    j["comparisons"] = comparisons_json(table, group_key, config.period_bin_years);

    if (gap_sweep) {
        ordered_json sweep;
        for (std::size_t gap = 1; gap <= 10; ++gap) {
            std::vector<StorySlopes> gap_table;
            for (std::size_t i = 0; i < analysis.analyses.size(); ++i) {
                const StoryAnalysis& a = analysis.analyses[i];
                if (!a.eligible || !a.has_pair) continue;
                StorySlopes row;
                row.story_id = a.story_id;
                row.year = analysis.stories[i].meta.year;
                row.genres = analysis.stories[i].meta.genres;
                std::tie(row.female_increase, row.female_decrease) =
                    slopes_for_gap(a, gap, config.span_mode, Gender::female);
                std::tie(row.male_increase, row.male_decrease) =
                    slopes_for_gap(a, gap, config.span_mode, Gender::male);
                gap_table.push_back(std::move(row));
            }
            sweep[std::to_string(gap)] =
                comparisons_json(gap_table, group_key, config.period_bin_years);
        }
        j["gap_sweep"] = std::move(sweep);
    }
    return j;
}

std::string slope_fits_csv(const CorpusAnalysis& analysis) {
    std::string out = "story_id,character,gender,span_start,span_end,k,n\n";
    for (const StoryAnalysis& a : analysis.analyses) {
        if (!a.has_pair) continue;
        const auto emit = [&](const std::vector<SlopeFit>& fits, const std::string& name,
                              const char* gender) {
            for (const SlopeFit& fit : fits) {
                out += a.story_id + ',' + name + ',' + gender + ',' +
                       std::to_string(fit.span_start) + ',' + std::to_string(fit.span_end) +
                       ',';
                append_csv_double(out, fit.k);
                out += ',' + std::to_string(fit.n) + '\n';
            }
        };
        emit(a.female_fits, *a.roster.leading_female, "female");
        emit(a.male_fits, *a.roster.leading_male, "male");
    }
    return out;
}

nlohmann::ordered_json levels_section(const CorpusAnalysis& analysis) {
    ordered_json stories = ordered_json::array();
    for (const StoryAnalysis& a : analysis.analyses) {
        if (!a.has_pair) continue;
        ordered_json rows = ordered_json::array();
        for (const CharacterLevels& lv : a.levels) {
            const Character* character = a.roster.find(lv.character);
            ordered_json r;
            r["character"] = lv.character;
            r["gender"] = character ? to_string(character->gender) : "";
            r["cooccur_mean"] = opt_json(lv.cooccur_mean);
            r["own_only_mean"] = opt_json(lv.own_only_mean);
            r["overall_mean"] = opt_json(lv.overall_mean);
            rows.push_back(std::move(r));
        }
        stories.push_back({{"id", a.story_id}, {"levels", std::move(rows)}});
    }
    ordered_json j;
    j["stories"] = std::move(stories);
    return j;
}

namespace {

std::unordered_set<std::string> load_stopwords(const std::string& path) {
    std::unordered_set<std::string> words;
    if (path.empty()) return words;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword list: " + path);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) words.insert(lowercase(line));
    }
    return words;
}

}  // namespace

std::vector<WindowSample> pooled_windows(const RunConfig& config,
                                         const CorpusAnalysis& analysis, Gender gender,
                                         WindowMode mode) {
    const std::unordered_set<std::string> stopwords = load_stopwords(config.stopwords_path);
    std::vector<WindowSample> pooled;
    for (const StoryAnalysis& a : analysis.analyses) {
        if (!a.eligible || !a.has_pair) continue;
        const std::vector<WindowSample>& source =
            mode == WindowMode::single ? a.windows_single : a.windows_cooccur;
        for (const WindowSample& sample : source) {
            if (sample.gender != gender) continue;
            if (stopwords.empty()) {
                pooled.push_back(sample);
                continue;
            }
            WindowSample filtered;
            filtered.story_id = sample.story_id;
            filtered.gender = sample.gender;
            for (const std::string& token : sample.tokens)
                if (!stopwords.count(token)) filtered.tokens.push_back(token);
            pooled.push_back(std::move(filtered));
        }
    }
    return pooled;
}

namespace {

ordered_json network_summary(const RunConfig& config, const CorpusAnalysis& analysis,
                             Gender gender, WindowMode mode) {
    const std::vector<WindowSample> samples =
        pooled_windows(config, analysis, gender, mode);
    const CoNetwork net = build_network(samples);

    ordered_json j;
    j["gender"] = to_string(gender);
    j["mode"] = to_string(mode);
    j["n_samples"] = samples.size();
    j["n_nodes"] = net.n_nodes();
    j["n_edges_distinct"] = net.n_edges_distinct();
    j["n_edges_weighted"] = net.n_edges_weighted();
    if (net.nodes.empty()) {
        j["modularity"] = nullptr;
        j["n_communities"] = 0;
        j["top_communities"] = ordered_json::array();
        return j;
    }

    const CommunityPartition partition = detect_communities(net);
    j["modularity"] = partition.q;
    j["n_communities"] = partition.community_sizes.size();

    // Top four communities by size, each with its highest-multiplicity words.
    ordered_json tops = ordered_json::array();
    const std::size_t n_top = std::min<std::size_t>(4, partition.community_sizes.size());
    for (std::size_t id = 0; id < n_top; ++id) {
        std::vector<std::pair<std::string, std::uint64_t>> members;
        for (const auto& [word, community] : partition.assignment)
            if (community == id) members.push_back({word, net.nodes.at(word)});
        std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        ordered_json terms = ordered_json::array();
        for (std::size_t i = 0; i < members.size() && i < 10; ++i)
            terms.push_back(members[i].first);
        tops.push_back({{"id", id},
                        {"size", partition.community_sizes[id]},
                        {"top_terms", std::move(terms)}});
    }
    j["top_communities"] = std::move(tops);
    return j;
}

}  // namespace

nlohmann::ordered_json networks_section(const RunConfig& config,
                                        const CorpusAnalysis& analysis) {
    ordered_json j;
    for (const WindowMode mode : {WindowMode::single, WindowMode::cooccur}) {
        ordered_json per_gender;
        for (const Gender gender : {Gender::female, Gender::male})
            per_gender[to_string(gender)] = network_summary(config, analysis, gender, mode);
        j[to_string(mode)] = std::move(per_gender);
    }
    return j;
}

nlohmann::ordered_json verbs_section(const RunConfig& config,
                                     const CorpusAnalysis& analysis) {
    const PosLexicon overrides = config.pos_lexicon_path.empty()
                                     ? PosLexicon{}
                                     : load_pos_lexicon_file(config.pos_lexicon_path);
    const PosLexicon* overrides_ptr = overrides.empty() ? nullptr : &overrides;

    ordered_json j;
    for (const WindowMode mode : {WindowMode::single, WindowMode::cooccur}) {
        ordered_json per_gender;
        for (const Gender gender : {Gender::female, Gender::male}) {
            const std::vector<WindowSample> samples =
                pooled_windows(config, analysis, gender, mode);
            ordered_json r;
            std::size_t n_tokens = 0;
            for (const WindowSample& s : samples) n_tokens += s.tokens.size();
            if (n_tokens == 0) {
                r = {{"p_verb", nullptr}, {"n_tokens", 0}, {"n_verb_tokens", 0}};
            } else {
                const VerbRate rate = verb_rate(samples, gender, overrides_ptr);
                r = {{"p_verb", rate.p_verb},
                     {"n_tokens", rate.n_tokens},
                     {"n_verb_tokens", rate.n_verb_tokens}};
            }
            per_gender[to_string(gender)] = std::move(r);
        }
        j[to_string(mode)] = std::move(per_gender);
    }
    return j;
}

RowBuild endorsement_rows(const CorpusAnalysis& analysis) {
    std::vector<StoryAnalysisSummary> summaries;
    for (std::size_t i = 0; i < analysis.analyses.size(); ++i) {
        const StoryAnalysis& a = analysis.analyses[i];
        if (!a.eligible) continue;
        StoryAnalysisSummary s;
        s.story_id = a.story_id;
        s.rating = analysis.stories[i].meta.rating;
        if (analysis.stories[i].meta.votes && *analysis.stories[i].meta.votes > 0)
            s.votes = static_cast<std::uint64_t>(*analysis.stories[i].meta.votes);
        s.dominance = a.roster.dominance;
        s.n_cooccur = a.cooccurrence.cooccur.size();
        if (a.has_pair) {
            s.female_increase = a.female_summary.increase;
            s.male_increase = a.male_summary.increase;
        }
        summaries.push_back(std::move(s));
    }
    return build_rows(summaries);
}

nlohmann::ordered_json endorsement_section(const RunConfig& config,
                                           const CorpusAnalysis& analysis) {
    const RowBuild build = endorsement_rows(analysis);

    ordered_json j;
    j["n_input_stories"] = build.rows.size() + build.exclusions.total();
    j["n_rows"] = build.rows.size();
    j["exclusions"] = {{"no_rating", build.exclusions.no_rating},
                       {"no_votes", build.exclusions.no_votes},
                       {"no_female_increase", build.exclusions.no_female_increase},
                       {"no_male_increase", build.exclusions.no_male_increase},
                       {"no_leading", build.exclusions.no_leading}};

    const auto regression_json = [&](Outcome outcome) -> ordered_json {
        try {
            const RegressionReport report =
                endorsement_regression(build.rows, outcome, config.log_votes);
            ordered_json coeffs = ordered_json::array();
            for (const auto& [name, coef] : report.coefficients) {
                coeffs.push_back({{"name", name},
                                  {"estimate", coef.estimate},
                                  {"std_error", coef.std_error},
                                  {"t", coef.t},
                                  {"p", coef.p},
                                  {"stars", coef.stars}});
            }
            ordered_json r;
            r["outcome"] = report.outcome_label;
            r["n_cases"] = report.n_cases;
            r["r_squared"] = report.r_squared;
            r["f_statistic"] = report.f_statistic;
            r["coefficients"] = std::move(coeffs);
            return r;
        } catch (const std::exception& e) {
            return ordered_json{{"error", e.what()}};
        }
    };
    j["rating"] = regression_json(Outcome::rating);
    j["votes"] = regression_json(Outcome::votes);
    return j;
}

nlohmann::ordered_json build_report(const RunConfig& config, const CorpusAnalysis& analysis) {
    ordered_json j;
    j["tool"] = "narrative-arcs";
    ordered_json cfg;
    cfg["embeddings"] = config.embeddings_path;
    cfg["corpus"] = config.corpus_dir;
    cfg["gap"] = config.gap;
    cfg["span_mode"] =
        config.span_mode == SpanMode::start_to_start ? "start_to_start" : "end_to_start";
    cfg["cooccur_mode"] = config.cooccur_mode == CooccurMode::leading ? "leading" : "any";
    cfg["period_bins"] = config.period_bin_years;
    j["config"] = std::move(cfg);
    j["axis_validation"] = validate_axis_report(config, *analysis.table);
    j["corpus"] = corpus_section(analysis);
    j["arcs"] = arcs_section(analysis, true);
    j["slopes"] = slopes_section(config, analysis, GroupKey::none, false);
    j["levels"] = levels_section(analysis);
    j["networks"] = networks_section(config, analysis);
    j["verbs"] = verbs_section(config, analysis);
    j["endorsement"] = endorsement_section(config, analysis);
    return j;
}

}  // namespace narrative
