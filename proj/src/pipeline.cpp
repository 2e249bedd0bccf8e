#include "narrative/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace fs = std::filesystem;

namespace narrative {

namespace {

bool parse_bool(const std::string& key, const std::string& value) {
    const std::string v = lowercase(value);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::invalid_argument("config key '" + key + "': expected a boolean, got '" +
                                value + "'");
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const long long n = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return n;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': expected an integer, got '" +
                                    value + "'");
    }
}

}  // namespace

void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "embeddings") config.embeddings_path = value;
    else if (key == "format") {
        if (value != "binary" && value != "text" && value != "auto")
            throw std::invalid_argument("config key 'format': expected binary|text|auto");
        config.embeddings_format = value;
    } else if (key == "corpus") config.corpus_dir = value;
    else if (key == "metadata") config.metadata_path = value;
    else if (key == "sentiment_lexicon") config.sentiment_lexicon_path = value;
    else if (key == "names_female") config.names_female_path = value;
    else if (key == "names_male") config.names_male_path = value;
    else if (key == "names_freq") config.names_freq_path = value;
    else if (key == "pos_lexicon") config.pos_lexicon_path = value;
    else if (key == "stopwords") config.stopwords_path = value;
    else if (key == "ambiguous") {
        if (value == "exclude") config.ambiguous_policy = AmbiguousPolicy::exclude;
        else if (value == "majority-list")
            config.ambiguous_policy = AmbiguousPolicy::majority_list;
        else
            throw std::invalid_argument(
                "config key 'ambiguous': expected exclude|majority-list");
    } else if (key == "kind") {
        if (value.empty()) config.kind_filter.reset();
        else config.kind_filter = source_kind_from(value);
    } else if (key == "gap") config.gap = static_cast<std::size_t>(parse_int(key, value));
    else if (key == "span_mode") {
        if (value == "start") config.span_mode = SpanMode::start_to_start;
        else if (value == "end") config.span_mode = SpanMode::end_to_start;
        else throw std::invalid_argument("config key 'span_mode': expected start|end");
    } else if (key == "cooccur") {
        if (value == "leading") config.cooccur_mode = CooccurMode::leading;
        else if (value == "any") config.cooccur_mode = CooccurMode::any;
        else throw std::invalid_argument("config key 'cooccur': expected leading|any");
    } else if (key == "period_bins")
        config.period_bin_years = static_cast<int>(parse_int(key, value));
    else if (key == "label_threshold_single")
        config.label_threshold_single = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "label_threshold_cooccur")
        config.label_threshold_cooccur = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "log_votes") config.log_votes = parse_bool(key, value);
    else if (key == "output") config.output_dir = value;
    else if (key == "jobs") config.jobs = static_cast<std::size_t>(parse_int(key, value));
    else if (key == "cache") config.use_cache = parse_bool(key, value);
    else throw std::invalid_argument("unknown config key '" + key + "'");
}

void load_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + " line " + std::to_string(lineno) +
                                        ": expected key=value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        apply_config_entry(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

namespace {

void require_file(const std::string& path, const std::string& flag) {
    if (path.empty())
        throw std::invalid_argument(flag + " is required but not set");
    if (!fs::exists(path))
        throw std::invalid_argument(flag + ": no such file: " + path);
}

}  // namespace

void validate_config(const RunConfig& config, ConfigScope scope) {
    require_file(config.embeddings_path, "--embeddings");
    if (config.gap < 1 || config.gap > 10)
        throw std::invalid_argument("--gap must be between 1 and 10 (got " +
                                    std::to_string(config.gap) + ")");
    if (config.jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
    if (config.period_bin_years < 1)
        throw std::invalid_argument("--period-bins must be at least 1");
    if (!config.pos_lexicon_path.empty()) require_file(config.pos_lexicon_path, "--pos-lexicon");
    if (!config.stopwords_path.empty()) require_file(config.stopwords_path, "--stopwords");

    if (scope == ConfigScope::axis_only) {
        require_file(config.sentiment_lexicon_path, "--sentiment-lexicon");
        return;
    }
    if (config.corpus_dir.empty())
        throw std::invalid_argument("--corpus is required but not set");
    if (!fs::is_directory(config.corpus_dir))
        throw std::invalid_argument("--corpus: no such directory: " + config.corpus_dir);
    require_file(config.metadata_path, "--metadata");
    require_file(config.names_female_path, "--names-female");
    require_file(config.names_male_path, "--names-male");
    if (!config.names_freq_path.empty()) require_file(config.names_freq_path, "--names-freq");
    if (!config.sentiment_lexicon_path.empty())
        require_file(config.sentiment_lexicon_path, "--sentiment-lexicon");
}

// --- cache keys ------------------------------------------------------------

namespace {

std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 1469598103934665603ULL) {
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xF];
    return out;
}

std::string file_identity(const std::string& path) {
    std::error_code ec;
    const auto size = fs::file_size(path, ec);
    return path + ":" + (ec ? "?" : std::to_string(size));
}

}  // namespace

std::string score_cache_key(const Story& story, const RunConfig& config) {
    std::string material = "score:v1\x1f";
    for (const Segment& seg : story.segments) {
        material += seg.raw_text;
        material += '\x1f';
    }
    material += to_string(story.meta.source_kind);
    for (const auto& [name, gender] : story.meta.cast_genders)
        material += '\x1f' + name + '=' + gender;
    material += '\x1f' + file_identity(config.embeddings_path);
    material += '\x1f' + file_identity(config.names_female_path);
    material += '\x1f' + file_identity(config.names_male_path);
    if (!config.names_freq_path.empty())
        material += '\x1f' + file_identity(config.names_freq_path);
    material += config.ambiguous_policy == AmbiguousPolicy::exclude ? "\x1f""excl" : "\x1f""maj";
    return hex64(fnv1a(material));
}

std::string slope_cache_key(const Story& story, const RunConfig& config) {
    std::string material = "slope:v1\x1f" + score_cache_key(story, config);
    material += "\x1f" + std::to_string(config.gap);
    material += config.span_mode == SpanMode::start_to_start ? "\x1f""start" : "\x1f""end";
    material += config.cooccur_mode == CooccurMode::leading ? "\x1f""lead" : "\x1f""any";
    return hex64(fnv1a(material));
}

// --- per-story cache files -------------------------------------------------

std::string sanitize_story_id(const std::string& id) {
    std::string out = id;
    for (char& c : out)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.')
            c = '_';
    return out;
}

namespace {

nlohmann::ordered_json roster_to_json(const CharacterRoster& roster) {
    nlohmann::ordered_json chars = nlohmann::ordered_json::array();
    for (const Character& c : roster.characters) {
        chars.push_back({{"name", c.name},
                         {"gender", to_string(c.gender)},
                         {"segments", c.mention_segments},
                         {"count", c.mention_count},
                         {"first_segment", c.first_mention_segment},
                         {"first_position", c.first_mention_position}});
    }
    nlohmann::ordered_json j;
    j["characters"] = std::move(chars);
    j["leading_female"] =
        roster.leading_female ? nlohmann::ordered_json(*roster.leading_female) : nullptr;
    j["leading_male"] =
        roster.leading_male ? nlohmann::ordered_json(*roster.leading_male) : nullptr;
    j["dominance"] = roster.dominance ? nlohmann::ordered_json(to_string(*roster.dominance))
                                      : nullptr;
    return j;
}

CharacterRoster roster_from_json(const nlohmann::ordered_json& j) {
    CharacterRoster roster;
    for (const auto& c : j.at("characters")) {
        Character ch;
        ch.name = c.at("name").get<std::string>();
        ch.gender = c.at("gender").get<std::string>() == "male" ? Gender::male
                                                                : Gender::female;
        ch.mention_segments = c.at("segments").get<std::vector<std::size_t>>();
        ch.mention_count = c.at("count").get<std::size_t>();
        ch.first_mention_segment = c.at("first_segment").get<std::size_t>();
        ch.first_mention_position = c.at("first_position").get<std::size_t>();
        roster.characters.push_back(std::move(ch));
    }
    if (!j.at("leading_female").is_null())
        roster.leading_female = j.at("leading_female").get<std::string>();
    if (!j.at("leading_male").is_null())
        roster.leading_male = j.at("leading_male").get<std::string>();
    if (!j.at("dominance").is_null())
        roster.dominance = j.at("dominance").get<std::string>() == "male" ? Gender::male
                                                                          : Gender::female;
    return roster;
}

nlohmann::ordered_json scores_to_json(const std::vector<SegmentScore>& scores) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SegmentScore& s : scores)
        arr.push_back({{"raw", s.raw}, {"z", s.z}, {"n", s.n_scored_tokens}});
    return arr;
}

std::vector<SegmentScore> scores_from_json(const nlohmann::ordered_json& arr) {
    std::vector<SegmentScore> scores;
    scores.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        SegmentScore s;
        s.index = i;
        s.raw = arr[i].at("raw").get<double>();
        s.z = arr[i].at("z").get<double>();
        s.n_scored_tokens = arr[i].at("n").get<std::size_t>();
        scores.push_back(s);
    }
    return scores;
}

nlohmann::ordered_json fits_to_json(const std::vector<SlopeFit>& fits) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SlopeFit& f : fits)
        arr.push_back({{"start", f.span_start}, {"end", f.span_end}, {"k", f.k}, {"n", f.n}});
    return arr;
}

std::vector<SlopeFit> fits_from_json(const nlohmann::ordered_json& arr) {
    std::vector<SlopeFit> fits;
    fits.reserve(arr.size());
    for (const auto& f : arr) {
        SlopeFit fit;
        fit.span_start = f.at("start").get<std::size_t>();
        fit.span_end = f.at("end").get<std::size_t>();
        fit.k = f.at("k").get<double>();
        fit.n = f.at("n").get<std::size_t>();
        fits.push_back(fit);
    }
    return fits;
}

template <typename SetT>
nlohmann::ordered_json set_to_json(const SetT& s) {
    return nlohmann::ordered_json(std::vector<std::size_t>(s.begin(), s.end()));
}

std::set<std::size_t> set_from_json(const nlohmann::ordered_json& arr) {
    std::set<std::size_t> out;
    for (const auto& v : arr) out.insert(v.get<std::size_t>());
    return out;
}

struct CacheFile {
    fs::path path;
    nlohmann::ordered_json content;  // loaded (possibly stale) content
    bool loaded = false;
};

CacheFile open_cache(const RunConfig& config, const std::string& story_id) {
    CacheFile cache;
    cache.path =
        fs::path(config.output_dir) / "cache" / (sanitize_story_id(story_id) + ".json");
    if (!config.use_cache) return cache;
    std::ifstream in(cache.path);
    if (!in) return cache;
    try {
        in >> cache.content;
        cache.loaded = cache.content.is_object();
    } catch (const nlohmann::json::exception&) {
        cache.loaded = false;  // unreadable cache entries are just recomputed
    }
    return cache;
}

}  // namespace

// --- corpus analysis -------------------------------------------------------

namespace {

StoryAnalysis analyze_story(const Story& story, const EmbeddingTable& table,
                            const SentimentAxis& axis, const NameLexicon& lexicon,
                            const RunConfig& config) {
    StoryAnalysis a;
    a.story_id = story.meta.id;

    const std::string score_key = score_cache_key(story, config);
    const std::string slope_key = slope_cache_key(story, config);
    CacheFile cache = open_cache(config, story.meta.id);

    try {
        if (cache.loaded && cache.content.value("score_key", "") == score_key) {
            a.scores = scores_from_json(cache.content.at("scores"));
            a.roster = roster_from_json(cache.content.at("roster"));
            a.scores_from_cache = true;
        } else {
            a.scores = score_segments(story, table, axis);
            a.roster = leading_characters(detect_characters(story, lexicon));
        }

        a.has_pair = a.roster.leading_female.has_value() && a.roster.leading_male.has_value();
        a.eligible = story.segments.size() > 5 && a.roster.has_gender(Gender::female) &&
                     a.roster.has_gender(Gender::male);

        if (a.has_pair) {
            a.female_curve =
                normalize01(character_curve(a.scores, a.roster, *a.roster.leading_female));
            a.male_curve =
                normalize01(character_curve(a.scores, a.roster, *a.roster.leading_male));

            if (a.scores_from_cache && cache.loaded &&
                cache.content.value("slope_key", "") == slope_key) {
                const auto& slopes = cache.content.at("slopes");
                a.cooccurrence.cooccur = set_from_json(slopes.at("cooccur"));
                a.cooccurrence.female_only = set_from_json(slopes.at("female_only"));
                a.cooccurrence.male_only = set_from_json(slopes.at("male_only"));
                a.female_fits = fits_from_json(slopes.at("female_fits"));
                a.male_fits = fits_from_json(slopes.at("male_fits"));
                a.slopes_from_cache = true;
            } else {
                a.cooccurrence = mark_cooccurrence(story, a.roster, config.cooccur_mode);
                const std::vector<CooccurrenceCluster> clusters =
                    merge_clusters(a.cooccurrence.cooccur, config.gap);
                a.female_fits = fit_spans(a.female_curve, clusters, config.span_mode);
                a.male_fits = fit_spans(a.male_curve, clusters, config.span_mode);
            }
            a.female_summary = summarize_slopes(a.female_fits);
            a.female_summary.character = *a.roster.leading_female;
            a.male_summary = summarize_slopes(a.male_fits);
            a.male_summary.character = *a.roster.leading_male;
            a.levels = happiness_levels(a.scores, a.roster, a.cooccurrence);

            const Character* female = a.roster.find(*a.roster.leading_female);
            const Character* male = a.roster.find(*a.roster.leading_male);
            a.windows_single = extract_windows(story, a.roster, *female, WindowMode::single);
            const std::vector<WindowSample> male_single =
                extract_windows(story, a.roster, *male, WindowMode::single);
            a.windows_single.insert(a.windows_single.end(), male_single.begin(),
                                    male_single.end());
            a.windows_cooccur = extract_windows(story, a.roster, *female, WindowMode::cooccur);
            const std::vector<WindowSample> male_cooccur =
                extract_windows(story, a.roster, *male, WindowMode::cooccur);
            a.windows_cooccur.insert(a.windows_cooccur.end(), male_cooccur.begin(),
                                     male_cooccur.end());
        }
        a.analyzable = true;
    } catch (const std::exception& e) {
        a.analyzable = false;
        a.eligible = false;
        a.error = e.what();
        return a;
    }

    if (config.use_cache && (!a.scores_from_cache || !a.slopes_from_cache)) {
        nlohmann::ordered_json entry;
        entry["version"] = 1;
        entry["score_key"] = score_key;
        entry["scores"] = scores_to_json(a.scores);
        entry["roster"] = roster_to_json(a.roster);
        if (a.has_pair) {
            entry["slope_key"] = slope_key;
            nlohmann::ordered_json slopes;
            slopes["cooccur"] = set_to_json(a.cooccurrence.cooccur);
            slopes["female_only"] = set_to_json(a.cooccurrence.female_only);
            slopes["male_only"] = set_to_json(a.cooccurrence.male_only);
            slopes["female_fits"] = fits_to_json(a.female_fits);
            slopes["male_fits"] = fits_to_json(a.male_fits);
            entry["slopes"] = std::move(slopes);
        }
        std::error_code ec;
        fs::create_directories(cache.path.parent_path(), ec);
        std::ofstream out(cache.path);
        if (out) out << entry.dump(2) << '\n';
    }
    return a;
}

}  // namespace

CorpusAnalysis analyze_corpus(const RunConfig& config, std::ostream* log) {
    CorpusAnalysis out;

    IngestOptions ingest_options;
    ingest_options.kind_filter = config.kind_filter;
    IngestResult ingested = ingest(config.corpus_dir, config.metadata_path, ingest_options);
    out.ingest_report = std::move(ingested.report);
    out.stories = std::move(ingested.stories);
    std::sort(out.stories.begin(), out.stories.end(),
              [](const Story& a, const Story& b) { return a.meta.id < b.meta.id; });

    const NameLexicon lexicon =
        load_name_lexicon(config.names_male_path, config.names_female_path,
                          config.names_freq_path, config.ambiguous_policy);

    // Restrict the embedding load to words this run can actually query.
    EmbeddingParseOptions parse_options;
    auto& vocab = parse_options.vocab_filter.emplace();
    for (const Story& story : out.stories)
        for (const Segment& seg : story.segments)
            for (const std::string& token : seg.tokens) vocab.insert(token);
    for (const std::string& w : default_positive_seeds()) vocab.insert(w);
    for (const std::string& w : default_negative_seeds()) vocab.insert(w);
    if (!config.sentiment_lexicon_path.empty())
        for (const LexiconEntry& e : load_lexicon_csv_file(config.sentiment_lexicon_path))
            vocab.insert(e.word);

    out.table = std::make_shared<const EmbeddingTable>(
        load_embeddings(config.embeddings_path, config.embeddings_format, parse_options));
    out.axis = build_axis(*out.table, default_positive_seeds(), default_negative_seeds());

    out.analyses.resize(out.stories.size());
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;
    const std::size_t workers =
        std::max<std::size_t>(1, std::min(config.jobs, out.stories.size()));

    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= out.stories.size()) break;
            out.analyses[i] =
                analyze_story(out.stories[i], *out.table, out.axis, lexicon, config);
            if (log) {
                const StoryAnalysis& a = out.analyses[i];
                std::lock_guard<std::mutex> hold(log_mutex);
                *log << "[" << a.story_id << "] segments=" << out.stories[i].segments.size()
                     << " characters=" << a.roster.characters.size()
                     << (a.analyzable ? "" : " error=" + a.error)
                     << (a.eligible ? "" : " (excluded)") << '\n';
            }
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    for (const StoryAnalysis& a : out.analyses)
        if (a.eligible) ++out.n_eligible;
    return out;
}

std::string json_text(const nlohmann::ordered_json& value) {
    return value.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    const fs::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace narrative
