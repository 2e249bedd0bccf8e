#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "narrative/arc.hpp"
#include "narrative/axis.hpp"
#include "narrative/cast.hpp"
#include "narrative/corpus.hpp"
#include "narrative/embedding.hpp"
#include "narrative/endorse.hpp"
#include "narrative/lexnet.hpp"
#include "narrative/slope.hpp"

namespace narrative {

struct RunConfig {
    std::string embeddings_path;
    std::string embeddings_format = "auto";  // binary | text | auto
    std::string corpus_dir;
    std::string metadata_path;
    std::string sentiment_lexicon_path;  // needed by validate-axis / report
    std::string names_female_path;
    std::string names_male_path;
    std::string names_freq_path;
    std::string pos_lexicon_path;  // optional extra word->tag table
    std::string stopwords_path;    // optional, network replication only
    AmbiguousPolicy ambiguous_policy = AmbiguousPolicy::exclude;
    std::optional<SourceKind> kind_filter;
    std::size_t gap = 1;  // cluster merge distance, 1..10
    SpanMode span_mode = SpanMode::start_to_start;
    CooccurMode cooccur_mode = CooccurMode::leading;
    int period_bin_years = 10;
    std::uint64_t label_threshold_single = 1500;
    std::uint64_t label_threshold_cooccur = 500;
    bool log_votes = true;
    std::string output_dir = "out";
    std::size_t jobs = 1;
    bool use_cache = true;
};

// Sets one key (config-file spelling) on the config; throws
// std::invalid_argument for unknown keys or unparsable values.
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value);

// Key=value lines, '#' comments. Unknown keys throw, as above.
void load_config_file(RunConfig& config, const std::string& path);

// What a subcommand needs from the config: axis_only covers validate-axis
// (embeddings + happiness lexicon), corpus covers everything else.
enum class ConfigScope { axis_only, corpus };

// Checks path existence and value ranges; throws std::invalid_argument with
// a message naming the offending flag.
void validate_config(const RunConfig& config, ConfigScope scope = ConfigScope::corpus);

// Everything computed for one story. `analyzable` is false when a pipeline
// step threw; `eligible` marks membership in the filtered corpus (more than
// five segments, both genders present).
struct StoryAnalysis {
    std::string story_id;
    bool analyzable = false;
    std::string error;
    bool eligible = false;
    bool has_pair = false;

    std::vector<SegmentScore> scores;
    CharacterRoster roster;
    CooccurrenceMap cooccurrence;
    HappinessCurve female_curve, male_curve;  // filled when has_pair
    std::vector<SlopeFit> female_fits, male_fits;
    SlopeSummary female_summary, male_summary;
    std::vector<CharacterLevels> levels;
    std::vector<WindowSample> windows_single, windows_cooccur;

    bool scores_from_cache = false;
    bool slopes_from_cache = false;
};

struct CorpusAnalysis {
    SentimentAxis axis;
    IngestReport ingest_report;
    std::vector<Story> stories;          // sorted by id
    std::vector<StoryAnalysis> analyses;  // aligned with `stories`
    std::shared_ptr<const EmbeddingTable> table;
    std::size_t n_eligible = 0;
};

// Ingests the corpus, loads embeddings restricted to its vocabulary, and
// analyzes every story on a `jobs`-wide worker pool. Per-story failures are
// recorded, not thrown. Results are ordered by story id regardless of the
// pool width, and the per-story cache under <output_dir>/cache is honored
// unless use_cache is off. Progress lines go to `log` when given.
CorpusAnalysis analyze_corpus(const RunConfig& config, std::ostream* log = nullptr);

// Cache keys, exposed for inspection and tests: the score key digests story
// content plus everything scoring depends on; the slope key additionally
// folds in gap, span mode, and co-occurrence mode.
std::string score_cache_key(const Story& story, const RunConfig& config);
std::string slope_cache_key(const Story& story, const RunConfig& config);

// --- report sections -------------------------------------------------------

// Axis construction + correlation against the configured happiness lexicon.
nlohmann::ordered_json validate_axis_report(const RunConfig& config,
                                            const EmbeddingTable& table);

// Loads embeddings (restricted to lexicon + seed vocabulary) and delegates
// to the overload above; entry point for the bare validate-axis subcommand.
nlohmann::ordered_json validate_axis_report(const RunConfig& config);

// Per-story CSV: segment,raw,z, then masked/cumulative/normalized01 columns
// for each leading character present.
std::string arc_csv(const StoryAnalysis& analysis);

nlohmann::ordered_json corpus_section(const CorpusAnalysis& analysis);
nlohmann::ordered_json arcs_section(const CorpusAnalysis& analysis,
                                    bool include_artifact_paths);
nlohmann::ordered_json slopes_section(const RunConfig& config, const CorpusAnalysis& analysis,
                                      GroupKey group_key, bool gap_sweep);
nlohmann::ordered_json levels_section(const CorpusAnalysis& analysis);
nlohmann::ordered_json networks_section(const RunConfig& config,
                                        const CorpusAnalysis& analysis);
nlohmann::ordered_json verbs_section(const RunConfig& config, const CorpusAnalysis& analysis);
nlohmann::ordered_json endorsement_section(const RunConfig& config,
                                           const CorpusAnalysis& analysis);

// Regression rows + exclusion tallies for the eligible corpus.
RowBuild endorsement_rows(const CorpusAnalysis& analysis);

// One CSV over all stories: story_id,character,gender,span_start,span_end,k,n.
std::string slope_fits_csv(const CorpusAnalysis& analysis);

// Per-story slope summaries in compare_corpus form (eligible stories only).
std::vector<StorySlopes> story_slopes_table(const CorpusAnalysis& analysis);

// Refits one story's spans under a different gap (for sweeps).
std::pair<std::optional<double>, std::optional<double>> slopes_for_gap(
    const StoryAnalysis& analysis, std::size_t gap, SpanMode span_mode, Gender gender);

// Pools window samples of the eligible corpus for one gender/mode, applying
// the optional stop-word list.
std::vector<WindowSample> pooled_windows(const RunConfig& config,
                                         const CorpusAnalysis& analysis, Gender gender,
                                         WindowMode mode);

// The combined seven-section report (axis_validation, corpus, arcs, slopes,
// levels, networks, verbs, endorsement) produced by the report subcommand.
nlohmann::ordered_json build_report(const RunConfig& config, const CorpusAnalysis& analysis);

// Serializes with two-space indentation and a trailing newline (the on-disk
// and stdout JSON convention used everywhere in this project).
std::string json_text(const nlohmann::ordered_json& value);

// Filesystem-safe story id (cache and artifact file names).
std::string sanitize_story_id(const std::string& id);

// Creates parent directories as needed.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace narrative
