#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace narrative {

enum class SegmentKind { sentence, paragraph };
enum class SourceKind { synopsis, script, book };

SegmentKind segment_kind_for(SourceKind kind);
std::string to_string(SourceKind kind);
SourceKind source_kind_from(const std::string& text);

struct Segment {
    std::size_t index = 0;
    SegmentKind kind = SegmentKind::sentence;
    std::string raw_text;
    std::vector<std::string> tokens;          // lowercased
    std::vector<std::string> surface_tokens;  // original case, for name detection
};

struct StoryMeta {
    std::string id;
    std::string title;
    std::optional<int> year;
    std::vector<std::string> genres;
    std::optional<double> rating;       // [0, 10]
    std::optional<long long> votes;
    SourceKind source_kind = SourceKind::synopsis;
    // Optional per-character gender supplied by metadata (JSON-lines `cast`
    // field); overrides name-lexicon inference when present.
    std::vector<std::pair<std::string, std::string>> cast_genders;
};

struct Story {
    StoryMeta meta;
    std::vector<Segment> segments;
};

// Sentence mode splits on '.', '?', '!' followed by whitespace and a capital
// letter, with an abbreviation stop-list (Mr, Mrs, Ms, Dr, St, Jr, Sr, vs,
// etc). Paragraph mode splits on blank lines. Empty segments are dropped.
std::vector<Segment> segment_text(const std::string& text, SegmentKind mode);

// Splits on non-alphanumeric boundaries keeping internal apostrophes.
// Returns (lowercased tokens, original-case tokens) of equal length.
std::pair<std::vector<std::string>, std::vector<std::string>> tokenize(
    const std::string& text);

struct IngestOptions {
    std::optional<SourceKind> kind_filter;
    std::size_t trim_head_lines = 0;  // drop N leading/trailing lines per story
    std::size_t trim_tail_lines = 0;
};

struct IngestReport {
    std::vector<std::string> warnings;       // skipped story files
    std::vector<std::string> rejected_rows;  // malformed metadata rows
};

struct IngestResult {
    std::vector<Story> stories;
    IngestReport report;
};

// Reads metadata (CSV with header "id,title,year,genres,rating,votes,
// source_kind,path", genres pipe-separated; or JSON-lines with the same
// field names) and loads one story per row, segmented per source kind
// (synopsis by sentence, script/book by paragraph). Rows referencing
// missing files are skipped with a warning; malformed rows are rejected.
IngestResult ingest(const std::string& corpus_dir, const std::string& metadata_path,
                    const IngestOptions& options = {});

// Keeps stories with more than five segments and at least one female and
// one male character according to roster_fn. Output order follows input.
// The roster predicate reports (has_female, has_male).
std::vector<Story> filter_corpus(
    const std::vector<Story>& stories,
    const std::function<std::pair<bool, bool>(const Story&)>& roster_fn);

}  // namespace narrative
