#include "narrative/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "narrative/embedding.hpp"  // lowercase()

namespace narrative {

namespace fs = std::filesystem;

SegmentKind segment_kind_for(SourceKind kind) {
    return kind == SourceKind::synopsis ? SegmentKind::sentence : SegmentKind::paragraph;
}

std::string to_string(SourceKind kind) {
    switch (kind) {
        case SourceKind::synopsis: return "synopsis";
        case SourceKind::script: return "script";
        case SourceKind::book: return "book";
    }
    return "synopsis";
}

SourceKind source_kind_from(const std::string& text) {
    if (text == "synopsis") return SourceKind::synopsis;
    if (text == "script") return SourceKind::script;
    if (text == "book") return SourceKind::book;
    throw std::invalid_argument("unknown source_kind: " + text);
}

namespace {

bool is_word_byte(unsigned char c) {
    // bytes >= 0x80 are UTF-8 continuation/lead bytes; keep them inside tokens
    return std::isalnum(c) || c >= 0x80;
}

const std::unordered_set<std::string>& abbreviation_stoplist() {
    static const std::unordered_set<std::string> abbrevs = {
        "mr", "mrs", "ms", "dr", "st", "jr", "sr", "vs", "etc"};
    return abbrevs;
}

bool is_sentence_delim(char c) { return c == '.' || c == '?' || c == '!'; }

// Word (letters only) immediately preceding position `pos` in `text`.
std::string word_before(const std::string& text, std::size_t pos) {
    std::size_t end = pos;
    std::size_t start = end;
    while (start > 0 && std::isalpha(static_cast<unsigned char>(text[start - 1]))) --start;
    return text.substr(start, end - start);
}

std::string trim(const std::string& text) {
    std::size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    return text.substr(a, b - a);
}

std::vector<std::string> split_sentences(const std::string& text) {
    std::vector<std::string> sentences;
    std::size_t start = 0;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (!is_sentence_delim(text[i])) {
            ++i;
            continue;
        }
        const bool abbrev =
            text[i] == '.' &&
            abbreviation_stoplist().count(lowercase(word_before(text, i))) > 0;
        // consume a run of delimiters plus optional closing quotes
        std::size_t end = i + 1;
        while (end < n && is_sentence_delim(text[end])) ++end;
        std::size_t after = end;
        while (after < n && (text[after] == '"' || text[after] == '\'' || text[after] == ')'))
            ++after;
        // boundary only when whitespace then a capital letter follows
        std::size_t ws = after;
        while (ws < n && std::isspace(static_cast<unsigned char>(text[ws]))) ++ws;
        const bool boundary = !abbrev && ws > after && ws < n &&
                              std::isupper(static_cast<unsigned char>(text[ws]));
        if (boundary) {
            sentences.push_back(text.substr(start, after - start));
            start = ws;
            i = ws;
        } else {
            i = end;
        }
    }
    if (start < n) sentences.push_back(text.substr(start));
    return sentences;
}

std::vector<std::string> split_paragraphs(const std::string& text) {
    std::vector<std::string> paragraphs;
    std::istringstream in(text);
    std::string line, current;
    auto flush = [&] {
        if (!trim(current).empty()) paragraphs.push_back(current);
        current.clear();
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) {
            flush();
        } else {
            if (!current.empty()) current += '\n';
            current += line;
        }
    }
    flush();
    return paragraphs;
}

}  // namespace

std::pair<std::vector<std::string>, std::vector<std::string>> tokenize(
    const std::string& text) {
    std::vector<std::string> tokens, surface;
    std::string current;
    const std::size_t n = text.size();
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_word_byte(c)) {
            current.push_back(text[i]);
        } else if (c == '\'' && !current.empty() && i + 1 < n &&
                   is_word_byte(static_cast<unsigned char>(text[i + 1]))) {
            current.push_back('\'');
        } else if (!current.empty()) {
            surface.push_back(current);
            tokens.push_back(lowercase(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        surface.push_back(current);
        tokens.push_back(lowercase(current));
    }
    return {std::move(tokens), std::move(surface)};
}

std::vector<Segment> segment_text(const std::string& text, SegmentKind mode) {
    const std::vector<std::string> pieces =
        mode == SegmentKind::sentence ? split_sentences(text) : split_paragraphs(text);
    std::vector<Segment> segments;
    for (const std::string& piece : pieces) {
        Segment seg;
        seg.kind = mode;
        seg.raw_text = mode == SegmentKind::sentence ? trim(piece) : piece;
        if (seg.raw_text.empty()) continue;
        auto [tokens, surface] = tokenize(seg.raw_text);
        seg.tokens = std::move(tokens);
        seg.surface_tokens = std::move(surface);
        seg.index = segments.size();
        segments.push_back(std::move(seg));
    }
    return segments;
}

namespace {

// Minimal CSV reader: comma-separated, double-quote delimited fields with
// "" escapes. Returns one vector of fields per record.
std::vector<std::string> parse_csv_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::vector<std::string> split_pipe(const std::string& text) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, '|'))
        if (!part.empty()) parts.push_back(part);
    return parts;
}

struct MetaRow {
    StoryMeta meta;
    std::string path;
};

std::optional<MetaRow> row_from_csv(const std::vector<std::string>& header,
                                    const std::vector<std::string>& fields,
                                    std::string& error) {
    if (fields.size() != header.size()) {
        error = "field count mismatch";
        return std::nullopt;
    }
    std::unordered_map<std::string, std::string> kv;
    for (std::size_t i = 0; i < header.size(); ++i) kv[header[i]] = fields[i];
    MetaRow row;
    try {
        row.meta.id = kv.at("id");
        row.meta.title = kv.at("title");
        if (!kv.at("year").empty()) row.meta.year = std::stoi(kv.at("year"));
        row.meta.genres = split_pipe(kv.at("genres"));
        if (!kv.at("rating").empty()) row.meta.rating = std::stod(kv.at("rating"));
        if (!kv.at("votes").empty()) row.meta.votes = std::stoll(kv.at("votes"));
        row.meta.source_kind = source_kind_from(kv.at("source_kind"));
        row.path = kv.at("path");
    } catch (const std::exception& e) {
        const auto id = kv.find("id");
        error = "bad field in row '" + (id == kv.end() ? std::string("?") : id->second) +
                "': " + e.what();
        return std::nullopt;
    }
    if (row.meta.id.empty()) {
        error = "empty id";
        return std::nullopt;
    }
    if (row.meta.rating && (*row.meta.rating < 0.0 || *row.meta.rating > 10.0)) {
        error = "rating out of [0,10]";
        return std::nullopt;
    }
    if (row.meta.votes && *row.meta.votes < 0) {
        error = "negative votes";
        return std::nullopt;
    }
    return row;
}

std::optional<MetaRow> row_from_json(const std::string& line, std::string& error) {
    try {
        const nlohmann::json j = nlohmann::json::parse(line);
        MetaRow row;
        row.meta.id = j.at("id").get<std::string>();
        row.meta.title = j.value("title", std::string{});
        if (j.contains("year") && !j["year"].is_null()) row.meta.year = j["year"].get<int>();
        if (j.contains("genres"))
            row.meta.genres = j["genres"].get<std::vector<std::string>>();
        if (j.contains("rating") && !j["rating"].is_null())
            row.meta.rating = j["rating"].get<double>();
        if (j.contains("votes") && !j["votes"].is_null())
            row.meta.votes = j["votes"].get<long long>();
        row.meta.source_kind = source_kind_from(j.at("source_kind").get<std::string>());
        row.path = j.at("path").get<std::string>();
        if (j.contains("cast")) {
            for (const auto& member : j["cast"]) {
                row.meta.cast_genders.emplace_back(member.at("name").get<std::string>(),
                                                   member.at("gender").get<std::string>());
            }
        }
        if (row.meta.id.empty()) {
            error = "empty id";
            return std::nullopt;
        }
        if (row.meta.rating && (*row.meta.rating < 0.0 || *row.meta.rating > 10.0)) {
            error = "rating out of [0,10]";
            return std::nullopt;
        }
        return row;
    } catch (const std::exception& e) {
        error = e.what();
        return std::nullopt;
    }
}

std::string read_story_file(const fs::path& path, const IngestOptions& options) {
    std::ifstream in(path, std::ios::binary);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    const std::size_t drop = options.trim_head_lines + options.trim_tail_lines;
    if (drop >= lines.size()) return {};
    std::string text;
    for (std::size_t i = options.trim_head_lines; i < lines.size() - options.trim_tail_lines;
         ++i) {
        text += lines[i];
        text += '\n';
    }
    return text;
}

}  // namespace

IngestResult ingest(const std::string& corpus_dir, const std::string& metadata_path,
                    const IngestOptions& options) {
    std::ifstream meta_in(metadata_path);
    if (!meta_in) throw std::runtime_error("cannot open metadata file: " + metadata_path);

    IngestResult result;
    std::vector<MetaRow> rows;
    std::unordered_set<std::string> seen_ids;

    std::string line;
    std::vector<std::string> header;
    bool jsonl = false;
    bool sniffed = false;
    std::size_t lineno = 0;
    while (std::getline(meta_in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (!sniffed) {
            sniffed = true;
            if (line.front() == '{') {
                jsonl = true;
            } else {
                header = parse_csv_record(line);
                continue;
            }
        }
        std::string error;
        std::optional<MetaRow> row = jsonl ? row_from_json(line, error)
                                           : row_from_csv(header, parse_csv_record(line), error);
        if (!row) {
            result.report.rejected_rows.push_back("line " + std::to_string(lineno) + ": " +
                                                  error);
            continue;
        }
        if (!seen_ids.insert(row->meta.id).second) {
            result.report.rejected_rows.push_back("line " + std::to_string(lineno) +
                                                  ": duplicate id '" + row->meta.id + "'");
            continue;
        }
        if (options.kind_filter && row->meta.source_kind != *options.kind_filter) continue;
        rows.push_back(std::move(*row));
    }

    for (const MetaRow& row : rows) {
        fs::path path(row.path);
        if (path.is_relative()) path = fs::path(corpus_dir) / path;
        if (!fs::exists(path)) {
            result.report.warnings.push_back("missing story file for '" + row.meta.id +
                                             "': " + path.string());
            continue;
        }
        Story story;
        story.meta = row.meta;
        story.segments =
            segment_text(read_story_file(path, options), segment_kind_for(row.meta.source_kind));
        result.stories.push_back(std::move(story));
    }
    return result;
}

std::vector<Story> filter_corpus(
    const std::vector<Story>& stories,
    const std::function<std::pair<bool, bool>(const Story&)>& roster_fn) {
    std::vector<Story> kept;
    for (const Story& story : stories) {
        if (story.segments.size() <= 5) continue;
        const auto [has_female, has_male] = roster_fn(story);
        if (has_female && has_male) kept.push_back(story);
    }
    return kept;
}

}  // namespace narrative
