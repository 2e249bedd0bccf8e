#include "doctest.h"

#include "narrative/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using namespace narrative;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string strip_whitespace(const std::string& text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

// A throwaway corpus directory under the build tree.
struct TempCorpus {
    std::filesystem::path root;

    TempCorpus() {
        root = std::filesystem::temp_directory_path() /
               ("narr_corpus_test_" + std::to_string(::getpid()));
        std::filesystem::remove_all(root);
        std::filesystem::create_directories(root / "stories");
    }
    ~TempCorpus() { std::filesystem::remove_all(root); }

    void write(const std::string& relative, const std::string& content) const {
        std::ofstream out(root / relative, std::ios::binary);
        out << content;
    }
};

Story story_with_segments(const std::string& id, std::size_t n) {
    Story story;
    story.meta.id = id;
    for (std::size_t i = 0; i < n; ++i) {
        Segment s;
        s.index = i;
        s.raw_text = "Segment " + std::to_string(i) + ".";
        story.segments.push_back(std::move(s));
    }
    return story;
}

}  // namespace

TEST_CASE("sentence segmentation basics") {
    SUBCASE("empty text produces no segments") {
        CHECK(segment_text("", SegmentKind::sentence).empty());
    }
    SUBCASE("three unambiguous delimiters produce three segments") {
        const auto segments = segment_text("Hi. Go? Run!", SegmentKind::sentence);
        REQUIRE(segments.size() == 3);
        CHECK(segments[0].raw_text == "Hi.");
        CHECK(segments[1].raw_text == "Go?");
        CHECK(segments[2].raw_text == "Run!");
        for (std::size_t i = 0; i < segments.size(); ++i) CHECK(segments[i].index == i);
    }
    SUBCASE("abbreviations do not end a sentence") {
        const auto segments =
            segment_text("Mr. Smith waved at Dr. Jones. She waved back.", SegmentKind::sentence);
        REQUIRE(segments.size() == 2);
        CHECK(segments[0].raw_text == "Mr. Smith waved at Dr. Jones.");
    }
    SUBCASE("a period not followed by a capital keeps the sentence open") {
        const auto segments = segment_text("It cost 3. 5 dollars less. Done.",
                                           SegmentKind::sentence);
        CHECK(segments.size() == 2);
    }
}

TEST_CASE("paragraph segmentation splits on blank lines") {
    const auto segments = segment_text("First block\nstill first.\n\nSecond block.\n\n\nThird.",
                                       SegmentKind::paragraph);
    REQUIRE(segments.size() == 3);
    CHECK(segments[0].kind == SegmentKind::paragraph);
    CHECK(segments[0].raw_text == "First block\nstill first.");
    CHECK(segments[2].raw_text == "Third.");
}

TEST_CASE("segmentation is deterministic and loses no visible characters") {
    const std::string text =
        "Nora left the house at dawn. She took the coast road! Would the bridge hold? "
        "Mr. Gray thought so.";
    const auto once = segment_text(text, SegmentKind::sentence);
    const auto twice = segment_text(text, SegmentKind::sentence);
    REQUIRE(once.size() == twice.size());
    for (std::size_t i = 0; i < once.size(); ++i)
        CHECK(once[i].raw_text == twice[i].raw_text);

    std::string joined;
    for (const auto& s : once) joined += s.raw_text;
    CHECK(strip_whitespace(joined) == strip_whitespace(text));
}

TEST_CASE("bundled Cinderella synopsis segments into 97 sentences") {
    const std::string text = read_file(std::string(NARR_DATA_DIR) + "/cinderella_synopsis.txt");
    const auto segments = segment_text(text, SegmentKind::sentence);
    CHECK(segments.size() == 97);
}

TEST_CASE("tokenize keeps internal apostrophes and both case forms") {
    SUBCASE("possessive with punctuation") {
        const auto [tokens, surface] = tokenize("Ella's shoe!");
        CHECK(tokens == std::vector<std::string>{"ella's", "shoe"});
        CHECK(surface == std::vector<std::string>{"Ella's", "shoe"});
    }
    SUBCASE("whitespace only") {
        const auto [tokens, surface] = tokenize("  ");
        CHECK(tokens.empty());
        CHECK(surface.empty());
    }
    SUBCASE("token and surface lists always align") {
        for (const std::string text :
             {"One, two -- three.", "A 19th-century tale", "'quoted' words", "don't stop"}) {
            const auto [tokens, surface] = tokenize(text);
            CHECK(tokens.size() == surface.size());
        }
    }
}

TEST_CASE("ingest reads a CSV metadata corpus") {
    TempCorpus tmp;
    tmp.write("stories/a.txt", "Anna slept. Anna woke. Anna left.");
    tmp.write("stories/b.txt", "One paragraph.\n\nAnother paragraph.");
    tmp.write("stories/c.txt", "A single line.");
    tmp.write("meta.csv",
              "id,title,year,genres,rating,votes,source_kind,path\n"
              "a,Alpha,1990,Drama|Romance,7.5,1200,synopsis,stories/a.txt\n"
              "b,Beta,2001,Comedy,6.1,300,script,stories/b.txt\n"
              "c,Gamma,,,,,book,stories/c.txt\n");

    const IngestResult result = ingest(tmp.root.string(), (tmp.root / "meta.csv").string());
    REQUIRE(result.stories.size() == 3);
    CHECK(result.report.warnings.empty());
    CHECK(result.report.rejected_rows.empty());

    const Story& a = result.stories[0];
    CHECK(a.meta.id == "a");
    CHECK(a.meta.year == 1990);
    CHECK(a.meta.genres == std::vector<std::string>{"Drama", "Romance"});
    CHECK(a.meta.rating == doctest::Approx(7.5));
    CHECK(a.meta.votes == 1200);
    CHECK(a.segments.size() == 3);  // synopsis -> sentences
    CHECK(a.segments[0].kind == SegmentKind::sentence);

    CHECK(result.stories[1].segments.size() == 2);  // script -> paragraphs
    CHECK(result.stories[1].segments[0].kind == SegmentKind::paragraph);

    const Story& c = result.stories[2];
    CHECK(!c.meta.year.has_value());
    CHECK(!c.meta.rating.has_value());
    CHECK(c.meta.source_kind == SourceKind::book);
}

TEST_CASE("ingest skips missing files with a warning and rejects malformed rows") {
    TempCorpus tmp;
    tmp.write("stories/a.txt", "Here. There.");
    tmp.write("stories/b.txt", "Everywhere.");
    tmp.write("meta.csv",
              "id,title,year,genres,rating,votes,source_kind,path\n"
              "a,Alpha,1990,Drama,7.5,1200,synopsis,stories/a.txt\n"
              "ghost,Gone,1991,Drama,6.0,50,synopsis,stories/ghost.txt\n"
              "bad,Broken,not-a-year,Drama,6.0,50,synopsis,stories/b.txt\n"
              "b,Beta,1992,Drama,6.5,800,synopsis,stories/b.txt\n");

    const IngestResult result = ingest(tmp.root.string(), (tmp.root / "meta.csv").string());
    CHECK(result.stories.size() == 2);
    REQUIRE(result.report.warnings.size() == 1);
    CHECK(result.report.warnings[0].find("ghost") != std::string::npos);
    REQUIRE(result.report.rejected_rows.size() == 1);
    CHECK(result.report.rejected_rows[0].find("bad") != std::string::npos);
}

TEST_CASE("ingest accepts JSON-lines metadata with per-character cast genders") {
    TempCorpus tmp;
    tmp.write("stories/j.txt", "Robin met Morgan. They left.");
    tmp.write("meta.jsonl",
              R"({"id": "j", "title": "Junction", "year": 1984, "genres": ["Drama"], )"
              R"("rating": 7.1, "votes": 901, "source_kind": "synopsis", )"
              R"("path": "stories/j.txt", "cast": [{"name": "Robin", "gender": "female"}, )"
              R"({"name": "Morgan", "gender": "male"}]})"
              "\n");

    const IngestResult result = ingest(tmp.root.string(), (tmp.root / "meta.jsonl").string());
    REQUIRE(result.stories.size() == 1);
    const StoryMeta& meta = result.stories[0].meta;
    CHECK(meta.title == "Junction");
    REQUIRE(meta.cast_genders.size() == 2);
    const auto robin = std::find_if(meta.cast_genders.begin(), meta.cast_genders.end(),
                                    [](const auto& p) { return p.first == "Robin"; });
    REQUIRE(robin != meta.cast_genders.end());
    CHECK(robin->second == "female");
}

TEST_CASE("ingest honours the source-kind filter") {
    TempCorpus tmp;
    tmp.write("stories/a.txt", "First. Second.");
    tmp.write("stories/b.txt", "One paragraph.");
    tmp.write("meta.csv",
              "id,title,year,genres,rating,votes,source_kind,path\n"
              "a,Alpha,1990,Drama,7.5,1200,synopsis,stories/a.txt\n"
              "b,Beta,2001,Comedy,6.1,300,script,stories/b.txt\n");

    IngestOptions options;
    options.kind_filter = SourceKind::script;
    const IngestResult result =
        ingest(tmp.root.string(), (tmp.root / "meta.csv").string(), options);
    REQUIRE(result.stories.size() == 1);
    CHECK(result.stories[0].meta.id == "b");
}

TEST_CASE("tiny-corpus ingest matches the pinned golden file") {
    const std::string fixture = std::string(NARR_FIXTURE_DIR) + "/tiny_corpus";
    const IngestResult result = ingest(fixture, fixture + "/metadata.jsonl");

    nlohmann::ordered_json summary;
    summary["stories"] = nlohmann::ordered_json::array();
    for (const Story& story : result.stories) {
        summary["stories"].push_back({{"id", story.meta.id},
                                      {"title", story.meta.title},
                                      {"source_kind", to_string(story.meta.source_kind)},
                                      {"n_segments", story.segments.size()}});
    }
    summary["warnings"] = result.report.warnings;
    summary["rejected_rows"] = result.report.rejected_rows;

    const std::string golden = read_file(std::string(NARR_GOLDEN_DIR) + "/ingest_tiny_corpus.json");
    CHECK(summary.dump(2) + "\n" == golden);
}

TEST_CASE("corpus filter keeps stories with enough segments and both genders") {
    std::vector<Story> stories;
    stories.push_back(story_with_segments("five", 5));         // too short
    stories.push_back(story_with_segments("male-only", 10));   // one gender
    stories.push_back(story_with_segments("pair", 10));        // keeps
    stories.push_back(story_with_segments("six", 6));          // keeps, boundary
    const auto roster_fn = [](const Story& story) {
        if (story.meta.id == "male-only") return std::make_pair(false, true);
        return std::make_pair(true, true);
    };

    const std::vector<Story> kept = filter_corpus(stories, roster_fn);
    REQUIRE(kept.size() == 2);
    // Order is preserved: a filtered corpus is a subsequence of its input.
    CHECK(kept[0].meta.id == "pair");
    CHECK(kept[1].meta.id == "six");
}

TEST_CASE("source kind round-trips through its names") {
    for (SourceKind kind : {SourceKind::synopsis, SourceKind::script, SourceKind::book}) {
        CHECK(source_kind_from(to_string(kind)) == kind);
    }
    CHECK(segment_kind_for(SourceKind::synopsis) == SegmentKind::sentence);
    CHECK(segment_kind_for(SourceKind::script) == SegmentKind::paragraph);
    CHECK(segment_kind_for(SourceKind::book) == SegmentKind::paragraph);
    CHECK_THROWS_AS(source_kind_from("poem"), std::invalid_argument);
}
