#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "narrative/axis.hpp"
#include "narrative/cast.hpp"
#include "narrative/corpus.hpp"
#include "narrative/embedding.hpp"

namespace narrative {

struct SegmentScore {
    std::size_t index = 0;
    double raw = 0.0;  // mean word happiness over scored tokens, 0 when none
    double z = 0.0;    // story-level z-score of raw
    std::size_t n_scored_tokens = 0;
};

struct ScoreOptions {
    // When false, segments with no in-vocabulary token are excluded from the
    // z statistics (their own z stays 0).
    bool empty_segments_in_z = true;
};

// Scores every segment of a story on the happiness axis and z-normalizes
// per story (population standard deviation; zero variance gives all-zero z).
// Throws std::runtime_error when no token of the story is in the table.
std::vector<SegmentScore> score_segments(const Story& story, const EmbeddingTable& table,
                                         const SentimentAxis& axis,
                                         const ScoreOptions& options = {});

struct HappinessCurve {
    std::string character;
    std::vector<double> masked;        // z where the character is mentioned, else 0
    std::vector<double> cumulative;    // prefix sums of masked
    std::vector<double> normalized01;  // min-max rescale of cumulative
};

// Builds the masked and cumulative series for a roster character. Throws
// std::invalid_argument for unknown characters.
HappinessCurve character_curve(const std::vector<SegmentScore>& scores,
                               const CharacterRoster& roster, const std::string& character);

// Fills normalized01 as (c - min) / (max - min); a constant cumulative
// series maps to all 0.5.
HappinessCurve normalize01(HappinessCurve curve);

// One vertical bar per segment, green for z > 0 and red for z < 0 with
// opacity proportional to |z| (clamped at 3); filled markers on
// co-occurrence segments, hollow where a single leading character appears.
// Deterministic output, byte-identical across runs.
std::string skyline_svg(const std::vector<SegmentScore>& scores,
                        const CharacterRoster& roster, const CooccurrenceMap& cooccurrence);

}  // namespace narrative
