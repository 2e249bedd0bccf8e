#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "narrative/embedding.hpp"

namespace narrative {

// Embedding-space direction pointing toward positive sentiment: mean vector
// of the positive seed words minus mean vector of the negatives.
struct SentimentAxis {
    Vector vector;
    std::vector<std::string> positive_words;
    std::vector<std::string> negative_words;
    std::size_t found_positive = 0;
    std::size_t found_negative = 0;
    std::vector<std::string> missing_words;  // seeds absent from the table
};

struct LexiconEntry {
    std::string word;
    double human_score = 0.0;  // crowd-assigned happiness in [1, 9]
};

struct ValidationReport {
    double pearson_r = 0.0;
    std::size_t n_matched = 0;
    double p_value = 1.0;
};

// Default seed lists used throughout unless overridden.
const std::vector<std::string>& default_positive_seeds();
const std::vector<std::string>& default_negative_seeds();

// Builds the sentiment axis. Seed lists are deduplicated before averaging;
// words absent from the table are skipped and reported in missing_words.
// Throws std::runtime_error when a whole side is absent from the table.
SentimentAxis build_axis(const EmbeddingTable& table,
                         const std::vector<std::string>& positives,
                         const std::vector<std::string>& negatives);

// Cosine similarity between a token's vector and the axis, or nullopt when
// the token is not in the table. Throws std::domain_error on a zero axis.
std::optional<double> word_happiness(const EmbeddingTable& table,
                                     const SentimentAxis& axis,
                                     const std::string& token);

// Correlates the axis scores of lexicon words found in the table with their
// human scores. Requires at least 3 matched words.
ValidationReport validate_axis(const EmbeddingTable& table, const SentimentAxis& axis,
                               const std::vector<LexiconEntry>& lexicon);

// Two-column CSV "word,score" with a header row; words lowercased on load.
std::vector<LexiconEntry> load_lexicon_csv(std::istream& in);
std::vector<LexiconEntry> load_lexicon_csv_file(const std::string& path);

}  // namespace narrative
