#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "narrative/arc.hpp"
#include "narrative/cast.hpp"
#include "narrative/stats.hpp"

namespace narrative {

struct CooccurrenceCluster {
    std::size_t start = 0;  // inclusive
    std::size_t end = 0;    // inclusive
};

// Merges co-occurrence segment indices whose consecutive difference is at
// most `gap` into clusters. Output is sorted and non-overlapping.
std::vector<CooccurrenceCluster> merge_clusters(const std::set<std::size_t>& cooccur_indices,
                                                std::size_t gap);

struct SlopeFit {
    std::size_t span_start = 0;
    std::size_t span_end = 0;
    double k = 0.0;      // OLS slope over the span
    std::size_t n = 0;   // number of fitted points
};

enum class SpanMode { start_to_start, end_to_start };

// Fits one OLS line per consecutive cluster pair over the normalized curve,
// from the start of one cluster to the start of the next (inclusive), or
// end-to-start in the alternative mode. Fewer than two clusters gives an
// empty result.
std::vector<SlopeFit> fit_spans(const HappinessCurve& curve,
                                const std::vector<CooccurrenceCluster>& clusters,
                                SpanMode mode = SpanMode::start_to_start);

struct SlopeSummary {
    std::string character;
    std::optional<double> increase;  // weighted mean of positive k
    std::optional<double> decrease;  // weighted mean of negative k
    std::size_t n_fits = 0;
};

// Sample-size-weighted means of the positive and negative slopes.
SlopeSummary summarize_slopes(const std::vector<SlopeFit>& fits);

struct GenderComparison {
    std::string group_label;
    double female_mean = 0.0;
    double female_sd = 0.0;
    std::size_t female_n = 0;
    double male_mean = 0.0;
    double male_sd = 0.0;
    std::size_t male_n = 0;
    double t_statistic = 0.0;
    double p_value = 1.0;
    std::string stars = "ns";
    bool undersized = false;  // a gender had fewer than 2 stories in the group
};

enum class GroupKey { none, period, genre };
enum class SlopeMetric { increase, decrease };

// Per-story slope summaries plus the metadata needed for grouping.
struct StorySlopes {
    std::string story_id;
    std::optional<int> year;
    std::vector<std::string> genres;
    std::optional<double> female_increase;
    std::optional<double> female_decrease;
    std::optional<double> male_increase;
    std::optional<double> male_decrease;
};

// Compares the female and male per-story slope distributions with Welch's
// t, overall or grouped by period (year bins) or genre. Stories are
// aggregated in sorted id order so the result is order-independent.
std::vector<GenderComparison> compare_corpus(std::vector<StorySlopes> stories,
                                             GroupKey group_key = GroupKey::none,
                                             SlopeMetric metric = SlopeMetric::increase,
                                             int period_bin_years = 10);

struct CharacterLevels {
    std::string character;
    std::optional<double> cooccur_mean;   // mean z over co-occurrence segments
    std::optional<double> own_only_mean;  // mean z over single-mention segments
    std::optional<double> overall_mean;   // mean z over all mention segments
};

// Mean happiness conditional on co-occurrence, per leading character.
std::vector<CharacterLevels> happiness_levels(const std::vector<SegmentScore>& scores,
                                              const CharacterRoster& roster,
                                              const CooccurrenceMap& cooccurrence);

}  // namespace narrative
