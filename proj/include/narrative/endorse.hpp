#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "narrative/cast.hpp"
#include "narrative/stats.hpp"

namespace narrative {

// Per-story predictors for the audience-endorsement regressions.
struct EndorsementRow {
    std::string story_id;
    int male_lead = 0;  // 1 when the story's most-mentioned character is male
    std::size_t n_cooccur = 0;
    double female_increase = 0.0;
    double male_increase = 0.0;
    double rating = 0.0;
    std::uint64_t votes = 0;
};

// The slice of a story's analysis that row building needs.
struct StoryAnalysisSummary {
    std::string story_id;
    std::optional<double> rating;
    std::optional<std::uint64_t> votes;  // must be positive to count
    std::optional<Gender> dominance;
    std::size_t n_cooccur = 0;
    std::optional<double> female_increase;
    std::optional<double> male_increase;
};

struct ExclusionCounts {
    std::size_t no_rating = 0;
    std::size_t no_votes = 0;
    std::size_t no_female_increase = 0;
    std::size_t no_male_increase = 0;
    std::size_t no_leading = 0;

    std::size_t total() const {
        return no_rating + no_votes + no_female_increase + no_male_increase + no_leading;
    }
};

struct RowBuild {
    std::vector<EndorsementRow> rows;
    ExclusionCounts exclusions;
};

// One row per complete story. Incomplete stories are excluded and counted
// under exactly one reason, checked in the order rating, votes,
// female_increase, male_increase, leading-character gender.
RowBuild build_rows(const std::vector<StoryAnalysisSummary>& analyses);

enum class Outcome { rating, votes };
std::string to_string(Outcome outcome);

struct RegressionReport {
    std::string outcome_label;
    // ordered: (constant), male_lead, n_cooccur, female_increase, male_increase
    std::vector<std::pair<std::string, Coefficient>> coefficients;
    double r_squared = 0.0;
    double f_statistic = 0.0;
    std::size_t n_cases = 0;
};

// OLS of the chosen outcome on the four predictors. Vote counts are
// log-transformed unless log_votes is false. Throws on undersized or
// rank-deficient designs (via ols_multi).
RegressionReport endorsement_regression(const std::vector<EndorsementRow>& rows,
                                        Outcome outcome, bool log_votes = true);

// Fixed-width text rendering: one line per coefficient with stars and
// standard error, then R-squared / F / N.
std::string format_regression_table(const RegressionReport& report);

}  // namespace narrative
