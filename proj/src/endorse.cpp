#include "narrative/endorse.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace narrative {

std::string to_string(Outcome outcome) {
    return outcome == Outcome::rating ? "rating" : "votes";
}

RowBuild build_rows(const std::vector<StoryAnalysisSummary>& analyses) {
    RowBuild result;
    for (const StoryAnalysisSummary& story : analyses) {
        if (!story.rating) {
            ++result.exclusions.no_rating;
            continue;
        }
        if (!story.votes || *story.votes == 0) {
            ++result.exclusions.no_votes;
            continue;
        }
        if (!story.female_increase) {
            ++result.exclusions.no_female_increase;
            continue;
        }
        if (!story.male_increase) {
            ++result.exclusions.no_male_increase;
            continue;
        }
        if (!story.dominance) {
            ++result.exclusions.no_leading;
            continue;
        }
        EndorsementRow row;
        row.story_id = story.story_id;
        row.male_lead = *story.dominance == Gender::male ? 1 : 0;
        row.n_cooccur = story.n_cooccur;
        row.female_increase = *story.female_increase;
        row.male_increase = *story.male_increase;
        row.rating = *story.rating;
        row.votes = *story.votes;
        result.rows.push_back(std::move(row));
    }
    return result;
}

RegressionReport endorsement_regression(const std::vector<EndorsementRow>& rows,
                                        Outcome outcome, bool log_votes) {
    std::vector<std::vector<double>> predictors(4);
    std::vector<double> y;
    y.reserve(rows.size());
    for (const EndorsementRow& row : rows) {
        predictors[0].push_back(static_cast<double>(row.male_lead));
        predictors[1].push_back(static_cast<double>(row.n_cooccur));
        predictors[2].push_back(row.female_increase);
        predictors[3].push_back(row.male_increase);
        if (outcome == Outcome::rating)
            y.push_back(row.rating);
        else
            y.push_back(log_votes ? std::log(static_cast<double>(row.votes))
                                  : static_cast<double>(row.votes));
    }

    const MultiFit fit = ols_multi(predictors, y);

    RegressionReport report;
    report.outcome_label = outcome == Outcome::rating
                               ? "rating"
                               : (log_votes ? "log(votes)" : "votes");
    static const char* kNames[] = {"(constant)", "male_lead", "n_cooccur",
                                   "female_increase", "male_increase"};
    for (std::size_t i = 0; i < fit.coefficients.size(); ++i)
        report.coefficients.emplace_back(kNames[i], fit.coefficients[i]);
    report.r_squared = fit.r_squared;
    report.f_statistic = fit.f_statistic;
    report.n_cases = fit.n_cases;
    return report;
}

std::string format_regression_table(const RegressionReport& report) {
    std::ostringstream out;
    out << "Outcome: " << report.outcome_label << '\n';
    char line[128];
    for (const auto& [name, coef] : report.coefficients) {
        const std::string stars(coef.stars == "ns" ? std::string_view{} : coef.stars);
        std::snprintf(line, sizeof line, "  %-16s %9.4f%-4s (SE %.4f)\n", name.c_str(),
                      coef.estimate, stars.c_str(), coef.std_error);
        out << line;
    }
    std::snprintf(line, sizeof line,
                  "  R-squared %.4f   F %.2f   N %zu\n", report.r_squared,
                  report.f_statistic, report.n_cases);
    out << line;
    return out.str();
}

}  // namespace narrative
