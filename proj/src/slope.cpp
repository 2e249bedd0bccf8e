#include "narrative/slope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace narrative {

std::vector<CooccurrenceCluster> merge_clusters(const std::set<std::size_t>& cooccur_indices,
                                                std::size_t gap) {
    if (gap < 1) throw std::invalid_argument("merge_clusters: gap must be >= 1");
    std::vector<CooccurrenceCluster> clusters;
    for (std::size_t idx : cooccur_indices) {
        if (!clusters.empty() && idx - clusters.back().end <= gap) {
            clusters.back().end = idx;
        } else {
            clusters.push_back({idx, idx});
        }
    }
    return clusters;
}

std::vector<SlopeFit> fit_spans(const HappinessCurve& curve,
                                const std::vector<CooccurrenceCluster>& clusters,
                                SpanMode mode) {
    std::vector<SlopeFit> fits;
    if (clusters.size() < 2) return fits;
    if (curve.normalized01.size() != curve.cumulative.size())
        throw std::invalid_argument("fit_spans: curve is not normalized");
    for (std::size_t j = 0; j + 1 < clusters.size(); ++j) {
        const std::size_t from =
            mode == SpanMode::start_to_start ? clusters[j].start : clusters[j].end;
        const std::size_t to = clusters[j + 1].start;
        if (to <= from || to >= curve.normalized01.size()) continue;
        std::vector<double> xs, ys;
        xs.reserve(to - from + 1);
        for (std::size_t i = from; i <= to; ++i) {
            xs.push_back(static_cast<double>(i));
            ys.push_back(curve.normalized01[i]);
        }
        if (xs.size() < 2) continue;
        SlopeFit fit;
        fit.span_start = from;
        fit.span_end = to;
        fit.n = xs.size();
        fit.k = ols_simple(xs, ys).slope;
        fits.push_back(fit);
    }
    return fits;
}

SlopeSummary summarize_slopes(const std::vector<SlopeFit>& fits) {
    SlopeSummary summary;
    summary.n_fits = fits.size();
    double pos_sum = 0.0, neg_sum = 0.0;
    std::size_t pos_n = 0, neg_n = 0;
    for (const SlopeFit& fit : fits) {
        if (fit.k > 0.0) {
            pos_sum += fit.k * static_cast<double>(fit.n);
            pos_n += fit.n;
        } else if (fit.k < 0.0) {
            neg_sum += fit.k * static_cast<double>(fit.n);
            neg_n += fit.n;
        }
    }
    if (pos_n > 0) summary.increase = pos_sum / static_cast<double>(pos_n);
    if (neg_n > 0) summary.decrease = neg_sum / static_cast<double>(neg_n);
    return summary;
}

namespace {

std::optional<double> metric_of(const StorySlopes& story, Gender gender, SlopeMetric metric) {
    if (gender == Gender::female)
        return metric == SlopeMetric::increase ? story.female_increase : story.female_decrease;
    return metric == SlopeMetric::increase ? story.male_increase : story.male_decrease;
}

std::string period_label(int year, int bin_years) {
    const int lo = (year / bin_years) * bin_years;
    return std::to_string(lo) + "-" + std::to_string(lo + bin_years - 1);
}

GenderComparison compare_group(const std::string& label, const std::vector<double>& female,
                               const std::vector<double>& male) {
    GenderComparison cmp;
    cmp.group_label = label;
    cmp.female_n = female.size();
    cmp.male_n = male.size();
    if (!female.empty()) cmp.female_mean = mean(female);
    if (female.size() >= 2) cmp.female_sd = sample_stddev(female);
    if (!male.empty()) cmp.male_mean = mean(male);
    if (male.size() >= 2) cmp.male_sd = sample_stddev(male);
    if (female.size() < 2 || male.size() < 2) {
        cmp.undersized = true;
        cmp.stars = "ns";
        return cmp;
    }
    const WelchResult w =
        welch_t(cmp.female_mean, cmp.female_sd, cmp.female_n, cmp.male_mean, cmp.male_sd,
                cmp.male_n);
    cmp.t_statistic = w.t;
    cmp.p_value = w.p;
    cmp.stars = std::string(w.stars);
    return cmp;
}

}  // namespace

std::vector<GenderComparison> compare_corpus(std::vector<StorySlopes> stories,
                                             GroupKey group_key, SlopeMetric metric,
                                             int period_bin_years) {
    if (period_bin_years < 1)
        throw std::invalid_argument("compare_corpus: period bin must be >= 1 year");
    std::sort(stories.begin(), stories.end(),
              [](const StorySlopes& a, const StorySlopes& b) { return a.story_id < b.story_id; });

    // group label -> (female values, male values); std::map keeps output order stable
    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> groups;
    auto add = [&](const std::string& label, const StorySlopes& story) {
        auto& [female, male] = groups[label];
        if (const std::optional<double> v = metric_of(story, Gender::female, metric))
            female.push_back(*v);
        if (const std::optional<double> v = metric_of(story, Gender::male, metric))
            male.push_back(*v);
    };
    for (const StorySlopes& story : stories) {
        switch (group_key) {
            case GroupKey::none:
                add("all", story);
                break;
            case GroupKey::period:
                add(story.year ? period_label(*story.year, period_bin_years) : "unknown", story);
                break;
            case GroupKey::genre:
                if (story.genres.empty()) {
                    add("unknown", story);
                } else {
                    for (const std::string& genre : story.genres) add(genre, story);
                }
                break;
        }
    }

    std::vector<GenderComparison> comparisons;
    comparisons.reserve(groups.size());
    for (const auto& [label, values] : groups)
        comparisons.push_back(compare_group(label, values.first, values.second));
    return comparisons;
}

namespace {

std::optional<double> mean_z_over(const std::vector<SegmentScore>& scores,
                                  const std::set<std::size_t>& segments) {
    if (segments.empty()) return std::nullopt;
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t idx : segments) {
        if (idx >= scores.size()) continue;
        sum += scores[idx].z;
        ++n;
    }
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
}

}  // namespace

std::vector<CharacterLevels> happiness_levels(const std::vector<SegmentScore>& scores,
                                              const CharacterRoster& roster,
                                              const CooccurrenceMap& cooccurrence) {
    std::vector<CharacterLevels> levels;
    const std::pair<const std::optional<std::string>*, const std::set<std::size_t>*> pair[2] = {
        {&roster.leading_female, &cooccurrence.female_only},
        {&roster.leading_male, &cooccurrence.male_only}};
    for (const auto& [name, own_only] : pair) {
        if (!name->has_value()) continue;
        const Character* character = roster.find(**name);
        if (!character) continue;
        CharacterLevels lv;
        lv.character = **name;
        lv.cooccur_mean = mean_z_over(scores, cooccurrence.cooccur);
        lv.own_only_mean = mean_z_over(scores, *own_only);
        std::set<std::size_t> mentions(character->mention_segments.begin(),
                                       character->mention_segments.end());
        lv.overall_mean = mean_z_over(scores, mentions);
        levels.push_back(std::move(lv));
    }
    return levels;
}

}  // namespace narrative
