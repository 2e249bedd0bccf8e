#include "doctest.h"

#include "narrative/slope.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"

using namespace narrative;

namespace {

HappinessCurve curve_from_cumulative(std::vector<double> cumulative) {
    HappinessCurve curve;
    curve.character = "Anna";
    curve.cumulative = std::move(cumulative);
    return normalize01(std::move(curve));
}

std::vector<SegmentScore> fake_scores(const std::vector<double>& zs) {
    std::vector<SegmentScore> scores;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        SegmentScore s;
        s.index = i;
        s.z = zs[i];
        scores.push_back(s);
    }
    return scores;
}

CharacterRoster pair_roster(std::vector<std::size_t> female_mentions,
                            std::vector<std::size_t> male_mentions) {
    CharacterRoster roster;
    Character f;
    f.name = "Anna";
    f.gender = Gender::female;
    f.mention_segments = std::move(female_mentions);
    f.mention_count = f.mention_segments.size();
    if (!f.mention_segments.empty()) f.first_mention_segment = f.mention_segments.front();
    Character m;
    m.name = "Bob";
    m.gender = Gender::male;
    m.mention_segments = std::move(male_mentions);
    m.mention_count = m.mention_segments.size();
    if (!m.mention_segments.empty()) m.first_mention_segment = m.mention_segments.front();
    roster.characters.push_back(std::move(f));
    roster.characters.push_back(std::move(m));
    return leading_characters(std::move(roster));
}

StorySlopes slopes_row(const std::string& id, std::optional<double> female_increase,
                       std::optional<double> male_increase, std::optional<int> year = {},
                       std::vector<std::string> genres = {}) {
    StorySlopes row;
    row.story_id = id;
    row.female_increase = female_increase;
    row.male_increase = male_increase;
    row.year = year;
    row.genres = std::move(genres);
    return row;
}

}  // namespace

TEST_CASE("merge_clusters on the worked examples") {
    const std::set<std::size_t> indices{3, 4, 9};

    SUBCASE("gap 1 keeps the far index separate") {
        const auto clusters = merge_clusters(indices, 1);
        REQUIRE(clusters.size() == 2);
        CHECK(clusters[0].start == 3);
        CHECK(clusters[0].end == 4);
        CHECK(clusters[1].start == 9);
        CHECK(clusters[1].end == 9);
    }
    SUBCASE("gap 5 bridges everything into one cluster") {
        const auto clusters = merge_clusters(indices, 5);
        REQUIRE(clusters.size() == 1);
        CHECK(clusters[0].start == 3);
        CHECK(clusters[0].end == 9);
    }
    SUBCASE("empty input and bad gaps") {
        CHECK(merge_clusters({}, 3).empty());
        CHECK_THROWS_AS(merge_clusters(indices, 0), std::invalid_argument);
    }
}

TEST_CASE("merge_clusters agrees with the fixpoint oracle on random sets") {
    std::mt19937 rng(1912);
    for (int trial = 0; trial < 50; ++trial) {
        std::set<std::size_t> indices;
        const std::size_t count = 1 + rng() % 12;
        while (indices.size() < count) indices.insert(rng() % 60);
        const std::size_t gap = 1 + rng() % 10;

        const auto got = merge_clusters(indices, gap);
        const auto want = oracle::merge_clusters(indices, gap);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].start == want[i].first);
            CHECK(got[i].end == want[i].second);
        }
        // Sorted, non-overlapping, and respecting the gap between clusters.
        for (std::size_t i = 0; i + 1 < got.size(); ++i) {
            CHECK(got[i].end < got[i + 1].start);
            CHECK(got[i + 1].start - got[i].end > gap);
        }
    }
}

TEST_CASE("widening the gap never creates more clusters") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        std::set<std::size_t> indices;
        while (indices.size() < 8) indices.insert(rng() % 50);
        std::size_t previous = indices.size() + 1;
        for (std::size_t gap = 1; gap <= 10; ++gap) {
            const std::size_t n = merge_clusters(indices, gap).size();
            CHECK(n <= previous);
            previous = n;
        }
    }
}

TEST_CASE("fit_spans signs follow the curve shape") {
    // Normalized curve over 8 segments with clusters at [0-0] and [6-6].
    const std::vector<CooccurrenceCluster> clusters{{0, 0}, {6, 6}};

    SUBCASE("a rising curve fits a positive slope") {
        const HappinessCurve curve =
            curve_from_cumulative({0, 1, 2, 3, 4, 5, 6, 7});
        const auto fits = fit_spans(curve, clusters);
        REQUIRE(fits.size() == 1);
        CHECK(fits[0].k > 0.0);
        CHECK(fits[0].span_start == 0);
        CHECK(fits[0].span_end == 6);
        CHECK(fits[0].n == 7);  // start to start, inclusive
    }
    SUBCASE("a flat stretch fits slope zero") {
        const HappinessCurve curve =
            curve_from_cumulative({4, 4, 4, 4, 4, 4, 4, 9});  // flat across the span
        const auto fits = fit_spans(curve, clusters);
        REQUIRE(fits.size() == 1);
        CHECK(fits[0].k == doctest::Approx(0.0));
    }
    SUBCASE("fewer than two clusters yields no fits") {
        const HappinessCurve curve = curve_from_cumulative({0, 1, 2, 3, 4, 5, 6, 7});
        CHECK(fit_spans(curve, {}).empty());
        CHECK(fit_spans(curve, {{2, 3}}).empty());
    }
}

TEST_CASE("fit_spans on a hand-built 12-segment fixture") {
    // Cumulative series chosen so each span is easy to recompute by hand.
    const HappinessCurve curve = curve_from_cumulative(
        {0.0, 0.5, 1.5, 1.5, 2.0, 4.0, 4.0, 3.0, 2.0, 2.5, 3.0, 3.5});
    const std::vector<CooccurrenceCluster> clusters{{1, 2}, {5, 6}, {9, 9}};

    const auto fits = fit_spans(curve, clusters);
    REQUIRE(fits.size() == 2);

    // Span 1: segments 1..5 of the normalized curve.
    {
        std::vector<double> xs{1, 2, 3, 4, 5};
        std::vector<double> ys;
        for (int i = 1; i <= 5; ++i) ys.push_back(curve.normalized01[static_cast<std::size_t>(i)]);
        const oracle::Line line = oracle::ols_simple(xs, ys);
        CHECK(fits[0].span_start == 1);
        CHECK(fits[0].span_end == 5);
        CHECK(fits[0].n == 5);
        CHECK(std::fabs(fits[0].k - line.slope) <= 1e-12);
        CHECK(fits[0].k > 0.0);  // the curve climbs from 0.5 to 4.0 here
    }
    // Span 2: segments 5..9, a falling stretch.
    {
        std::vector<double> xs{5, 6, 7, 8, 9};
        std::vector<double> ys;
        for (int i = 5; i <= 9; ++i) ys.push_back(curve.normalized01[static_cast<std::size_t>(i)]);
        const oracle::Line line = oracle::ols_simple(xs, ys);
        CHECK(fits[1].span_start == 5);
        CHECK(fits[1].span_end == 9);
        CHECK(std::fabs(fits[1].k - line.slope) <= 1e-12);
        CHECK(fits[1].k < 0.0);
    }
}

TEST_CASE("end-to-start spans start at the cluster end instead") {
    const HappinessCurve curve = curve_from_cumulative(
        {0.0, 0.5, 1.5, 1.5, 2.0, 4.0, 4.0, 3.0, 2.0, 2.5, 3.0, 3.5});
    const std::vector<CooccurrenceCluster> clusters{{1, 2}, {5, 6}, {9, 9}};

    const auto fits = fit_spans(curve, clusters, SpanMode::end_to_start);
    REQUIRE(fits.size() == 2);
    CHECK(fits[0].span_start == 2);
    CHECK(fits[0].span_end == 5);
    CHECK(fits[0].n == 4);
    CHECK(fits[1].span_start == 6);
    CHECK(fits[1].span_end == 9);
}

TEST_CASE("fits are unchanged under positive affine maps of the cumulative curve") {
    const std::vector<double> base{0.0, 0.5, 1.5, 1.5, 2.0, 4.0, 4.0, 3.0, 2.0, 2.5, 3.0, 3.5};
    std::vector<double> mapped;
    for (double c : base) mapped.push_back(2.5 * c - 7.0);
    const std::vector<CooccurrenceCluster> clusters{{1, 2}, {5, 6}, {9, 9}};

    const auto fits_base = fit_spans(curve_from_cumulative(base), clusters);
    const auto fits_mapped = fit_spans(curve_from_cumulative(mapped), clusters);
    REQUIRE(fits_base.size() == fits_mapped.size());
    for (std::size_t i = 0; i < fits_base.size(); ++i)
        CHECK(std::fabs(fits_base[i].k - fits_mapped[i].k) <= 1e-12);
}

TEST_CASE("summarize_slopes worked example") {
    std::vector<SlopeFit> fits(3);
    fits[0].k = 0.2;
    fits[0].n = 5;
    fits[1].k = 0.4;
    fits[1].n = 5;
    fits[2].k = -0.1;
    fits[2].n = 3;

    const SlopeSummary summary = summarize_slopes(fits);
    // increase = (0.2*5 + 0.4*5) / 10 = 0.3; decrease = -0.1 alone.
    REQUIRE(summary.increase.has_value());
    REQUIRE(summary.decrease.has_value());
    CHECK(*summary.increase == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(*summary.decrease == doctest::Approx(-0.1).epsilon(1e-12));
    CHECK(summary.n_fits == 3);
}

TEST_CASE("summarize_slopes edge shapes") {
    SUBCASE("all-negative fits leave increase absent") {
        std::vector<SlopeFit> fits(2);
        fits[0].k = -0.2;
        fits[0].n = 4;
        fits[1].k = -0.6;
        fits[1].n = 4;
        const SlopeSummary summary = summarize_slopes(fits);
        CHECK(!summary.increase.has_value());
        CHECK(summary.decrease.has_value());
    }
    SUBCASE("a single positive fit is its own summary") {
        std::vector<SlopeFit> fits(1);
        fits[0].k = 0.7;
        fits[0].n = 6;
        const SlopeSummary summary = summarize_slopes(fits);
        CHECK(*summary.increase == doctest::Approx(0.7));
        CHECK(!summary.decrease.has_value());
    }
    SUBCASE("no fits at all") {
        const SlopeSummary summary = summarize_slopes({});
        CHECK(!summary.increase.has_value());
        CHECK(!summary.decrease.has_value());
        CHECK(summary.n_fits == 0);
    }
}

TEST_CASE("the weighted increase lies between the positive-slope extremes") {
    std::mt19937 rng(2277);
    std::uniform_real_distribution<double> ks(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<SlopeFit> fits(6);
        double lo = 2.0, hi = -2.0;
        for (auto& fit : fits) {
            fit.k = ks(rng);
            fit.n = 2 + rng() % 9;
            if (fit.k > 0.0) {
                lo = std::min(lo, fit.k);
                hi = std::max(hi, fit.k);
            }
        }
        const SlopeSummary summary = summarize_slopes(fits);
        if (summary.increase) {
            CHECK(*summary.increase >= lo - 1e-12);
            CHECK(*summary.increase <= hi + 1e-12);
        }
    }
}

TEST_CASE("compare_corpus on identical gender distributions is not significant") {
    std::vector<StorySlopes> stories;
    for (int i = 0; i < 8; ++i) {
        const double v = 0.1 + 0.02 * i;
        stories.push_back(slopes_row("s" + std::to_string(i), v, v));
    }
    const auto comparisons = compare_corpus(stories);
    REQUIRE(comparisons.size() == 1);
    CHECK(comparisons[0].group_label == "all");
    CHECK(comparisons[0].t_statistic == doctest::Approx(0.0));
    CHECK(comparisons[0].stars == "ns");
    CHECK(!comparisons[0].undersized);
}

TEST_CASE("compare_corpus flags a planted female-over-male difference") {
    std::mt19937 rng(99);
    std::normal_distribution<double> noise(0.0, 0.01);
    std::vector<StorySlopes> stories;
    for (int i = 0; i < 30; ++i)
        stories.push_back(slopes_row("s" + std::to_string(i), 0.30 + noise(rng),
                                     0.15 + noise(rng)));

    const auto comparisons = compare_corpus(stories);
    REQUIRE(comparisons.size() == 1);
    CHECK(comparisons[0].female_mean > comparisons[0].male_mean);
    CHECK(comparisons[0].p_value < 0.001);
    CHECK(comparisons[0].stars == "***");
}

TEST_CASE("compare_corpus is order-independent") {
    std::mt19937 rng(7);
    std::normal_distribution<double> noise(0.0, 0.05);
    std::vector<StorySlopes> stories;
    for (int i = 0; i < 12; ++i)
        stories.push_back(slopes_row("s" + std::to_string(i), 0.3 + noise(rng),
                                     0.2 + noise(rng)));

    const auto forward = compare_corpus(stories);
    std::reverse(stories.begin(), stories.end());
    const auto reversed = compare_corpus(stories);
    REQUIRE(forward.size() == reversed.size());
    CHECK(forward[0].t_statistic == reversed[0].t_statistic);
    CHECK(forward[0].p_value == reversed[0].p_value);
}

TEST_CASE("compare_corpus marks undersized groups instead of testing them") {
    std::vector<StorySlopes> stories;
    stories.push_back(slopes_row("a", 0.5, 0.2));
    stories.push_back(slopes_row("b", 0.4, std::nullopt));  // male side stays at n=1
    const auto comparisons = compare_corpus(stories);
    REQUIRE(comparisons.size() == 1);
    CHECK(comparisons[0].undersized);
    CHECK(comparisons[0].stars == "ns");
    CHECK(comparisons[0].male_n == 1);
}

TEST_CASE("compare_corpus groups by decade periods and by genre") {
    std::vector<StorySlopes> stories;
    for (int i = 0; i < 4; ++i) {
        stories.push_back(
            slopes_row("p5" + std::to_string(i), 0.4, 0.2, 1951 + i, {"Drama"}));
        stories.push_back(
            slopes_row("p6" + std::to_string(i), 0.5, 0.3, 1964 + i, {"Drama", "Romance"}));
    }
    stories.push_back(slopes_row("nx", 0.1, 0.1, std::nullopt, {}));

    SUBCASE("periods bin into labeled decades with an unknown bucket") {
        const auto comparisons = compare_corpus(stories, GroupKey::period);
        REQUIRE(comparisons.size() == 3);
        CHECK(comparisons[0].group_label == "1950-1959");
        CHECK(comparisons[0].female_n == 4);
        CHECK(comparisons[1].group_label == "1960-1969");
        CHECK(comparisons[2].group_label == "unknown");
        CHECK(comparisons[2].undersized);
    }
    SUBCASE("genres produce one comparison per genre") {
        const auto comparisons = compare_corpus(stories, GroupKey::genre);
        REQUIRE(comparisons.size() == 3);  // Drama, Romance, unknown
        CHECK(comparisons[0].group_label == "Drama");
        CHECK(comparisons[0].female_n == 8);  // both decades carry Drama
        CHECK(comparisons[1].group_label == "Romance");
        CHECK(comparisons[1].female_n == 4);
    }
    SUBCASE("custom period widths change the bin labels") {
        const auto comparisons = compare_corpus(stories, GroupKey::period,
                                                SlopeMetric::increase, 25);
        CHECK(comparisons[0].group_label == "1950-1974");
    }
}

TEST_CASE("compare_corpus can aggregate the decrease metric instead") {
    std::vector<StorySlopes> stories;
    for (int i = 0; i < 6; ++i) {
        StorySlopes row = slopes_row("s" + std::to_string(i), 0.4, 0.4);
        row.female_decrease = -0.30;
        row.male_decrease = -0.10;
        stories.push_back(row);
    }
    const auto comparisons = compare_corpus(stories, GroupKey::none, SlopeMetric::decrease);
    REQUIRE(comparisons.size() == 1);
    CHECK(comparisons[0].female_mean == doctest::Approx(-0.30));
    CHECK(comparisons[0].male_mean == doctest::Approx(-0.10));
}

TEST_CASE("happiness_levels splits means by co-occurrence context") {
    // Segments:        0     1     2     3     4
    // z:              1.0  -1.0   0.5   2.0  -0.5
    // Anna mentions:   x            x    x
    // Bob mentions:    x                 x         (3 is shared, 0 is shared)
    const auto scores = fake_scores({1.0, -1.0, 0.5, 2.0, -0.5});
    const CharacterRoster roster = pair_roster({0, 2, 3}, {0, 3});
    CooccurrenceMap map;
    map.cooccur = {0, 3};
    map.female_only = {2};
    map.male_only = {};

    const auto levels = happiness_levels(scores, roster, map);
    REQUIRE(levels.size() == 2);

    const CharacterLevels& anna = levels[0];
    CHECK(anna.character == "Anna");
    CHECK(*anna.cooccur_mean == doctest::Approx(1.5));        // (1.0 + 2.0) / 2
    CHECK(*anna.own_only_mean == doctest::Approx(0.5));       // segment 2 alone
    CHECK(*anna.overall_mean == doctest::Approx(3.5 / 3.0));  // segments 0, 2, 3

    const CharacterLevels& bob = levels[1];
    CHECK(bob.character == "Bob");
    CHECK(*bob.cooccur_mean == doctest::Approx(1.5));
    CHECK(!bob.own_only_mean.has_value());  // mentioned only alongside Anna
    CHECK(*bob.overall_mean == doctest::Approx(1.5));
}

TEST_CASE("happiness_levels on a flat story returns equal means") {
    const auto scores = fake_scores({0.7, 0.7, 0.7, 0.7});
    const CharacterRoster roster = pair_roster({0, 1}, {0, 2});
    CooccurrenceMap map;
    map.cooccur = {0};
    map.female_only = {1};
    map.male_only = {2};

    const auto levels = happiness_levels(scores, roster, map);
    REQUIRE(levels.size() == 2);
    for (const CharacterLevels& lv : levels) {
        CHECK(*lv.cooccur_mean == doctest::Approx(*lv.own_only_mean));
        CHECK(*lv.cooccur_mean == doctest::Approx(*lv.overall_mean));
    }
}
