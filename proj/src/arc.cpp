#include "narrative/arc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace narrative {

std::vector<SegmentScore> score_segments(const Story& story, const EmbeddingTable& table,
                                         const SentimentAxis& axis,
                                         const ScoreOptions& options) {
    std::vector<SegmentScore> scores;
    scores.reserve(story.segments.size());
    std::size_t total_scored = 0;
    for (const Segment& seg : story.segments) {
        SegmentScore score;
        score.index = seg.index;
        double sum = 0.0;
        for (const std::string& token : seg.tokens) {
            if (const std::optional<double> h = word_happiness(table, axis, token)) {
                sum += *h;
                ++score.n_scored_tokens;
            }
        }
        if (score.n_scored_tokens > 0)
            score.raw = sum / static_cast<double>(score.n_scored_tokens);
        total_scored += score.n_scored_tokens;
        scores.push_back(score);
    }
    if (total_scored == 0)
        throw std::runtime_error("score_segments: story '" + story.meta.id +
                                 "' has no token in the embedding table");

    // per-story z over all (or all non-empty) segments, population std
    double sum = 0.0;
    std::size_t n = 0;
    for (const SegmentScore& s : scores) {
        if (!options.empty_segments_in_z && s.n_scored_tokens == 0) continue;
        sum += s.raw;
        ++n;
    }
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const SegmentScore& s : scores) {
        if (!options.empty_segments_in_z && s.n_scored_tokens == 0) continue;
        ss += (s.raw - mean) * (s.raw - mean);
    }
    const double std_dev = std::sqrt(ss / static_cast<double>(n));
    for (SegmentScore& s : scores) {
        if (!options.empty_segments_in_z && s.n_scored_tokens == 0) continue;
        s.z = std_dev == 0.0 ? 0.0 : (s.raw - mean) / std_dev;
    }
    return scores;
}

HappinessCurve character_curve(const std::vector<SegmentScore>& scores,
                               const CharacterRoster& roster, const std::string& character) {
    const Character* c = roster.find(character);
    if (!c) throw std::invalid_argument("character_curve: unknown character '" + character + "'");
    HappinessCurve curve;
    curve.character = character;
    curve.masked.assign(scores.size(), 0.0);
    for (std::size_t idx : c->mention_segments)
        if (idx < curve.masked.size()) curve.masked[idx] = scores[idx].z;
    curve.cumulative.resize(scores.size());
    double running = 0.0;
    for (std::size_t i = 0; i < curve.masked.size(); ++i) {
        running += curve.masked[i];
        curve.cumulative[i] = running;
    }
    return curve;
}

HappinessCurve normalize01(HappinessCurve curve) {
    curve.normalized01.assign(curve.cumulative.size(), 0.5);
    if (curve.cumulative.empty()) return curve;
    const auto [lo_it, hi_it] =
        std::minmax_element(curve.cumulative.begin(), curve.cumulative.end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi == lo) return curve;  // constant series maps to 0.5
    for (std::size_t i = 0; i < curve.cumulative.size(); ++i)
        curve.normalized01[i] = (curve.cumulative[i] - lo) / (hi - lo);
    return curve;
}

namespace {

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return buf;
}

}  // namespace

std::string skyline_svg(const std::vector<SegmentScore>& scores,
                        const CharacterRoster& roster, const CooccurrenceMap& cooccurrence) {
    constexpr double kBarWidth = 8.0;
    constexpr double kBarHeight = 120.0;
    constexpr double kMarkerSize = 6.0;
    constexpr double kOpacityClampZ = 3.0;

    const double width = kBarWidth * static_cast<double>(scores.size());
    const double height = kBarHeight + 2.0 * (kMarkerSize + 4.0);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_number(width) +
           "\" height=\"" + format_number(height) + "\">\n";
    svg += "  <title>" + roster.leading_female.value_or("-") + " / " +
           roster.leading_male.value_or("-") + "</title>\n";

    const std::set<std::size_t>* single_sets[2] = {&cooccurrence.female_only,
                                                   &cooccurrence.male_only};

    for (const SegmentScore& s : scores) {
        const double x = kBarWidth * static_cast<double>(s.index);
        const char* fill = s.z >= 0.0 ? "green" : "red";
        const double opacity =
            std::min(std::fabs(s.z), kOpacityClampZ) / kOpacityClampZ;
        svg += "  <rect class=\"bar\" x=\"" + format_number(x) + "\" y=\"" +
               format_number(kMarkerSize + 4.0) + "\" width=\"" + format_number(kBarWidth) +
               "\" height=\"" + format_number(kBarHeight) + "\" fill=\"" + fill +
               "\" fill-opacity=\"" + format_number(opacity) + "\"/>\n";
    }
    // markers: filled squares on co-occurrence segments, hollow on single mentions
    for (std::size_t idx : cooccurrence.cooccur) {
        const double x = kBarWidth * static_cast<double>(idx) + (kBarWidth - kMarkerSize) / 2.0;
        svg += "  <rect class=\"cooccur\" x=\"" + format_number(x) + "\" y=\"2.000\" width=\"" +
               format_number(kMarkerSize) + "\" height=\"" + format_number(kMarkerSize) +
               "\" fill=\"black\"/>\n";
    }
    for (const auto* set : single_sets) {
        for (std::size_t idx : *set) {
            const double x =
                kBarWidth * static_cast<double>(idx) + (kBarWidth - kMarkerSize) / 2.0;
            svg += "  <rect class=\"single\" x=\"" + format_number(x) + "\" y=\"" +
                   format_number(kMarkerSize + kBarHeight + 8.0) + "\" width=\"" +
                   format_number(kMarkerSize) + "\" height=\"" + format_number(kMarkerSize) +
                   "\" fill=\"none\" stroke=\"black\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace narrative
