#include "narrative/axis.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "narrative/stats.hpp"

namespace narrative {

const std::vector<std::string>& default_positive_seeds() {
    static const std::vector<std::string> words = {
        "success", "succeed", "luck", "fortune", "happy", "glad", "joy", "smile"};
    return words;
}

const std::vector<std::string>& default_negative_seeds() {
    static const std::vector<std::string> words = {
        "failure", "fail", "unfortunate", "unhappy", "sad", "sorrow", "tear"};
    return words;
}

namespace {

std::vector<std::string> dedup(const std::vector<std::string>& words) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (const std::string& w : words)
        if (seen.insert(w).second) out.push_back(w);
    return out;
}

// Mean vector over the seeds present in the table; found words counted,
// absent words appended to `missing`.
Vector side_mean(const EmbeddingTable& table, const std::vector<std::string>& words,
                 std::size_t& found, std::vector<std::string>& missing) {
    Vector sum(table.dim(), 0.0f);
    std::vector<double> acc(table.dim(), 0.0);
    found = 0;
    for (const std::string& w : words) {
        const Vector* v = table.find(w);
        if (!v) {
            missing.push_back(w);
            continue;
        }
        ++found;
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += (*v)[i];
    }
    if (found > 0)
        for (std::size_t i = 0; i < acc.size(); ++i)
            sum[i] = static_cast<float>(acc[i] / static_cast<double>(found));
    return sum;
}

}  // namespace

SentimentAxis build_axis(const EmbeddingTable& table,
                         const std::vector<std::string>& positives,
                         const std::vector<std::string>& negatives) {
    if (positives.empty() || negatives.empty())
        throw std::invalid_argument("build_axis: seed lists must be non-empty");
    SentimentAxis axis;
    axis.positive_words = dedup(positives);
    axis.negative_words = dedup(negatives);
    const Vector pos_mean =
        side_mean(table, axis.positive_words, axis.found_positive, axis.missing_words);
    const Vector neg_mean =
        side_mean(table, axis.negative_words, axis.found_negative, axis.missing_words);
    if (axis.found_positive == 0)
        throw std::runtime_error("build_axis: no positive seed word found in table");
    if (axis.found_negative == 0)
        throw std::runtime_error("build_axis: no negative seed word found in table");
    axis.vector.resize(table.dim());
    for (std::size_t i = 0; i < axis.vector.size(); ++i)
        axis.vector[i] = pos_mean[i] - neg_mean[i];
    return axis;
}

std::optional<double> word_happiness(const EmbeddingTable& table, const SentimentAxis& axis,
                                     const std::string& token) {
    const Vector* v = table.find(token);
    if (!v) return std::nullopt;
    return cosine(*v, axis.vector);
}

ValidationReport validate_axis(const EmbeddingTable& table, const SentimentAxis& axis,
                               const std::vector<LexiconEntry>& lexicon) {
    if (lexicon.empty()) throw std::invalid_argument("validate_axis: empty lexicon");
    std::vector<double> scores, human;
    for (const LexiconEntry& entry : lexicon) {
        const std::optional<double> h = word_happiness(table, axis, entry.word);
        if (!h) continue;
        scores.push_back(*h);
        human.push_back(entry.human_score);
    }
    if (scores.size() < 3)
        throw std::runtime_error("validate_axis: only " + std::to_string(scores.size()) +
                                 " lexicon words matched the table, need at least 3");
    ValidationReport report;
    report.n_matched = scores.size();
    report.pearson_r = pearson(scores, human);
    const double n = static_cast<double>(report.n_matched);
    const double r = report.pearson_r;
    const double t = r * std::sqrt((n - 2.0) / (1.0 - r * r));
    report.p_value = student_t_two_sided(t, n - 2.0);
    return report;
}

std::vector<LexiconEntry> load_lexicon_csv(std::istream& in) {
    std::vector<LexiconEntry> lexicon;
    std::string line;
    bool first = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {  // header row
            first = false;
            continue;
        }
        const std::size_t comma = line.rfind(',');
        if (comma == std::string::npos || comma == 0)
            throw std::runtime_error("lexicon: malformed row on line " + std::to_string(lineno));
        LexiconEntry entry;
        entry.word = lowercase(line.substr(0, comma));
        try {
            entry.human_score = std::stod(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw std::runtime_error("lexicon: bad score on line " + std::to_string(lineno));
        }
        if (entry.human_score < 1.0 || entry.human_score > 9.0)
            throw std::runtime_error("lexicon: score out of [1,9] on line " +
                                     std::to_string(lineno));
        lexicon.push_back(std::move(entry));
    }
    return lexicon;
}

std::vector<LexiconEntry> load_lexicon_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
    return load_lexicon_csv(in);
}

}  // namespace narrative
