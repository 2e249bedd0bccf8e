#include "narrative/postag.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "narrative/embedding.hpp"  // lowercase()

namespace narrative {

PosLexicon load_pos_lexicon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open POS lexicon: " + path);
    PosLexicon lexicon;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string word, tag, extra;
        if (!(fields >> word)) continue;  // blank or comment-only line
        if (!(fields >> tag) || (fields >> extra))
            throw std::runtime_error("POS lexicon " + path + " line " +
                                     std::to_string(lineno) + ": expected 'word TAG'");
        lexicon[lowercase(word)] = tag;
    }
    return lexicon;
}

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string tag_pos(std::string_view token, const PosLexicon* overrides) {
    const std::string key = lowercase(token);
    if (overrides) {
        if (const auto it = overrides->find(key); it != overrides->end()) return it->second;
    }
    const PosLexicon& builtin = builtin_pos_lexicon();
    if (const auto it = builtin.find(key); it != builtin.end()) return it->second;

    // Suffix fallbacks, longest first. The -s rule skips -ss ("princess") and
    // -us ("chorus"), which are overwhelmingly singular.
    if (key.size() >= 5 && ends_with(key, "ing")) return "VBG";
    if (key.size() >= 4 && ends_with(key, "ed")) return "VBD";
    if (key.size() >= 4 && ends_with(key, "ly")) return "RB";
    if (key.size() >= 3 && ends_with(key, "s") && !ends_with(key, "ss") &&
        !ends_with(key, "us"))
        return "NNS";
    return "NN";
}

bool is_verb_tag(std::string_view tag) {
    return tag == "VB" || tag == "VBD" || tag == "VBG" || tag == "VBN" || tag == "VBP" ||
           tag == "VBZ";
}

bool is_noun_tag(std::string_view tag) {
    return tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS";
}

bool is_adjective_tag(std::string_view tag) {
    return tag == "JJ" || tag == "JJR" || tag == "JJS";
}

}  // namespace narrative
