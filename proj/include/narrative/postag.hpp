#pragma once

#include <string>
#include <string_view>
#include <unordered_map>

namespace narrative {

// Word -> Penn Treebank tag. Keys are lowercase.
using PosLexicon = std::unordered_map<std::string, std::string>;

// Bundled most-frequent-tag table for common English words.
const PosLexicon& builtin_pos_lexicon();

// Loads "word<whitespace>TAG" lines; '#' starts a comment, blank lines ignored.
PosLexicon load_pos_lexicon_file(const std::string& path);

// Tags one token: override table first, then the bundled lexicon, then suffix
// rules (-ing -> VBG, -ed -> VBD, -ly -> RB, -s -> NNS), defaulting to NN.
std::string tag_pos(std::string_view token, const PosLexicon* overrides = nullptr);

bool is_verb_tag(std::string_view tag);       // VB VBD VBG VBN VBP VBZ
bool is_noun_tag(std::string_view tag);       // NN NNS NNP NNPS
bool is_adjective_tag(std::string_view tag);  // JJ JJR JJS

}  // namespace narrative
