#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "narrative/corpus.hpp"

namespace narrative {

enum class Gender { female, male };

std::string to_string(Gender g);

enum class AmbiguousPolicy { exclude, majority_list };

// Gendered first-name lists, loaded from one-name-per-line files with
// capitalized forms. Optional per-name frequency weights back the
// majority-list policy for names on both lists.
struct NameLexicon {
    std::unordered_set<std::string> male_names;
    std::unordered_set<std::string> female_names;
    std::unordered_map<std::string, std::pair<double, double>> freq;  // male, female
    AmbiguousPolicy ambiguous_policy = AmbiguousPolicy::exclude;

    // Resolved gender under the policy, or nullopt for unknown / excluded
    // ambiguous names.
    std::optional<Gender> gender_of(const std::string& name) const;
};

NameLexicon load_name_lexicon(const std::string& male_path, const std::string& female_path,
                              const std::string& freq_csv_path = {},
                              AmbiguousPolicy policy = AmbiguousPolicy::exclude);

struct Character {
    std::string name;
    Gender gender = Gender::female;
    std::vector<std::size_t> mention_segments;  // sorted, unique
    std::size_t mention_count = 0;              // occurrence count, >= segment count
    std::size_t first_mention_segment = 0;
    std::size_t first_mention_position = 0;
};

struct CharacterRoster {
    std::vector<Character> characters;  // sorted by name
    std::optional<std::string> leading_female;
    std::optional<std::string> leading_male;
    std::optional<Gender> dominance;  // gender of the overall most frequent name

    const Character* find(const std::string& name) const;
    bool has_gender(Gender g) const;
};

enum class CooccurMode { leading, any };

// Segment classification against the leading pair (or any female/male name
// in CooccurMode::any): segments mentioning both genders, only the female,
// or only the male. The three sets are pairwise disjoint.
struct CooccurrenceMap {
    std::set<std::size_t> cooccur;
    std::set<std::size_t> female_only;
    std::set<std::size_t> male_only;
};

// True when a surface token refers to the name, counting possessive forms
// ("Ella's", "Ella'") as mentions of their stem.
bool token_mentions(const std::string& surface_token, const std::string& name);

// Scans surface tokens for capitalized lexicon names. Names doubling as
// common capitalized English words (Will, May, Rose, ...) only count their
// segment-initial occurrences when the story also contains a non-initial
// occurrence. Possessive forms ("Ella's") match their stem. Metadata cast
// genders, when supplied, override lexicon inference.
CharacterRoster detect_characters(const Story& story, const NameLexicon& lexicon);

// Fills leading_female / leading_male (maximal mention_count per gender,
// ties broken by earliest first mention) and the dominance flag.
CharacterRoster leading_characters(CharacterRoster roster);

// Requires both leading characters in mode `leading`; throws
// std::runtime_error otherwise.
CooccurrenceMap mark_cooccurrence(const Story& story, const CharacterRoster& roster,
                                  CooccurMode mode = CooccurMode::leading);

}  // namespace narrative
