#include "narrative/cast.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "narrative/embedding.hpp"  // lowercase()

namespace narrative {

std::string to_string(Gender g) { return g == Gender::female ? "female" : "male"; }

namespace {

// Capitalized tokens that are also everyday English words; their
// segment-initial occurrences are ambiguous between name and sentence case.
const std::unordered_set<std::string>& common_word_names() {
    static const std::unordered_set<std::string> words = {
        "Will",   "May",    "Rose",    "Grace", "June",   "April",  "Dawn",
        "Summer", "Autumn", "Daisy",   "Iris",  "Violet", "Hope",   "Faith",
        "Joy",    "Bill",   "Mark",    "Frank", "Art",    "Penny",  "Ruby",
        "Pearl",  "Hazel",  "Olive",   "Amber", "Crystal", "Ginger", "Holly",
        "Ivy",    "Jade",   "Jasmine", "Lily",  "Melody", "Robin",  "Sage",
        "Kit",    "Sunny"};
    return words;
}

bool is_capitalized(const std::string& token) {
    return !token.empty() && std::isupper(static_cast<unsigned char>(token[0]));
}

// "Ella's" and "Ella'" mention Ella.
std::string strip_possessive(const std::string& token) {
    if (token.size() > 2 && token.compare(token.size() - 2, 2, "'s") == 0)
        return token.substr(0, token.size() - 2);
    if (token.size() > 1 && token.back() == '\'') return token.substr(0, token.size() - 1);
    return token;
}

std::optional<Gender> gender_from_text(const std::string& text) {
    const std::string g = lowercase(text);
    if (g == "female" || g == "f" || g == "actress") return Gender::female;
    if (g == "male" || g == "m" || g == "actor") return Gender::male;
    return std::nullopt;
}

}  // namespace

std::optional<Gender> NameLexicon::gender_of(const std::string& name) const {
    const bool in_male = male_names.count(name) > 0;
    const bool in_female = female_names.count(name) > 0;
    if (in_male && in_female) {
        if (ambiguous_policy == AmbiguousPolicy::exclude) return std::nullopt;
        auto it = freq.find(name);
        if (it == freq.end() || it->second.first == it->second.second) return std::nullopt;
        return it->second.first > it->second.second ? Gender::male : Gender::female;
    }
    if (in_male) return Gender::male;
    if (in_female) return Gender::female;
    return std::nullopt;
}

NameLexicon load_name_lexicon(const std::string& male_path, const std::string& female_path,
                              const std::string& freq_csv_path, AmbiguousPolicy policy) {
    NameLexicon lexicon;
    lexicon.ambiguous_policy = policy;
    auto load_list = [](const std::string& path, std::unordered_set<std::string>& out) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open name list: " + path);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) out.insert(line);
        }
        if (out.empty()) throw std::runtime_error("empty name list: " + path);
    };
    load_list(male_path, lexicon.male_names);
    load_list(female_path, lexicon.female_names);
    if (!freq_csv_path.empty()) {
        std::ifstream in(freq_csv_path);
        if (!in) throw std::runtime_error("cannot open name frequency file: " + freq_csv_path);
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            if (first) {  // header: name,male_freq,female_freq
                first = false;
                continue;
            }
            std::istringstream ls(line);
            std::string name, male_s, female_s;
            if (std::getline(ls, name, ',') && std::getline(ls, male_s, ',') &&
                std::getline(ls, female_s)) {
                lexicon.freq[name] = {std::stod(male_s), std::stod(female_s)};
            }
        }
    }
    return lexicon;
}

const Character* CharacterRoster::find(const std::string& name) const {
    for (const Character& c : characters)
        if (c.name == name) return &c;
    return nullptr;
}

bool CharacterRoster::has_gender(Gender g) const {
    return std::any_of(characters.begin(), characters.end(),
                       [g](const Character& c) { return c.gender == g; });
}

bool token_mentions(const std::string& surface_token, const std::string& name) {
    return strip_possessive(surface_token) == name;
}

CharacterRoster detect_characters(const Story& story, const NameLexicon& lexicon) {
    std::unordered_map<std::string, Gender> overrides;
    for (const auto& [name, gender_text] : story.meta.cast_genders) {
        if (const std::optional<Gender> g = gender_from_text(gender_text)) overrides[name] = *g;
    }

    struct Occurrence {
        std::size_t segment;
        std::size_t position;
    };
    std::map<std::string, std::vector<Occurrence>> occurrences;
    std::map<std::string, Gender> genders;

    for (const Segment& seg : story.segments) {
        for (std::size_t pos = 0; pos < seg.surface_tokens.size(); ++pos) {
            const std::string name = strip_possessive(seg.surface_tokens[pos]);
            if (!is_capitalized(name)) continue;
            std::optional<Gender> gender;
            if (auto it = overrides.find(name); it != overrides.end()) {
                gender = it->second;
            } else {
                gender = lexicon.gender_of(name);
            }
            if (!gender) continue;
            occurrences[name].push_back({seg.index, pos});
            genders.emplace(name, *gender);
        }
    }

    CharacterRoster roster;
    for (auto& [name, occs] : occurrences) {
        if (common_word_names().count(name) > 0) {
            const bool has_non_initial = std::any_of(
                occs.begin(), occs.end(), [](const Occurrence& o) { return o.position > 0; });
            if (!has_non_initial) continue;
        }
        Character character;
        character.name = name;
        character.gender = genders.at(name);
        character.mention_count = occs.size();
        character.first_mention_segment = occs.front().segment;
        character.first_mention_position = occs.front().position;
        for (const Occurrence& o : occs) character.mention_segments.push_back(o.segment);
        std::sort(character.mention_segments.begin(), character.mention_segments.end());
        character.mention_segments.erase(
            std::unique(character.mention_segments.begin(), character.mention_segments.end()),
            character.mention_segments.end());
        roster.characters.push_back(std::move(character));
    }
    return leading_characters(std::move(roster));
}

CharacterRoster leading_characters(CharacterRoster roster) {
    roster.leading_female.reset();
    roster.leading_male.reset();
    roster.dominance.reset();
    const Character* best[2] = {nullptr, nullptr};  // female, male
    for (const Character& c : roster.characters) {
        const Character*& slot = best[c.gender == Gender::female ? 0 : 1];
        if (!slot || c.mention_count > slot->mention_count ||
            (c.mention_count == slot->mention_count &&
             std::pair(c.first_mention_segment, c.first_mention_position) <
                 std::pair(slot->first_mention_segment, slot->first_mention_position))) {
            slot = &c;
        }
    }
    if (best[0]) roster.leading_female = best[0]->name;
    if (best[1]) roster.leading_male = best[1]->name;
    if (best[0] && best[1]) {
        const bool female_dominates =
            best[0]->mention_count > best[1]->mention_count ||
            (best[0]->mention_count == best[1]->mention_count &&
             std::pair(best[0]->first_mention_segment, best[0]->first_mention_position) <
                 std::pair(best[1]->first_mention_segment, best[1]->first_mention_position));
        roster.dominance = female_dominates ? Gender::female : Gender::male;
    } else if (best[0]) {
        roster.dominance = Gender::female;
    } else if (best[1]) {
        roster.dominance = Gender::male;
    }
    return roster;
}

CooccurrenceMap mark_cooccurrence(const Story& story, const CharacterRoster& roster,
                                  CooccurMode mode) {
    std::vector<bool> female_here(story.segments.size(), false);
    std::vector<bool> male_here(story.segments.size(), false);
    auto mark = [&](const Character& c) {
        auto& flags = c.gender == Gender::female ? female_here : male_here;
        for (std::size_t idx : c.mention_segments)
            if (idx < flags.size()) flags[idx] = true;
    };
    if (mode == CooccurMode::leading) {
        if (!roster.leading_female || !roster.leading_male)
            throw std::runtime_error("mark_cooccurrence: missing leading pair");
        mark(*roster.find(*roster.leading_female));
        mark(*roster.find(*roster.leading_male));
    } else {
        for (const Character& c : roster.characters) mark(c);
    }
    CooccurrenceMap map;
    for (std::size_t i = 0; i < story.segments.size(); ++i) {
        if (female_here[i] && male_here[i]) {
            map.cooccur.insert(i);
        } else if (female_here[i]) {
            map.female_only.insert(i);
        } else if (male_here[i]) {
            map.male_only.insert(i);
        }
    }
    return map;
}

}  // namespace narrative
