#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "narrative/cast.hpp"
#include "narrative/corpus.hpp"
#include "narrative/postag.hpp"

namespace narrative {

// One window of context around a character-name occurrence: up to five tokens
// on each side, clipped at segment boundaries, the name itself excluded.
struct WindowSample {
    std::string story_id;
    Gender gender = Gender::female;
    std::vector<std::string> tokens;  // lowercased, size <= 10
};

enum class WindowMode { single, cooccur };
std::string to_string(WindowMode mode);
WindowMode window_mode_from_string(const std::string& s);

// single: every segment mentioning the character.
// cooccur: only segments mentioning both leading characters (requires a
// resolved leading pair in the roster).
std::vector<WindowSample> extract_windows(const Story& story, const CharacterRoster& roster,
                                          const Character& character, WindowMode mode);

// Undirected multigraph over window words. Edge keys are ordered (first <
// second); node multiplicity always equals the sum of incident edge
// multiplicities, and there are no self-loops.
struct CoNetwork {
    std::map<std::string, std::uint64_t> nodes;
    std::map<std::pair<std::string, std::string>, std::uint64_t> edges;

    std::size_t n_nodes() const { return nodes.size(); }
    std::size_t n_edges_distinct() const { return edges.size(); }
    std::uint64_t n_edges_weighted() const;

    // Associative, commutative accumulation; used for parallel reduction.
    void merge(const CoNetwork& other);

    bool operator==(const CoNetwork&) const = default;
};

CoNetwork build_network(const std::vector<WindowSample>& samples);

struct CommunityPartition {
    std::map<std::string, std::size_t> assignment;  // word -> community id
    double q = 0.0;
    std::vector<std::size_t> community_sizes;  // indexed by community id, descending
};

// Weighted Newman modularity of a full node partition; throws if any network
// node is missing from the assignment.
double modularity(const CoNetwork& network,
                  const std::map<std::string, std::size_t>& assignment);

// Greedy agglomerative maximization with deterministic (lexicographic) visit
// order. Instances of up to 10 nodes are solved by exhaustive partition
// search, so tiny networks always get the true optimum. Community ids are
// assigned by decreasing size, ties broken by smallest member word.
CommunityPartition detect_communities(const CoNetwork& network);

enum class WordCategory { adjective, verb, noun };
std::string to_string(WordCategory category);

// Induced sub-network on nodes whose POS tag family matches (JJ*/VB*/NN*);
// node multiplicities are recomputed from the surviving edges.
CoNetwork category_slice(const CoNetwork& network, WordCategory category,
                         const PosLexicon* pos_overrides = nullptr);

struct VerbRate {
    Gender gender = Gender::female;
    double p_verb = 0.0;
    std::size_t n_tokens = 0;
    std::size_t n_verb_tokens = 0;
};

// Pooled fraction of verb-tagged tokens over all samples of one gender.
// Throws if those samples contain no tokens at all.
VerbRate verb_rate(const std::vector<WindowSample>& samples, Gender gender,
                   const PosLexicon* pos_overrides = nullptr);

// Exports. Both are deterministic byte-for-byte given the same network.
std::string network_tsv(const CoNetwork& network);
std::string network_graphml(const CoNetwork& network, std::uint64_t label_threshold);

}  // namespace narrative
