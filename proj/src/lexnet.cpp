#include "narrative/lexnet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace narrative {

std::string to_string(WindowMode mode) {
    return mode == WindowMode::single ? "single" : "cooccur";
}

WindowMode window_mode_from_string(const std::string& s) {
    if (s == "single") return WindowMode::single;
    if (s == "cooccur") return WindowMode::cooccur;
    throw std::invalid_argument("unknown window mode: " + s);
}

std::string to_string(WordCategory category) {
    switch (category) {
        case WordCategory::adjective: return "adjective";
        case WordCategory::verb: return "verb";
        case WordCategory::noun: return "noun";
    }
    return {};
}

namespace {

constexpr std::size_t kWindowRadius = 5;

std::set<std::size_t> segments_mentioning_both(const CharacterRoster& roster) {
    const Character* female = roster.find(*roster.leading_female);
    const Character* male = roster.find(*roster.leading_male);
    std::set<std::size_t> female_set(female->mention_segments.begin(),
                                     female->mention_segments.end());
    std::set<std::size_t> both;
    for (std::size_t idx : male->mention_segments)
        if (female_set.count(idx)) both.insert(idx);
    return both;
}

}  // namespace

std::vector<WindowSample> extract_windows(const Story& story, const CharacterRoster& roster,
                                          const Character& character, WindowMode mode) {
    std::set<std::size_t> qualifying(character.mention_segments.begin(),
                                     character.mention_segments.end());
    if (mode == WindowMode::cooccur) {
        if (!roster.leading_female || !roster.leading_male)
            throw std::runtime_error(
                "extract_windows: cooccur mode needs a resolved leading pair");
        const std::set<std::size_t> both = segments_mentioning_both(roster);
        std::set<std::size_t> narrowed;
        for (std::size_t idx : qualifying)
            if (both.count(idx)) narrowed.insert(idx);
        qualifying = std::move(narrowed);
    }

    std::vector<WindowSample> samples;
    for (std::size_t idx : qualifying) {
        if (idx >= story.segments.size()) continue;
        const Segment& seg = story.segments[idx];
        for (std::size_t pos = 0; pos < seg.surface_tokens.size(); ++pos) {
            if (!token_mentions(seg.surface_tokens[pos], character.name)) continue;
            WindowSample sample;
            sample.story_id = story.meta.id;
            sample.gender = character.gender;
            const std::size_t lo = pos >= kWindowRadius ? pos - kWindowRadius : 0;
            const std::size_t hi =
                std::min(pos + kWindowRadius, seg.tokens.size() - 1);
            for (std::size_t i = lo; i <= hi; ++i) {
                if (token_mentions(seg.surface_tokens[i], character.name)) continue;
                sample.tokens.push_back(seg.tokens[i]);
            }
            samples.push_back(std::move(sample));
        }
    }
    return samples;
}

std::uint64_t CoNetwork::n_edges_weighted() const {
    std::uint64_t total = 0;
    for (const auto& [edge, weight] : edges) total += weight;
    return total;
}

void CoNetwork::merge(const CoNetwork& other) {
    for (const auto& [edge, weight] : other.edges) edges[edge] += weight;
    for (const auto& [word, weight] : other.nodes) nodes[word] += weight;
}

CoNetwork build_network(const std::vector<WindowSample>& samples) {
    CoNetwork net;
    for (const WindowSample& sample : samples) {
        const std::vector<std::string>& t = sample.tokens;
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                if (t[i] == t[j]) continue;  // no self-loops
                auto key = t[i] < t[j] ? std::make_pair(t[i], t[j])
                                       : std::make_pair(t[j], t[i]);
                net.edges[std::move(key)] += 1;
            }
        }
    }
    for (const auto& [edge, weight] : net.edges) {
        net.nodes[edge.first] += weight;
        net.nodes[edge.second] += weight;
    }
    return net;
}

double modularity(const CoNetwork& network,
                  const std::map<std::string, std::size_t>& assignment) {
    for (const auto& [word, mult] : network.nodes)
        if (!assignment.count(word))
            throw std::invalid_argument("modularity: node '" + word +
                                        "' has no community assignment");
    const double total = static_cast<double>(network.n_edges_weighted());
    if (total == 0.0) return 0.0;

    std::map<std::size_t, double> internal, strength;
    for (const auto& [edge, weight] : network.edges) {
        const std::size_t ci = assignment.at(edge.first);
        const std::size_t cj = assignment.at(edge.second);
        if (ci == cj) internal[ci] += static_cast<double>(weight);
    }
    for (const auto& [word, mult] : network.nodes)
        strength[assignment.at(word)] += static_cast<double>(mult);

    double q = 0.0;
    for (const auto& [community, k_sum] : strength) {
        const double frac = k_sum / (2.0 * total);
        const auto it = internal.find(community);
        const double in = it == internal.end() ? 0.0 : it->second;
        q += in / total - frac * frac;
    }
    return q;
}

namespace {

// Index-based view of the network: words sorted lexicographically so every
// pass below is deterministic.
struct IndexedGraph {
    std::vector<std::string> words;
    std::vector<std::vector<std::pair<int, double>>> neighbors;
    std::vector<double> strength;
    double total_weight = 0.0;  // sum of distinct-edge weights

    explicit IndexedGraph(const CoNetwork& net) {
        words.reserve(net.nodes.size());
        for (const auto& [word, mult] : net.nodes) words.push_back(word);
        std::map<std::string, int> index;
        for (int i = 0; i < static_cast<int>(words.size()); ++i) index[words[i]] = i;
        neighbors.resize(words.size());
        strength.assign(words.size(), 0.0);
        for (const auto& [edge, weight] : net.edges) {
            const int a = index.at(edge.first);
            const int b = index.at(edge.second);
            const double w = static_cast<double>(weight);
            neighbors[a].push_back({b, w});
            neighbors[b].push_back({a, w});
            strength[a] += w;
            strength[b] += w;
            total_weight += w;
        }
    }
};

double partition_q(const IndexedGraph& g, const std::vector<int>& community) {
    const int n = static_cast<int>(g.words.size());
    std::vector<double> internal(n, 0.0), strength_sum(n, 0.0);
    for (int i = 0; i < n; ++i) {
        strength_sum[community[i]] += g.strength[i];
        for (const auto& [j, w] : g.neighbors[i])
            if (j > i && community[j] == community[i]) internal[community[i]] += w;
    }
    double q = 0.0;
    for (int c = 0; c < n; ++c) {
        const double frac = strength_sum[c] / (2.0 * g.total_weight);
        q += internal[c] / g.total_weight - frac * frac;
    }
    return q;
}

// Exhaustive search over all set partitions via restricted growth strings.
// Bell(10) = 115,975 partitions, comfortably cheap for the tiny graphs this
// is reserved for.
std::vector<int> best_partition_exhaustive(const IndexedGraph& g) {
    const int n = static_cast<int>(g.words.size());
    std::vector<int> current(n, 0), best(n, 0);
    double best_q = partition_q(g, best);
    // Odometer over restricted growth strings: current[i] <= max(prefix) + 1.
    while (true) {
        int i = n - 1;
        for (; i > 0; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, current[j]);
            if (current[i] <= prefix_max) break;
        }
        if (i == 0) break;  // all strings enumerated
        ++current[i];
        std::fill(current.begin() + i + 1, current.end(), 0);
        const double q = partition_q(g, current);
        if (q > best_q + 1e-15) {
            best_q = q;
            best = current;
        }
    }
    return best;
}

// One Louvain level: local moving over nodes in lexicographic order until a
// full sweep makes no move. Ties between target communities break toward the
// lowest community id.
struct WorkGraph {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> neighbors;  // no self entries
    std::vector<double> self_loop;  // in-community weight folded into a node
    std::vector<double> strength;   // includes 2 * self_loop
    double total_weight = 0.0;      // distinct edges + self loops
};

bool local_moving(WorkGraph& g, std::vector<int>& community) {
    std::vector<double> community_strength(g.n, 0.0);
    for (int i = 0; i < g.n; ++i) community_strength[community[i]] += g.strength[i];

    bool any_move = false;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < g.n; ++i) {
            std::map<int, double> weight_to;
            for (const auto& [j, w] : g.neighbors[i]) weight_to[community[j]] += w;
            const int old_comm = community[i];
            community_strength[old_comm] -= g.strength[i];

            int best_comm = old_comm;
            double best_score = weight_to[old_comm] -
                                community_strength[old_comm] * g.strength[i] /
                                    (2.0 * g.total_weight);
            for (const auto& [c, w] : weight_to) {
                const double score =
                    w - community_strength[c] * g.strength[i] / (2.0 * g.total_weight);
                if (score > best_score + 1e-12 ||
                    (std::abs(score - best_score) <= 1e-12 && c < best_comm)) {
                    best_score = score;
                    best_comm = c;
                }
            }
            community_strength[best_comm] += g.strength[i];
            if (best_comm != old_comm) {
                community[i] = best_comm;
                moved = true;
                any_move = true;
            }
        }
    }
    return any_move;
}

WorkGraph aggregate(const WorkGraph& g, const std::vector<int>& community,
                    std::vector<int>& relabel) {
    relabel.assign(g.n, -1);
    int next = 0;
    for (int i = 0; i < g.n; ++i)
        if (relabel[community[i]] == -1) relabel[community[i]] = next++;

    WorkGraph out;
    out.n = next;
    out.neighbors.resize(next);
    out.self_loop.assign(next, 0.0);
    out.strength.assign(next, 0.0);
    std::map<std::pair<int, int>, double> edges;
    for (int i = 0; i < g.n; ++i) {
        const int ci = relabel[community[i]];
        out.self_loop[ci] += g.self_loop[i];
        for (const auto& [j, w] : g.neighbors[i]) {
            if (j < i) continue;  // each undirected edge once
            const int cj = relabel[community[j]];
            if (ci == cj)
                out.self_loop[ci] += w;
            else
                edges[{std::min(ci, cj), std::max(ci, cj)}] += w;
        }
    }
    for (const auto& [edge, w] : edges) {
        out.neighbors[edge.first].push_back({edge.second, w});
        out.neighbors[edge.second].push_back({edge.first, w});
        out.strength[edge.first] += w;
        out.strength[edge.second] += w;
        out.total_weight += w;
    }
    for (int c = 0; c < next; ++c) {
        out.strength[c] += 2.0 * out.self_loop[c];
        out.total_weight += out.self_loop[c];
    }
    return out;
}

std::vector<int> best_partition_greedy(const IndexedGraph& g) {
    WorkGraph work;
    work.n = static_cast<int>(g.words.size());
    work.neighbors = g.neighbors;
    work.self_loop.assign(work.n, 0.0);
    work.strength = g.strength;
    work.total_weight = g.total_weight;

    std::vector<int> node_to_final(work.n);
    for (int i = 0; i < work.n; ++i) node_to_final[i] = i;

    while (true) {
        std::vector<int> community(work.n);
        for (int i = 0; i < work.n; ++i) community[i] = i;
        if (!local_moving(work, community)) break;
        std::vector<int> relabel;
        work = aggregate(work, community, relabel);
        for (int& c : node_to_final) c = relabel[community[c]];
    }
    return node_to_final;
}

}  // namespace

CommunityPartition detect_communities(const CoNetwork& network) {
    if (network.nodes.empty())
        throw std::invalid_argument("detect_communities: empty network");
    const IndexedGraph graph(network);
    const std::vector<int> raw = graph.words.size() <= 10
                                     ? best_partition_exhaustive(graph)
                                     : best_partition_greedy(graph);

    // Relabel by decreasing community size; ties go to the community holding
    // the lexicographically smallest word (words are sorted, so "first index").
    std::map<int, std::vector<int>> members;
    for (int i = 0; i < static_cast<int>(raw.size()); ++i) members[raw[i]].push_back(i);
    std::vector<std::pair<int, std::vector<int>>> ordered(members.begin(), members.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.second.size() != b.second.size()) return a.second.size() > b.second.size();
        return a.second.front() < b.second.front();
    });

    CommunityPartition partition;
    partition.community_sizes.reserve(ordered.size());
    for (std::size_t id = 0; id < ordered.size(); ++id) {
        partition.community_sizes.push_back(ordered[id].second.size());
        for (int i : ordered[id].second)
            partition.assignment[graph.words[i]] = id;
    }
    partition.q = modularity(network, partition.assignment);
    return partition;
}

CoNetwork category_slice(const CoNetwork& network, WordCategory category,
                         const PosLexicon* pos_overrides) {
    const auto matches = [&](const std::string& word) {
        const std::string tag = tag_pos(word, pos_overrides);
        switch (category) {
            case WordCategory::adjective: return is_adjective_tag(tag);
            case WordCategory::verb: return is_verb_tag(tag);
            case WordCategory::noun: return is_noun_tag(tag);
        }
        return false;
    };
    CoNetwork slice;
    for (const auto& [word, mult] : network.nodes)
        if (matches(word)) slice.nodes[word] = 0;
    for (const auto& [edge, weight] : network.edges) {
        if (!slice.nodes.count(edge.first) || !slice.nodes.count(edge.second)) continue;
        slice.edges[edge] = weight;
        slice.nodes[edge.first] += weight;
        slice.nodes[edge.second] += weight;
    }
    return slice;
}

VerbRate verb_rate(const std::vector<WindowSample>& samples, Gender gender,
                   const PosLexicon* pos_overrides) {
    VerbRate rate;
    rate.gender = gender;
    for (const WindowSample& sample : samples) {
        if (sample.gender != gender) continue;
        for (const std::string& token : sample.tokens) {
            ++rate.n_tokens;
            if (is_verb_tag(tag_pos(token, pos_overrides))) ++rate.n_verb_tokens;
        }
    }
    if (rate.n_tokens == 0)
        throw std::runtime_error("verb_rate: no tokens for gender " + to_string(gender));
    rate.p_verb = static_cast<double>(rate.n_verb_tokens) /
                  static_cast<double>(rate.n_tokens);
    return rate;
}

std::string network_tsv(const CoNetwork& network) {
    std::ostringstream out;
    for (const auto& [edge, weight] : network.edges)
        out << edge.first << '\t' << edge.second << '\t' << weight << '\n';
    return out.str();
}

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string network_graphml(const CoNetwork& network, std::uint64_t label_threshold) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        << "  <key id=\"links\" for=\"node\" attr.name=\"links\" attr.type=\"long\"/>\n"
        << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    std::map<std::string, std::size_t> index;
    for (const auto& [word, mult] : network.nodes) {
        const std::size_t id = index.size();
        index[word] = id;
        out << "    <node id=\"n" << id << "\"><data key=\"links\">" << mult << "</data>";
        if (mult >= label_threshold)
            out << "<data key=\"label\">" << xml_escape(word) << "</data>";
        out << "</node>\n";
    }
    for (const auto& [edge, weight] : network.edges) {
        out << "    <edge source=\"n" << index.at(edge.first) << "\" target=\"n"
            << index.at(edge.second) << "\"><data key=\"weight\">" << weight
            << "</data></edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

}  // namespace narrative
