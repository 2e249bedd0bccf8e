#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace narrative {

using Vector = std::vector<float>;

// Cosine similarity between two equal-dimension vectors. Throws
// std::invalid_argument on dimension mismatch and std::domain_error when
// either vector has zero norm.
double cosine(std::span<const float> a, std::span<const float> b);

struct EmbeddingParseOptions {
    // When set, only tokens in the allow-list are kept. Lets tests and
    // replication runs load small slices of multi-gigabyte files.
    std::optional<std::unordered_set<std::string>> vocab_filter;
};

// Immutable token -> vector table parsed from a pre-trained embedding file.
// Safe to share across threads once constructed.
class EmbeddingTable {
public:
    EmbeddingTable(std::size_t dim,
                   std::unordered_map<std::string, Vector> entries,
                   std::string source_label);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return entries_.size(); }
    const std::string& source_label() const { return source_label_; }

    // Lookup lowercases the query first; when absent, retries with the
    // original case. Returns nullptr when the token is unknown.
    const Vector* find(const std::string& token) const;

    // Exact-match lookup without the case policy.
    const Vector* find_exact(const std::string& token) const;

    const std::unordered_map<std::string, Vector>& entries() const { return entries_; }

    bool operator==(const EmbeddingTable& other) const;

private:
    std::size_t dim_;
    std::unordered_map<std::string, Vector> entries_;
    std::string source_label_;
};

// word2vec binary format: ASCII header "<vocab> <dim>\n", then per entry the
// token bytes terminated by a space followed by dim little-endian 32-bit
// floats. A single '\n' after the float block is tolerated. Throws
// std::runtime_error on malformed headers, truncated payloads, duplicate
// tokens (reporting token and byte offset), and non-finite components.
EmbeddingTable parse_embeddings_binary(std::istream& in,
                                       const EmbeddingParseOptions& options = {},
                                       std::string source_label = "binary");

// Plain-text format: one entry per line, whitespace-separated token then
// dim decimal components, no header. Dimensionality is inferred from the
// first line. Throws std::runtime_error on inconsistent component counts,
// non-numeric or non-finite components, and empty input.
EmbeddingTable parse_embeddings_text(std::istream& in,
                                     const EmbeddingParseOptions& options = {},
                                     std::string source_label = "text");

// Sniffs a word2vec ASCII header to pick the parser.
EmbeddingTable parse_embeddings_auto(std::istream& in,
                                     const EmbeddingParseOptions& options = {},
                                     std::string source_label = "auto");

EmbeddingTable load_embeddings(const std::string& path, const std::string& format,
                               const EmbeddingParseOptions& options = {});

// Writers matching the two parse formats. Tokens are emitted in sorted
// order so serialization is deterministic; binary round-trips bit-exactly.
void serialize_embeddings_binary(const EmbeddingTable& table, std::ostream& out);
void serialize_embeddings_text(const EmbeddingTable& table, std::ostream& out);

std::string lowercase(std::string_view text);

}  // namespace narrative
