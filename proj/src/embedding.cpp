#include "narrative/embedding.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace narrative {

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

double cosine(std::span<const float> a, std::span<const float> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("cosine: dimension mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += static_cast<double>(a[i]) * b[i];
        na += static_cast<double>(a[i]) * a[i];
        nb += static_cast<double>(b[i]) * b[i];
    }
    if (na == 0.0 || nb == 0.0) throw std::domain_error("cosine: zero-norm vector");
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

EmbeddingTable::EmbeddingTable(std::size_t dim,
                               std::unordered_map<std::string, Vector> entries,
                               std::string source_label)
    : dim_(dim), entries_(std::move(entries)), source_label_(std::move(source_label)) {
    if (dim_ == 0) throw std::invalid_argument("EmbeddingTable: dim must be positive");
    for (const auto& [token, vec] : entries_) {
        if (token.empty()) throw std::invalid_argument("EmbeddingTable: empty token");
        if (vec.size() != dim_)
            throw std::invalid_argument("EmbeddingTable: vector length mismatch for '" +
                                        token + "'");
    }
}

const Vector* EmbeddingTable::find_exact(const std::string& token) const {
    auto it = entries_.find(token);
    return it == entries_.end() ? nullptr : &it->second;
}

const Vector* EmbeddingTable::find(const std::string& token) const {
    if (const Vector* v = find_exact(lowercase(token))) return v;
    return find_exact(token);
}

bool EmbeddingTable::operator==(const EmbeddingTable& other) const {
    return dim_ == other.dim_ && entries_ == other.entries_;
}

namespace {

void check_finite(const Vector& vec, const std::string& token) {
    for (float c : vec) {
        if (!std::isfinite(c))
            throw std::runtime_error("non-finite component in vector for '" + token + "'");
    }
}

bool wanted(const EmbeddingParseOptions& options, const std::string& token) {
    return !options.vocab_filter || options.vocab_filter->count(token) > 0;
}

float float_from_le(const unsigned char bytes[4]) {
    std::uint32_t bits = static_cast<std::uint32_t>(bytes[0]) |
                         static_cast<std::uint32_t>(bytes[1]) << 8 |
                         static_cast<std::uint32_t>(bytes[2]) << 16 |
                         static_cast<std::uint32_t>(bytes[3]) << 24;
    return std::bit_cast<float>(bits);
}

void float_to_le(float value, unsigned char bytes[4]) {
    const std::uint32_t bits = std::bit_cast<std::uint32_t>(value);
    bytes[0] = static_cast<unsigned char>(bits & 0xff);
    bytes[1] = static_cast<unsigned char>((bits >> 8) & 0xff);
    bytes[2] = static_cast<unsigned char>((bits >> 16) & 0xff);
    bytes[3] = static_cast<unsigned char>((bits >> 24) & 0xff);
}

}  // namespace

EmbeddingTable parse_embeddings_binary(std::istream& in,
                                       const EmbeddingParseOptions& options,
                                       std::string source_label) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("malformed header: empty stream");
    std::istringstream hs(header);
    long long vocab = 0, dim = 0;
    if (!(hs >> vocab >> dim) || vocab <= 0 || dim <= 0)
        throw std::runtime_error("malformed header: expected \"<vocab> <dim>\", got \"" +
                                 header + "\"");

    std::unordered_map<std::string, Vector> entries;
    entries.reserve(static_cast<std::size_t>(vocab));
    std::vector<unsigned char> payload(static_cast<std::size_t>(dim) * 4);
    for (long long i = 0; i < vocab; ++i) {
        std::string token;
        int ch;
        while ((ch = in.get()) != std::istream::traits_type::eof() && ch != ' ') {
            // some writers emit a newline after the float block
            if (ch == '\n' && token.empty()) continue;
            token.push_back(static_cast<char>(ch));
        }
        const auto offset = in.tellg();
        if (ch == std::istream::traits_type::eof())
            throw std::runtime_error("truncated vector payload: expected " +
                                     std::to_string(vocab) + " entries, got " +
                                     std::to_string(i));
        if (token.empty()) throw std::runtime_error("empty token in entry " + std::to_string(i));
        in.read(reinterpret_cast<char*>(payload.data()),
                static_cast<std::streamsize>(payload.size()));
        if (in.gcount() != static_cast<std::streamsize>(payload.size()))
            throw std::runtime_error("truncated vector payload for token '" + token + "'");
        if (!wanted(options, token)) continue;
        Vector vec(static_cast<std::size_t>(dim));
        for (std::size_t c = 0; c < vec.size(); ++c) vec[c] = float_from_le(&payload[c * 4]);
        check_finite(vec, token);
        if (!entries.emplace(token, std::move(vec)).second)
            throw std::runtime_error("duplicate token '" + token + "' at offset " +
                                     std::to_string(static_cast<long long>(offset)));
    }
    if (!options.vocab_filter && entries.size() != static_cast<std::size_t>(vocab))
        throw std::runtime_error("entry count mismatch");  // unreachable; guards refactors
    return EmbeddingTable(static_cast<std::size_t>(dim), std::move(entries),
                          std::move(source_label));
}

EmbeddingTable parse_embeddings_text(std::istream& in,
                                     const EmbeddingParseOptions& options,
                                     std::string source_label) {
    std::unordered_map<std::string, Vector> entries;
    std::size_t dim = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string token;
        ls >> token;
        if (token.empty()) continue;
        Vector vec;
        std::string component;
        while (ls >> component) {
            try {
                std::size_t used = 0;
                const float value = std::stof(component, &used);
                if (used != component.size()) throw std::invalid_argument(component);
                vec.push_back(value);
            } catch (const std::exception&) {
                throw std::runtime_error("non-numeric component \"" + component +
                                         "\" on line " + std::to_string(lineno));
            }
        }
        if (dim == 0) {
            dim = vec.size();
            if (dim == 0)
                throw std::runtime_error("no components on line " + std::to_string(lineno));
        } else if (vec.size() != dim) {
            throw std::runtime_error("inconsistent component count on line " +
                                     std::to_string(lineno) + ": expected " +
                                     std::to_string(dim) + ", got " +
                                     std::to_string(vec.size()));
        }
        check_finite(vec, token);
        if (!wanted(options, token)) continue;
        if (!entries.emplace(token, std::move(vec)).second)
            throw std::runtime_error("duplicate token '" + token + "' on line " +
                                     std::to_string(lineno));
    }
    if (entries.empty()) throw std::runtime_error("no entries");
    return EmbeddingTable(dim, std::move(entries), std::move(source_label));
}

EmbeddingTable parse_embeddings_auto(std::istream& in,
                                     const EmbeddingParseOptions& options,
                                     std::string source_label) {
    // A word2vec header line is "<digits> <digits>"; anything else is text.
    std::string first;
    std::getline(in, first);
    bool header = !first.empty();
    bool seen_space = false;
    for (char c : first) {
        if (c == ' ' && !seen_space) {
            seen_space = true;
        } else if (!std::isdigit(static_cast<unsigned char>(c))) {
            header = false;
            break;
        }
    }
    header = header && seen_space;
    // rewind and dispatch
    in.clear();
    in.seekg(0);
    return header ? parse_embeddings_binary(in, options, std::move(source_label))
                  : parse_embeddings_text(in, options, std::move(source_label));
}

EmbeddingTable load_embeddings(const std::string& path, const std::string& format,
                               const EmbeddingParseOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open embeddings file: " + path);
    if (format == "binary") return parse_embeddings_binary(in, options, path);
    if (format == "text") return parse_embeddings_text(in, options, path);
    if (format == "auto") return parse_embeddings_auto(in, options, path);
    throw std::invalid_argument("unknown embeddings format: " + format);
}

namespace {

std::vector<std::string> sorted_tokens(const EmbeddingTable& table) {
    std::vector<std::string> tokens;
    tokens.reserve(table.size());
    for (const auto& [token, vec] : table.entries()) tokens.push_back(token);
    std::sort(tokens.begin(), tokens.end());
    return tokens;
}

}  // namespace

void serialize_embeddings_binary(const EmbeddingTable& table, std::ostream& out) {
    out << table.size() << ' ' << table.dim() << '\n';
    unsigned char bytes[4];
    for (const std::string& token : sorted_tokens(table)) {
        out << token << ' ';
        for (float c : *table.find_exact(token)) {
            float_to_le(c, bytes);
            out.write(reinterpret_cast<const char*>(bytes), 4);
        }
        out << '\n';
    }
}

void serialize_embeddings_text(const EmbeddingTable& table, std::ostream& out) {
    char buf[64];
    for (const std::string& token : sorted_tokens(table)) {
        out << token;
        for (float c : *table.find_exact(token)) {
            std::snprintf(buf, sizeof buf, "%.9g", static_cast<double>(c));
            out << ' ' << buf;
        }
        out << '\n';
    }
}

}  // namespace narrative
