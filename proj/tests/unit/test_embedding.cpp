#include "doctest.h"

#include "narrative/embedding.hpp"

#include <cmath>
#include <cstring>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

using namespace narrative;

namespace {

// Little-endian float bytes, independent of the library's encoder.
std::string float_bytes(float value) {
    static_assert(sizeof(float) == 4);
    std::uint32_t bits = 0;
    std::memcpy(&bits, &value, 4);
    std::string out(4, '\0');
    for (int i = 0; i < 4; ++i) out[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
    return out;
}

std::string binary_file(const std::vector<std::pair<std::string, std::vector<float>>>& rows,
                        std::size_t dim) {
    std::string out = std::to_string(rows.size()) + " " + std::to_string(dim) + "\n";
    for (const auto& [token, vec] : rows) {
        out += token;
        out += ' ';
        for (float c : vec) out += float_bytes(c);
        out += '\n';
    }
    return out;
}

EmbeddingTable random_table(std::mt19937& rng, std::size_t n_tokens, std::size_t dim) {
    std::uniform_real_distribution<float> dist(-2.0f, 2.0f);
    std::unordered_map<std::string, Vector> entries;
    for (std::size_t i = 0; i < n_tokens; ++i) {
        Vector v(dim);
        for (float& c : v) c = dist(rng);
        entries["tok" + std::to_string(i)] = std::move(v);
    }
    return EmbeddingTable(dim, std::move(entries), "random");
}

}  // namespace

TEST_CASE("cosine endpoint cases") {
    const Vector v{3.0f, -1.0f, 2.0f};
    CHECK(cosine(v, v) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cosine(Vector{1.0f, 0.0f}, Vector{0.0f, 1.0f}) == doctest::Approx(0.0));
    CHECK(cosine(Vector{1.0f, 0.0f}, Vector{-1.0f, 0.0f}) == doctest::Approx(-1.0));
}

TEST_CASE("cosine is symmetric and invariant under positive scaling") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
    for (int trial = 0; trial < 20; ++trial) {
        Vector a(6), b(6);
        for (float& c : a) c = dist(rng);
        for (float& c : b) c = dist(rng);
        const double ab = cosine(a, b);
        CHECK(std::fabs(ab - cosine(b, a)) <= 1e-12);
        // A power-of-two factor scales each float component exactly, so the
        // cosine must be reproduced to full precision; an arbitrary factor
        // perturbs the stored floats themselves and only merits float accuracy.
        Vector exact = a, rough = a;
        for (float& c : exact) c *= 4.0f;
        for (float& c : rough) c *= 7.3f;
        CHECK(std::fabs(cosine(exact, b) - ab) <= 1e-12);
        CHECK(std::fabs(cosine(rough, b) - ab) <= 1e-6);
    }
}

TEST_CASE("cosine rejects mismatched and zero-norm inputs") {
    CHECK_THROWS_AS(cosine(Vector{1.0f, 0.0f}, Vector{1.0f, 0.0f, 0.0f}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cosine(Vector{0.0f, 0.0f}, Vector{1.0f, 0.0f}), std::domain_error);
}

TEST_CASE("binary parsing of a minimal two-entry file") {
    const std::string file =
        binary_file({{"a", {1.0f, 0.0f, 0.0f}}, {"b", {0.0f, 1.0f, 0.0f}}}, 3);
    std::istringstream in(file);
    const EmbeddingTable table = parse_embeddings_binary(in);
    CHECK(table.dim() == 3);
    CHECK(table.size() == 2);
    REQUIRE(table.find_exact("a") != nullptr);
    CHECK((*table.find_exact("a"))[0] == 1.0f);
    CHECK((*table.find_exact("b"))[1] == 1.0f);
}

TEST_CASE("binary parsing tolerates a missing trailing newline after float blocks") {
    // Same payload but with the tokens packed back to back, no '\n' separators.
    std::string file = "2 2\n";
    file += "a ";
    file += float_bytes(1.0f) + float_bytes(2.0f);
    file += "b ";
    file += float_bytes(3.0f) + float_bytes(4.0f);
    std::istringstream in(file);
    const EmbeddingTable table = parse_embeddings_binary(in);
    CHECK(table.size() == 2);
    CHECK((*table.find_exact("b"))[1] == 4.0f);
}

TEST_CASE("binary round-trip is bit exact") {
    std::mt19937 rng(2024);
    const EmbeddingTable table = random_table(rng, 50, 8);
    std::ostringstream out;
    serialize_embeddings_binary(table, out);
    std::istringstream in(out.str());
    const EmbeddingTable back = parse_embeddings_binary(in);
    CHECK(back == table);
}

TEST_CASE("binary parser failure modes") {
    SUBCASE("malformed header") {
        std::istringstream in("zebra\n");
        CHECK_THROWS_AS(parse_embeddings_binary(in), std::runtime_error);
    }
    SUBCASE("truncated float payload") {
        std::string file = "1 3\na ";
        file += float_bytes(1.0f);  // two floats short
        std::istringstream in(file);
        CHECK_THROWS_AS(parse_embeddings_binary(in), std::runtime_error);
    }
    SUBCASE("duplicate tokens are reported by name") {
        const std::string file =
            binary_file({{"dup", {1.0f}}, {"dup", {2.0f}}}, 1);
        std::istringstream in(file);
        CHECK_THROWS_WITH_AS(parse_embeddings_binary(in),
                             doctest::Contains("dup"), std::runtime_error);
    }
    SUBCASE("non-finite components are rejected") {
        const float inf = std::numeric_limits<float>::infinity();
        const std::string file = binary_file({{"a", {inf, 0.0f}}}, 2);
        std::istringstream in(file);
        CHECK_THROWS_AS(parse_embeddings_binary(in), std::runtime_error);
    }
}

TEST_CASE("text parsing of a minimal two-entry file") {
    std::istringstream in("a 1 0\nb 0 1\n");
    const EmbeddingTable table = parse_embeddings_text(in);
    CHECK(table.dim() == 2);
    CHECK(table.size() == 2);
    CHECK((*table.find_exact("a"))[0] == 1.0f);
}

TEST_CASE("text parser failure modes") {
    SUBCASE("empty input") {
        std::istringstream in("");
        CHECK_THROWS_WITH_AS(parse_embeddings_text(in), doctest::Contains("no entries"),
                             std::runtime_error);
    }
    SUBCASE("inconsistent component count") {
        std::istringstream in("a 1 0\nb 1\n");
        CHECK_THROWS_AS(parse_embeddings_text(in), std::runtime_error);
    }
    SUBCASE("non-numeric component") {
        std::istringstream in("a 1 zero\n");
        CHECK_THROWS_AS(parse_embeddings_text(in), std::runtime_error);
    }
    SUBCASE("non-finite component") {
        std::istringstream in("a 1 nan\n");
        CHECK_THROWS_AS(parse_embeddings_text(in), std::runtime_error);
    }
}

TEST_CASE("text round-trip reproduces every component") {
    std::mt19937 rng(31337);
    const EmbeddingTable table = random_table(rng, 40, 5);
    std::ostringstream out;
    serialize_embeddings_text(table, out);
    std::istringstream in(out.str());
    const EmbeddingTable back = parse_embeddings_text(in);
    REQUIRE(back.size() == table.size());
    REQUIRE(back.dim() == table.dim());
    for (const auto& [token, vec] : table.entries()) {
        const Vector* got = back.find_exact(token);
        REQUIRE(got != nullptr);
        for (std::size_t i = 0; i < vec.size(); ++i)
            CHECK(std::fabs((*got)[i] - vec[i]) <= 1e-6f);
    }
}

TEST_CASE("auto format sniffs binary headers and falls back to text") {
    std::mt19937 rng(5);
    const EmbeddingTable table = random_table(rng, 12, 4);

    std::ostringstream bin;
    serialize_embeddings_binary(table, bin);
    std::istringstream bin_in(bin.str());
    CHECK(parse_embeddings_auto(bin_in) == table);

    std::ostringstream text;
    serialize_embeddings_text(table, text);
    std::istringstream text_in(text.str());
    const EmbeddingTable from_text = parse_embeddings_auto(text_in);
    CHECK(from_text.size() == table.size());
    CHECK(from_text.dim() == table.dim());
}

TEST_CASE("lookup lowercases first, then retries the original case") {
    std::unordered_map<std::string, Vector> entries{
        {"plain", Vector{1.0f}},
        {"Paris", Vector{2.0f}},  // only a capitalized entry exists
    };
    const EmbeddingTable table(1, std::move(entries), "case-test");

    SUBCASE("lowercase entries are found from any query case") {
        REQUIRE(table.find("PLAIN") != nullptr);
        CHECK((*table.find("PLAIN"))[0] == 1.0f);
        CHECK(table.find("plain") == table.find("Plain"));
    }
    SUBCASE("capitalized-only entries are found via the original-case retry") {
        REQUIRE(table.find("Paris") != nullptr);
        CHECK((*table.find("Paris"))[0] == 2.0f);
        // The lowercase spelling has no entry and no retry can save it.
        CHECK(table.find("paris") == nullptr);
    }
    SUBCASE("unknown tokens are absent, not errors") {
        CHECK(table.find("zebra") == nullptr);
        CHECK(table.find_exact("PLAIN") == nullptr);
    }
}

TEST_CASE("vocabulary filter keeps only the allow-listed tokens") {
    std::istringstream in("alpha 1 0\nbeta 0 1\ngamma 1 1\n");
    EmbeddingParseOptions options;
    options.vocab_filter = std::unordered_set<std::string>{"alpha", "gamma"};
    const EmbeddingTable table = parse_embeddings_text(in, options);
    CHECK(table.size() == 2);
    CHECK(table.find_exact("alpha") != nullptr);
    CHECK(table.find_exact("beta") == nullptr);
}

TEST_CASE("bundled fixture embeddings load with the expected shape") {
    const EmbeddingTable table =
        load_embeddings(std::string(NARR_FIXTURE_DIR) + "/mini_embeddings.txt", "auto");
    CHECK(table.dim() == 8);
    CHECK(table.size() == 779);
    CHECK(table.find("happy") != nullptr);
    CHECK(table.find("windsock") == nullptr);  // deliberately held out
}
