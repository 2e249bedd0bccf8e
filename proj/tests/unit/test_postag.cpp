#include "doctest.h"

#include "narrative/postag.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace narrative;

TEST_CASE("lexicon words take their listed tag") {
    CHECK(tag_pos("the") == "DT");
    CHECK(tag_pos("and") == "CC");
    CHECK(tag_pos("she") == "PRP");
    CHECK(tag_pos("beautiful") == "JJ");
    // Case never matters; queries are lowercased first.
    CHECK(tag_pos("The") == "DT");
    CHECK(tag_pos("SHE") == "PRP");
}

TEST_CASE("suffix rules cover unknown words") {
    // None of these invented words appear in the bundled lexicon.
    CHECK(tag_pos("zorping") == "VBG");
    CHECK(tag_pos("zorped") == "VBD");
    CHECK(tag_pos("zorply") == "RB");
    CHECK(tag_pos("zorbs") == "NNS");
    CHECK(tag_pos("zorb") == "NN");

    SUBCASE("real-word spot checks of the same rules") {
        CHECK(tag_pos("running") == "VBG");
        CHECK(tag_pos("galumphed") == "VBD");
    }
    SUBCASE("short tokens never trigger a suffix rule") {
        CHECK(tag_pos("zing") == "NN");  // -ing needs length 5
        CHECK(tag_pos("zed") == "NN");   // -ed needs length 4
        CHECK(tag_pos("zly") == "NN");   // -ly needs length 4
        CHECK(tag_pos("zs") == "NN");    // -s needs length 3
    }
    SUBCASE("-ss and -us endings are singular, not plural") {
        CHECK(tag_pos("floss") == "NN");
        CHECK(tag_pos("crocus") == "NN");
    }
}

TEST_CASE("override tables win over the builtin lexicon and suffixes") {
    PosLexicon overrides{{"zorb", "VB"}, {"the", "UH"}};
    CHECK(tag_pos("zorb", &overrides) == "VB");
    CHECK(tag_pos("the", &overrides) == "UH");
    CHECK(tag_pos("and", &overrides) == "CC");  // untouched entries fall through
}

TEST_CASE("tag family helpers") {
    for (const char* tag : {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}) CHECK(is_verb_tag(tag));
    CHECK_FALSE(is_verb_tag("NN"));
    for (const char* tag : {"NN", "NNS", "NNP", "NNPS"}) CHECK(is_noun_tag(tag));
    CHECK_FALSE(is_noun_tag("JJ"));
    for (const char* tag : {"JJ", "JJR", "JJS"}) CHECK(is_adjective_tag(tag));
    CHECK_FALSE(is_adjective_tag("RB"));
}

TEST_CASE("POS lexicon files parse words, comments, and blanks") {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "narr_pos_lexicon_test.txt";
    {
        std::ofstream out(path);
        out << "# comment line\n"
               "Waltz NN\n"
               "\n"
               "whirl VB  # trailing comment\n";
    }
    const PosLexicon lexicon = load_pos_lexicon_file(path.string());
    CHECK(lexicon.size() == 2);
    CHECK(lexicon.at("waltz") == "NN");
    CHECK(lexicon.at("whirl") == "VB");
    std::filesystem::remove(path);
}

TEST_CASE("POS lexicon files reject malformed lines") {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "narr_pos_lexicon_bad.txt";
    {
        std::ofstream out(path);
        out << "word NN extra\n";
    }
    CHECK_THROWS_AS(load_pos_lexicon_file(path.string()), std::runtime_error);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_pos_lexicon_file("/nonexistent/pos.txt"), std::runtime_error);
}

TEST_CASE("accuracy on the bundled 500-token gold sample clears 0.85") {
    std::ifstream in(std::string(NARR_DATA_DIR) + "/pos_gold.tsv");
    REQUIRE(in);

    std::size_t total = 0, correct = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        const std::string token = line.substr(0, tab);
        const std::string gold = line.substr(tab + 1);
        ++total;
        if (tag_pos(token) == gold) ++correct;
    }
    CHECK(total == 500);
    const double accuracy = static_cast<double>(correct) / static_cast<double>(total);
    INFO("gold-sample accuracy: ", accuracy);
    CHECK(accuracy >= 0.85);
}
