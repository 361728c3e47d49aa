#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "anspar/baselines.hpp"
#include "anspar/rng.hpp"
#include "anspar/templates.hpp"

using namespace anspar;

namespace {

std::string data_path(const std::string& name) {
    return std::string(ANSPAR_DATA_DIR) + "/" + name;
}

std::string write_temp(const std::string& tag, const std::string& content) {
    static int counter = 0;
    std::string path = "/tmp/anspar_baselines_" + tag + "_" + std::to_string(counter++) + ".tsv";
    std::ofstream out(path);
    out << content;
    return path;
}

// root(0) -> animal(1) -> {cat(1), dog(1)}; root -> artifact(1) -> chair(1)
std::string toy_taxonomy_file() {
    return write_temp("toy",
                      "root\t-\t0\t\n"
                      "animal\troot\t1\tanimal\n"
                      "cat\tanimal\t1\tcat\n"
                      "dog\tanimal\t1\tdog\n"
                      "artifact\troot\t1\tartifact\n"
                      "chair\tartifact\t1\tchair\n");
}

bool is_subsequence(const TokenSeq& sub, const TokenSeq& seq) {
    size_t j = 0;
    for (size_t i = 0; i < seq.size() && j < sub.size(); ++i)
        if (seq[i] == sub[j]) ++j;
    return j == sub.size();
}

}  // namespace

TEST_CASE("toy taxonomy information content and resnik similarity") {
    Taxonomy tax = load_taxonomy(toy_taxonomy_file());
    REQUIRE(tax.nodes.size() == 6);
    REQUIRE(tax.total == 5);
    REQUIRE(tax.nodes[static_cast<size_t>(tax.root)].ic == 0.0);

    const double expected = -std::log(3.0 / 5.0);  // subtree(animal)=3 of 5
    CHECK(resnik_similarity(tax, "cat", "dog") == Catch::Approx(expected).margin(1e-9));
    CHECK(resnik_similarity(tax, "cat", "dog") ==
          Catch::Approx(0.5108256237659907).margin(1e-9));

    // LCS of a word with itself is its own concept.
    CHECK(resnik_similarity(tax, "cat", "cat") ==
          Catch::Approx(-std::log(1.0 / 5.0)).margin(1e-12));
    // Words joined only at the root score zero.
    CHECK(resnik_similarity(tax, "cat", "chair") == 0.0);
    CHECK(resnik_similarity(tax, "animal", "artifact") == 0.0);
    // A word with its own ancestor: IC of the ancestor.
    CHECK(resnik_similarity(tax, "cat", "animal") == Catch::Approx(expected).margin(1e-12));
    // OOV on either side.
    CHECK(resnik_similarity(tax, "cat", "xyzzy") == 0.0);
    CHECK(resnik_similarity(tax, "xyzzy", "cat") == 0.0);
    CHECK(word_ic(tax, "xyzzy") == 0.0);
}

TEST_CASE("resnik similarity is symmetric and bounded by either word's IC") {
    Taxonomy tax = load_taxonomy(data_path("taxonomy.tsv"));
    std::vector<std::string> words;
    for (const auto& [w, idx] : tax.word_to_concept) {
        (void)idx;
        words.push_back(w);
    }
    std::sort(words.begin(), words.end());
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const auto& a = words[rng.below(words.size())];
        const auto& b = words[rng.below(words.size())];
        double ab = resnik_similarity(tax, a, b);
        double ba = resnik_similarity(tax, b, a);
        REQUIRE(std::abs(ab - ba) <= 1e-12);
        REQUIRE(ab <= std::min(word_ic(tax, a), word_ic(tax, b)) + 1e-12);
        REQUIRE(ab >= 0.0);
    }
}

TEST_CASE("taxonomy loader rejects malformed files") {
    CHECK_THROWS(load_taxonomy("/nonexistent/taxonomy.tsv"));
    // Two roots.
    CHECK_THROWS(load_taxonomy(write_temp("tworoots", "a\t-\t1\ta\nb\t-\t1\tb\n")));
    // No root.
    CHECK_THROWS(load_taxonomy(write_temp("noroot", "a\tb\t1\ta\nb\ta\t1\tb\n")));
    // Unknown parent.
    CHECK_THROWS(load_taxonomy(write_temp("orphan", "a\t-\t1\ta\nb\tzz\t1\tb\n")));
    // Cycle off the root is unreachable.
    CHECK_THROWS(
        load_taxonomy(write_temp("cycle", "a\t-\t1\ta\nb\tc\t1\tb\nc\tb\t1\tc\n")));
    // Duplicate concept.
    CHECK_THROWS(load_taxonomy(write_temp("dup", "a\t-\t1\ta\na\ta\t1\tb\n")));
    // Bad count.
    CHECK_THROWS(load_taxonomy(write_temp("badcount", "a\t-\tx\ta\n")));
    CHECK_THROWS(load_taxonomy(write_temp("negcount", "a\t-\t-3\ta\n")));
    // Wrong field count.
    CHECK_THROWS(load_taxonomy(write_temp("fields", "a\t-\t1\n")));
    // Empty file.
    CHECK_THROWS(load_taxonomy(write_temp("empty", "# nothing here\n")));
}

TEST_CASE("shipped taxonomy loads and behaves") {
    Taxonomy tax = load_taxonomy(data_path("taxonomy.tsv"));
    REQUIRE(tax.nodes.size() > 200);
    CHECK(tax.nodes[static_cast<size_t>(tax.root)].ic == 0.0);
    CHECK(tax.has_word("cat"));
    CHECK(tax.has_word("vietnam"));
    CHECK(tax.has_word("jacket"));
    CHECK(resnik_similarity(tax, "cat", "dog") > 0.0);
    CHECK(resnik_similarity(tax, "cat", "animal") > 0.0);
    CHECK(resnik_similarity(tax, "cat", "chair") == 0.0);
    CHECK(resnik_similarity(tax, "vietnam", "city") > 0.0);
    CHECK(resnik_similarity(tax, "ramen", "food") > 0.0);
    CHECK(resnik_similarity(tax, "red", "color") > 0.0);
    // Deeper subsumers are at least as informative.
    CHECK(resnik_similarity(tax, "cat", "kitten") >=
          resnik_similarity(tax, "cat", "animal"));
    CHECK(resnik_similarity(tax, "cat", "dog") >= resnik_similarity(tax, "cat", "owl"));
}

TEST_CASE("wordnet-style baseline keeps similar content words") {
    Taxonomy tax = load_taxonomy(toy_taxonomy_file());
    PosTagger tagger = load_tagger(data_path("lexicon.tsv"));

    TokenSeq question{"what", "animal", "is", "in", "the", "photo"};
    TokenSeq response{"a", "cute", "cat"};

    auto res = baseline_wordnet_parse(question, response, tax, tagger, 0.0);
    REQUIRE(res.tokens == TokenSeq{"cat"});
    CHECK_FALSE(res.no_match);

    // An infinite threshold filters everything.
    auto none = baseline_wordnet_parse(question, response, tax, tagger,
                                       std::numeric_limits<double>::infinity());
    CHECK(none.tokens.empty());
    CHECK(none.no_match);

    // Responses without taxonomy words yield nothing.
    auto miss = baseline_wordnet_parse(question, {"totally", "unrelated", "words"}, tax,
                                       tagger, 0.0);
    CHECK(miss.tokens.empty());

    // Raising theta above IC(animal) drops the match.
    auto strict = baseline_wordnet_parse(question, response, tax, tagger, 0.6);
    CHECK(strict.tokens.empty());
}

TEST_CASE("pos-expectation baseline follows the first matching rule") {
    PosTagger tagger = load_tagger(data_path("lexicon.tsv"));
    auto rules = load_pos_rules(data_path("pos_rules.tsv"));

    auto wearing = baseline_pos_parse({"what", "is", "the", "person", "wearing"},
                                      {"she", "is", "wearing", "her", "work", "uniform"},
                                      rules, tagger);
    REQUIRE(wearing.tokens == TokenSeq{"work", "uniform"});

    // No keyword matches: the catch-all noun rule applies.
    auto fallback = baseline_pos_parse({"what", "is", "this"}, {"it", "is", "a", "rug"},
                                       rules, tagger);
    REQUIRE(fallback.tokens == TokenSeq{"rug"});

    // Color questions expect adjectives.
    auto color = baseline_pos_parse({"what", "color", "is", "the", "car"},
                                    {"a", "bright", "red", "one"}, rules, tagger);
    CHECK(color.tokens == TokenSeq{"bright", "red"});

    // Expected tag absent from the response.
    auto none = baseline_pos_parse({"what", "color", "is", "it"}, {"no", "idea"}, rules,
                                   tagger);
    CHECK(none.tokens.empty());
    CHECK(none.no_match);
}

TEST_CASE("pos rules: prefixes, ordering, and validation") {
    PosTagger tagger = load_tagger(data_path("lexicon.tsv"));

    auto rules = load_pos_rules(write_temp("rules",
                                           "what color\tJJ\n"
                                           "color\tNN\n"
                                           "*\tNN,NNS\n"));
    // Prefix rule beats the later keyword rule.
    auto r1 = baseline_pos_parse({"what", "color", "is", "it"}, {"bright", "red", "rug"},
                                 rules, tagger);
    CHECK(r1.tokens == TokenSeq{"bright", "red"});
    // Keyword anywhere (not at the start) hits the second rule.
    auto r2 = baseline_pos_parse({"tell", "me", "the", "color"}, {"bright", "red", "rug"},
                                 rules, tagger);
    CHECK(r2.tokens == TokenSeq{"rug"});

    CHECK_THROWS(load_pos_rules("/nonexistent/rules.tsv"));
    CHECK_THROWS(load_pos_rules(write_temp("nocatch", "wearing\tNN\n")));
    CHECK_THROWS(load_pos_rules(write_temp("badtag", "*\tNOPE\n")));
    CHECK_THROWS(load_pos_rules(write_temp("notags", "*\t\n")));
    CHECK_THROWS(load_pos_rules(write_temp("onefield", "justapattern\n")));
}

TEST_CASE("both baselines return order-preserving subsequences of the response") {
    Taxonomy tax = load_taxonomy(data_path("taxonomy.tsv"));
    PosTagger tagger = load_tagger(data_path("lexicon.tsv"));
    auto rules = load_pos_rules(data_path("pos_rules.tsv"));

    // Vocabulary mixing taxonomy words, other lexicon entries, and junk.
    std::vector<std::string> soup{
        "cat",  "dog",   "vietnam", "jacket", "ramen",  "red",   "animal", "color",
        "food", "where", "wearing", "plate",  "what",   "is",    "a",      "the",
        "in",   "cute",  "work",    "uniform", "photo", "lol",   "zzz",    "blorp",
        "it",   "this",  "she",     "her",     "and",   "very",  "spicy",  "beach"};

    Rng rng(2026);
    for (int iter = 0; iter < 1000; ++iter) {
        TokenSeq question, response;
        size_t qlen = 1 + rng.below(6), rlen = 1 + rng.below(8);
        for (size_t i = 0; i < qlen; ++i) question.push_back(soup[rng.below(soup.size())]);
        for (size_t i = 0; i < rlen; ++i) response.push_back(soup[rng.below(soup.size())]);
        double theta = rng.next_double() < 0.3 ? rng.next_double() : 0.0;

        auto wn = baseline_wordnet_parse(question, response, tax, tagger, theta);
        auto pe = baseline_pos_parse(question, response, rules, tagger);
        REQUIRE(is_subsequence(wn.tokens, response));
        REQUIRE(is_subsequence(pe.tokens, response));
    }
}
