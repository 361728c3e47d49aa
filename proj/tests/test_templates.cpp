#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "anspar/corpus.hpp"
#include "anspar/templates.hpp"

using anspar::PosTagger;
using anspar::TemplateSet;
using anspar::TokenSeq;

namespace {

const PosTagger& bundled_tagger() {
  static PosTagger tagger = anspar::load_tagger(std::string(ANSPAR_DATA_DIR) + "/lexicon.tsv");
  return tagger;
}

}  // namespace

TEST_CASE("pos_tag lexicon, suffix rules, default") {
  const PosTagger& tagger = bundled_tagger();
  REQUIRE(anspar::pos_tag({"in", "vietnam"}, tagger) ==
          std::vector<std::string>{"IN", "NN"});
  REQUIRE(anspar::pos_tag({}, tagger).empty());

  PosTagger bare;
  bare.suffix_rules = {{"ing", "VBG"}};
  REQUIRE(anspar::pos_tag({"running"}, bare) == std::vector<std::string>{"VBG"});
  // Default tag when nothing applies.
  REQUIRE(anspar::pos_tag({"zzqq"}, bare) == std::vector<std::string>{"NN"});
  // Lexicon beats suffix rules.
  PosTagger mixed = bare;
  mixed.lexicon["running"] = "NN";
  REQUIRE(anspar::pos_tag({"running"}, mixed) == std::vector<std::string>{"NN"});
  // Suffix needs at least two stem characters: "sing" is too short for "ing".
  PosTagger strict;
  strict.suffix_rules = {{"ing", "VBG"}};
  REQUIRE(anspar::pos_tag({"sing"}, strict) == std::vector<std::string>{"NN"});

  // Output length always equals input length.
  TokenSeq sent = {"she", "is", "wearing", "her", "work", "uniform"};
  REQUIRE(anspar::pos_tag(sent, tagger).size() == sent.size());
  REQUIRE(anspar::pos_tag(sent, tagger) ==
          std::vector<std::string>{"PRP", "VBZ", "VBG", "PRP$", "NN", "NN"});
  REQUIRE(anspar::pos_tag({"it", "is", "a", "rug"}, tagger) ==
          std::vector<std::string>{"PRP", "VBZ", "DT", "NN"});
}

TEST_CASE("tagger loading validates the file") {
  auto write = [](const std::string& name, const std::string& content) {
    std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << content;
    return path;
  };
  std::string good = write("anspar_lex_good.tsv", "cat\tNN\ndog\tNN\n# comment\nrun\tVB\n");
  PosTagger t = anspar::load_tagger(good);
  REQUIRE(t.lexicon.size() == 3);
  REQUIRE(t.lexicon.at("run") == "VB");
  std::remove(good.c_str());

  std::string notab = write("anspar_lex_notab.tsv", "cat NN\n");
  REQUIRE_THROWS_WITH(anspar::load_tagger(notab),
                      Catch::Matchers::ContainsSubstring("line 1"));
  std::remove(notab.c_str());

  std::string badtag = write("anspar_lex_badtag.tsv", "cat\tNOUN\n");
  REQUIRE_THROWS_WITH(anspar::load_tagger(badtag),
                      Catch::Matchers::ContainsSubstring("NOUN"));
  std::remove(badtag.c_str());

  REQUIRE_THROWS(anspar::load_tagger("/tmp/anspar_lex_missing.tsv"));
}

TEST_CASE("extract_templates counts match a manual recount") {
  const PosTagger& tagger = bundled_tagger();
  std::vector<TokenSeq> responses = {
      {"in", "vietnam"},
      {"it", "is", "in", "hanoi"},
      {"somewhere", "in", "paris"},
      {"in", "chiangmai", "thailand"},
      {"work", "uniform"},
      {"she", "is", "wearing", "her", "work", "uniform"},
      {"a", "red", "jacket"},
      {"it", "is", "a", "rug"},
      {"in", "tokyo", "i", "think"},
      {"oh", "wow", "its", "in", "bali"},
  };
  TemplateSet all = anspar::extract_templates(responses, tagger, 0);

  // Independent recount with a plain map.
  std::map<std::vector<std::string>, long> want;
  for (const TokenSeq& r : responses) {
    auto tags = anspar::pos_tag(r, tagger);
    for (size_t n = 2; n <= 3; ++n) {
      if (tags.size() < n) continue;
      for (size_t i = 0; i + n <= tags.size(); ++i) {
        want[std::vector<std::string>(tags.begin() + static_cast<long>(i),
                                      tags.begin() + static_cast<long>(i + n))]++;
      }
    }
  }
  REQUIRE(all.templates.size() == want.size());
  for (const auto& tpl : all.templates) {
    REQUIRE(want.at(tpl.tags) == tpl.count);
  }

  // Ordering: count desc, then length desc, then lexicographic.
  for (size_t i = 1; i < all.templates.size(); ++i) {
    const auto& a = all.templates[i - 1];
    const auto& b = all.templates[i];
    bool ok = a.count > b.count ||
              (a.count == b.count && a.tags.size() > b.tags.size()) ||
              (a.count == b.count && a.tags.size() == b.tags.size() && a.tags < b.tags);
    REQUIRE(ok);
  }

  // (IN,NN) is the most frequent shape in this corpus.
  REQUIRE(all.templates[0].tags == std::vector<std::string>{"IN", "NN"});

  TemplateSet top2 = anspar::extract_templates(responses, tagger, 2);
  REQUIRE(top2.templates.size() == 2);
  REQUIRE(top2.templates[0].tags == all.templates[0].tags);
}

TEST_CASE("extract_templates on the synthetic location cluster") {
  anspar::SynthSpec spec = anspar::default_synth_spec(100);
  anspar::Dataset ds = anspar::generate_synthetic(spec, 11);
  std::vector<TokenSeq> responses;
  for (const auto& p : ds.points) {
    if (p.family == "location") responses.push_back(anspar::preprocess_text(p.response));
  }
  REQUIRE(responses.size() == 100);
  TemplateSet top = anspar::extract_templates(responses, bundled_tagger(), 3);
  REQUIRE(top.templates.size() == 3);
  // The dominant shapes are preposition + noun(s).
  bool in_nn_first = top.templates[0].tags == std::vector<std::string>{"IN", "NN"} ||
                     top.templates[0].tags == std::vector<std::string>{"IN", "NN", "NN"};
  REQUIRE(in_nn_first);
  bool has_bigram = false, has_trigram = false;
  for (const auto& tpl : top.templates) {
    if (tpl.tags == std::vector<std::string>{"IN", "NN"}) has_bigram = true;
    if (tpl.tags == std::vector<std::string>{"IN", "NN", "NN"}) has_trigram = true;
  }
  REQUIRE(has_bigram);
  REQUIRE(has_trigram);
}

TEST_CASE("extract_templates error cases") {
  const PosTagger& tagger = bundled_tagger();
  REQUIRE_THROWS(anspar::extract_templates({}, tagger, 3));
  REQUIRE_THROWS(anspar::extract_templates({{"one"}, {"two"}}, tagger, 3));

  TemplateSet single = anspar::extract_templates({{"a", "b"}}, tagger, 3);
  REQUIRE(single.templates.size() == 1);
  REQUIRE(single.templates[0].count == 1);
  REQUIRE(single.templates[0].tags.size() == 2);
}

TEST_CASE("parse_with_templates extracts the first matching occurrence") {
  const PosTagger& tagger = bundled_tagger();

  TemplateSet nn_nn;
  nn_nn.templates = {{{"NN", "NN"}, 10}, {{"IN", "NN"}, 5}};
  auto r = anspar::parse_with_templates(
      {"she", "is", "wearing", "her", "work", "uniform"}, tagger, nn_nn);
  REQUIRE_FALSE(r.no_match);
  REQUIRE(r.tokens == TokenSeq{"work", "uniform"});
  REQUIRE(r.matched_template == std::vector<std::string>{"NN", "NN"});

  // Filler capture on "it is a rug" when the leading template is PRP VBZ DT.
  TemplateSet filler;
  filler.templates = {{{"PRP", "VBZ", "DT"}, 10}, {{"DT", "NN"}, 8}};
  auto f = anspar::parse_with_templates({"it", "is", "a", "rug"}, tagger, filler);
  REQUIRE(f.tokens == TokenSeq{"it", "is", "a"});

  // Template order decides, not match position: second template only fires
  // when the first has no match anywhere.
  TemplateSet ordered;
  ordered.templates = {{{"DT", "NN"}, 10}, {{"PRP", "VBZ"}, 8}};
  auto o = anspar::parse_with_templates({"it", "is", "a", "rug"}, tagger, ordered);
  REQUIRE(o.tokens == TokenSeq{"a", "rug"});

  // Leftmost occurrence of the winning template.
  auto l = anspar::parse_with_templates({"in", "paris", "or", "in", "tokyo"}, tagger,
                                        TemplateSet{0, {{{"IN", "NN"}, 3}}});
  REQUIRE(l.tokens == TokenSeq{"in", "paris"});

  auto none = anspar::parse_with_templates({"wow"}, tagger, nn_nn);
  REQUIRE(none.no_match);
  REQUIRE(none.tokens.empty());

  REQUIRE_THROWS(anspar::parse_with_templates({"a"}, tagger, TemplateSet{}));

  // Non-empty output is always a contiguous sub-span with length 2 or 3.
  anspar::SynthSpec spec = anspar::default_synth_spec(30);
  anspar::Dataset ds = anspar::generate_synthetic(spec, 5);
  std::vector<TokenSeq> responses;
  for (const auto& p : ds.points) responses.push_back(anspar::preprocess_text(p.response));
  TemplateSet mined = anspar::extract_templates(responses, tagger, 3);
  for (const TokenSeq& resp : responses) {
    auto pr = anspar::parse_with_templates(resp, tagger, mined);
    if (pr.no_match) continue;
    REQUIRE((pr.tokens.size() == 2 || pr.tokens.size() == 3));
    bool contiguous = false;
    for (size_t i = 0; i + pr.tokens.size() <= resp.size() && !contiguous; ++i) {
      bool all = true;
      for (size_t j = 0; j < pr.tokens.size(); ++j) all = all && resp[i + j] == pr.tokens[j];
      contiguous = all;
    }
    REQUIRE(contiguous);
  }
}

TEST_CASE("template set persists as json") {
  TemplateSet set;
  set.cluster_id = 2;
  set.templates = {{{"IN", "NN"}, 42}, {{"IN", "NN", "NN"}, 17}};
  std::string path = "/tmp/anspar_templates.json";
  anspar::save_template_set(set, path, {{"config_hash", "cafe"}});
  TemplateSet back = anspar::load_template_set(path);
  REQUIRE(back.cluster_id == 2);
  REQUIRE(back.templates.size() == 2);
  REQUIRE(back.templates[0].tags == std::vector<std::string>{"IN", "NN"});
  REQUIRE(back.templates[0].count == 42);
  REQUIRE(back.templates[1].tags == std::vector<std::string>{"IN", "NN", "NN"});
  std::remove(path.c_str());
}
