#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include "anspar/corpus.hpp"
#include "anspar/unicode.hpp"

using anspar::Dataset;
using anspar::TokenSeq;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/") + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("utf8 decode round-trips and replaces invalid bytes") {
  auto cps = anspar::uni::utf8_decode("caf\xc3\xa9");
  REQUIRE(cps == std::vector<char32_t>{0x63, 0x61, 0x66, 0xE9});
  // Lone continuation byte and truncated sequence both become U+FFFD.
  REQUIRE(anspar::uni::utf8_decode("\x80") == std::vector<char32_t>{0xFFFD});
  REQUIRE(anspar::uni::utf8_decode("\xc3") == std::vector<char32_t>{0xFFFD});
  // Overlong encoding of '/' must not decode to '/'.
  REQUIRE(anspar::uni::utf8_decode("\xc0\xaf") == std::vector<char32_t>{0xFFFD, 0xFFFD});
  REQUIRE(anspar::uni::utf8_encode({0x63, 0x61, 0x66, 0xE9}) == "caf\xc3\xa9");
}

TEST_CASE("nfc matches reference normalization") {
  using V = std::vector<char32_t>;
  // Expected outputs frozen from an independent Unicode reference
  // implementation.
  REQUIRE(anspar::uni::nfc(V{0x63, 0x61, 0x66, 0x65, 0x301}) == V{0x63, 0x61, 0x66, 0xE9});
  REQUIRE(anspar::uni::nfc(V{0x61, 0x301, 0x323}) == V{0x1EA1, 0x301});
  REQUIRE(anspar::uni::nfc(V{0x1E0B, 0x323}) == V{0x1E0D, 0x307});
  REQUIRE(anspar::uni::nfc(V{0xAC00}) == V{0xAC00});
  REQUIRE(anspar::uni::nfc(V{0x1100, 0x1161, 0x11A8}) == V{0xAC01});
  // Canonical ordering applies even when nothing composes.
  REQUIRE(anspar::uni::nfc(V{0x71, 0x307, 0x323}) == V{0x71, 0x323, 0x307});
}

TEST_CASE("codepoint classification") {
  using anspar::uni::Cls;
  REQUIRE(anspar::uni::classify(U'a') == Cls::Letter);
  REQUIRE(anspar::uni::classify(U'5') == Cls::Number);
  REQUIRE(anspar::uni::classify(U'!') == Cls::Punct);
  REQUIRE(anspar::uni::classify(0x1F600) == Cls::Symbol);  // emoji
  REQUIRE(anspar::uni::classify(0x200D) == Cls::Format);   // zero-width joiner
  REQUIRE(anspar::uni::classify(U' ') == Cls::Separator);
  REQUIRE(anspar::uni::to_lower(U'R') == U'r');
  REQUIRE(anspar::uni::to_lower(0xC9) == 0xE9);  // É
}

TEST_CASE("preprocess_text basic examples") {
  REQUIRE(anspar::preprocess_text("Wow!! It's a RUG \xF0\x9F\x98\x80") ==
          TokenSeq{"wow", "it", "'s", "a", "rug"});
  REQUIRE(anspar::preprocess_text("") == TokenSeq{});
  REQUIRE(anspar::preprocess_text("soooo good") == TokenSeq{"soo", "good"});
}

TEST_CASE("preprocess_text handles punctuation, case, unicode") {
  REQUIRE(anspar::preprocess_text("Hello, world!") == TokenSeq{"hello", "world"});
  // Curly apostrophe folds to ASCII before the contraction split.
  REQUIRE(anspar::preprocess_text("it\xE2\x80\x99s") == TokenSeq{"it", "'s"});
  // Already-split suffix stays put.
  REQUIRE(anspar::preprocess_text("it 's") == TokenSeq{"it", "'s"});
  // Trailing apostrophe is dropped, not kept as a token.
  REQUIRE(anspar::preprocess_text("dogs'") == TokenSeq{"dogs"});
  REQUIRE(anspar::preprocess_text("CAF\xC3\x89") == TokenSeq{"caf\xc3\xa9"});
  // Decomposed input normalizes to the same token as precomposed.
  REQUIRE(anspar::preprocess_text("cafe\xCC\x81") == TokenSeq{"caf\xc3\xa9"});
  // Variation selectors and ZWJ vanish inside words rather than splitting them.
  REQUIRE(anspar::preprocess_text("a\xE2\x80\x8D\x62") == TokenSeq{"ab"});
  REQUIRE(anspar::preprocess_text("\xF0\x9F\x98\x80\xF0\x9F\x98\x80") == TokenSeq{});
  REQUIRE(anspar::preprocess_text("tab\tand\nnewline") == TokenSeq{"tab", "and", "newline"});
  REQUIRE(anspar::preprocess_text("12 eggs") == TokenSeq{"12", "eggs"});
}

TEST_CASE("repeat collapse only fires on letters, threshold 3") {
  REQUIRE(anspar::preprocess_text("good") == TokenSeq{"good"});        // double kept
  REQUIRE(anspar::preprocess_text("goood") == TokenSeq{"good"});       // 3 -> 2
  REQUIRE(anspar::preprocess_text("goooooood") == TokenSeq{"good"});   // any run -> 2
  REQUIRE(anspar::preprocess_text("111") == TokenSeq{"111"});          // digits untouched
}

TEST_CASE("preprocess_text is idempotent") {
  std::vector<std::string> raws = {
      "Wow!! It's a RUG \xF0\x9F\x98\x80",
      "soooo good",
      "she is wearing her work uniform...",
      "in Chiangmai, Thailand \xF0\x9F\x98\x80\xF0\x9F\x98\x80",
      "it\xE2\x80\x99s a cat's toy",
  };
  for (const auto& raw : raws) {
    TokenSeq once = anspar::preprocess_text(raw);
    TokenSeq twice = anspar::preprocess_text(anspar::join_tokens(once));
    REQUIRE(once == twice);
  }
}

TEST_CASE("load_dataset reads file order and optional fields") {
  std::string path = write_temp(
      "anspar_ds_ok.jsonl",
      R"({"id":"a1","image_id":"img1","question":"where exactly","response":"in vietnam"})"
      "\n"
      R"({"id":"a2","image_id":"","question":"what is it","response":"a rug","cleaned_answer":["rug"]})"
      "\n"
      R"({"id":"a3","image_id":"img2","question":"what color","response":"red","image_features":[0.5,1.5]})"
      "\n");
  Dataset ds = anspar::load_dataset(path);
  REQUIRE(ds.size() == 3);
  REQUIRE(ds.points[0].id == "a1");
  REQUIRE(ds.points[1].id == "a2");
  REQUIRE(ds.points[2].id == "a3");
  REQUIRE_FALSE(ds.points[0].cleaned_answer.has_value());
  REQUIRE(ds.points[1].cleaned_answer.has_value());
  REQUIRE(*ds.points[1].cleaned_answer == TokenSeq{"rug"});
  REQUIRE(ds.points[2].image_features.has_value());
  REQUIRE(ds.points[2].image_features->size() == 2);
  REQUIRE(ds.meta.source == "real");
  std::remove(path.c_str());
}

TEST_CASE("load_dataset error cases name the offending line or id") {
  std::string dup = write_temp(
      "anspar_ds_dup.jsonl",
      R"({"id":"a1","image_id":"","question":"q","response":"r"})"
      "\n"
      R"({"id":"a1","image_id":"","question":"q","response":"r"})"
      "\n");
  REQUIRE_THROWS_WITH(anspar::load_dataset(dup),
                      Catch::Matchers::ContainsSubstring("duplicate id a1 at line 2"));
  std::remove(dup.c_str());

  std::string missing = write_temp(
      "anspar_ds_missing.jsonl",
      R"({"id":"a1","image_id":"","question":"q","response":"r"})"
      "\n"
      R"({"id":"a2","image_id":"","question":"q"})"
      "\n");
  REQUIRE_THROWS_WITH(anspar::load_dataset(missing),
                      Catch::Matchers::ContainsSubstring("line 2"));
  std::remove(missing.c_str());

  std::string malformed = write_temp("anspar_ds_bad.jsonl", "{not json}\n");
  REQUIRE_THROWS_WITH(anspar::load_dataset(malformed),
                      Catch::Matchers::ContainsSubstring("line 1"));
  std::remove(malformed.c_str());

  REQUIRE_THROWS(anspar::load_dataset("/tmp/anspar_no_such_file.jsonl"));
}

TEST_CASE("save_dataset round-trips") {
  Dataset ds;
  ds.meta.source = "synthetic";
  ds.meta.seed = 11;
  anspar::DataPoint p;
  p.id = "x1";
  p.image_id = "img";
  p.question = "what is it";
  p.response = "a rug";
  p.cleaned_answer = TokenSeq{"rug"};
  p.image_features = std::vector<double>{0.25, -1.5};
  p.family = "object";
  ds.points.push_back(p);
  std::string path = "/tmp/anspar_ds_roundtrip.jsonl";
  anspar::save_dataset(ds, path);
  Dataset back = anspar::load_dataset(path);
  REQUIRE(back.size() == 1);
  REQUIRE(back.points[0].id == "x1");
  REQUIRE(back.points[0].family == "object");
  REQUIRE(*back.points[0].cleaned_answer == TokenSeq{"rug"});
  REQUIRE(*back.points[0].image_features == std::vector<double>{0.25, -1.5});
  std::remove(path.c_str());
}

namespace {

Dataset tiny_dataset(int n) {
  Dataset ds;
  for (int i = 0; i < n; ++i) {
    anspar::DataPoint p;
    p.id = "p" + std::to_string(i);
    p.question = "q";
    p.response = "r";
    ds.points.push_back(p);
  }
  return ds;
}

}  // namespace

TEST_CASE("split_dataset sizes and determinism") {
  Dataset ds = tiny_dataset(10);
  auto [train, val] = anspar::split_dataset(ds, 0.7, 1);
  REQUIRE(train.size() == 7);
  REQUIRE(val.size() == 3);

  auto [train2, val2] = anspar::split_dataset(ds, 0.7, 1);
  for (size_t i = 0; i < train.size(); ++i) REQUIRE(train.points[i].id == train2.points[i].id);
  for (size_t i = 0; i < val.size(); ++i) REQUIRE(val.points[i].id == val2.points[i].id);

  std::set<std::string> ids;
  for (const auto& p : train.points) ids.insert(p.id);
  for (const auto& p : val.points) ids.insert(p.id);
  REQUIRE(ids.size() == 10);

  Dataset two = tiny_dataset(2);
  auto [t2, v2] = anspar::split_dataset(two, 0.5, 3);
  REQUIRE(t2.size() == 1);
  REQUIRE(v2.size() == 1);
  REQUIRE(t2.points[0].id != v2.points[0].id);

  REQUIRE_THROWS(anspar::split_dataset(ds, 0.0, 1));
  REQUIRE_THROWS(anspar::split_dataset(ds, 1.0, 1));
  REQUIRE_THROWS(anspar::split_dataset(tiny_dataset(1), 0.5, 1));
}

TEST_CASE("generate_synthetic plants contiguous answers") {
  anspar::SynthSpec spec;
  anspar::SynthFamily loc;
  loc.name = "location";
  loc.question_patterns = {"where was this taken"};
  loc.answer_lexicon = {"in vietnam", "in hanoi"};
  loc.wrappers = {"{X}", "it is {X}", "{X} i think"};
  loc.count = 50;
  anspar::SynthFamily cloth;
  cloth.name = "clothing";
  cloth.question_patterns = {"what is she wearing"};
  cloth.answer_lexicon = {"work uniform", "red jacket"};
  cloth.wrappers = {"she is wearing her {X}", "{X}"};
  cloth.count = 50;
  spec.families = {loc, cloth};

  Dataset ds = anspar::generate_synthetic(spec, 7);
  REQUIRE(ds.size() == 100);
  REQUIRE(ds.meta.source == "synthetic");
  REQUIRE(ds.meta.seed == 7);
  for (const auto& p : ds.points) {
    REQUIRE(p.cleaned_answer.has_value());
    TokenSeq resp = anspar::preprocess_text(p.response);
    const TokenSeq& ans = *p.cleaned_answer;
    REQUIRE_FALSE(ans.empty());
    bool found = false;
    for (size_t i = 0; i + ans.size() <= resp.size() && !found; ++i) {
      bool all = true;
      for (size_t j = 0; j < ans.size(); ++j) all = all && resp[i + j] == ans[j];
      found = all;
    }
    REQUIRE(found);
    REQUIRE((p.family == "location" || p.family == "clothing"));
  }
}

TEST_CASE("generate_synthetic determinism and validation") {
  anspar::SynthSpec spec;
  anspar::SynthFamily f1;
  f1.name = "a";
  f1.question_patterns = {"q"};
  f1.answer_lexicon = {"x"};
  f1.wrappers = {"{X}"};
  f1.count = 5;
  anspar::SynthFamily f2 = f1;
  f2.name = "b";
  spec.families = {f1, f2};

  Dataset d1 = anspar::generate_synthetic(spec, 42);
  Dataset d2 = anspar::generate_synthetic(spec, 42);
  std::string p1 = "/tmp/anspar_synth_1.jsonl";
  std::string p2 = "/tmp/anspar_synth_2.jsonl";
  anspar::save_dataset(d1, p1);
  anspar::save_dataset(d2, p2);
  std::ifstream f1s(p1, std::ios::binary), f2s(p2, std::ios::binary);
  std::string c1((std::istreambuf_iterator<char>(f1s)), std::istreambuf_iterator<char>());
  std::string c2((std::istreambuf_iterator<char>(f2s)), std::istreambuf_iterator<char>());
  REQUIRE(c1 == c2);
  std::remove(p1.c_str());
  std::remove(p2.c_str());

  anspar::SynthSpec bad = spec;
  bad.families[0].answer_lexicon.clear();
  REQUIRE_THROWS(anspar::generate_synthetic(bad, 1));

  anspar::SynthSpec one;
  one.families = {f1};
  REQUIRE_THROWS(anspar::generate_synthetic(one, 1));
}

TEST_CASE("default synthetic spec covers five families with planted answers") {
  anspar::SynthSpec spec = anspar::default_synth_spec(20);
  REQUIRE(spec.families.size() == 5);
  Dataset ds = anspar::generate_synthetic(spec, 3);
  REQUIRE(ds.size() == 100);
  std::set<std::string> fams;
  for (const auto& p : ds.points) fams.insert(p.family);
  REQUIRE(fams ==
          std::set<std::string>{"location", "clothing", "animal", "food", "color"});
  // Image features, when enabled, share one dimensionality.
  anspar::SynthSpec with_img = anspar::default_synth_spec(5);
  with_img.image_dim = 8;
  Dataset di = anspar::generate_synthetic(with_img, 3);
  for (const auto& p : di.points) {
    REQUIRE(p.image_features.has_value());
    REQUIRE(p.image_features->size() == 8);
  }
}
