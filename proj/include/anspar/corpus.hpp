#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "anspar/rng.hpp"
#include "anspar/types.hpp"
#include "anspar/unicode.hpp"

namespace anspar {

// One (image, question, response) record; the unit of the whole pipeline.
struct DataPoint {
  std::string id;
  std::string image_id;
  std::string question;
  std::string response;
  std::optional<TokenSeq> cleaned_answer;        // ground truth, when labeled
  std::optional<std::vector<double>> image_features;
  std::string family;  // synthetic-generator provenance; empty for real data
  std::optional<int> label;  // question-type cluster index, once assigned
};

struct DatasetMeta {
  std::string source = "real";  // "real" | "synthetic"
  std::uint64_t seed = 0;
};

struct Dataset {
  std::vector<DataPoint> points;
  DatasetMeta meta;

  size_t size() const { return points.size(); }
};

// --- text preprocessing -------------------------------------------------------

namespace detail {

inline bool is_word_char(char32_t cp, uni::Cls c) {
  return c == uni::Cls::Letter || c == uni::Cls::Mark || c == uni::Cls::Number ||
         cp == U'\'';
}

// Splits a word at internal apostrophes: "it's" -> {"it", "'s"}. A chunk after
// an apostrophe keeps the apostrophe as its contraction marker, so standalone
// "'s" survives re-tokenization unchanged.
inline void split_contractions(const std::vector<char32_t>& word, TokenSeq& out) {
  std::vector<std::vector<char32_t>> chunks(1);
  for (char32_t cp : word) {
    if (cp == U'\'') {
      if (!chunks.back().empty() || chunks.size() == 1) chunks.emplace_back();
    } else {
      chunks.back().push_back(cp);
    }
  }
  for (size_t i = 0; i < chunks.size(); ++i) {
    if (chunks[i].empty()) continue;
    std::string tok;
    if (i > 0) uni::utf8_append(tok, U'\'');
    for (char32_t cp : chunks[i]) uni::utf8_append(tok, cp);
    out.push_back(std::move(tok));
  }
}

// Collapses runs of >= 3 identical letters down to 2 ("soooo" -> "soo").
inline std::string collapse_repeats(const std::string& token) {
  std::vector<char32_t> cps = uni::utf8_decode(token);
  std::vector<char32_t> out;
  out.reserve(cps.size());
  size_t run = 0;
  for (size_t i = 0; i < cps.size(); ++i) {
    if (i > 0 && cps[i] == cps[i - 1] && uni::classify(cps[i]) == uni::Cls::Letter) {
      ++run;
    } else {
      run = 1;
    }
    if (run <= 2) out.push_back(cps[i]);
  }
  return uni::utf8_encode(out);
}

}  // namespace detail

/// Normalizes raw text into clean tokens: NFC, lowercase, emoji/symbol and
/// punctuation stripping (apostrophe contractions split into word + suffix),
/// repeated-letter collapse, whitespace split.
inline TokenSeq preprocess_text(const std::string& raw) {
  std::vector<char32_t> cps = uni::nfc(uni::utf8_decode(raw));
  TokenSeq tokens;
  std::vector<char32_t> word;
  auto flush = [&] {
    if (!word.empty()) {
      detail::split_contractions(word, tokens);
      word.clear();
    }
  };
  for (char32_t cp : cps) {
    if (cp == 0x2019) cp = U'\'';  // typographic apostrophe
    if (uni::is_variation_selector(cp)) continue;
    cp = uni::to_lower(cp);
    uni::Cls c = uni::classify(cp);
    if (c == uni::Cls::Format) continue;  // ZWJ, soft hyphen: joiners, not boundaries
    if (detail::is_word_char(cp, c)) {
      word.push_back(cp);
    } else {
      flush();  // punctuation, symbols/emoji, separators all delimit
    }
  }
  flush();
  for (std::string& t : tokens) t = detail::collapse_repeats(t);
  return tokens;
}

// --- JSONL dataset I/O --------------------------------------------------------

namespace detail {

inline std::string trim_copy(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace detail

/// Loads a JSONL dataset file: one object per line with keys id, image_id,
/// question, response and optional cleaned_answer / image_features / family.
inline Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  Dataset ds;
  std::string line;
  size_t line_no = 0;
  std::optional<size_t> feature_dim;
  std::unordered_set<std::string> seen_ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("malformed line " + std::to_string(line_no) + ": " + e.what());
    }
    for (const char* key : {"id", "image_id", "question", "response"}) {
      if (!j.contains(key)) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": missing key \"" +
                                 key + "\"");
      }
    }
    DataPoint p;
    try {
      p.id = j.at("id").get<std::string>();
      p.image_id = j.at("image_id").get<std::string>();
      p.question = j.at("question").get<std::string>();
      p.response = j.at("response").get<std::string>();
      if (j.contains("cleaned_answer") && !j.at("cleaned_answer").is_null()) {
        p.cleaned_answer = j.at("cleaned_answer").get<TokenSeq>();
      }
      if (j.contains("image_features") && !j.at("image_features").is_null()) {
        p.image_features = j.at("image_features").get<std::vector<double>>();
      }
      if (j.contains("family") && !j.at("family").is_null()) {
        p.family = j.at("family").get<std::string>();
      }
      if (j.contains("label") && !j.at("label").is_null()) {
        p.label = j.at("label").get<int>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("malformed line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!seen_ids.insert(p.id).second) {
      throw std::runtime_error("duplicate id " + p.id + " at line " + std::to_string(line_no));
    }
    if (detail::trim_copy(p.question).empty() || detail::trim_copy(p.response).empty()) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": question and response must be non-empty");
    }
    if (p.image_features) {
      if (feature_dim && p.image_features->size() != *feature_dim) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": image_features dimensionality " +
                                 std::to_string(p.image_features->size()) +
                                 " differs from earlier " + std::to_string(*feature_dim));
      }
      feature_dim = p.image_features->size();
    }
    ds.points.push_back(std::move(p));
  }
  return ds;
}

inline void save_dataset(const Dataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write dataset file: " + path);
  for (const DataPoint& p : ds.points) {
    nlohmann::json j;
    j["id"] = p.id;
    j["image_id"] = p.image_id;
    j["question"] = p.question;
    j["response"] = p.response;
    if (p.cleaned_answer) j["cleaned_answer"] = *p.cleaned_answer;
    if (p.image_features) j["image_features"] = *p.image_features;
    if (!p.family.empty()) j["family"] = p.family;
    if (p.label) j["label"] = *p.label;
    out << j.dump() << "\n";
  }
}

// --- splitting ------------------------------------------------------------------

/// Deterministic seeded shuffle, then first floor(train_fraction * n) points to
/// train and the remainder to validation.
inline std::pair<Dataset, Dataset> split_dataset(const Dataset& d, double train_fraction,
                                                 std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw std::runtime_error("train_fraction must be in (0,1), got " +
                             std::to_string(train_fraction));
  }
  if (d.points.size() < 2) throw std::runtime_error("split_dataset needs >= 2 points");
  std::vector<size_t> order(d.points.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);
  size_t n_train = static_cast<size_t>(train_fraction * static_cast<double>(order.size()));
  Dataset train, val;
  train.meta = d.meta;
  val.meta = d.meta;
  for (size_t i = 0; i < order.size(); ++i) {
    (i < n_train ? train : val).points.push_back(d.points[order[i]]);
  }
  return {std::move(train), std::move(val)};
}

// --- synthetic corpus ------------------------------------------------------------

struct SynthFamily {
  std::string name;
  std::vector<std::string> question_patterns;
  std::vector<std::string> answer_lexicon;  // answer phrases, tokens space-separated
  std::vector<std::string> wrappers;        // response patterns containing "{X}"
  int count = 0;
};

struct SynthSpec {
  std::vector<SynthFamily> families;
  int image_dim = 0;  // when > 0, plant per-family image feature clusters
};

/// Generates a reproducible labeled corpus: each point's response wraps a
/// planted answer phrase and cleaned_answer records exactly those tokens.
inline Dataset generate_synthetic(const SynthSpec& spec, std::uint64_t seed) {
  if (spec.families.size() < 2) {
    throw std::runtime_error("synthetic spec needs >= 2 question families");
  }
  Rng rng(seed);
  Dataset ds;
  ds.meta.source = "synthetic";
  ds.meta.seed = seed;
  for (const SynthFamily& fam : spec.families) {
    if (fam.answer_lexicon.empty()) {
      throw std::runtime_error("family \"" + fam.name + "\": empty lexicon");
    }
    if (fam.question_patterns.empty() || fam.wrappers.empty()) {
      throw std::runtime_error("family \"" + fam.name +
                               "\": needs question patterns and wrappers");
    }
    std::vector<double> center(spec.image_dim);
    for (double& v : center) v = rng.uniform(-1.0, 1.0);
    for (int i = 0; i < fam.count; ++i) {
      DataPoint p;
      char idx[16];
      std::snprintf(idx, sizeof idx, "%04d", i);
      p.id = fam.name + "-" + idx;
      p.family = fam.name;
      p.question = fam.question_patterns[rng.below(fam.question_patterns.size())];
      const std::string& answer = fam.answer_lexicon[rng.below(fam.answer_lexicon.size())];
      const std::string& wrapper = fam.wrappers[rng.below(fam.wrappers.size())];
      size_t pos = wrapper.find("{X}");
      if (pos == std::string::npos) {
        throw std::runtime_error("family \"" + fam.name + "\": wrapper lacks {X}: " + wrapper);
      }
      p.response = wrapper.substr(0, pos) + answer + wrapper.substr(pos + 3);
      p.cleaned_answer = preprocess_text(answer);
      if (spec.image_dim > 0) {
        std::vector<double> feat(center);
        for (double& v : feat) v += rng.uniform(-0.15, 0.15);
        p.image_features = std::move(feat);
      }
      ds.points.push_back(std::move(p));
    }
  }
  return ds;
}

/// The bundled five-family corpus spec used by the synth CLI command and the
/// end-to-end tests. Most wrappers are shared across families so the only
/// family-identifying tokens sit in the answers themselves; a couple of
/// wrappers append off-topic chatter after the answer, the way real replies
/// trail off.
inline SynthSpec default_synth_spec(int per_family = 200) {
  const std::vector<std::string> shared = {
      "{X}",          "it is {X}",        "its {X}",
      "{X} i think",  "oh wow its {X}",   "{X} lol",
      "{X} near the beach lol",           "{X} but kinda blurry lol"};
  auto wrap = [&shared](std::vector<std::string> extra) {
    std::vector<std::string> all = shared;
    for (auto& w : extra) all.push_back(std::move(w));
    return all;
  };

  SynthSpec spec;
  spec.families = {
      {"location",
       {"where is this ?", "where was this photo taken ?", "which city is this ?",
        "where did you take this ?"},
       {"in vietnam", "in thailand", "in paris", "in tokyo", "in iceland", "in morocco",
        "in kyoto", "in havana", "in oslo", "in lisbon", "in bangkok", "in venice",
        "in nairobi", "in seoul", "in rome", "in chiangmai thailand", "in esfahan iran",
        "in quebec canada", "in busan korea", "in marrakesh morocco"},
       wrap({"the photo was taken {X}", "somewhere {X}"}),
       per_family},
      {"clothing",
       {"what is the person wearing ?", "what is she wearing ?", "what is he wearing ?",
        "what kind of outfit is that ?"},
       {"red jacket", "blue dress", "green sweater", "black coat", "white shirt",
        "denim jacket", "work uniform", "leather jacket", "wool scarf", "gray suit",
        "floral dress", "striped shirt", "plain hoodie", "velvet blazer", "linen shirt",
        "uniform", "kimono", "tuxedo"},
       wrap({"she is wearing her {X}", "he is wearing a {X}"}),
       per_family},
      {"animal",
       {"what animal is this ?", "what animal is in the photo ?",
        "what kind of animal is that ?", "what pet is that ?"},
       {"fluffy cat", "sleepy dog", "tiny hamster", "wild fox", "brown owl",
        "gray parrot", "little duck", "green lizard", "small turtle", "cute kitten",
        "happy puppy", "young goat", "old horse", "white rabbit", "tiny bird", "cat",
        "dog", "horse"},
       wrap({"that is my {X}", "my {X} lol"}),
       per_family},
      {"food",
       {"what food is this ?", "what is on the plate ?", "what are you eating ?",
        "what did you cook ?"},
       {"spicy ramen", "fresh salad", "sweet cake", "roasted chicken", "grilled cheese",
        "homemade pizza", "crispy bacon", "tasty curry", "delicious steak",
        "creamy risotto", "warm soup", "baked bread", "fried rice", "sweet mango",
        "ripe avocado", "pasta", "sushi", "pancakes"},
       wrap({"a plate of {X}", "we had {X} for dinner"}),
       per_family},
      {"color",
       {"what color is the car ?", "what color is the wall ?", "what color is her dress ?",
        "what color are the flowers ?"},
       {"bright red", "dark green", "navy blue", "pale yellow", "deep purple",
        "light blue", "soft pink", "dull gray", "vivid orange", "rich brown", "dark teal",
        "pale pink", "deep crimson", "bright yellow", "dark maroon", "red", "blue",
        "green"},
       wrap({"mostly {X}", "kind of {X}"}),
       per_family},
  };
  return spec;
}

}  // namespace anspar
