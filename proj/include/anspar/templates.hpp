// POS tagging (lexicon + suffix rules), mining the most frequent POS
// bigram/trigram templates per response cluster, and template-based parsing.
#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "anspar/types.hpp"

namespace anspar {

inline const std::set<std::string>& pos_tagset() {
  static const std::set<std::string> tags = {
      "CC", "CD", "DT",  "EX",  "FW",  "IN",  "JJ",  "JJR", "JJS", "MD",
      "NN", "NNS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS", "RP",
      "TO", "UH", "VB",  "VBD", "VBG", "VBN", "VBP", "VBZ", "WDT", "WP",
      "WP$", "WRB"};
  return tags;
}

struct PosTagger {
  std::unordered_map<std::string, std::string> lexicon;
  std::vector<std::pair<std::string, std::string>> suffix_rules;  // applied in order
  std::string default_tag = "NN";
};

inline std::vector<std::pair<std::string, std::string>> default_suffix_rules() {
  return {
      {"ing", "VBG"}, {"ed", "VBD"},  {"ly", "RB"},   {"ness", "NN"}, {"ment", "NN"},
      {"tion", "NN"}, {"sion", "NN"}, {"ship", "NN"}, {"ity", "NN"},  {"able", "JJ"},
      {"ible", "JJ"}, {"ful", "JJ"},  {"less", "JJ"}, {"ous", "JJ"},  {"est", "JJS"},
      {"ies", "NNS"}, {"s", "NNS"},
  };
}

inline PosTagger load_tagger(const std::string& lexicon_path) {
  std::ifstream in(lexicon_path);
  if (!in) throw std::runtime_error("cannot open lexicon: " + lexicon_path);
  PosTagger tagger;
  tagger.suffix_rules = default_suffix_rules();
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error("lexicon line " + std::to_string(line_no) + ": no tab separator");
    }
    std::string token = line.substr(0, tab);
    std::string tag = line.substr(tab + 1);
    if (!tag.empty() && tag.back() == '\r') tag.pop_back();
    if (token.empty() || tag.empty()) {
      throw std::runtime_error("lexicon line " + std::to_string(line_no) + ": empty field");
    }
    if (!pos_tagset().count(tag)) {
      throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                               ": tag outside tagset: " + tag);
    }
    tagger.lexicon.emplace(token, tag);  // first entry wins on duplicates
  }
  return tagger;
}

inline std::string tag_token(const std::string& token, const PosTagger& tagger) {
  auto it = tagger.lexicon.find(token);
  if (it != tagger.lexicon.end()) return it->second;
  for (const auto& [suffix, tag] : tagger.suffix_rules) {
    // Demand at least two stem characters so short words don't false-match.
    if (token.size() > suffix.size() + 1 &&
        token.compare(token.size() - suffix.size(), suffix.size(), suffix) == 0) {
      return tag;
    }
  }
  return tagger.default_tag;
}

inline std::vector<std::string> pos_tag(const TokenSeq& tokens, const PosTagger& tagger) {
  std::vector<std::string> tags;
  tags.reserve(tokens.size());
  for (const auto& tok : tokens) tags.push_back(tag_token(tok, tagger));
  return tags;
}

struct TemplateEntry {
  std::vector<std::string> tags;  // length 2 or 3
  long count = 0;
};

struct TemplateSet {
  int cluster_id = 0;
  std::vector<TemplateEntry> templates;  // count desc, length desc, lexicographic asc
};

inline TemplateSet extract_templates(const std::vector<TokenSeq>& responses,
                                     const PosTagger& tagger, int top_m = 3,
                                     int cluster_id = 0) {
  if (responses.empty()) throw std::runtime_error("extract_templates: no responses");
  std::map<std::vector<std::string>, long> counts;
  bool any_long_enough = false;
  for (const TokenSeq& resp : responses) {
    std::vector<std::string> tags = pos_tag(resp, tagger);
    for (size_t n = 2; n <= 3; ++n) {
      if (tags.size() < n) continue;
      any_long_enough = true;
      for (size_t i = 0; i + n <= tags.size(); ++i) {
        counts[std::vector<std::string>(tags.begin() + static_cast<long>(i),
                                        tags.begin() + static_cast<long>(i + n))] += 1;
      }
    }
  }
  if (!any_long_enough) {
    throw std::runtime_error("extract_templates: all responses shorter than 2 tokens");
  }
  TemplateSet set;
  set.cluster_id = cluster_id;
  for (const auto& [tags, count] : counts) set.templates.push_back({tags, count});
  std::sort(set.templates.begin(), set.templates.end(),
            [](const TemplateEntry& a, const TemplateEntry& b) {
              if (a.count != b.count) return a.count > b.count;
              if (a.tags.size() != b.tags.size()) return a.tags.size() > b.tags.size();
              return a.tags < b.tags;
            });
  if (top_m > 0 && set.templates.size() > static_cast<size_t>(top_m)) {
    set.templates.resize(static_cast<size_t>(top_m));
  }
  return set;
}

// Tries templates in order; first template with a contiguous tag match wins,
// and the leftmost occurrence is returned.
inline ParseResult parse_with_templates(const TokenSeq& response, const PosTagger& tagger,
                                        const TemplateSet& templates) {
  if (templates.templates.empty()) {
    throw std::runtime_error("parse_with_templates: empty template set");
  }
  std::vector<std::string> tags = pos_tag(response, tagger);
  for (const TemplateEntry& tpl : templates.templates) {
    size_t n = tpl.tags.size();
    if (tags.size() < n) continue;
    for (size_t i = 0; i + n <= tags.size(); ++i) {
      bool match = true;
      for (size_t j = 0; j < n && match; ++j) match = tags[i + j] == tpl.tags[j];
      if (match) {
        ParseResult out;
        out.tokens.assign(response.begin() + static_cast<long>(i),
                          response.begin() + static_cast<long>(i + n));
        out.matched_template = tpl.tags;
        return out;
      }
    }
  }
  ParseResult out;
  out.no_match = true;
  return out;
}

inline void save_template_set(const TemplateSet& set, const std::string& path,
                              const nlohmann::json& extra = {}) {
  nlohmann::json j;
  j["cluster_id"] = set.cluster_id;
  j["templates"] = nlohmann::json::array();
  for (const auto& tpl : set.templates) {
    j["templates"].push_back({{"tags", tpl.tags}, {"count", tpl.count}});
  }
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

inline TemplateSet load_template_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open template set: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  TemplateSet set;
  set.cluster_id = j.at("cluster_id").get<int>();
  for (const auto& item : j.at("templates")) {
    TemplateEntry tpl;
    tpl.tags = item.at("tags").get<std::vector<std::string>>();
    tpl.count = item.at("count").get<long>();
    if (tpl.tags.size() < 2 || tpl.tags.size() > 3) {
      throw std::runtime_error("template set: tag tuple length must be 2 or 3");
    }
    set.templates.push_back(std::move(tpl));
  }
  return set;
}

}  // namespace anspar
