#pragma once

// Question selection: given candidate questions with answer-confidence
// distributions from some oracle, ask the one whose answer the oracle is
// least sure about (maximum entropy), and optionally decorate it with an
// exclamation prefix. Entropy is measured in nats; the base only rescales
// every entropy by the same factor, so the argmax — the only thing selection
// uses — is base-invariant.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "anspar/matrix.hpp"
#include "anspar/rng.hpp"

namespace anspar {

struct CandidateQuestion {
  std::string text;
  Vec answer_distribution;
};

struct DecorationPool {
  std::vector<std::string> prefixes;
};

inline void validate_distribution(const Vec& p) {
  double sum = 0.0;
  for (double v : p) {
    if (v < 0.0) throw std::runtime_error("distribution has a negative entry");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-6)
    throw std::runtime_error("distribution sums to " + std::to_string(sum) + ", not 1");
}

/// -sum p ln p with 0 ln 0 = 0, in nats.
inline double entropy(const Vec& p) {
  validate_distribution(p);
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

/// Index of the candidate with the least confident answer (maximum entropy);
/// ties go to the lowest index.
inline size_t select_question(const std::vector<CandidateQuestion>& candidates) {
  if (candidates.empty()) throw std::runtime_error("select_question: no candidates");
  size_t best = 0;
  double best_h = entropy(candidates[0].answer_distribution);
  for (size_t i = 1; i < candidates.size(); ++i) {
    const double h = entropy(candidates[i].answer_distribution);
    if (h > best_h) {
      best = i;
      best_h = h;
    }
  }
  return best;
}

/// Prepends a seeded choice of prefix: "<prefix> <question>".
inline std::string decorate_question(const std::string& question, const DecorationPool& pool,
                                     std::uint64_t seed) {
  if (pool.prefixes.empty()) throw std::runtime_error("decorate_question: empty pool");
  Rng rng(seed);
  return pool.prefixes[rng.below(pool.prefixes.size())] + " " + question;
}

/// JSONL, one {"text": str, "answer_distribution": [num]} per line.
inline std::vector<CandidateQuestion> load_candidates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open candidates file: " + path);
  std::vector<CandidateQuestion> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("candidates line " + std::to_string(line_no) + ": " + e.what());
    }
    CandidateQuestion c;
    c.text = j.at("text").get<std::string>();
    c.answer_distribution = j.at("answer_distribution").get<Vec>();
    validate_distribution(c.answer_distribution);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace anspar
