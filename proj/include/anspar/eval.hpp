// BLEU scoring of parsed answers against cleaned ground truth, plus
// classification accuracy and report table output.
#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "anspar/types.hpp"

namespace anspar {

enum class BleuLevel { Corpus, SentenceMean };
enum class BleuSmoothing { None, AddEpsilon };

struct BleuConfig {
  int max_n = 4;
  BleuLevel level = BleuLevel::Corpus;
  BleuSmoothing smoothing = BleuSmoothing::AddEpsilon;
};

namespace detail {

constexpr double kBleuEpsilon = 1e-9;  // proxy count for zero n-gram matches, n >= 2

inline std::unordered_map<std::string, long> ngram_counts(const TokenSeq& t, int n) {
  std::unordered_map<std::string, long> counts;
  if (static_cast<int>(t.size()) < n) return counts;
  for (size_t i = 0; i + static_cast<size_t>(n) <= t.size(); ++i) {
    std::string key = t[i];
    for (int j = 1; j < n; ++j) {
      key.push_back('\x1f');
      key += t[i + static_cast<size_t>(j)];
    }
    counts[key] += 1;
  }
  return counts;
}

struct BleuAccum {
  std::vector<double> matched;
  std::vector<double> total;
  long hyp_len = 0;
  long ref_len = 0;

  explicit BleuAccum(int max_n)
      : matched(static_cast<size_t>(max_n), 0.0), total(static_cast<size_t>(max_n), 0.0) {}

  void add(const TokenSeq& hyp, const TokenSeq& ref, int max_n) {
    hyp_len += static_cast<long>(hyp.size());
    ref_len += static_cast<long>(ref.size());
    for (int n = 1; n <= max_n; ++n) {
      auto h = ngram_counts(hyp, n);
      auto r = ngram_counts(ref, n);
      double m = 0, t = 0;
      for (const auto& [gram, cnt] : h) {
        t += static_cast<double>(cnt);
        auto it = r.find(gram);
        if (it != r.end()) m += static_cast<double>(std::min(cnt, it->second));
      }
      matched[static_cast<size_t>(n - 1)] += m;
      total[static_cast<size_t>(n - 1)] += t;
    }
  }
};

inline double bleu_from_accum(const BleuAccum& acc, const BleuConfig& cfg) {
  if (acc.hyp_len == 0) return 0.0;
  double log_sum = 0.0;
  for (int n = 1; n <= cfg.max_n; ++n) {
    double m = acc.matched[static_cast<size_t>(n - 1)];
    double t = acc.total[static_cast<size_t>(n - 1)];
    if (m == 0.0) {
      if (n >= 2 && cfg.smoothing == BleuSmoothing::AddEpsilon) {
        m = kBleuEpsilon;
        if (t == 0.0) t = 1.0;
      } else {
        return 0.0;
      }
    }
    log_sum += std::log(m / t);
  }
  double bp = 1.0;
  if (acc.hyp_len < acc.ref_len) {
    bp = std::exp(1.0 - static_cast<double>(acc.ref_len) / static_cast<double>(acc.hyp_len));
  }
  return bp * std::exp(log_sum / cfg.max_n);
}

inline void check_bleu_config(const BleuConfig& cfg) {
  if (cfg.max_n < 1 || cfg.max_n > 4) {
    throw std::runtime_error("bleu: max_n must be in [1,4], got " + std::to_string(cfg.max_n));
  }
}

}  // namespace detail

// Clipped n-gram match count; exposed so tests can check monotonicity
// properties directly on the counts.
inline long clipped_matches(const TokenSeq& hyp, const TokenSeq& ref, int n) {
  auto h = detail::ngram_counts(hyp, n);
  auto r = detail::ngram_counts(ref, n);
  long m = 0;
  for (const auto& [gram, cnt] : h) {
    auto it = r.find(gram);
    if (it != r.end()) m += std::min(cnt, it->second);
  }
  return m;
}

inline double bleu(const TokenSeq& hyp, const TokenSeq& ref, const BleuConfig& cfg = {}) {
  detail::check_bleu_config(cfg);
  if (ref.empty()) throw std::runtime_error("bleu: empty reference");
  if (hyp.empty()) return 0.0;
  detail::BleuAccum acc(cfg.max_n);
  acc.add(hyp, ref, cfg.max_n);
  return detail::bleu_from_accum(acc, cfg);
}

inline double corpus_bleu(const std::vector<std::pair<TokenSeq, TokenSeq>>& pairs,
                          const BleuConfig& cfg = {}) {
  detail::check_bleu_config(cfg);
  if (pairs.empty()) throw std::runtime_error("corpus_bleu: empty pair list");
  for (const auto& [hyp, ref] : pairs) {
    if (ref.empty()) throw std::runtime_error("corpus_bleu: empty reference");
  }
  if (cfg.level == BleuLevel::SentenceMean) {
    double sum = 0.0;
    for (const auto& [hyp, ref] : pairs) sum += bleu(hyp, ref, cfg);
    return sum / static_cast<double>(pairs.size());
  }
  detail::BleuAccum acc(cfg.max_n);
  for (const auto& [hyp, ref] : pairs) acc.add(hyp, ref, cfg.max_n);
  return detail::bleu_from_accum(acc, cfg);
}

template <typename Label>
double classification_accuracy(const std::vector<Label>& predictions,
                               const std::vector<Label>& gold) {
  if (predictions.size() != gold.size()) {
    throw std::runtime_error("classification_accuracy: length mismatch (" +
                             std::to_string(predictions.size()) + " vs " +
                             std::to_string(gold.size()) + ")");
  }
  if (predictions.empty()) return 0.0;
  size_t hit = 0;
  for (size_t i = 0; i < predictions.size(); ++i) {
    if (predictions[i] == gold[i]) ++hit;
  }
  return static_cast<double>(hit) / static_cast<double>(predictions.size());
}

// --- report tables -----------------------------------------------------------

struct EvalRow {
  std::string model;
  std::array<double, 4> bleu_corpus{};        // BLEU1..BLEU4, pooled counts
  std::array<double, 4> bleu_sentence_mean{}; // BLEU1..BLEU4, mean over pairs
  size_t n_examples = 0;
};

struct EvalReport {
  std::vector<EvalRow> rows;
  std::optional<double> classifier_accuracy;
};

inline EvalRow make_eval_row(const std::string& model,
                             const std::vector<std::pair<TokenSeq, TokenSeq>>& pairs,
                             BleuSmoothing smoothing = BleuSmoothing::AddEpsilon) {
  EvalRow row;
  row.model = model;
  row.n_examples = pairs.size();
  for (int n = 1; n <= 4; ++n) {
    BleuConfig cfg;
    cfg.max_n = n;
    cfg.smoothing = smoothing;
    cfg.level = BleuLevel::Corpus;
    row.bleu_corpus[static_cast<size_t>(n - 1)] = corpus_bleu(pairs, cfg);
    cfg.level = BleuLevel::SentenceMean;
    row.bleu_sentence_mean[static_cast<size_t>(n - 1)] = corpus_bleu(pairs, cfg);
  }
  return row;
}

namespace detail {

inline std::string fmt_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace detail

// CSV with one row per (model, level); `comment` lines are prefixed with '#'.
inline std::string report_to_csv(const EvalReport& report,
                                 const std::vector<std::string>& comments = {}) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "model,level,bleu1,bleu2,bleu3,bleu4,n\n";
  for (const auto& row : report.rows) {
    out += row.model + ",corpus";
    for (double v : row.bleu_corpus) out += "," + detail::fmt_score(v);
    out += "," + std::to_string(row.n_examples) + "\n";
    out += row.model + ",sentence-mean";
    for (double v : row.bleu_sentence_mean) out += "," + detail::fmt_score(v);
    out += "," + std::to_string(row.n_examples) + "\n";
  }
  if (report.classifier_accuracy) {
    out += "# classifier_accuracy," + detail::fmt_score(*report.classifier_accuracy) + "\n";
  }
  return out;
}

inline std::string report_to_table(const EvalReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-28s %-14s %8s %8s %8s %8s %8s\n", "model", "level",
                "BLEU1", "BLEU2", "BLEU3", "BLEU4", "n");
  out += line;
  out += std::string(86, '-') + "\n";
  for (const auto& row : report.rows) {
    std::snprintf(line, sizeof(line), "%-28s %-14s %8.4f %8.4f %8.4f %8.4f %8zu\n",
                  row.model.c_str(), "corpus", row.bleu_corpus[0], row.bleu_corpus[1],
                  row.bleu_corpus[2], row.bleu_corpus[3], row.n_examples);
    out += line;
    std::snprintf(line, sizeof(line), "%-28s %-14s %8.4f %8.4f %8.4f %8.4f %8zu\n",
                  row.model.c_str(), "sentence-mean", row.bleu_sentence_mean[0],
                  row.bleu_sentence_mean[1], row.bleu_sentence_mean[2],
                  row.bleu_sentence_mean[3], row.n_examples);
    out += line;
  }
  if (report.classifier_accuracy) {
    std::snprintf(line, sizeof(line), "classifier accuracy: %.4f\n",
                  *report.classifier_accuracy);
    out += line;
  }
  return out;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

}  // namespace anspar
