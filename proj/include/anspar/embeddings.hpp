// Word-vector table: GloVe text-format I/O, fitting new vectors on a corpus
// with an adaptive-gradient loop, and mean-pooled sentence embeddings.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "anspar/matrix.hpp"
#include "anspar/rng.hpp"
#include "anspar/types.hpp"

namespace anspar {

struct EmbeddingTable {
  size_t dim = 0;
  size_t vocab_cap = 10000;
  std::vector<std::string> tokens;  // insertion order, stable across runs
  std::vector<Vec> vectors;         // parallel to tokens
  std::unordered_map<std::string, size_t> index;

  size_t size() const { return tokens.size(); }

  bool contains(const std::string& tok) const { return index.count(tok) > 0; }

  const Vec* find(const std::string& tok) const {
    auto it = index.find(tok);
    return it == index.end() ? nullptr : &vectors[it->second];
  }

  void add(const std::string& tok, Vec v) {
    if (index.count(tok)) throw std::runtime_error("duplicate token: " + tok);
    if (size() >= vocab_cap) throw std::runtime_error("vocab_cap exceeded");
    if (dim == 0) dim = v.size();
    if (v.size() != dim) throw std::runtime_error("dimension mismatch for token: " + tok);
    index[tok] = tokens.size();
    tokens.push_back(tok);
    vectors.push_back(std::move(v));
  }
};

struct GloveFitConfig {
  size_t dim = 200;
  size_t max_iterations = 1000;
  int window = 5;
  double x_max = 100.0;
  double alpha = 0.75;
  double learning_rate = 0.05;
  size_t vocab_cap = 10000;
  uint64_t seed = 0;
};

inline EmbeddingTable load_embeddings(const std::string& path, size_t vocab_cap) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open embeddings file: " + path);
  EmbeddingTable table;
  table.vocab_cap = vocab_cap;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line) && table.size() < vocab_cap) {
    ++line_no;
    if (line.rfind("# ", 0) == 0) continue;  // tool-written comment lines
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    Vec v;
    std::string field;
    while (ss >> field) {
      try {
        size_t used = 0;
        double x = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
        v.push_back(x);
      } catch (const std::exception&) {
        throw std::runtime_error("non-numeric field \"" + field + "\" at line " +
                                 std::to_string(line_no));
      }
    }
    if (v.empty()) throw std::runtime_error("no vector values at line " + std::to_string(line_no));
    if (table.dim != 0 && v.size() != table.dim) {
      throw std::runtime_error("inconsistent dimension at line " + std::to_string(line_no) +
                               ": expected " + std::to_string(table.dim) + ", got " +
                               std::to_string(v.size()));
    }
    table.add(tok, std::move(v));
  }
  return table;
}

inline void save_embeddings(const EmbeddingTable& table, const std::string& path,
                            const std::vector<std::string>& comments = {}) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  char buf[64];
  for (const auto& c : comments) out << "# " << c << "\n";
  for (size_t i = 0; i < table.size(); ++i) {
    out << table.tokens[i];
    for (double v : table.vectors[i]) {
      std::snprintf(buf, sizeof(buf), " %.17g", v);
      out << buf;
    }
    out << "\n";
  }
}

namespace detail {

// Vocabulary capped by frequency (descending), ties broken by first
// occurrence so the result is independent of hash iteration order.
inline std::vector<std::string> build_vocab(const std::vector<TokenSeq>& corpus,
                                            size_t vocab_cap) {
  std::unordered_map<std::string, size_t> freq;
  std::unordered_map<std::string, size_t> first_seen;
  size_t pos = 0;
  for (const auto& sent : corpus) {
    for (const auto& tok : sent) {
      auto [it, fresh] = first_seen.emplace(tok, pos);
      (void)it;
      if (fresh) ++pos;
      freq[tok] += 1;
    }
  }
  std::vector<std::string> vocab;
  vocab.reserve(first_seen.size());
  for (const auto& [tok, at] : first_seen) {
    (void)at;
    vocab.push_back(tok);
  }
  std::sort(vocab.begin(), vocab.end(), [&](const std::string& a, const std::string& b) {
    if (freq[a] != freq[b]) return freq[a] > freq[b];
    return first_seen[a] < first_seen[b];
  });
  if (vocab.size() > vocab_cap) vocab.resize(vocab_cap);
  return vocab;
}

}  // namespace detail

// Keeps the fitted parameters visible so callers (and tests) can recompute the
// objective from scratch rather than trusting the trace.
struct GloveFitResult {
  EmbeddingTable table;                 // final vectors w_i + w~_i
  std::vector<std::string> vocab;       // row order of the parameter matrices
  Matrix W, Wt;                         // center / context word matrices
  Vec b, bt;                            // center / context biases
  std::vector<std::tuple<size_t, size_t, double>> cooccur;  // (i, j, X_ij), i->j
  std::vector<double> objective_history;  // value at init, then after each epoch
};

namespace detail {

inline double glove_weight(double x, double x_max, double alpha) {
  return std::min(std::pow(x / x_max, alpha), 1.0);
}

}  // namespace detail

inline GloveFitResult fit_glove(const std::vector<TokenSeq>& corpus,
                                const GloveFitConfig& cfg) {
  if (corpus.empty()) throw std::runtime_error("fit_glove: empty corpus");
  if (cfg.dim < 1 || cfg.max_iterations < 1 || cfg.window < 1) {
    throw std::runtime_error("fit_glove: invalid config");
  }
  GloveFitResult res;
  res.vocab = detail::build_vocab(corpus, cfg.vocab_cap);
  if (res.vocab.empty()) throw std::runtime_error("fit_glove: empty vocabulary");
  std::unordered_map<std::string, size_t> vidx;
  for (size_t i = 0; i < res.vocab.size(); ++i) vidx[res.vocab[i]] = i;
  size_t V = res.vocab.size();

  // Symmetric co-occurrence with 1/distance weighting inside the window.
  std::unordered_map<uint64_t, double> counts;
  for (const auto& sent : corpus) {
    std::vector<size_t> ids;
    std::vector<bool> known;
    for (const auto& tok : sent) {
      auto it = vidx.find(tok);
      known.push_back(it != vidx.end());
      ids.push_back(it != vidx.end() ? it->second : 0);
    }
    for (size_t i = 0; i < ids.size(); ++i) {
      if (!known[i]) continue;
      size_t hi = std::min(ids.size(), i + static_cast<size_t>(cfg.window) + 1);
      for (size_t j = i + 1; j < hi; ++j) {
        if (!known[j]) continue;
        double w = 1.0 / static_cast<double>(j - i);
        counts[ids[i] * V + ids[j]] += w;
        counts[ids[j] * V + ids[i]] += w;
      }
    }
  }
  if (counts.empty()) {
    throw std::runtime_error("fit_glove: degenerate corpus (no co-occurrences)");
  }
  res.cooccur.reserve(counts.size());
  for (const auto& [key, x] : counts) {
    res.cooccur.emplace_back(key / V, key % V, x);
  }
  // Fixed traversal order regardless of hash layout.
  std::sort(res.cooccur.begin(), res.cooccur.end());

  Rng rng(cfg.seed);
  double scale = 0.5 / static_cast<double>(cfg.dim);
  res.W = Matrix(V, cfg.dim);
  res.Wt = Matrix(V, cfg.dim);
  res.W.fill_uniform(rng, -scale, scale);
  res.Wt.fill_uniform(rng, -scale, scale);
  res.b.assign(V, 0.0);
  res.bt.assign(V, 0.0);
  for (auto& v : res.b) v = rng.uniform(-scale, scale);
  for (auto& v : res.bt) v = rng.uniform(-scale, scale);

  // Per-parameter squared-gradient accumulators, started at 1 so the first
  // step is exactly learning_rate * gradient.
  Matrix gW(V, cfg.dim), gWt(V, cfg.dim);
  gW.data.assign(gW.data.size(), 1.0);
  gWt.data.assign(gWt.data.size(), 1.0);
  Vec gb(V, 1.0), gbt(V, 1.0);

  auto objective = [&]() {
    double total = 0.0;
    for (const auto& [i, j, x] : res.cooccur) {
      double diff = res.b[i] + res.bt[j] - std::log(x);
      for (size_t d = 0; d < cfg.dim; ++d) diff += res.W(i, d) * res.Wt(j, d);
      total += detail::glove_weight(x, cfg.x_max, cfg.alpha) * diff * diff;
    }
    return total;
  };
  res.objective_history.push_back(objective());

  std::vector<size_t> order(res.cooccur.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (size_t epoch = 0; epoch < cfg.max_iterations; ++epoch) {
    rng.shuffle(order);
    for (size_t oi : order) {
      const auto& [i, j, x] = res.cooccur[oi];
      double diff = res.b[i] + res.bt[j] - std::log(x);
      for (size_t d = 0; d < cfg.dim; ++d) diff += res.W(i, d) * res.Wt(j, d);
      double fdiff = 2.0 * detail::glove_weight(x, cfg.x_max, cfg.alpha) * diff;
      for (size_t d = 0; d < cfg.dim; ++d) {
        double gi = fdiff * res.Wt(j, d);
        double gj = fdiff * res.W(i, d);
        gW(i, d) += gi * gi;
        gWt(j, d) += gj * gj;
        res.W(i, d) -= cfg.learning_rate * gi / std::sqrt(gW(i, d));
        res.Wt(j, d) -= cfg.learning_rate * gj / std::sqrt(gWt(j, d));
      }
      gb[i] += fdiff * fdiff;
      gbt[j] += fdiff * fdiff;
      res.b[i] -= cfg.learning_rate * fdiff / std::sqrt(gb[i]);
      res.bt[j] -= cfg.learning_rate * fdiff / std::sqrt(gbt[j]);
    }
    res.objective_history.push_back(objective());
  }

  res.table.dim = cfg.dim;
  res.table.vocab_cap = cfg.vocab_cap;
  for (size_t i = 0; i < V; ++i) {
    Vec v(cfg.dim);
    for (size_t d = 0; d < cfg.dim; ++d) v[d] = res.W(i, d) + res.Wt(i, d);
    res.table.add(res.vocab[i], std::move(v));
  }
  return res;
}

struct SentenceEmbedding {
  Vec vec;
  bool all_oov = false;
};

inline SentenceEmbedding embed_sentence(const TokenSeq& tokens, const EmbeddingTable& table) {
  SentenceEmbedding out;
  out.vec.assign(table.dim, 0.0);
  size_t hits = 0;
  for (const auto& tok : tokens) {
    if (const Vec* v = table.find(tok)) {
      for (size_t d = 0; d < table.dim; ++d) out.vec[d] += (*v)[d];
      ++hits;
    }
  }
  if (hits == 0) {
    out.all_oov = true;
    return out;
  }
  for (double& x : out.vec) x /= static_cast<double>(hits);
  return out;
}

}  // namespace anspar
