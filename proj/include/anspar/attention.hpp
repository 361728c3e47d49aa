#pragma once

// Single-query scaled dot-product attention over GRU states, plus the softmax
// classifier head and the threshold rule that turns attention weights into an
// extracted answer. One learned query yields exactly one weight per token.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "anspar/matrix.hpp"
#include "anspar/rng.hpp"
#include "anspar/types.hpp"

namespace anspar {

struct AttnParams {
  int hidden_dim = 0;
  int d_k = 0;
  Matrix key_proj;    // hidden_dim x d_k
  Matrix value_proj;  // hidden_dim x d_k
  Vec query;          // d_k

  AttnParams() = default;
  AttnParams(int hid_dim, int dk)
      : hidden_dim(hid_dim),
        d_k(dk),
        key_proj(static_cast<size_t>(hid_dim), static_cast<size_t>(dk)),
        value_proj(static_cast<size_t>(hid_dim), static_cast<size_t>(dk)),
        query(static_cast<size_t>(dk), 0.0) {
    if (hid_dim <= 0 || dk < 1) throw std::runtime_error("attention: d_k must be >= 1");
  }

  void init(Rng& rng) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(hidden_dim));
    key_proj.fill_uniform(rng, -bound, bound);
    value_proj.fill_uniform(rng, -bound, bound);
    for (double& v : query) v = rng.uniform(-bound, bound);
  }
};

struct AttnResult {
  Vec weights;             // softmax over steps, sums to 1
  Vec context;             // sum_t weights[t] * v_t, length d_k
  std::vector<Vec> keys;   // cached for backward
  std::vector<Vec> values;
};

/// k_t = s_t K, v_t = s_t V, logits_t = (q . k_t)/sqrt(d_k), weights =
/// softmax(logits) with max subtraction, context = sum_t weights_t v_t.
inline AttnResult attend(const AttnParams& p, const std::vector<Vec>& states) {
  if (states.empty()) throw std::runtime_error("attention: needs at least one state");
  const size_t dk = static_cast<size_t>(p.d_k);
  AttnResult res;
  Vec logits(states.size());
  const double scale = 1.0 / std::sqrt(static_cast<double>(p.d_k));
  for (size_t t = 0; t < states.size(); ++t) {
    check_dim(states[t].size(), static_cast<size_t>(p.hidden_dim), "attend state");
    res.keys.push_back(vec_mat(states[t], p.key_proj));
    res.values.push_back(vec_mat(states[t], p.value_proj));
    logits[t] = dot(p.query, res.keys.back()) * scale;
  }
  res.weights = softmax(logits);
  res.context.assign(dk, 0.0);
  for (size_t t = 0; t < states.size(); ++t) axpy(res.context, res.weights[t], res.values[t]);
  return res;
}

struct AttnGrads {
  Matrix key_proj, value_proj;
  Vec query;

  explicit AttnGrads(const AttnParams& p)
      : key_proj(p.key_proj.rows, p.key_proj.cols),
        value_proj(p.value_proj.rows, p.value_proj.cols),
        query(p.query.size(), 0.0) {}
};

/// Backward through attend(): given dL/dcontext, accumulates parameter
/// gradients into `g` and returns dL/ds_t for every state.
inline std::vector<Vec> attn_backward(const AttnParams& p, const std::vector<Vec>& states,
                                      const AttnResult& cache, const Vec& d_context,
                                      AttnGrads& g) {
  const size_t T = states.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(p.d_k));
  std::vector<Vec> d_states(T, Vec(static_cast<size_t>(p.hidden_dim), 0.0));

  // context = sum_t a_t v_t
  Vec d_alpha(T);
  for (size_t t = 0; t < T; ++t) {
    d_alpha[t] = dot(d_context, cache.values[t]);
    // dV: v_t = s_t V receives a_t * d_context
    Vec dv(cache.values[t].size());
    for (size_t i = 0; i < dv.size(); ++i) dv[i] = cache.weights[t] * d_context[i];
    add_outer(g.value_proj, states[t], dv);
    axpy(d_states[t], 1.0, vec_mat_t(dv, p.value_proj));
  }

  // softmax backward: dl_t = a_t (d_alpha_t - sum_j a_j d_alpha_j)
  double mix = 0.0;
  for (size_t t = 0; t < T; ++t) mix += cache.weights[t] * d_alpha[t];
  for (size_t t = 0; t < T; ++t) {
    const double dl = cache.weights[t] * (d_alpha[t] - mix);
    // logits_t = scale * q . k_t
    axpy(g.query, dl * scale, cache.keys[t]);
    Vec dk_t(cache.keys[t].size());
    for (size_t i = 0; i < dk_t.size(); ++i) dk_t[i] = dl * scale * p.query[i];
    add_outer(g.key_proj, states[t], dk_t);
    axpy(d_states[t], 1.0, vec_mat_t(dk_t, p.key_proj));
  }
  return d_states;
}

struct ClassifierHead {
  int n_classes = 0;
  Matrix weight;  // d_k x n_classes
  Vec bias;       // n_classes

  ClassifierHead() = default;
  ClassifierHead(int dk, int classes)
      : n_classes(classes),
        weight(static_cast<size_t>(dk), static_cast<size_t>(classes)),
        bias(static_cast<size_t>(classes), 0.0) {
    if (classes < 2) throw std::runtime_error("classifier: needs >= 2 classes");
  }

  void init(Rng& rng) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(weight.rows));
    weight.fill_uniform(rng, -bound, bound);
  }
};

/// softmax(context * weight + bias); sums to 1.
inline Vec classify(const ClassifierHead& head, const Vec& context) {
  Vec logits = vec_mat(context, head.weight);
  check_dim(logits.size(), head.bias.size(), "classify bias");
  for (size_t i = 0; i < logits.size(); ++i) logits[i] += head.bias[i];
  return softmax(logits);
}

/// Keeps every token whose attention weight reaches max(weights)/x, in order,
/// annotated with its weight. The argmax always survives its own threshold.
struct ExtractionConfig {
  double x = 2.0;  // threshold divisor, must be > 1
};

inline ParseResult extract_answer(const TokenSeq& tokens, const Vec& weights,
                                  const ExtractionConfig& cfg) {
  if (tokens.size() != weights.size())
    throw std::runtime_error("extract_answer: " + std::to_string(tokens.size()) +
                             " tokens vs " + std::to_string(weights.size()) + " weights");
  if (!(cfg.x > 1.0)) throw std::runtime_error("extract_answer: x must be > 1");
  ParseResult res;
  if (tokens.empty()) {
    res.no_match = true;
    return res;
  }
  const double tau = *std::max_element(weights.begin(), weights.end()) / cfg.x;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (weights[i] >= tau) {
      res.tokens.push_back(tokens[i]);
      res.weights.push_back(weights[i]);
    }
  }
  return res;
}

}  // namespace anspar
