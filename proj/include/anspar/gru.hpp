#pragma once

// Gated recurrent unit over embedded token sequences, row-vector convention:
//   z_t = sigmoid(x_t U_z + s_{t-1} W_z + b_z)
//   r_t = sigmoid(x_t U_r + s_{t-1} W_r + b_r)
//   h_t = tanh(x_t U_h + (s_{t-1} . r_t) W_h + b_h)
//   s_t = (1 - z_t) . h_t + z_t . s_{t-1}
// Biases default to zero so the plain gate equations hold exactly at init.
// The backward pass is written out analytically; tests cross-check it against
// central finite differences.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "anspar/matrix.hpp"
#include "anspar/rng.hpp"

namespace anspar {

struct GruParams {
  int input_dim = 0;
  int hidden_dim = 0;
  Matrix U_z, U_r, U_h;  // input_dim  x hidden_dim
  Matrix W_z, W_r, W_h;  // hidden_dim x hidden_dim
  Vec b_z, b_r, b_h;     // hidden_dim

  GruParams() = default;
  GruParams(int in_dim, int hid_dim)
      : input_dim(in_dim),
        hidden_dim(hid_dim),
        U_z(static_cast<size_t>(in_dim), static_cast<size_t>(hid_dim)),
        U_r(static_cast<size_t>(in_dim), static_cast<size_t>(hid_dim)),
        U_h(static_cast<size_t>(in_dim), static_cast<size_t>(hid_dim)),
        W_z(static_cast<size_t>(hid_dim), static_cast<size_t>(hid_dim)),
        W_r(static_cast<size_t>(hid_dim), static_cast<size_t>(hid_dim)),
        W_h(static_cast<size_t>(hid_dim), static_cast<size_t>(hid_dim)),
        b_z(static_cast<size_t>(hid_dim), 0.0),
        b_r(static_cast<size_t>(hid_dim), 0.0),
        b_h(static_cast<size_t>(hid_dim), 0.0) {
    if (in_dim <= 0 || hid_dim <= 0)
      throw std::runtime_error("gru: dimensions must be positive");
  }

  // Weights uniform in (-1/sqrt(hidden_dim), +1/sqrt(hidden_dim)); biases stay 0.
  void init(Rng& rng) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(hidden_dim));
    for (Matrix* m : {&U_z, &U_r, &U_h, &W_z, &W_r, &W_h}) m->fill_uniform(rng, -bound, bound);
  }
};

// Everything the backward pass needs, saved step by step.
struct GruCache {
  std::vector<Vec> inputs;  // x_1..x_T
  std::vector<Vec> z, r, h; // gate activations per step
  std::vector<Vec> states;  // s_1..s_T
  Vec s0;
};

namespace detail {

inline void check_gru_dims(const GruParams& p, const std::vector<Vec>& inputs, const Vec& s0) {
  const size_t e = static_cast<size_t>(p.input_dim);
  const size_t hd = static_cast<size_t>(p.hidden_dim);
  check_dim(s0.size(), hd, "gru s0");
  for (const Vec& x : inputs) check_dim(x.size(), e, "gru input");
  check_dim(p.U_z.rows, e, "U_z rows");
  check_dim(p.W_z.rows, hd, "W_z rows");
  check_dim(p.b_z.size(), hd, "b_z");
}

}  // namespace detail

/// Runs the recurrence and returns the full cache (inputs copied in).
inline GruCache gru_forward_cache(const GruParams& p, const std::vector<Vec>& inputs,
                                  const Vec& s0) {
  detail::check_gru_dims(p, inputs, s0);
  GruCache cache;
  cache.inputs = inputs;
  cache.s0 = s0;
  const size_t hd = static_cast<size_t>(p.hidden_dim);
  Vec s = s0;
  for (size_t t = 0; t < inputs.size(); ++t) {
    const Vec& x = inputs[t];
    Vec pre_z = vec_mat(x, p.U_z);
    Vec pre_r = vec_mat(x, p.U_r);
    {
      Vec sz = vec_mat(s, p.W_z), sr = vec_mat(s, p.W_r);
      for (size_t i = 0; i < hd; ++i) {
        pre_z[i] += sz[i] + p.b_z[i];
        pre_r[i] += sr[i] + p.b_r[i];
      }
    }
    Vec z(hd), r(hd);
    for (size_t i = 0; i < hd; ++i) {
      z[i] = sigmoid(pre_z[i]);
      r[i] = sigmoid(pre_r[i]);
    }
    Vec sr_gated(hd);
    for (size_t i = 0; i < hd; ++i) sr_gated[i] = s[i] * r[i];
    Vec pre_h = vec_mat(x, p.U_h);
    {
      Vec sh = vec_mat(sr_gated, p.W_h);
      for (size_t i = 0; i < hd; ++i) pre_h[i] += sh[i] + p.b_h[i];
    }
    Vec h(hd), s_next(hd);
    for (size_t i = 0; i < hd; ++i) {
      h[i] = std::tanh(pre_h[i]);
      s_next[i] = (1.0 - z[i]) * h[i] + z[i] * s[i];
    }
    if (!all_finite(s_next))
      throw std::runtime_error("gru: non-finite state at step " + std::to_string(t));
    cache.z.push_back(std::move(z));
    cache.r.push_back(std::move(r));
    cache.h.push_back(std::move(h));
    cache.states.push_back(s_next);
    s = std::move(s_next);
  }
  return cache;
}

/// States s_1..s_T only.
inline std::vector<Vec> gru_forward(const GruParams& p, const std::vector<Vec>& inputs,
                                    const Vec& s0) {
  return gru_forward_cache(p, inputs, s0).states;
}

struct GruGrads {
  Matrix U_z, U_r, U_h, W_z, W_r, W_h;
  Vec b_z, b_r, b_h;

  explicit GruGrads(const GruParams& p)
      : U_z(p.U_z.rows, p.U_z.cols),
        U_r(p.U_r.rows, p.U_r.cols),
        U_h(p.U_h.rows, p.U_h.cols),
        W_z(p.W_z.rows, p.W_z.cols),
        W_r(p.W_r.rows, p.W_r.cols),
        W_h(p.W_h.rows, p.W_h.cols),
        b_z(p.b_z.size(), 0.0),
        b_r(p.b_r.size(), 0.0),
        b_h(p.b_h.size(), 0.0) {}
};

/// Backpropagates through the full unrolled recurrence. d_states[t] is
/// dL/ds_{t+1} flowing in from above (the attention layer); gradients
/// accumulate into `g`, which the caller zero-initializes (or reuses across a
/// batch). When d_inputs is non-null it receives dL/dx_t (needed to chain
/// stacked layers; the bottom layer's frozen embeddings don't use it).
inline void gru_backward(const GruParams& p, const GruCache& cache,
                         const std::vector<Vec>& d_states, GruGrads& g,
                         std::vector<Vec>* d_inputs = nullptr) {
  const size_t T = cache.states.size();
  check_dim(d_states.size(), T, "gru_backward d_states");
  const size_t hd = static_cast<size_t>(p.hidden_dim);
  if (d_inputs) d_inputs->assign(T, Vec(static_cast<size_t>(p.input_dim), 0.0));

  Vec ds(hd, 0.0);  // dL/ds_t carried backwards
  for (size_t t = T; t-- > 0;) {
    for (size_t i = 0; i < hd; ++i) ds[i] += d_states[t][i];
    const Vec& s_prev = (t == 0) ? cache.s0 : cache.states[t - 1];
    const Vec& z = cache.z[t];
    const Vec& r = cache.r[t];
    const Vec& h = cache.h[t];
    const Vec& x = cache.inputs[t];

    Vec dpre_z(hd), dpre_h(hd), ds_prev(hd);
    for (size_t i = 0; i < hd; ++i) {
      const double dz = ds[i] * (s_prev[i] - h[i]);
      const double dh = ds[i] * (1.0 - z[i]);
      dpre_z[i] = dz * z[i] * (1.0 - z[i]);
      dpre_h[i] = dh * (1.0 - h[i] * h[i]);
      ds_prev[i] = ds[i] * z[i];
    }

    // h path: pre_h = x U_h + (s_prev . r) W_h + b_h
    Vec sr_gated(hd);
    for (size_t i = 0; i < hd; ++i) sr_gated[i] = s_prev[i] * r[i];
    add_outer(g.U_h, x, dpre_h);
    add_outer(g.W_h, sr_gated, dpre_h);
    axpy(g.b_h, 1.0, dpre_h);
    Vec d_sr = vec_mat_t(dpre_h, p.W_h);
    Vec dpre_r(hd);
    for (size_t i = 0; i < hd; ++i) {
      ds_prev[i] += d_sr[i] * r[i];
      dpre_r[i] = d_sr[i] * s_prev[i] * r[i] * (1.0 - r[i]);
    }

    // z and r gates
    add_outer(g.U_z, x, dpre_z);
    add_outer(g.W_z, s_prev, dpre_z);
    axpy(g.b_z, 1.0, dpre_z);
    add_outer(g.U_r, x, dpre_r);
    add_outer(g.W_r, s_prev, dpre_r);
    axpy(g.b_r, 1.0, dpre_r);

    if (d_inputs) {
      Vec& dx = (*d_inputs)[t];
      axpy(dx, 1.0, vec_mat_t(dpre_z, p.U_z));
      axpy(dx, 1.0, vec_mat_t(dpre_r, p.U_r));
      axpy(dx, 1.0, vec_mat_t(dpre_h, p.U_h));
    }

    Vec back_z = vec_mat_t(dpre_z, p.W_z);
    Vec back_r = vec_mat_t(dpre_r, p.W_r);
    for (size_t i = 0; i < hd; ++i) ds[i] = ds_prev[i] + back_z[i] + back_r[i];
  }
}

}  // namespace anspar
