// Independent reference implementations used only by tests. Deliberately
// naive: map-based counting, scalar loops, exhaustive enumeration. These must
// not share code with the library paths they check.
#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace oracle {

// --- n-gram / BLEU ----------------------------------------------------------

using Tokens = std::vector<std::string>;
using NgramCounts = std::map<std::vector<std::string>, long>;

inline NgramCounts count_ngrams(const Tokens& t, size_t n) {
  NgramCounts c;
  if (t.size() < n) return c;
  for (size_t i = 0; i + n <= t.size(); ++i) {
    c[std::vector<std::string>(t.begin() + i, t.begin() + i + n)] += 1;
  }
  return c;
}

struct BleuStats {
  std::vector<double> matched;  // clipped matches per n (index 0 = unigram)
  std::vector<double> total;    // hypothesis n-gram counts per n
  long hyp_len = 0;
  long ref_len = 0;
};

inline BleuStats bleu_stats(const Tokens& hyp, const Tokens& ref, int max_n) {
  BleuStats s;
  s.hyp_len = static_cast<long>(hyp.size());
  s.ref_len = static_cast<long>(ref.size());
  for (int n = 1; n <= max_n; ++n) {
    NgramCounts h = count_ngrams(hyp, static_cast<size_t>(n));
    NgramCounts r = count_ngrams(ref, static_cast<size_t>(n));
    double matched = 0, total = 0;
    for (const auto& [gram, cnt] : h) {
      total += static_cast<double>(cnt);
      auto it = r.find(gram);
      if (it != r.end()) matched += static_cast<double>(std::min(cnt, it->second));
    }
    s.matched.push_back(matched);
    s.total.push_back(total);
  }
  return s;
}

// Computes BLEU from pooled stats; epsilon smoothing substitutes a tiny match
// count for zero-match orders n >= 2 when smoothing is on.
inline double bleu_from_stats(const BleuStats& s, int max_n, bool smooth,
                              double eps = 1e-9) {
  if (s.hyp_len == 0) return 0.0;
  double log_p = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    double m = s.matched[static_cast<size_t>(n - 1)];
    double t = s.total[static_cast<size_t>(n - 1)];
    if (m == 0.0) {
      if (n >= 2 && smooth) {
        m = eps;
        if (t == 0.0) t = 1.0;
      } else {
        return 0.0;
      }
    }
    log_p += std::log(m / t);
  }
  double bp = 1.0;
  if (s.hyp_len < s.ref_len) {
    bp = std::exp(1.0 - static_cast<double>(s.ref_len) / static_cast<double>(s.hyp_len));
  }
  return bp * std::exp(log_p / max_n);
}

inline double bleu_bruteforce(const Tokens& hyp, const Tokens& ref, int max_n, bool smooth) {
  return bleu_from_stats(bleu_stats(hyp, ref, max_n), max_n, smooth);
}

inline double corpus_bleu_bruteforce(const std::vector<std::pair<Tokens, Tokens>>& pairs,
                                     int max_n, bool smooth) {
  BleuStats pooled;
  pooled.matched.assign(static_cast<size_t>(max_n), 0.0);
  pooled.total.assign(static_cast<size_t>(max_n), 0.0);
  for (const auto& [hyp, ref] : pairs) {
    BleuStats s = bleu_stats(hyp, ref, max_n);
    for (int n = 0; n < max_n; ++n) {
      pooled.matched[static_cast<size_t>(n)] += s.matched[static_cast<size_t>(n)];
      pooled.total[static_cast<size_t>(n)] += s.total[static_cast<size_t>(n)];
    }
    pooled.hyp_len += s.hyp_len;
    pooled.ref_len += s.ref_len;
  }
  return bleu_from_stats(pooled, max_n, smooth);
}

// --- GRU scalar-loop evaluator (straight-line form of the gate equations) ----

struct ScalarGru {
  // Row-major E x H input matrices and H x H recurrent matrices.
  std::vector<double> Uz, Ur, Uh, Wz, Wr, Wh, bz, br, bh;
  size_t E = 0, H = 0;
};

inline std::vector<std::vector<double>> gru_scalar_forward(
    const ScalarGru& g, const std::vector<std::vector<double>>& xs,
    const std::vector<double>& s0) {
  std::vector<std::vector<double>> states;
  std::vector<double> s = s0;
  for (const auto& x : xs) {
    std::vector<double> z(g.H), r(g.H), h(g.H), sn(g.H);
    for (size_t j = 0; j < g.H; ++j) {
      double az = g.bz.empty() ? 0.0 : g.bz[j];
      double ar = g.br.empty() ? 0.0 : g.br[j];
      for (size_t i = 0; i < g.E; ++i) {
        az += x[i] * g.Uz[i * g.H + j];
        ar += x[i] * g.Ur[i * g.H + j];
      }
      for (size_t i = 0; i < g.H; ++i) {
        az += s[i] * g.Wz[i * g.H + j];
        ar += s[i] * g.Wr[i * g.H + j];
      }
      z[j] = 1.0 / (1.0 + std::exp(-az));
      r[j] = 1.0 / (1.0 + std::exp(-ar));
    }
    for (size_t j = 0; j < g.H; ++j) {
      double ah = g.bh.empty() ? 0.0 : g.bh[j];
      for (size_t i = 0; i < g.E; ++i) ah += x[i] * g.Uh[i * g.H + j];
      for (size_t i = 0; i < g.H; ++i) ah += (s[i] * r[i]) * g.Wh[i * g.H + j];
      h[j] = std::tanh(ah);
    }
    for (size_t j = 0; j < g.H; ++j) sn[j] = (1.0 - z[j]) * h[j] + z[j] * s[j];
    states.push_back(sn);
    s = sn;
  }
  return states;
}

// --- scaled dot-product attention, direct evaluation -------------------------

struct ScalarAttn {
  std::vector<double> key_proj, value_proj;  // H x Dk row-major
  std::vector<double> query;                 // Dk
  size_t H = 0, Dk = 0;
};

inline void attend_scalar(const ScalarAttn& a,
                          const std::vector<std::vector<double>>& states,
                          std::vector<double>& weights, std::vector<double>& context) {
  size_t T = states.size();
  std::vector<double> logits(T);
  std::vector<std::vector<double>> values(T, std::vector<double>(a.Dk, 0.0));
  for (size_t t = 0; t < T; ++t) {
    std::vector<double> k(a.Dk, 0.0);
    for (size_t i = 0; i < a.H; ++i) {
      for (size_t j = 0; j < a.Dk; ++j) {
        k[j] += states[t][i] * a.key_proj[i * a.Dk + j];
        values[t][j] += states[t][i] * a.value_proj[i * a.Dk + j];
      }
    }
    double dot = 0.0;
    for (size_t j = 0; j < a.Dk; ++j) dot += a.query[j] * k[j];
    logits[t] = dot / std::sqrt(static_cast<double>(a.Dk));
  }
  double mx = logits[0];
  for (double v : logits) mx = std::max(mx, v);
  weights.assign(T, 0.0);
  double z = 0.0;
  for (size_t t = 0; t < T; ++t) {
    weights[t] = std::exp(logits[t] - mx);
    z += weights[t];
  }
  for (double& w : weights) w /= z;
  context.assign(a.Dk, 0.0);
  for (size_t t = 0; t < T; ++t) {
    for (size_t j = 0; j < a.Dk; ++j) context[j] += weights[t] * values[t][j];
  }
}

// --- GloVe co-occurrence, brute force over all (center, context) pairs -------

inline std::map<std::pair<std::string, std::string>, double> cooccur_bruteforce(
    const std::vector<Tokens>& corpus, int window) {
  std::map<std::pair<std::string, std::string>, double> counts;
  for (const Tokens& sent : corpus) {
    for (size_t i = 0; i < sent.size(); ++i) {
      for (size_t j = 0; j < sent.size(); ++j) {
        if (i == j) continue;
        long d = std::labs(static_cast<long>(i) - static_cast<long>(j));
        if (d <= window) {
          counts[{sent[i], sent[j]}] += 1.0 / static_cast<double>(d);
        }
      }
    }
  }
  return counts;
}

// --- exhaustive k-means optimum (tiny instances) ------------------------------

struct BestPartition {
  std::vector<int> assignment;
  std::vector<std::vector<double>> centroids;
  double inertia = 0;
};

inline BestPartition kmeans_bruteforce(const std::vector<std::vector<double>>& pts, int k) {
  size_t n = pts.size();
  size_t dim = pts[0].size();
  BestPartition best;
  best.inertia = 1e300;
  std::vector<int> assign(n, 0);
  size_t total = 1;
  for (size_t i = 0; i < n; ++i) total *= static_cast<size_t>(k);
  for (size_t code = 0; code < total; ++code) {
    size_t c = code;
    for (size_t i = 0; i < n; ++i) {
      assign[i] = static_cast<int>(c % static_cast<size_t>(k));
      c /= static_cast<size_t>(k);
    }
    std::vector<std::vector<double>> cents(static_cast<size_t>(k),
                                           std::vector<double>(dim, 0.0));
    std::vector<int> sizes(static_cast<size_t>(k), 0);
    for (size_t i = 0; i < n; ++i) {
      sizes[static_cast<size_t>(assign[i])]++;
      for (size_t d = 0; d < dim; ++d) cents[static_cast<size_t>(assign[i])][d] += pts[i][d];
    }
    bool empty = false;
    for (int s : sizes) empty = empty || (s == 0);
    if (empty) continue;
    for (int cc = 0; cc < k; ++cc) {
      for (size_t d = 0; d < dim; ++d) cents[static_cast<size_t>(cc)][d] /= sizes[static_cast<size_t>(cc)];
    }
    double inertia = 0;
    for (size_t i = 0; i < n; ++i) {
      for (size_t d = 0; d < dim; ++d) {
        double diff = pts[i][d] - cents[static_cast<size_t>(assign[i])][d];
        inertia += diff * diff;
      }
    }
    if (inertia < best.inertia) {
      best.inertia = inertia;
      best.assignment = assign;
      best.centroids = cents;
    }
  }
  return best;
}

// --- central finite differences ------------------------------------------------

// Central difference d loss / d p[i] for every entry of p.
inline std::vector<double> finite_diff(std::vector<double>& p,
                                       const std::function<double()>& loss,
                                       double step = 1e-5) {
  std::vector<double> grad(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    double keep = p[i];
    p[i] = keep + step;
    double up = loss();
    p[i] = keep - step;
    double down = loss();
    p[i] = keep;
    grad[i] = (up - down) / (2.0 * step);
  }
  return grad;
}

// --- entropy at extended precision ----------------------------------------------

inline double entropy_longdouble(const std::vector<double>& p) {
  long double acc = 0.0L;
  for (double v : p) {
    if (v > 0.0) acc -= static_cast<long double>(v) * std::log(static_cast<long double>(v));
  }
  return static_cast<double>(acc);
}

}  // namespace oracle
