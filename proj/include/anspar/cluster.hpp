// K-Means over feature vectors (k-means++ seeding, Lloyd iterations) plus the
// optional text/image feature fusion used by the "with image features" runs.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "anspar/matrix.hpp"
#include "anspar/rng.hpp"

namespace anspar {

struct ClusterModel {
  int k = 0;
  std::vector<Vec> centroids;
  double inertia = 0.0;
  uint64_t seed = 0;
  int iterations_run = 0;
};

struct FusionConfig {
  double image_weight = 0.5;  // in [0,1]
  bool normalize_each = true;
};

// Optional per-fit diagnostics; inertia_history holds the value after every
// assignment phase so the non-increase property is checkable per iteration.
struct KmeansTrace {
  std::vector<double> inertia_history;
  std::vector<int> assignments;
};

namespace detail {

inline size_t nearest_centroid(const std::vector<Vec>& centroids, const Vec& v) {
  size_t best = 0;
  double best_d = squared_distance(centroids[0], v);
  for (size_t c = 1; c < centroids.size(); ++c) {
    double d = squared_distance(centroids[c], v);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

}  // namespace detail

namespace detail {

inline ClusterModel kmeans_single(const std::vector<Vec>& vectors, int k, uint64_t seed,
                                  Rng& rng, int max_iter, KmeansTrace* trace) {
  size_t dim = vectors[0].size();
  size_t n = vectors.size();

  // k-means++ seeding: first centroid uniform, then proportional to squared
  // distance from the nearest already-chosen centroid.
  ClusterModel model;
  model.k = k;
  model.seed = seed;
  model.centroids.push_back(vectors[rng.below(n)]);
  std::vector<double> d2(n);
  while (model.centroids.size() < static_cast<size_t>(k)) {
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) {
      d2[i] = squared_distance(vectors[i], model.centroids[0]);
      for (size_t c = 1; c < model.centroids.size(); ++c) {
        d2[i] = std::min(d2[i], squared_distance(vectors[i], model.centroids[c]));
      }
      total += d2[i];
    }
    double r = rng.next_double() * total;
    size_t pick = n - 1;
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
      acc += d2[i];
      if (r < acc) {
        pick = i;
        break;
      }
    }
    model.centroids.push_back(vectors[pick]);
  }

  std::vector<int> assign(n, -1);
  std::vector<int> prev(n, -2);
  for (int iter = 0; iter < max_iter; ++iter) {
    double inertia = 0.0;
    for (size_t i = 0; i < n; ++i) {
      assign[i] = static_cast<int>(detail::nearest_centroid(model.centroids, vectors[i]));
      inertia += squared_distance(model.centroids[static_cast<size_t>(assign[i])], vectors[i]);
    }
    if (trace) trace->inertia_history.push_back(inertia);
    model.inertia = inertia;
    model.iterations_run = iter + 1;
    if (assign == prev) break;
    prev = assign;

    std::vector<Vec> sums(static_cast<size_t>(k), Vec(dim, 0.0));
    std::vector<size_t> sizes(static_cast<size_t>(k), 0);
    for (size_t i = 0; i < n; ++i) {
      sizes[static_cast<size_t>(assign[i])]++;
      for (size_t d = 0; d < dim; ++d) sums[static_cast<size_t>(assign[i])][d] += vectors[i][d];
    }
    for (int c = 0; c < k; ++c) {
      if (sizes[static_cast<size_t>(c)] > 0) {
        for (size_t d = 0; d < dim; ++d) {
          model.centroids[static_cast<size_t>(c)][d] =
              sums[static_cast<size_t>(c)][d] / static_cast<double>(sizes[static_cast<size_t>(c)]);
        }
      } else {
        // Re-seed an emptied cluster at the point farthest from its stale
        // centroid; ties break toward the lowest point index.
        size_t far = 0;
        double far_d = -1.0;
        for (size_t i = 0; i < n; ++i) {
          double d = squared_distance(model.centroids[static_cast<size_t>(c)], vectors[i]);
          if (d > far_d) {
            far_d = d;
            far = i;
          }
        }
        model.centroids[static_cast<size_t>(c)] = vectors[far];
      }
    }
  }
  if (trace) trace->assignments = assign;
  return model;
}

}  // namespace detail

// Lloyd with k-means++ seeding, repeated n_init times from one seeded stream;
// the lowest-inertia run wins (first such run on ties).
inline ClusterModel kmeans_fit(const std::vector<Vec>& vectors, int k, uint64_t seed,
                               int max_iter = 300, KmeansTrace* trace = nullptr,
                               int n_init = 10) {
  if (k < 1) throw std::runtime_error("kmeans_fit: k must be >= 1");
  if (vectors.empty()) throw std::runtime_error("kmeans_fit: no input vectors");
  size_t dim = vectors[0].size();
  for (const Vec& v : vectors) check_dim(v.size(), dim, "kmeans_fit");
  std::set<Vec> distinct(vectors.begin(), vectors.end());
  if (distinct.size() < static_cast<size_t>(k)) {
    throw std::runtime_error("kmeans_fit: need at least k distinct vectors (" +
                             std::to_string(distinct.size()) + " < " + std::to_string(k) + ")");
  }
  Rng rng(seed);
  ClusterModel best;
  KmeansTrace best_trace;
  bool have = false;
  for (int run = 0; run < std::max(1, n_init); ++run) {
    KmeansTrace t;
    ClusterModel m = detail::kmeans_single(vectors, k, seed, rng, max_iter,
                                           trace ? &t : nullptr);
    if (!have || m.inertia < best.inertia) {
      best = m;
      best_trace = std::move(t);
      have = true;
    }
  }
  if (trace) *trace = std::move(best_trace);
  return best;
}

inline size_t kmeans_assign(const ClusterModel& model, const Vec& v) {
  if (model.centroids.empty()) throw std::runtime_error("kmeans_assign: empty model");
  check_dim(v.size(), model.centroids[0].size(), "kmeans_assign");
  return detail::nearest_centroid(model.centroids, v);
}

inline Vec fuse_features(const Vec& text_vec, const Vec& image_vec, const FusionConfig& cfg) {
  if (cfg.image_weight < 0.0 || cfg.image_weight > 1.0) {
    throw std::runtime_error("fuse_features: image_weight outside [0,1]");
  }
  auto scaled = [&](const Vec& v, double w) {
    Vec out = v;
    if (cfg.normalize_each) {
      double norm = l2_norm(out);
      if (norm > 0.0) {
        for (double& x : out) x /= norm;
      }
    }
    for (double& x : out) x *= w;
    return out;
  };
  Vec text = scaled(text_vec, 1.0 - cfg.image_weight);
  Vec image = scaled(image_vec, cfg.image_weight);
  text.insert(text.end(), image.begin(), image.end());
  return text;
}

inline void save_cluster_model(const ClusterModel& model, const std::string& path,
                               const nlohmann::json& extra = {}) {
  nlohmann::json j;
  j["k"] = model.k;
  j["dim"] = model.centroids.empty() ? 0 : model.centroids[0].size();
  j["centroids"] = model.centroids;
  j["seed"] = model.seed;
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

inline ClusterModel load_cluster_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cluster model: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  ClusterModel model;
  model.k = j.at("k").get<int>();
  model.seed = j.at("seed").get<uint64_t>();
  model.centroids = j.at("centroids").get<std::vector<Vec>>();
  size_t dim = j.at("dim").get<size_t>();
  if (model.centroids.size() != static_cast<size_t>(model.k)) {
    throw std::runtime_error("cluster model: centroid count != k");
  }
  for (const Vec& c : model.centroids) check_dim(c.size(), dim, "load_cluster_model");
  return model;
}

}  // namespace anspar
