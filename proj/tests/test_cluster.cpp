#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <vector>

#include "anspar/cluster.hpp"
#include "anspar/rng.hpp"
#include "oracles.hpp"

using anspar::ClusterModel;
using anspar::FusionConfig;
using anspar::Vec;

namespace {

std::vector<Vec> random_points(anspar::Rng& rng, size_t n, size_t d) {
  std::vector<Vec> pts(n, Vec(d));
  for (auto& p : pts) {
    for (double& x : p) x = rng.uniform(-5.0, 5.0);
  }
  return pts;
}

}  // namespace

TEST_CASE("k=1 centroid is the mean") {
  std::vector<Vec> pts = {{1, 2}, {3, 4}, {5, 0}};
  ClusterModel m = anspar::kmeans_fit(pts, 1, 7);
  REQUIRE(m.centroids.size() == 1);
  REQUIRE(m.centroids[0][0] == Catch::Approx(3.0).margin(1e-12));
  REQUIRE(m.centroids[0][1] == Catch::Approx(2.0).margin(1e-12));
  double want = 0.0;
  for (const Vec& p : pts) want += oracle::kmeans_bruteforce({p}, 1).inertia;
  (void)want;
  double inertia = 0.0;
  for (const Vec& p : pts) inertia += anspar::squared_distance(p, m.centroids[0]);
  REQUIRE(m.inertia == Catch::Approx(inertia).margin(1e-12));
}

TEST_CASE("four-point k=2 instance reaches the known optimum") {
  std::vector<Vec> pts = {{0, 0}, {0, 1}, {10, 0}, {10, 1}};
  ClusterModel m = anspar::kmeans_fit(pts, 2, 3);
  REQUIRE(m.inertia == Catch::Approx(1.0).margin(1e-12));
  std::set<Vec> got(m.centroids.begin(), m.centroids.end());
  std::set<Vec> want = {{0, 0.5}, {10, 0.5}};
  REQUIRE(got == want);
  auto best = oracle::kmeans_bruteforce(pts, 2);
  REQUIRE(m.inertia == Catch::Approx(best.inertia).margin(1e-12));
}

TEST_CASE("kmeans matches exhaustive optimum on tiny random instances") {
  anspar::Rng rng(2025);
  int optimal_hits = 0;
  const int trials = 20;
  for (int trial = 0; trial < trials; ++trial) {
    auto pts = random_points(rng, 7, 2);
    int k = 2 + static_cast<int>(rng.below(2));
    ClusterModel m = anspar::kmeans_fit(pts, k, 1000 + static_cast<uint64_t>(trial));
    auto best = oracle::kmeans_bruteforce(pts, k);
    REQUIRE(m.inertia >= best.inertia - 1e-9);  // can never beat the optimum
    if (m.inertia <= best.inertia + 1e-9) ++optimal_hits;
  }
  // k-means++ on 7 points should land the global optimum nearly always.
  REQUIRE(optimal_hits >= trials - 3);
}

TEST_CASE("inertia history is non-increasing") {
  anspar::Rng rng(5);
  auto pts = random_points(rng, 60, 3);
  anspar::KmeansTrace trace;
  ClusterModel m = anspar::kmeans_fit(pts, 5, 17, 300, &trace);
  REQUIRE(trace.inertia_history.size() >= 2);
  for (size_t i = 1; i < trace.inertia_history.size(); ++i) {
    REQUIRE(trace.inertia_history[i] <= trace.inertia_history[i - 1] + 1e-9);
  }
  REQUIRE(m.iterations_run == static_cast<int>(trace.inertia_history.size()));

  // At convergence: every point on its nearest centroid, every centroid the
  // mean of its members.
  size_t dim = 3;
  std::vector<Vec> sums(static_cast<size_t>(m.k), Vec(dim, 0.0));
  std::vector<size_t> sizes(static_cast<size_t>(m.k), 0);
  for (size_t i = 0; i < pts.size(); ++i) {
    size_t a = anspar::kmeans_assign(m, pts[i]);
    REQUIRE(static_cast<int>(a) == trace.assignments[i]);
    sizes[a]++;
    for (size_t d = 0; d < dim; ++d) sums[a][d] += pts[i][d];
  }
  for (int c = 0; c < m.k; ++c) {
    REQUIRE(sizes[static_cast<size_t>(c)] > 0);
    for (size_t d = 0; d < dim; ++d) {
      REQUIRE(m.centroids[static_cast<size_t>(c)][d] ==
              Catch::Approx(sums[static_cast<size_t>(c)][d] /
                            static_cast<double>(sizes[static_cast<size_t>(c)]))
                  .margin(1e-9));
    }
  }
}

TEST_CASE("k equal to number of distinct points gives zero inertia") {
  std::vector<Vec> pts = {{0, 0}, {1, 1}, {2, 0}, {5, 5}};
  ClusterModel m = anspar::kmeans_fit(pts, 4, 9);
  REQUIRE(m.inertia == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("determinism and error cases") {
  anspar::Rng rng(8);
  auto pts = random_points(rng, 30, 4);
  ClusterModel a = anspar::kmeans_fit(pts, 3, 42);
  ClusterModel b = anspar::kmeans_fit(pts, 3, 42);
  REQUIRE(a.inertia == b.inertia);
  REQUIRE(a.iterations_run == b.iterations_run);
  for (int c = 0; c < 3; ++c) {
    REQUIRE(a.centroids[static_cast<size_t>(c)] == b.centroids[static_cast<size_t>(c)]);
  }

  std::vector<Vec> dupes = {{1, 1}, {1, 1}, {2, 2}};
  REQUIRE_THROWS(anspar::kmeans_fit(dupes, 3, 1));  // only 2 distinct
  REQUIRE_THROWS(anspar::kmeans_fit({}, 1, 1));
  REQUIRE_THROWS(anspar::kmeans_fit(dupes, 0, 1));
}

TEST_CASE("assignment uses nearest centroid with low-index ties") {
  ClusterModel m;
  m.k = 3;
  m.centroids = {{0, 0}, {4, 0}, {10, 0.5}};
  REQUIRE(anspar::kmeans_assign(m, {10, 0.5}) == 2);
  REQUIRE(anspar::kmeans_assign(m, {2, 0}) == 0);  // equidistant to 0 and 1
  REQUIRE(anspar::kmeans_assign(m, {9, 0}) == 2);
  REQUIRE_THROWS(anspar::kmeans_assign(m, {1, 2, 3}));
}

TEST_CASE("feature fusion") {
  FusionConfig cfg;
  cfg.image_weight = 0.5;
  cfg.normalize_each = true;
  Vec fused = anspar::fuse_features({3, 4}, {0, 0, 5}, cfg);
  REQUIRE(fused.size() == 5);
  REQUIRE(fused[0] == Catch::Approx(0.3).margin(1e-12));
  REQUIRE(fused[1] == Catch::Approx(0.4).margin(1e-12));
  REQUIRE(fused[2] == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(fused[3] == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(fused[4] == Catch::Approx(0.5).margin(1e-12));

  FusionConfig w0;
  w0.image_weight = 0.0;
  Vec text_only = anspar::fuse_features({3, 4}, {1, 2}, w0);
  REQUIRE(text_only[2] == 0.0);
  REQUIRE(text_only[3] == 0.0);

  FusionConfig w1;
  w1.image_weight = 1.0;
  w1.normalize_each = true;
  Vec img_only = anspar::fuse_features({3, 4}, {0, 1}, w1);
  REQUIRE(img_only[0] == 0.0);
  REQUIRE(img_only[1] == 0.0);
  REQUIRE(img_only[2] == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(img_only[3] == Catch::Approx(1.0).margin(1e-12));

  // Zero vector under normalization stays zero rather than erroring.
  Vec zeros = anspar::fuse_features({0, 0}, {1, 0}, cfg);
  REQUIRE(zeros[0] == 0.0);
  REQUIRE(zeros[1] == 0.0);

  FusionConfig bad;
  bad.image_weight = 1.5;
  REQUIRE_THROWS(anspar::fuse_features({1}, {1}, bad));
}

TEST_CASE("cluster model persists as json") {
  std::vector<Vec> pts = {{0, 0}, {0, 1}, {10, 0}, {10, 1}};
  ClusterModel m = anspar::kmeans_fit(pts, 2, 3);
  std::string path = "/tmp/anspar_cluster.json";
  anspar::save_cluster_model(m, path, {{"config_hash", "deadbeef"}});
  ClusterModel back = anspar::load_cluster_model(path);
  REQUIRE(back.k == 2);
  REQUIRE(back.seed == 3);
  REQUIRE(back.centroids == m.centroids);
  std::remove(path.c_str());
}
