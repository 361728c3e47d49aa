#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "anspar/pca.hpp"
#include "anspar/rng.hpp"

using anspar::Vec;

namespace {

double sq_dist(const Vec& a, const Vec& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

std::vector<Vec> random_points(anspar::Rng& rng, size_t n, size_t d) {
  std::vector<Vec> pts(n, Vec(d));
  for (auto& p : pts) {
    for (double& x : p) x = rng.uniform(-2.0, 2.0);
  }
  return pts;
}

}  // namespace

TEST_CASE("collinear points project onto the line with full variance") {
  std::vector<Vec> pts;
  for (int i = 0; i < 6; ++i) {
    double v = static_cast<double>(i);
    pts.push_back({v, v});
  }
  auto res = anspar::pca_reduce_full(pts, 1);
  // Total variance = trace of covariance; all of it lies along PC1.
  anspar::Matrix cov = anspar::sample_covariance(pts);
  double total_var = cov(0, 0) + cov(1, 1);
  double pc1_var = 0.0, mean = 0.0;
  for (const Vec& p : res.projected) mean += p[0];
  mean /= static_cast<double>(pts.size());
  for (const Vec& p : res.projected) pc1_var += (p[0] - mean) * (p[0] - mean);
  pc1_var /= static_cast<double>(pts.size() - 1);
  REQUIRE(pc1_var == Catch::Approx(total_var).margin(1e-9));
}

TEST_CASE("full-dimension projection preserves pairwise distances") {
  anspar::Rng rng(404);
  auto pts = random_points(rng, 12, 4);
  auto proj = anspar::pca_reduce(pts, 4);
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      REQUIRE(std::sqrt(sq_dist(proj[i], proj[j])) ==
              Catch::Approx(std::sqrt(sq_dist(pts[i], pts[j]))).margin(1e-9));
    }
  }
}

TEST_CASE("pca matches dense eigensolver on random 5-D data") {
  anspar::Rng rng(808);
  for (int trial = 0; trial < 5; ++trial) {
    auto pts = random_points(rng, 30, 5);
    auto res = anspar::pca_reduce_full(pts, 2);
    REQUIRE(res.eigenvalues[0] >= res.eigenvalues[1]);

    Eigen::MatrixXd X(pts.size(), 5);
    for (size_t i = 0; i < pts.size(); ++i) {
      for (size_t j = 0; j < 5; ++j) X(static_cast<long>(i), static_cast<long>(j)) = pts[i][j];
    }
    Eigen::RowVectorXd mean = X.colwise().mean();
    Eigen::MatrixXd C = X.rowwise() - mean;
    Eigen::MatrixXd cov = (C.adjoint() * C) / static_cast<double>(pts.size() - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    REQUIRE(solver.info() == Eigen::Success);
    // Solver returns ascending eigenvalues; ours are descending.
    for (int k = 0; k < 2; ++k) {
      double want = solver.eigenvalues()(4 - k);
      REQUIRE(res.eigenvalues[static_cast<size_t>(k)] == Catch::Approx(want).margin(1e-9));
      Eigen::VectorXd ev = solver.eigenvectors().col(4 - k);
      double dot = 0.0;
      for (size_t j = 0; j < 5; ++j) {
        dot += ev(static_cast<long>(j)) * res.directions[static_cast<size_t>(k)][j];
      }
      REQUIRE(std::fabs(dot) == Catch::Approx(1.0).margin(1e-9));  // same axis up to sign
    }
  }
}

TEST_CASE("projected components are uncorrelated") {
  anspar::Rng rng(99);
  auto pts = random_points(rng, 40, 6);
  auto proj = anspar::pca_reduce(pts, 3);
  anspar::Matrix cov = anspar::sample_covariance(proj);
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) {
      if (i != j) REQUIRE(std::fabs(cov(i, j)) < 1e-8);
    }
  }
}

TEST_CASE("sign convention and error cases") {
  anspar::Rng rng(123);
  auto pts = random_points(rng, 10, 3);
  auto res = anspar::pca_reduce_full(pts, 3);
  for (const Vec& dir : res.directions) {
    for (double c : dir) {
      if (std::fabs(c) > 1e-12) {
        REQUIRE(c > 0.0);
        break;
      }
    }
  }
  REQUIRE_THROWS(anspar::pca_reduce(pts, 4));   // out_dim > input dim
  REQUIRE_THROWS(anspar::pca_reduce(pts, 0));
  REQUIRE_THROWS(anspar::pca_reduce({}, 1));
  REQUIRE_THROWS(anspar::pca_reduce({Vec{1, 2, 3}}, 1));  // single sample
}
