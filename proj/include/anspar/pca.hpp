// PCA for the 2-D cluster figures: explicit sample covariance plus a cyclic
// Jacobi eigensolver (dims stay small, so no iterative methods needed).
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "anspar/matrix.hpp"

namespace anspar {

struct EigenDecomposition {
  Vec values;                 // descending
  std::vector<Vec> vectors;   // vectors[k] pairs with values[k], unit norm
};

// Cyclic Jacobi rotations on a symmetric matrix.
inline EigenDecomposition jacobi_eigen(const Matrix& sym, int max_sweeps = 100,
                                       double tol = 1e-12) {
  if (sym.rows != sym.cols) throw std::runtime_error("jacobi_eigen: matrix not square");
  size_t n = sym.rows;
  Matrix a = sym;
  Matrix v(n, n);
  for (size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (size_t p = 0; p < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (off < tol * tol) break;
    for (size_t p = 0; p < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a(p, q)) < 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (size_t k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (size_t k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (size_t k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  EigenDecomposition out;
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return a(x, x) > a(y, y); });
  for (size_t k : order) {
    out.values.push_back(a(k, k));
    Vec col(n);
    for (size_t i = 0; i < n; ++i) col[i] = v(i, k);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

// Sample covariance (n-1 denominator) of row vectors.
inline Matrix sample_covariance(const std::vector<Vec>& rows) {
  if (rows.size() < 2) throw std::runtime_error("sample_covariance: need >= 2 samples");
  size_t n = rows.size(), d = rows[0].size();
  Vec mean(d, 0.0);
  for (const Vec& r : rows) {
    check_dim(r.size(), d, "sample_covariance");
    for (size_t j = 0; j < d; ++j) mean[j] += r[j];
  }
  for (double& m : mean) m /= static_cast<double>(n);
  Matrix cov(d, d);
  for (const Vec& r : rows) {
    for (size_t i = 0; i < d; ++i) {
      double di = r[i] - mean[i];
      for (size_t j = i; j < d; ++j) cov(i, j) += di * (r[j] - mean[j]);
    }
  }
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = i; j < d; ++j) {
      cov(i, j) /= static_cast<double>(n - 1);
      cov(j, i) = cov(i, j);
    }
  }
  return cov;
}

struct PcaResult {
  std::vector<Vec> projected;   // centered data onto top out_dim directions
  std::vector<Vec> directions;  // principal directions, unit norm
  Vec eigenvalues;              // descending, one per direction
  Vec mean;
};

inline PcaResult pca_reduce_full(const std::vector<Vec>& vectors, size_t out_dim) {
  if (vectors.empty()) throw std::runtime_error("pca_reduce: no input vectors");
  size_t d = vectors[0].size();
  if (out_dim > d) {
    throw std::runtime_error("pca_reduce: out_dim " + std::to_string(out_dim) +
                             " exceeds input dim " + std::to_string(d));
  }
  if (out_dim == 0) throw std::runtime_error("pca_reduce: out_dim must be >= 1");
  if (vectors.size() < 2) throw std::runtime_error("pca_reduce: need >= 2 samples");

  Matrix cov = sample_covariance(vectors);
  EigenDecomposition eig = jacobi_eigen(cov);

  PcaResult res;
  res.mean.assign(d, 0.0);
  for (const Vec& v : vectors) {
    for (size_t j = 0; j < d; ++j) res.mean[j] += v[j];
  }
  for (double& m : res.mean) m /= static_cast<double>(vectors.size());

  for (size_t k = 0; k < out_dim; ++k) {
    Vec dir = eig.vectors[k];
    // Deterministic orientation: first nonzero component positive.
    for (double c : dir) {
      if (c > 1e-12) break;
      if (c < -1e-12) {
        for (double& x : dir) x = -x;
        break;
      }
    }
    res.directions.push_back(std::move(dir));
    res.eigenvalues.push_back(eig.values[k]);
  }

  for (const Vec& v : vectors) {
    Vec p(out_dim, 0.0);
    for (size_t k = 0; k < out_dim; ++k) {
      for (size_t j = 0; j < d; ++j) p[k] += (v[j] - res.mean[j]) * res.directions[k][j];
    }
    res.projected.push_back(std::move(p));
  }
  return res;
}

inline std::vector<Vec> pca_reduce(const std::vector<Vec>& vectors, size_t out_dim) {
  return pca_reduce_full(vectors, out_dim).projected;
}

}  // namespace anspar
