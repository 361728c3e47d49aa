#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "anspar/rng.hpp"

namespace anspar {

using Vec = std::vector<double>;

// Dense row-major matrix. Row-vector convention throughout: x * M maps a
// 1 x rows vector to 1 x cols.
struct Matrix {
  size_t rows = 0;
  size_t cols = 0;
  Vec data;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(size_t r, size_t c) { return data[r * cols + c]; }
  double operator()(size_t r, size_t c) const { return data[r * cols + c]; }

  void fill_uniform(Rng& rng, double lo, double hi) {
    for (double& v : data) v = rng.uniform(lo, hi);
  }

  void zero() { data.assign(data.size(), 0.0); }
};

inline void check_dim(size_t got, size_t want, const char* what) {
  if (got != want) {
    throw std::runtime_error(std::string(what) + ": dimension mismatch, got " +
                             std::to_string(got) + " want " + std::to_string(want));
  }
}

// y = x * M  (x: 1 x rows, y: 1 x cols)
inline Vec vec_mat(const Vec& x, const Matrix& m) {
  check_dim(x.size(), m.rows, "vec_mat");
  Vec y(m.cols, 0.0);
  for (size_t r = 0; r < m.rows; ++r) {
    const double xv = x[r];
    if (xv == 0.0) continue;
    const double* row = &m.data[r * m.cols];
    for (size_t c = 0; c < m.cols; ++c) y[c] += xv * row[c];
  }
  return y;
}

// y = x * M^T  (x: 1 x cols, y: 1 x rows)
inline Vec vec_mat_t(const Vec& x, const Matrix& m) {
  check_dim(x.size(), m.cols, "vec_mat_t");
  Vec y(m.rows, 0.0);
  for (size_t r = 0; r < m.rows; ++r) {
    const double* row = &m.data[r * m.cols];
    double acc = 0.0;
    for (size_t c = 0; c < m.cols; ++c) acc += x[c] * row[c];
    y[r] = acc;
  }
  return y;
}

// M += outer(a, b): M(r, c) += a[r] * b[c]
inline void add_outer(Matrix& m, const Vec& a, const Vec& b) {
  check_dim(a.size(), m.rows, "add_outer rows");
  check_dim(b.size(), m.cols, "add_outer cols");
  for (size_t r = 0; r < m.rows; ++r) {
    double* row = &m.data[r * m.cols];
    const double av = a[r];
    if (av == 0.0) continue;
    for (size_t c = 0; c < m.cols; ++c) row[c] += av * b[c];
  }
}

inline double dot(const Vec& a, const Vec& b) {
  check_dim(a.size(), b.size(), "dot");
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline void axpy(Vec& y, double a, const Vec& x) {
  check_dim(x.size(), y.size(), "axpy");
  for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

inline double l2_norm(const Vec& v) { return std::sqrt(dot(v, v)); }

inline double squared_distance(const Vec& a, const Vec& b) {
  check_dim(a.size(), b.size(), "squared_distance");
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

// Numerically stable softmax (max subtraction).
inline Vec softmax(const Vec& logits) {
  double mx = logits[0];
  for (double v : logits) mx = std::max(mx, v);
  Vec p(logits.size());
  double z = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - mx);
    z += p[i];
  }
  for (double& v : p) v /= z;
  return p;
}

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline bool all_finite(const Vec& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace anspar
