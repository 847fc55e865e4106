#pragma once

#include <vector>

#include "jts/errors.hpp"

namespace jts {

// Dense row-major matrix, just big enough for generator images and the
// small eigen/singular solves the potentials need.
struct Matrix {
  int n = 0;
  std::vector<double> a;

  Matrix() = default;
  explicit Matrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static Matrix identity(int dim);
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;

  double max_abs() const;
  void scale(double f);

  // Gauss-Jordan with partial pivoting; throws ValidationError when singular.
  Matrix inverse() const;

  // Largest singular value by two-sided power iteration on (A, A^T),
  // relative tolerance 1e-12.
  double sigma1(int max_iter = 20000) const;
  double sigma2() const;  // second singular value, for domination spot-checks
};

}  // namespace jts
