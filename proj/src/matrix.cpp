#include "jts/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace jts {

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (n != o.n) throw ValidationError("matrix: dimension mismatch in product");
  Matrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double aik = at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
  return r;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::fabs(v));
  return m;
}

void Matrix::scale(double f) {
  for (double& v : a) v *= f;
}

Matrix Matrix::inverse() const {
  Matrix m = *this;
  Matrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(m.at(r, col)) > std::fabs(m.at(pivot, col))) pivot = r;
    if (std::fabs(m.at(pivot, col)) < 1e-300) {
      throw ValidationError("matrix: singular generator image, cannot invert");
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    double d = m.at(col, col);
    for (int j = 0; j < n; ++j) {
      m.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = m.at(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= f * m.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void matvec(const Matrix& m, const std::vector<double>& x, std::vector<double>& y) {
  for (int i = 0; i < m.n; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.n; ++j) s += m.at(i, j) * x[j];
    y[i] = s;
  }
}

// Alternate y = A x, x = A^T y; the norm ratio converges to sigma1.
double top_singular(const Matrix& m, const std::vector<double>& seed, int max_iter) {
  Matrix mt = m.transpose();
  std::vector<double> x = seed, y(m.n);
  double nx = norm2(x);
  for (double& v : x) v /= nx;
  double sigma = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    matvec(m, x, y);
    double ny = norm2(y);
    if (ny == 0.0) return 0.0;
    for (double& v : y) v /= ny;
    matvec(mt, y, x);
    double est = norm2(x);
    if (est == 0.0) return 0.0;
    for (double& v : x) v /= est;
    if (it > 2 && std::fabs(est - sigma) <= 1e-12 * est) return est;
    sigma = est;
  }
  return sigma;
}

}  // namespace

double Matrix::sigma1(int max_iter) const {
  std::vector<double> seed(n);
  for (int i = 0; i < n; ++i) seed[i] = 1.0 + 0.37 * i;  // fixed, deterministic
  return top_singular(*this, seed, max_iter);
}

double Matrix::sigma2() const {
  double s1 = sigma1();
  if (s1 == 0.0) return 0.0;
  // Deflate: sigma2(A)^2 = second eigenvalue of A^T A; estimate via the
  // Frobenius complement for n==2, otherwise power iteration on the deflated
  // Gram matrix.
  if (n == 2) {
    double det = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    return std::fabs(det) / s1;
  }
  Matrix g = transpose() * (*this);
  // Power iteration for the top eigenvector of G, then deflate once.
  std::vector<double> v(n, 1.0), tmp(n);
  for (int it = 0; it < 5000; ++it) {
    matvec(g, v, tmp);
    double nv = norm2(tmp);
    if (nv == 0.0) return 0.0;
    for (int i = 0; i < n; ++i) v[i] = tmp[i] / nv;
  }
  double lam = s1 * s1;
  Matrix d = g;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.at(i, j) -= lam * v[i] * v[j];
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = 1.0 + 0.11 * i;
  double lam2 = 0.0;
  for (int it = 0; it < 5000; ++it) {
    matvec(d, w, tmp);
    double nw = norm2(tmp);
    if (nw == 0.0) break;
    lam2 = nw;
    for (int i = 0; i < n; ++i) w[i] = tmp[i] / nw;
  }
  return lam2 > 0 ? std::sqrt(lam2) : 0.0;
}

}  // namespace jts
