#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace multibubble {

// Dense vectors/matrices of order <= 4, enough for the (lambda, t) Hessians.
inline constexpr int kMaxVars = 4;

struct Vec {
  int n = 0;
  std::array<double, kMaxVars> a{};

  Vec() = default;
  explicit Vec(int size) : n(size) {}

  double& operator[](int i) { return a[static_cast<size_t>(i)]; }
  double operator[](int i) const { return a[static_cast<size_t>(i)]; }

  double norm() const {
    double s = 0;
    for (int i = 0; i < n; ++i) s += a[static_cast<size_t>(i)] * a[static_cast<size_t>(i)];
    return std::sqrt(s);
  }
};

struct Mat {
  int n = 0;
  std::array<double, kMaxVars * kMaxVars> a{};

  Mat() = default;
  explicit Mat(int size) : n(size) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i * n + j)]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i * n + j)]; }

  static Mat identity(int size) {
    Mat m(size);
    for (int i = 0; i < size; ++i) m(i, i) = 1.0;
    return m;
  }

  double max_abs() const {
    double s = 0;
    for (int i = 0; i < n * n; ++i) s = std::max(s, std::fabs(a[static_cast<size_t>(i)]));
    return s;
  }
};

// LU with partial pivoting; returns false on (numerically) singular A.
bool solve(Mat A, Vec b, Vec& x);

double determinant(Mat A);

// Eigenvalues of a symmetric matrix, ascending.  2x2 closed form, otherwise
// cyclic Jacobi rotations.
std::vector<double> symmetric_eigenvalues(Mat S);

}  // namespace multibubble
