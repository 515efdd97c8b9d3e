#include "multibubble/smallmat.hpp"

#include <algorithm>
#include <cmath>

namespace multibubble {

bool solve(Mat A, Vec b, Vec& x) {
  const int n = A.n;
  std::array<int, kMaxVars> piv{};
  for (int i = 0; i < n; ++i) piv[static_cast<size_t>(i)] = i;

  for (int col = 0; col < n; ++col) {
    int best = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(A(r, col)) > std::fabs(A(best, col))) best = r;
    if (A(best, col) == 0.0) return false;
    if (best != col) {
      for (int j = 0; j < n; ++j) std::swap(A(col, j), A(best, j));
      std::swap(b[col], b[best]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double m = A(r, col) / A(col, col);
      if (m == 0.0) continue;
      for (int j = col; j < n; ++j) A(r, j) -= m * A(col, j);
      b[r] -= m * b[col];
    }
  }

  x = Vec(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= A(i, j) * x[j];
    x[i] = s / A(i, i);
  }
  for (int i = 0; i < n; ++i)
    if (!std::isfinite(x[i])) return false;
  return true;
}

double determinant(Mat A) {
  const int n = A.n;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int best = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(A(r, col)) > std::fabs(A(best, col))) best = r;
    if (A(best, col) == 0.0) return 0.0;
    if (best != col) {
      for (int j = 0; j < n; ++j) std::swap(A(col, j), A(best, j));
      det = -det;
    }
    det *= A(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double m = A(r, col) / A(col, col);
      if (m == 0.0) continue;
      for (int j = col; j < n; ++j) A(r, j) -= m * A(col, j);
    }
  }
  return det;
}

std::vector<double> symmetric_eigenvalues(Mat S) {
  const int n = S.n;
  std::vector<double> ev(static_cast<size_t>(n));

  if (n == 1) {
    ev[0] = S(0, 0);
    return ev;
  }
  if (n == 2) {
    const double tr = S(0, 0) + S(1, 1);
    const double df = S(0, 0) - S(1, 1);
    const double rad = std::hypot(df, 2.0 * S(0, 1));
    ev[0] = 0.5 * (tr - rad);
    ev[1] = 0.5 * (tr + rad);
    return ev;
  }

  // cyclic Jacobi sweeps
  const double scale = std::max(S.max_abs(), 1e-300);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(S(p, q)));
    if (off <= 1e-15 * scale) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = S(p, q);
        if (std::fabs(apq) <= 1e-18 * scale) continue;
        const double theta = (S(q, q) - S(p, p)) / (2.0 * apq);
        const double sgn = theta >= 0 ? 1.0 : -1.0;
        const double tt = sgn / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(tt * tt + 1.0);
        const double s = tt * c;

        for (int j = 0; j < n; ++j) {
          const double sp = S(p, j), sq = S(q, j);
          S(p, j) = c * sp - s * sq;
          S(q, j) = s * sp + c * sq;
        }
        for (int j = 0; j < n; ++j) {
          const double sp = S(j, p), sq = S(j, q);
          S(j, p) = c * sp - s * sq;
          S(j, q) = s * sp + c * sq;
        }
      }
    }
  }

  for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = S(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace multibubble
