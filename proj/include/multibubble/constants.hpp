#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "multibubble/errors.hpp"

namespace multibubble {

// Space dimension N with the derived exponents used everywhere else.
class Dimension {
 public:
  explicit Dimension(int n) : n_(n) {
    if (n < 3) throw DomainError("Dimension: N >= 3 required");
  }

  int N() const { return n_; }
  double two_star() const { return 2.0 * n_ / (n_ - 2.0); }
  double mu_bar() const { return 0.25 * (n_ - 2.0) * (n_ - 2.0); }

 private:
  int n_;
};

// critical Sobolev exponent 2N/(N-2)
double critical_exponent(Dimension dim);

// Hardy coefficient mu = mu0 * eps^alpha.
struct HardyParams {
  double mu0;
  double alpha;
  double eps;

  HardyParams(Dimension dim, double mu0_, double alpha_, double eps_);
  double mu_eps() const { return mu0 * std::pow(eps, alpha); }
};

// (beta1, beta2) with beta1+beta2 = 2, beta1*beta2 = mu/mu_bar
std::pair<double, double> hardy_exponents(Dimension dim, double mu);

// (C0, C_mu); C_mu = C0 at mu = 0
std::pair<double, double> bubble_amplitudes(Dimension dim, double mu);

// b1 = (1/2) C0 \int U^{2*-1},  b2 = (1/2*) \int U^{2*}, via adaptive radial
// quadrature.  Values are also kept in log form so ratios stay usable when
// b1, b2 themselves leave the double range at large N.
struct BubbleIntegrals {
  int N;
  double b1;           // may be non-finite for very large N; use checked_b1()
  double b2;
  double log_b1;
  double log_b2;
  double b2_over_2b1;  // the profile constant b2/(2 b1), always finite
  double s0;           // S_0 = (2* b2)^{2/N}
  long evaluations;    // quadrature function evaluations (diagnostic)

  double checked_b1() const;
  double checked_b2() const;
};

// Memoized per dimension; N >= 5.
const BubbleIntegrals& bubble_integrals(Dimension dim);

// Everything the `constants` CLI prints.
struct BubbleConstants {
  double c0, c_mu, beta1, beta2, s0, b1, b2;
};
BubbleConstants bubble_constants(Dimension dim, double mu);

// Adaptive Gauss-Kronrod integration on [a,b]; throws QuadratureError (with
// the achieved estimate in the message) when the tolerance cannot be met
// within max_evals evaluations.
struct QuadratureResult {
  double value;
  double error_estimate;
  long evaluations;
};

template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    double rel_tol, long max_evals);

namespace detail {
QuadratureResult integrate_adaptive_impl(const std::function<double(double)>& f,
                                         double a, double b, double abs_tol,
                                         double rel_tol, long max_evals);
}

template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    double rel_tol, long max_evals) {
  return detail::integrate_adaptive_impl(std::function<double(double)>(std::forward<F>(f)),
                                         a, b, abs_tol, rel_tol, max_evals);
}

}  // namespace multibubble
