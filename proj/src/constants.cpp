#include "multibubble/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

namespace multibubble {

double critical_exponent(Dimension dim) { return dim.two_star(); }

HardyParams::HardyParams(Dimension dim, double mu0_, double alpha_, double eps_)
    : mu0(mu0_), alpha(alpha_), eps(eps_) {
  const int n = dim.N();
  if (mu0 <= 0) throw DomainError("HardyParams: mu0 > 0 required");
  if (eps <= 0) throw DomainError("HardyParams: eps > 0 required");
  const double alpha_min = (n - 4.0) / (n - 2.0);
  if (alpha <= alpha_min)
    throw DomainError("HardyParams: alpha > (N-4)/(N-2) required");
  if (mu_eps() >= dim.mu_bar())
    throw DomainError("HardyParams: mu0*eps^alpha must stay below mu_bar");
}

std::pair<double, double> hardy_exponents(Dimension dim, double mu) {
  const double mb = dim.mu_bar();
  if (mu < 0 || mu >= mb)
    throw DomainError("hardy_exponents: require 0 <= mu < mu_bar");
  const double root = std::sqrt((mb - mu) / mb);
  return {1.0 - root, 1.0 + root};
}

std::pair<double, double> bubble_amplitudes(Dimension dim, double mu) {
  const int n = dim.N();
  const double mb = dim.mu_bar();
  if (mu < 0 || mu >= mb)
    throw DomainError("bubble_amplitudes: require 0 <= mu < mu_bar");
  const double p = (n - 2.0) / 4.0;
  const double c0_lg = p * std::log(static_cast<double>(n) * (n - 2.0));
  const double cmu_lg = p * std::log(4.0 * n * (mb - mu) / (n - 2.0));
  if (c0_lg > 709.0 || cmu_lg > 709.0)
    throw OverflowError("bubble_amplitudes: C0/C_mu exceed the double range at this N");
  return {std::exp(c0_lg), std::exp(cmu_lg)};
}

// ---------------------------------------------------------------------------
// adaptive Gauss-Kronrod 7/15
// ---------------------------------------------------------------------------

namespace {

// QUADPACK dqk15 nodes and weights
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  double integral, error;
};

void gk15(const std::function<double(double)>& f, double a, double b,
          double& integral, double& error, long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  evals += 15;

  double res_k = kWgk[7] * fv[7];
  double res_g = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    res_k += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) res_g += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  integral = res_k * h;
  error = std::fabs((res_k - res_g) * h);
}

}  // namespace

namespace detail {

QuadratureResult integrate_adaptive_impl(const std::function<double(double)>& f,
                                         double a, double b, double abs_tol,
                                         double rel_tol, long max_evals) {
  long evals = 0;
  Segment root{};
  root.a = a;
  root.b = b;
  gk15(f, a, b, root.integral, root.error, evals);

  std::vector<Segment> work{root};
  double total = root.integral;
  double total_err = root.error;

  while (true) {
    const double tol = std::max(abs_tol, rel_tol * std::fabs(total));
    if (total_err <= tol) break;

    size_t worst = 0;
    for (size_t i = 1; i < work.size(); ++i)
      if (work[i].error > work[worst].error) worst = i;

    if (evals + 30 > max_evals) {
      std::ostringstream msg;
      msg << "integrate_adaptive: evaluation cap " << max_evals
          << " hit; achieved error estimate " << total_err;
      throw QuadratureError(msg.str());
    }

    const Segment seg = work[worst];
    const double mid = 0.5 * (seg.a + seg.b);
    if (mid == seg.a || mid == seg.b) {
      std::ostringstream msg;
      msg << "integrate_adaptive: interval cannot be split further; achieved "
          << total_err;
      throw QuadratureError(msg.str());
    }
    Segment left{}, right{};
    left.a = seg.a;
    left.b = mid;
    right.a = mid;
    right.b = seg.b;
    gk15(f, left.a, left.b, left.integral, left.error, evals);
    gk15(f, right.a, right.b, right.integral, right.error, evals);

    total += left.integral + right.integral - seg.integral;
    total_err += left.error + right.error - seg.error;
    work[worst] = left;
    work.push_back(right);
  }

  return {total, total_err, evals};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// bubble integrals
// ---------------------------------------------------------------------------

namespace {

// log of r^{N-1} (1+r^2)^{-p} for the substituted variable s, r = s/(1-s)
double radial_integrand(double s, int n, double p) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  const double r = s / (1.0 - s);
  double log1pr2;
  if (r > 1e8)
    log1pr2 = 2.0 * std::log(r) + std::log1p(1.0 / (r * r));
  else
    log1pr2 = std::log1p(r * r);
  const double lg =
      (n - 1.0) * std::log(r) - p * log1pr2 - 2.0 * std::log1p(-s);
  return std::exp(lg);
}

BubbleIntegrals compute_bubble_integrals(int n) {
  constexpr double kTol = 1e-12;
  constexpr long kCap = 1000000;

  const auto q1 = integrate_adaptive(
      [n](double s) { return radial_integrand(s, n, 0.5 * (n + 2.0)); }, 0.0,
      1.0, kTol, kTol, kCap);
  const auto q2 = integrate_adaptive(
      [n](double s) { return radial_integrand(s, n, static_cast<double>(n)); },
      0.0, 1.0, kTol, kTol, kCap);

  // b1 = (1/2) C0^{2*} omega R1,  b2 = (1/2*) C0^{2*} omega R2
  const double log_c0_2star = 0.5 * n * std::log(static_cast<double>(n) * (n - 2.0));
  const double log_omega = std::log(2.0) + 0.5 * n * std::log(M_PI) - std::lgamma(0.5 * n);
  const double two_star = 2.0 * n / (n - 2.0);

  BubbleIntegrals out{};
  out.N = n;
  out.log_b1 = std::log(0.5) + log_c0_2star + log_omega + std::log(q1.value);
  out.log_b2 = -std::log(two_star) + log_c0_2star + log_omega + std::log(q2.value);
  out.b1 = std::exp(out.log_b1);
  out.b2 = std::exp(out.log_b2);
  out.b2_over_2b1 = std::exp(out.log_b2 - out.log_b1 - std::log(2.0));
  out.s0 = std::exp((2.0 / n) * (std::log(two_star) + out.log_b2));
  out.evaluations = q1.evaluations + q2.evaluations;
  return out;
}

}  // namespace

double BubbleIntegrals::checked_b1() const {
  if (!std::isfinite(b1))
    throw OverflowError("b1 exceeds the double range at N=" + std::to_string(N));
  return b1;
}

double BubbleIntegrals::checked_b2() const {
  if (!std::isfinite(b2))
    throw OverflowError("b2 exceeds the double range at N=" + std::to_string(N));
  return b2;
}

const BubbleIntegrals& bubble_integrals(Dimension dim) {
  const int n = dim.N();
  if (n < 5) throw DomainError("bubble_integrals: quadrature set up for N >= 5");

  static std::map<int, BubbleIntegrals> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_bubble_integrals(n)).first;
  return it->second;
}

BubbleConstants bubble_constants(Dimension dim, double mu) {
  const auto [c0, c_mu] = bubble_amplitudes(dim, mu);
  const auto [b1m, b2m] = hardy_exponents(dim, mu);
  const auto& bi = bubble_integrals(dim);
  return {c0, c_mu, b1m, b2m, bi.s0, bi.b1, bi.b2};
}

}  // namespace multibubble
