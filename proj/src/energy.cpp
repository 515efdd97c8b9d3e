#include "multibubble/energy.hpp"

#include <cmath>
#include <sstream>

namespace multibubble {

namespace {

void require_positive(const std::vector<double>& lambda) {
  for (double l : lambda)
    if (!(l > 0.0)) throw DomainError("lambda entries must be strictly positive");
}

void require_configuration(const std::vector<double>& lambda,
                           const std::vector<BallPoint>& xi) {
  if (lambda.size() != xi.size() + 1)
    throw DomainError("psi: expected k+1 lambda entries for k points");
  require_positive(lambda);
  for (size_t i = 0; i < xi.size(); ++i) {
    if (xi[i].norm2() == 0.0) throw DomainError("psi: ring point at the origin");
    if (xi[i].norm2() >= 1.0) throw DomainError("psi: ring point outside the ball");
    for (size_t j = i + 1; j < xi.size(); ++j) {
      double d2 = 0;
      for (size_t c = 0; c < xi[i].x.size(); ++c) {
        const double d = xi[i].x[c] - xi[j].x[c];
        d2 += d * d;
      }
      if (d2 == 0.0) throw DomainError("psi: coincident ring points");
    }
  }
}

double pow_frac(double base, double expo) {
  return std::exp(expo * std::log(base));
}

// shared body of psi and psi~; ring_sign(i) and pair_sign(i,j) encode the
// sign pattern of the couplings (1-based indices)
template <typename RingSign, typename PairSign>
double psi_generic(const std::vector<double>& lambda,
                   const std::vector<BallPoint>& xi, Dimension dim,
                   RingSign ring_sign, PairSign pair_sign) {
  require_configuration(lambda, xi);
  const size_t k = xi.size();
  const double m = 0.5 * (dim.N() - 2.0);
  const auto& bi = bubble_integrals(dim);
  const double b1 = bi.checked_b1();
  const double b2 = bi.checked_b2();

  BallPoint origin;
  origin.x.assign(static_cast<size_t>(dim.N()), 0.0);
  const double h00 = regular_part(origin, origin, dim);

  std::vector<double> s(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) s[i] = pow_frac(lambda[i], m);

  double quad = h00 * s[0] * s[0];
  for (size_t i = 1; i <= k; ++i) {
    quad += regular_part(xi[i - 1], xi[i - 1], dim) * s[i] * s[i];
    quad += ring_sign(i) * 2.0 * green(xi[i - 1], origin, dim) * s[i] * s[0];
  }
  for (size_t i = 1; i <= k; ++i)
    for (size_t j = i + 1; j <= k; ++j)
      quad += pair_sign(i, j) * 2.0 * green(xi[i - 1], xi[j - 1], dim) * s[i] * s[j];

  double logs = 0;
  for (double l : lambda) logs += std::log(l);
  return b1 * quad - b2 * 0.5 * (dim.N() - 2.0) * logs;
}

}  // namespace

double psi(const std::vector<double>& lambda, const std::vector<BallPoint>& xi,
           Dimension dim) {
  return psi_generic(
      lambda, xi, dim, [](size_t) { return 1.0; },
      [](size_t, size_t) { return -1.0; });
}

double psi_tilde(const std::vector<double>& lambda,
                 const std::vector<BallPoint>& xi, Dimension dim) {
  return psi_generic(
      lambda, xi, dim,
      [](size_t i) { return (i % 2 == 1) ? 1.0 : -1.0; },  // (-1)^{i-1}
      [](size_t i, size_t j) { return ((i + j) % 2 == 1) ? 1.0 : -1.0; });
}

// ---------------------------------------------------------------------------
// symmetric ring reductions
// ---------------------------------------------------------------------------

Jet2 ring_coeff_jet(int k, double t, Dimension dim) {
  // closed forms for k <= 4 (the k=2 pair coefficient coincides with gamma3
  // because xi2 = -xi1 is the square's diagonal point); generic k-gon beyond
  return ring_interaction_jet(k, t, dim);
}

EnergyEvaluation f_k_eval_s(int k, double X, double Y, double t, Dimension dim) {
  if (!(X > 0 && Y > 0)) throw DomainError("f_k: s-variables must be positive");
  const Jet2 g = ring_coeff_jet(k, t, dim);
  const Jet2 tau = coeff_jets(t, dim).tau1;
  const auto& bi = bubble_integrals(dim);
  const double b1 = bi.checked_b1();
  const double b2 = bi.checked_b2();
  const double kk = k;

  EnergyEvaluation e;
  e.value = b1 * (X * X + kk * g.v * Y * Y + 2.0 * kk * tau.v * X * Y) -
            b2 * (std::log(X) + kk * std::log(Y));
  e.grad = Vec(3);
  e.grad[0] = 2.0 * b1 * (X + kk * tau.v * Y) - b2 / X;
  e.grad[1] = 2.0 * kk * b1 * (g.v * Y + tau.v * X) - kk * b2 / Y;
  e.grad[2] = b1 * (kk * g.d1 * Y * Y + 2.0 * kk * tau.d1 * X * Y);
  e.hess = Mat(3);
  e.hess(0, 0) = 2.0 * b1 + b2 / (X * X);
  e.hess(1, 1) = 2.0 * kk * b1 * g.v + kk * b2 / (Y * Y);
  e.hess(0, 1) = e.hess(1, 0) = 2.0 * kk * b1 * tau.v;
  e.hess(0, 2) = e.hess(2, 0) = 2.0 * kk * b1 * tau.d1 * Y;
  e.hess(1, 2) = e.hess(2, 1) = 2.0 * kk * b1 * (g.d1 * Y + tau.d1 * X);
  e.hess(2, 2) = b1 * (kk * g.d2 * Y * Y + 2.0 * kk * tau.d2 * X * Y);
  return e;
}

EnergyEvaluation f5_eval_s(double X, double Y, double Z, double t, Dimension dim) {
  if (!(X > 0 && Y > 0 && Z > 0))
    throw DomainError("f5: s-variables must be positive");
  const CoeffJets j = coeff_jets(t, dim);
  const Jet2 g3 = j.gamma3, g4 = j.gamma4, tau = j.tau1;
  const auto& bi = bubble_integrals(dim);
  const double b1 = bi.checked_b1();
  const double b2 = bi.checked_b2();

  EnergyEvaluation e;
  e.value = b1 * (X * X + 2.0 * g3.v * (Y * Y + Z * Z) + 8.0 * g4.v * Y * Z +
                  4.0 * tau.v * X * (Y - Z)) -
            b2 * (std::log(X) + 2.0 * std::log(Y) + 2.0 * std::log(Z));
  e.grad = Vec(4);
  e.grad[0] = 2.0 * b1 * (X + 2.0 * tau.v * (Y - Z)) - b2 / X;
  e.grad[1] = 4.0 * b1 * (g3.v * Y + 2.0 * g4.v * Z + tau.v * X) - 2.0 * b2 / Y;
  e.grad[2] = 4.0 * b1 * (g3.v * Z + 2.0 * g4.v * Y - tau.v * X) - 2.0 * b2 / Z;
  e.grad[3] = b1 * (2.0 * g3.d1 * (Y * Y + Z * Z) + 8.0 * g4.d1 * Y * Z +
                    4.0 * tau.d1 * X * (Y - Z));
  e.hess = Mat(4);
  e.hess(0, 0) = 2.0 * b1 + b2 / (X * X);
  e.hess(1, 1) = 4.0 * b1 * g3.v + 2.0 * b2 / (Y * Y);
  e.hess(2, 2) = 4.0 * b1 * g3.v + 2.0 * b2 / (Z * Z);
  e.hess(0, 1) = e.hess(1, 0) = 4.0 * b1 * tau.v;
  e.hess(0, 2) = e.hess(2, 0) = -4.0 * b1 * tau.v;
  e.hess(1, 2) = e.hess(2, 1) = 8.0 * b1 * g4.v;
  e.hess(0, 3) = e.hess(3, 0) = 4.0 * b1 * tau.d1 * (Y - Z);
  e.hess(1, 3) = e.hess(3, 1) = 4.0 * b1 * (g3.d1 * Y + 2.0 * g4.d1 * Z + tau.d1 * X);
  e.hess(2, 3) = e.hess(3, 2) = 4.0 * b1 * (g3.d1 * Z + 2.0 * g4.d1 * Y - tau.d1 * X);
  e.hess(3, 3) = b1 * (2.0 * g3.d2 * (Y * Y + Z * Z) + 8.0 * g4.d2 * Y * Z +
                       4.0 * tau.d2 * X * (Y - Z));
  return e;
}

namespace {

// pull an s-coordinate evaluation back to lambda coordinates;
// nl = number of lambda variables (the trailing variable is t)
EnergyEvaluation to_lambda(const EnergyEvaluation& es,
                           const std::vector<double>& lambda,
                           const std::vector<double>& s, double m) {
  const int nl = static_cast<int>(lambda.size());
  const int n = nl + 1;
  EnergyEvaluation e;
  e.value = es.value;
  e.grad = Vec(n);
  e.hess = Mat(n);

  std::vector<double> ds(lambda.size()), d2s(lambda.size());
  for (int i = 0; i < nl; ++i) {
    const auto ui = static_cast<size_t>(i);
    ds[ui] = m * s[ui] / lambda[ui];
    d2s[ui] = m * (m - 1.0) * s[ui] / (lambda[ui] * lambda[ui]);
  }

  for (int i = 0; i < nl; ++i) e.grad[i] = es.grad[i] * ds[static_cast<size_t>(i)];
  e.grad[nl] = es.grad[nl];

  for (int i = 0; i < nl; ++i) {
    for (int j = i; j < nl; ++j) {
      const double v =
          es.hess(i, j) * ds[static_cast<size_t>(i)] * ds[static_cast<size_t>(j)];
      e.hess(i, j) = e.hess(j, i) = v;
    }
    e.hess(i, i) += es.grad[i] * d2s[static_cast<size_t>(i)];
    e.hess(i, nl) = e.hess(nl, i) = es.hess(i, nl) * ds[static_cast<size_t>(i)];
  }
  e.hess(nl, nl) = es.hess(nl, nl);
  return e;
}

}  // namespace

EnergyEvaluation f_k_eval(int k, const LambdaState& state, double t, Dimension dim) {
  if (state.lambda2) throw DomainError("f_k: lambda2 only enters f5");
  const std::vector<double> lambda{state.lambda0, state.lambda1};
  require_positive(lambda);
  const double m = 0.5 * (dim.N() - 2.0);
  const std::vector<double> s{pow_frac(lambda[0], m), pow_frac(lambda[1], m)};
  const EnergyEvaluation es = f_k_eval_s(k, s[0], s[1], t, dim);
  return to_lambda(es, lambda, s, m);
}

EnergyEvaluation f5_eval(const LambdaState& state, double t, Dimension dim) {
  if (!state.lambda2) throw DomainError("f5: lambda2 required");
  const std::vector<double> lambda{state.lambda0, state.lambda1, *state.lambda2};
  require_positive(lambda);
  const double m = 0.5 * (dim.N() - 2.0);
  const std::vector<double> s{pow_frac(lambda[0], m), pow_frac(lambda[1], m),
                              pow_frac(lambda[2], m)};
  const EnergyEvaluation es = f5_eval_s(s[0], s[1], s[2], t, dim);
  return to_lambda(es, lambda, s, m);
}

// ---------------------------------------------------------------------------
// stationary profiles
// ---------------------------------------------------------------------------

RingProfile ring_profile(int k, double t, Dimension dim) {
  const Jet2 g = ring_coeff_jet(k, t, dim);
  const Jet2 tau = coeff_jets(t, dim).tau1;
  if (!(g.v > 0)) {
    std::ostringstream msg;
    msg << "ring_profile: ring coefficient " << g.v << " <= 0 at t=" << t
        << " (t <= t*), lambda-profile undefined";
    throw ProfileError(msg.str());
  }
  const double c = bubble_integrals(dim).b2_over_2b1;
  const double km1 = k - 1.0;
  // alpha solves alpha^2 + (k-1) tau alpha - gamma = 0; the rationalized form
  // stays accurate as gamma -> 0+
  const double alpha =
      2.0 * g.v / (km1 * tau.v + std::sqrt(km1 * km1 * tau.v * tau.v + 4.0 * g.v));
  const double beta = g.v + tau.v * alpha;

  RingProfile p;
  p.alpha = alpha;
  p.beta = beta;
  p.Y = std::sqrt(c / beta);
  p.X = alpha * p.Y;
  const double inv_m = 2.0 / (dim.N() - 2.0);
  p.lambda1 = std::exp(inv_m * std::log(p.Y));
  p.lambda0 = std::exp(inv_m * std::log(p.X));
  return p;
}

std::pair<double, double> lambda_profile_f3(double t, Dimension dim) {
  const RingProfile p = ring_profile(3, t, dim);
  return {p.lambda0, p.lambda1};
}

double nu_ring(int k, double t, Dimension dim) {
  const RingProfile p = ring_profile(k, t, dim);
  const double b2 = bubble_integrals(dim).checked_b2();
  // f_k at the profile collapses to (k+1) b2/2 - b2 (N-2)/2 ln(lambda1^k lambda0)
  const double logY = std::log(p.Y);
  const double logX = std::log(p.alpha) + logY;
  return 0.5 * (k + 1.0) * b2 - b2 * (logX + k * logY);
}

double nu_ring_direct(int k, double t, Dimension dim) {
  const RingProfile p = ring_profile(k, t, dim);
  return f_k_eval_s(k, p.X, p.Y, t, dim).value;
}

double iota_ring(int k, double t, Dimension dim) {
  const Jet2 g = ring_coeff_jet(k, t, dim);
  const Jet2 tau = coeff_jets(t, dim).tau1;
  if (!(g.v > 0)) throw ProfileError("iota: ring coefficient <= 0, outside (t*,1)");
  const double km1 = k - 1.0;
  const double alpha =
      2.0 * g.v / (km1 * tau.v + std::sqrt(km1 * km1 * tau.v * tau.v + 4.0 * g.v));
  return g.d1 + 2.0 * alpha * tau.d1;
}

double nu1(double t, Dimension dim) { return nu_ring(3, t, dim); }
double iota1(double t, Dimension dim) { return iota_ring(3, t, dim); }

int iota1_sign(double t, Dimension dim) {
  if (!(t >= kTMin && t <= kTMax))
    throw DomainError("iota1_sign: t outside the clamped domain");
  const SignedLog g = sl_gamma1(t, dim);
  if (g.sgn <= 0)
    throw ProfileError("iota1_sign: gamma1 <= 0, outside (t*,1)");
  const SignedLog tau = sl_tau1(t, dim);
  const SignedLog denom = tau + sl_sqrt(tau * tau + g);
  const SignedLog alpha = g / denom;
  const SignedLog iota =
      sl_dgamma1(t, dim) + SignedLog::from(2.0) * alpha * sl_dtau1(t, dim);
  return iota.sgn;
}

std::pair<double, double> alpha1_iota2(double t, Dimension dim) {
  const CoeffJets j = coeff_jets(t, dim);
  if (j.gamma2.v < 0)
    throw DomainError("alpha1_iota2: gamma2 < 0 at this t (left of t*)");
  const double tau = j.tau1.v;
  const double alpha1 =
      2.0 * j.gamma2.v / (3.0 * tau + std::sqrt(9.0 * tau * tau + 4.0 * j.gamma2.v));
  const double iota2 = j.gamma2.d1 + 2.0 * alpha1 * j.tau1.d1;
  return {alpha1, iota2};
}

double beta1_k4(double t, Dimension dim) {
  const CoeffJets j = coeff_jets(t, dim);
  const double alpha1 = alpha1_iota2(t, dim).first;
  return j.gamma2.v + j.tau1.v * alpha1;
}

F5Profile lambda_profile_f5(double t, Dimension dim) {
  const CoeffJets j = coeff_jets(t, dim);
  const double g3 = j.gamma3.v, g4 = j.gamma4.v, tau = j.tau1.v;
  const double c = bubble_integrals(dim).b2_over_2b1;

  const double denom = g3 - 2.0 * tau * tau;
  if (!(g3 / denom > 0)) {
    std::ostringstream msg;
    msg << "lambda_profile_f5: gamma3/(gamma3-2 tau1^2) = " << g3 << "/" << denom
        << " <= 0 at t=" << t << "; t must lie in (0,t1*) or (t2*,1)";
    throw ProfileError(msg.str());
  }
  const double q = g3 + 2.0 * g4;
  if (!(q > 0)) {
    std::ostringstream msg;
    msg << "lambda_profile_f5: gamma3 + 2 gamma4 = " << q << " <= 0 at t=" << t;
    throw ProfileError(msg.str());
  }

  F5Profile p;
  p.X = std::sqrt(c * g3 / denom);
  const double d = tau / g3 * p.X;  // Z - Y
  const double prod = c / q;        // Y Z
  const double disc = std::sqrt(d * d + 4.0 * prod);
  p.Y = d >= 0 ? 2.0 * prod / (d + disc) : 0.5 * (-d + disc);
  p.Z = p.Y + d;

  p.res_eq2 = p.X * p.X + 2.0 * tau * p.X * (p.Y - p.Z) - c;
  p.res_eq3 = g3 * p.Y * p.Y + tau * p.X * p.Y + 2.0 * g4 * p.Y * p.Z - c;
  p.res_eq4 = g3 * p.Z * p.Z - tau * p.X * p.Z + 2.0 * g4 * p.Y * p.Z - c;

  const double inv_m = 2.0 / (dim.N() - 2.0);
  p.lambda0 = std::exp(inv_m * std::log(p.X));
  p.lambda1 = std::exp(inv_m * std::log(p.Y));
  p.lambda2 = std::exp(inv_m * std::log(p.Z));
  return p;
}

double iota3(double t, Dimension dim) {
  const CoeffJets j = coeff_jets(t, dim);
  const double g3 = j.gamma3.v, g4 = j.gamma4.v, tau = j.tau1.v;
  const double a = g3 - 2.0 * tau * tau;
  const double b = g3 + 2.0 * g4;
  return j.gamma3.d1 * (2.0 * g3 * a + tau * tau * b) -
         2.0 * j.tau1.d1 * tau * g3 * b + 4.0 * j.gamma4.d1 * g3 * a;
}

std::pair<double, double> nu2_iota3(double t, Dimension dim) {
  const F5Profile p = lambda_profile_f5(t, dim);
  const double nu2 = f5_eval_s(p.X, p.Y, p.Z, t, dim).value;
  return {nu2, iota3(t, dim)};
}

Mat f5_reduced_matrix(double t, Dimension dim) {
  const F5Profile p = lambda_profile_f5(t, dim);
  const CoeffJets j = coeff_jets(t, dim);
  const double g3 = j.gamma3.v, g4 = j.gamma4.v, tau = j.tau1.v;
  const double c = bubble_integrals(dim).b2_over_2b1;
  const int n = dim.N();

  const double e_small = 2.0 / (n - 2.0);        // s^{2/(N-2)} = lambda
  const double e_large = (n - 4.0) / (n - 2.0);  // s^{(N-4)/(N-2)} = lambda^{(N-4)/2}
  const auto fp = [](double base, double expo) { return std::exp(expo * std::log(base)); };

  Mat M(3);
  M(0, 0) = 0.5 * p.X + 0.5 * c / p.X;
  M(0, 1) = tau * fp(p.X, e_small) * fp(p.Y, e_large);
  M(0, 2) = -tau * fp(p.X, e_small) * fp(p.Z, e_large);
  M(1, 0) = tau * fp(p.X, e_large) * fp(p.Y, e_small);
  M(1, 1) = g3 * p.Y + c / p.Y;
  M(1, 2) = 2.0 * g4 * fp(p.Y, e_small) * fp(p.Z, e_large);
  M(2, 0) = -tau * fp(p.X, e_large) * fp(p.Z, e_small);
  M(2, 1) = 2.0 * g4 * fp(p.Y, e_large) * fp(p.Z, e_small);
  M(2, 2) = g3 * p.Z + c / p.Z;
  return M;
}

int f5_hessian_det_sign(double t, Dimension dim) {
  const Mat M = f5_reduced_matrix(t, dim);
  const double det = determinant(M);
  const double scale = M.max_abs();
  if (std::fabs(det) <= 1e-12 * scale * scale * scale) return 0;
  return det > 0 ? 1 : -1;
}

}  // namespace multibubble
