#pragma once

#include <optional>
#include <vector>

#include "multibubble/green.hpp"
#include "multibubble/smallmat.hpp"

namespace multibubble {

// Blow-up speeds entering the reduced functions; lambda2 only for f5.
struct LambdaState {
  double lambda0 = 1.0;
  double lambda1 = 1.0;
  std::optional<double> lambda2;
};

// Value, gradient and Hessian over (lambda0, lambda1[, lambda2], t).
struct EnergyEvaluation {
  double value = 0;
  Vec grad;
  Mat hess;
};

// The reduced functions psi (all ring bubbles negative) and psi~ (alternating
// ring signs), for general configurations.
double psi(const std::vector<double>& lambda, const std::vector<BallPoint>& xi,
           Dimension dim);
double psi_tilde(const std::vector<double>& lambda, const std::vector<BallPoint>& xi,
                 Dimension dim);

// f_k(lambda0, lambda1, t), k in {2,3,4}: the symmetric ring reduction of psi.
// Gradient/Hessian are over (lambda0, lambda1, t).
EnergyEvaluation f_k_eval(int k, const LambdaState& state, double t, Dimension dim);

// f5(lambda0, lambda1, lambda2, t): the alternating square reduction of psi~.
// Gradient/Hessian over (lambda0, lambda1, lambda2, t).
EnergyEvaluation f5_eval(const LambdaState& state, double t, Dimension dim);

// Same functions in the power coordinates s_i = lambda_i^{(N-2)/2}
// (the X, Y, Z variables); better conditioned for large N.
EnergyEvaluation f_k_eval_s(int k, double X, double Y, double t, Dimension dim);
EnergyEvaluation f5_eval_s(double X, double Y, double Z, double t, Dimension dim);

// The per-ring coefficient entering f_k: gamma3 for k=2, gamma1 for k=3,
// gamma2 for k=4 (the k=2 pair coefficient coincides with gamma3 because
// xi2 = -xi1 is the square's diagonal point); generic k-gon for k >= 5 so
// larger all-negative rings can be probed.
Jet2 ring_coeff_jet(int k, double t, Dimension dim);

// Closed-form stationary profile of the lambda-gradient at fixed t,
//   X = alpha Y,  Y = sqrt(c / beta),  c = b2/(2 b1),
// defined where the ring coefficient is positive.
struct RingProfile {
  double lambda0, lambda1;
  double X, Y;
  double alpha, beta;
};
RingProfile ring_profile(int k, double t, Dimension dim);
std::pair<double, double> lambda_profile_f3(double t, Dimension dim);

// nu_k(t) = f_k at the profile; closed log form and direct evaluation.
double nu_ring(int k, double t, Dimension dim);
double nu_ring_direct(int k, double t, Dimension dim);

// iota_k(t) = gamma_k'(t) + 2 alpha_k(t) tau1'(t); same zero set as nu_k'.
double iota_ring(int k, double t, Dimension dim);

// k = 3 names from the three-ring analysis
double nu1(double t, Dimension dim);
double iota1(double t, Dimension dim);
int iota1_sign(double t, Dimension dim);  // overflow-free, any N

// k = 4 helpers: alpha1 = (-3 tau1 + sqrt(9 tau1^2 + 4 gamma2))/2 and
// iota2 = gamma2' + 2 alpha1 tau1'; beta1 = gamma2 + tau1 alpha1.
std::pair<double, double> alpha1_iota2(double t, Dimension dim);
double beta1_k4(double t, Dimension dim);

// Stationary profile of f5 on (0,t1*) u (t2*,1):
//   X^2 = gamma3/(gamma3 - 2 tau1^2) * c,   Z - Y = (tau1/gamma3) X,
//   Y Z  = c/(gamma3 + 2 gamma4).
struct F5Profile {
  double lambda0, lambda1, lambda2;
  double X, Y, Z;
  double res_eq2, res_eq3, res_eq4;  // residuals of the three stationarity equations
};
F5Profile lambda_profile_f5(double t, Dimension dim);

// nu2 = f5 at the profile; iota3 is the polynomial surrogate of nu2'.
std::pair<double, double> nu2_iota3(double t, Dimension dim);
double iota3(double t, Dimension dim);

// The reduced 3x3 matrix whose determinant sign classifies the
// (lambda0,lambda1,lambda2)-Hessian of f5 at the profile, and that sign.
Mat f5_reduced_matrix(double t, Dimension dim);
int f5_hessian_det_sign(double t, Dimension dim);

}  // namespace multibubble
