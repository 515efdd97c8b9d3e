#pragma once

#include <vector>

#include "multibubble/constants.hpp"
#include "multibubble/signedlog.hpp"

namespace multibubble {

// t-domain clamp; powers blow past the double range outside of it long
// before anything else goes wrong.
inline constexpr double kTMin = 1e-6;
inline constexpr double kTMax = 1.0 - 1e-6;

struct BallPoint {
  std::vector<double> x;

  double norm2() const {
    double s = 0;
    for (double c : x) s += c * c;
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }
};

// xi(t) = (t, 0, ..., 0)
BallPoint ring_anchor(double t, Dimension dim);

// xi_i = R_k^{i-1} xi(t), i = 1..k
std::vector<BallPoint> ring_points(int k, double t, Dimension dim);

// base^p for base > 0; throws OverflowError instead of returning inf
double checked_pow(double base, double p);

// Regular part H(x,y) = (1 - 2 x.y + |x|^2 |y|^2)^{-(N-2)/2} of the unit
// ball's Green function, and G(x,y) = |x-y|^{2-N} - H(x,y).
double regular_part(const BallPoint& x, const BallPoint& y, Dimension dim);
double green(const BallPoint& x, const BallPoint& y, Dimension dim);

// Image-charge form of H, singular at y = 0; kept for cross-checks.
double regular_part_image(const BallPoint& x, const BallPoint& y, Dimension dim);

// Ring interaction coefficients at radius t with their t-derivatives:
//   tau1   = G(xi1, 0)
//   gamma1 = H(xi1,xi1) - 2 G(xi1,xi2)                 (k=3 ring)
//   gamma2 = H(xi1,xi1) - 2 G(xi1,xi2) - G(xi1,xi3)    (k=4 ring)
//   gamma3 = H(xi1,xi1) - G(xi1,xi3)                   (k=4 diagonal; also
//                                                       the k=2 pair, xi2=-xi1)
//   gamma4 = G(xi1,xi2)                                (k=4 edge)
struct InteractionCoefficients {
  double tau1, gamma1, gamma2, gamma3, gamma4;
  double dtau1, dgamma1, dgamma2, dgamma3, dgamma4;
};

InteractionCoefficients interaction_coeffs(double t, Dimension dim);

// value + first two t-derivatives; second derivatives feed the Hessians
struct Jet2 {
  double v = 0, d1 = 0, d2 = 0;
};

struct CoeffJets {
  Jet2 tau1, gamma1, gamma2, gamma3, gamma4;
};

CoeffJets coeff_jets(double t, Dimension dim);

// Generic k-gon ring coefficient H(xi1,xi1) - sum_{j>=2} G(xi1,xi_j) with
// its t-derivatives; reduces to gamma3/gamma1/gamma2 for k = 2/3/4 and lets
// larger rings be probed.
Jet2 ring_interaction_jet(int k, double t, Dimension dim);

// Overflow-free forms for large-N sign scans.
SignedLog sl_tau1(double t, Dimension dim);
SignedLog sl_dtau1(double t, Dimension dim);
SignedLog sl_gamma1(double t, Dimension dim);
SignedLog sl_dgamma1(double t, Dimension dim);
SignedLog sl_gamma2(double t, Dimension dim);
SignedLog sl_gamma3(double t, Dimension dim);
SignedLog sl_gamma3_minus_2tau1sq(double t, Dimension dim);

int gamma1_sign(double t, Dimension dim);
int gamma2_sign(double t, Dimension dim);
int gamma3_sign(double t, Dimension dim);
int gamma3_minus_2tau1sq_sign(double t, Dimension dim);

}  // namespace multibubble
