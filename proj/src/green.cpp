#include "multibubble/green.hpp"

#include <cmath>
#include <sstream>

namespace multibubble {

namespace {

constexpr double kLogDoubleMax = 709.0;

double dot(const BallPoint& a, const BallPoint& b) {
  double s = 0;
  for (size_t i = 0; i < a.x.size(); ++i) s += a.x[i] * b.x[i];
  return s;
}

void require_in_ball(const BallPoint& p, const char* who) {
  if (p.norm2() >= 1.0) {
    std::ostringstream msg;
    msg << who << ": point with |x| >= 1";
    throw DomainError(msg.str());
  }
}

}  // namespace

double checked_pow(double base, double p) {
  const double lg = p * std::log(base);
  if (lg > kLogDoubleMax) {
    std::ostringstream msg;
    msg << "checked_pow: " << base << "^" << p << " exceeds the double range";
    throw OverflowError(msg.str());
  }
  return std::pow(base, p);
}

BallPoint ring_anchor(double t, Dimension dim) {
  BallPoint p;
  p.x.assign(static_cast<size_t>(dim.N()), 0.0);
  p.x[0] = t;
  return p;
}

std::vector<BallPoint> ring_points(int k, double t, Dimension dim) {
  if (k < 1) throw DomainError("ring_points: k >= 1 required");
  if (!(t > 0.0 && t < 1.0)) throw DomainError("ring_points: t in (0,1) required");
  std::vector<BallPoint> pts;
  pts.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    BallPoint p;
    p.x.assign(static_cast<size_t>(dim.N()), 0.0);
    if ((4 * i) % k == 0) {
      // quadrant multiples kept exact so the square's symmetries are exact
      switch ((4 * i / k) % 4) {
        case 0: p.x[0] = t; break;
        case 1: p.x[1] = t; break;
        case 2: p.x[0] = -t; break;
        default: p.x[1] = -t; break;
      }
    } else {
      const double phi = 2.0 * M_PI * i / k;
      p.x[0] = t * std::cos(phi);
      p.x[1] = t * std::sin(phi);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

double regular_part(const BallPoint& x, const BallPoint& y, Dimension dim) {
  require_in_ball(x, "regular_part");
  require_in_ball(y, "regular_part");
  const double kernel = 1.0 - 2.0 * dot(x, y) + x.norm2() * y.norm2();
  return checked_pow(kernel, -0.5 * (dim.N() - 2.0));
}

double regular_part_image(const BallPoint& x, const BallPoint& y, Dimension dim) {
  require_in_ball(x, "regular_part_image");
  require_in_ball(y, "regular_part_image");
  const double ny2 = y.norm2();
  if (ny2 == 0.0)
    throw SingularityError("regular_part_image: image charge undefined at y = 0");
  double d2 = 0;
  for (size_t i = 0; i < x.x.size(); ++i) {
    const double d = x.x[i] - y.x[i] / ny2;
    d2 += d * d;
  }
  return checked_pow(ny2 * d2, -0.5 * (dim.N() - 2.0));
}

double green(const BallPoint& x, const BallPoint& y, Dimension dim) {
  double d2 = 0;
  for (size_t i = 0; i < x.x.size(); ++i) {
    const double d = x.x[i] - y.x[i];
    d2 += d * d;
  }
  if (d2 == 0.0) throw SingularityError("green: G(x,x) is singular");
  const double h = regular_part(x, y, dim);
  return checked_pow(d2, -0.5 * (dim.N() - 2.0)) - h;
}

// ---------------------------------------------------------------------------
// coefficient jets
// ---------------------------------------------------------------------------

namespace {

Jet2 operator+(Jet2 a, Jet2 b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }

Jet2 operator*(double c, Jet2 a) { return {c * a.v, c * a.d1, c * a.d2}; }

// u(t)^p with u > 0
Jet2 jet_pow(Jet2 u, double p) {
  const double w = checked_pow(u.v, p);
  const double w1 = checked_pow(u.v, p - 1.0);
  const double w2 = checked_pow(u.v, p - 2.0);
  Jet2 out;
  out.v = w;
  out.d1 = p * w1 * u.d1;
  out.d2 = p * (p - 1.0) * w2 * u.d1 * u.d1 + p * w1 * u.d2;
  return out;
}

void require_clamped(double t) {
  if (!(t >= kTMin && t <= kTMax))
    throw DomainError("interaction coefficients: t outside the clamped domain");
}

}  // namespace

CoeffJets coeff_jets(double t, Dimension dim) {
  require_clamped(t);
  const double m = dim.N() - 2.0;

  const Jet2 jt{t, 1.0, 0.0};
  const Jet2 j1mt2{1.0 - t * t, -2.0 * t, -2.0};
  const Jet2 j1pt2{1.0 + t * t, 2.0 * t, 2.0};
  const Jet2 jt4t21{t * t * t * t + t * t + 1.0, 4.0 * t * t * t + 2.0 * t,
                    12.0 * t * t + 2.0};
  const Jet2 j1pt4{1.0 + t * t * t * t, 4.0 * t * t * t, 12.0 * t * t};

  const Jet2 self = jet_pow(j1mt2, -m);       // H(xi1,xi1)
  const Jet2 radial = jet_pow(jt, -m);        // t^{-(N-2)}
  const Jet2 edge3 = jet_pow(jt4t21, -m / 2); // H(xi1,xi2), k=3
  const Jet2 edge4 = jet_pow(j1pt4, -m / 2);  // H(xi1,xi2), k=4
  const Jet2 diag = jet_pow(j1pt2, -m);       // H(xi1,xi3), k=4

  const double c3 = checked_pow(3.0, -m / 2);  // |xi1-xi2| = sqrt3 t, k=3
  const double c2 = checked_pow(2.0, -m / 2);  // |xi1-xi2| = sqrt2 t, k=4
  const double c4 = checked_pow(2.0, -m);      // |xi1-xi3| = 2t, k=4

  CoeffJets out;
  out.tau1 = radial;
  out.tau1.v -= 1.0;  // G(xi1,0) = t^{-(N-2)} - H, H(x,0) = 1

  out.gamma1 = self + (-2.0 * c3) * radial + 2.0 * edge3;
  out.gamma2 = self + (-2.0 * c2) * radial + 2.0 * edge4 + (-c4) * radial + diag;
  out.gamma3 = self + (-c4) * radial + diag;
  out.gamma4 = c2 * radial + (-1.0) * edge4;
  return out;
}

InteractionCoefficients interaction_coeffs(double t, Dimension dim) {
  const CoeffJets j = coeff_jets(t, dim);
  return {j.tau1.v,  j.gamma1.v,  j.gamma2.v,  j.gamma3.v,  j.gamma4.v,
          j.tau1.d1, j.gamma1.d1, j.gamma2.d1, j.gamma3.d1, j.gamma4.d1};
}

Jet2 ring_interaction_jet(int k, double t, Dimension dim) {
  const CoeffJets jets = coeff_jets(t, dim);
  switch (k) {
    case 2: return jets.gamma3;
    case 3: return jets.gamma1;
    case 4: return jets.gamma2;
    default: break;
  }
  if (k < 2) throw DomainError("ring_interaction_jet: k >= 2 required");

  const double m = dim.N() - 2.0;
  const Jet2 jt{t, 1.0, 0.0};
  Jet2 out = jet_pow({1.0 - t * t, -2.0 * t, -2.0}, -m);  // H(xi1,xi1)
  for (int j = 2; j <= k; ++j) {
    // |xi1 - xi_j| = 2 t sin(pi (j-1)/k), xi1 . xi_j = t^2 cos(2 pi (j-1)/k)
    const double theta = M_PI * (j - 1) / k;
    const double s2 = 2.0 * std::sin(theta);
    const double c2 = std::cos(2.0 * theta);
    const Jet2 kernel{1.0 - 2.0 * c2 * t * t + t * t * t * t,
                      -4.0 * c2 * t + 4.0 * t * t * t, -4.0 * c2 + 12.0 * t * t};
    // -G(xi1, xi_j) = -(2 sin)^{-(N-2)} t^{-(N-2)} + H(xi1, xi_j)
    out = out + (-checked_pow(s2, -m)) * jet_pow(jt, -m) + jet_pow(kernel, -m / 2);
  }
  return out;
}

// ---------------------------------------------------------------------------
// overflow-free forms
// ---------------------------------------------------------------------------

namespace {

SignedLog sl_pos(double lg) { return SignedLog::from_log(lg, 1); }
SignedLog sl_neg(double lg) { return SignedLog::from_log(lg, -1); }

}  // namespace

SignedLog sl_tau1(double t, Dimension dim) {
  const double m = dim.N() - 2.0;
  return sl_pos(-m * std::log(t)) - sl_pos(0.0);
}

SignedLog sl_dtau1(double t, Dimension dim) {
  const double m = dim.N() - 2.0;
  return sl_neg(std::log(m) - (m + 1.0) * std::log(t));
}

namespace {

// log(1 - t^2), accurate up to the clamp at both ends
double log_1mt2(double t) { return std::log1p(-t) + std::log1p(t); }

}  // namespace

SignedLog sl_gamma1(double t, Dimension dim) {
  const double m = dim.N() - 2.0;
  const double l2 = std::log(2.0);
  return sl_pos(-m * log_1mt2(t)) +
         sl_neg(l2 - 0.5 * m * std::log(3.0) - m * std::log(t)) +
         sl_pos(l2 - 0.5 * m * std::log(t * t * t * t + t * t + 1.0));
}

SignedLog sl_dgamma1(double t, Dimension dim) {
  const double m = dim.N() - 2.0;
  const double lm = std::log(m);
  return sl_pos(lm + std::log(2.0 * t) - (m + 1.0) * log_1mt2(t)) +
         sl_pos(lm + std::log(2.0) - 0.5 * m * std::log(3.0) - (m + 1.0) * std::log(t)) +
         sl_neg(lm + std::log(4.0 * t * t * t + 2.0 * t) -
                0.5 * (m + 2.0) * std::log(t * t * t * t + t * t + 1.0));
}

SignedLog sl_gamma2(double t, Dimension dim) {
  const double m = dim.N() - 2.0;
  const double l2 = std::log(2.0);
  return sl_pos(-m * log_1mt2(t)) + sl_neg(l2 - 0.5 * m * l2 - m * std::log(t)) +
         sl_pos(l2 - 0.5 * m * std::log1p(t * t * t * t)) +
         sl_neg(-m * l2 - m * std::log(t)) + sl_pos(-m * std::log1p(t * t));
}

SignedLog sl_gamma3(double t, Dimension dim) {
  const double m = dim.N() - 2.0;
  const double l2 = std::log(2.0);
  return sl_pos(-m * log_1mt2(t)) + sl_neg(-m * l2 - m * std::log(t)) +
         sl_pos(-m * std::log1p(t * t));
}

SignedLog sl_gamma3_minus_2tau1sq(double t, Dimension dim) {
  const SignedLog tau = sl_tau1(t, dim);
  return sl_gamma3(t, dim) - SignedLog::from(2.0) * tau * tau;
}

int gamma1_sign(double t, Dimension dim) { return sl_gamma1(t, dim).sgn; }
int gamma2_sign(double t, Dimension dim) { return sl_gamma2(t, dim).sgn; }
int gamma3_sign(double t, Dimension dim) { return sl_gamma3(t, dim).sgn; }
int gamma3_minus_2tau1sq_sign(double t, Dimension dim) {
  return sl_gamma3_minus_2tau1sq(t, dim).sgn;
}

}  // namespace multibubble
