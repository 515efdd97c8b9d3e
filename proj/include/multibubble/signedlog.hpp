#pragma once

#include <cmath>
#include <limits>

namespace multibubble {

// Number represented as sgn * exp(lg).  Large-N scans need signs of
// expressions whose terms exceed the double range by hundreds of decades;
// carrying (sign, log magnitude) keeps every combination finite.
struct SignedLog {
  double lg = -std::numeric_limits<double>::infinity();
  int sgn = 0;  // -1, 0, +1

  static SignedLog zero() { return {}; }

  static SignedLog from(double v) {
    if (v == 0.0) return {};
    return {std::log(std::fabs(v)), v > 0 ? 1 : -1};
  }

  // sgn * exp(lg) with sgn in {-1,+1}
  static SignedLog from_log(double lg, int sgn) {
    return {lg, sgn};
  }

  double value() const {  // may round to 0 or +-inf outside double range
    if (sgn == 0) return 0.0;
    return sgn * std::exp(lg);
  }
};

inline SignedLog operator*(SignedLog a, SignedLog b) {
  if (a.sgn == 0 || b.sgn == 0) return SignedLog::zero();
  return {a.lg + b.lg, a.sgn * b.sgn};
}

inline SignedLog operator/(SignedLog a, SignedLog b) {
  if (a.sgn == 0) return SignedLog::zero();
  return {a.lg - b.lg, a.sgn * b.sgn};
}

inline SignedLog operator-(SignedLog a) {
  a.sgn = -a.sgn;
  return a;
}

inline SignedLog operator+(SignedLog a, SignedLog b) {
  if (a.sgn == 0) return b;
  if (b.sgn == 0) return a;
  const double m = std::max(a.lg, b.lg);
  const double s = a.sgn * std::exp(a.lg - m) + b.sgn * std::exp(b.lg - m);
  if (s == 0.0) return SignedLog::zero();
  return {m + std::log(std::fabs(s)), s > 0 ? 1 : -1};
}

inline SignedLog operator-(SignedLog a, SignedLog b) { return a + (-b); }

// requires a >= 0
inline SignedLog sl_sqrt(SignedLog a) {
  if (a.sgn == 0) return a;
  return {0.5 * a.lg, 1};
}

// sign of a - b
inline int sl_compare(SignedLog a, SignedLog b) { return (a - b).sgn; }

}  // namespace multibubble
