#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "multibubble/constants.hpp"
#include "multibubble/green.hpp"

namespace multibubble {

enum class SignPattern { negative, alternating };
enum class SlicePlane { e1e2, e1e3 };

struct RingConfiguration {
  int k = 3;
  double t = 0.5;
  SignPattern pattern = SignPattern::negative;
};

// Everything needed to assemble the leading-order multi-bubble field on a
// 2-D slice of the ball.  The o(1) correction of the expansion is omitted;
// exports carry leading_order = true.
struct ProfileSpec {
  int N = 7;
  HardyParams hardy;
  RingConfiguration ring;
  std::vector<double> lambda;  // lambda0, lambda1 [, lambda2]
  SlicePlane plane = SlicePlane::e1e2;
  double extent = 0.70;  // half-width; corners must stay inside the ball
  int resolution = 101;

  ProfileSpec(Dimension dim, HardyParams h) : N(dim.N()), hardy(h) {}
};

struct FieldGrid {
  int resolution = 0;
  double extent = 0;
  SlicePlane plane = SlicePlane::e1e2;
  std::vector<double> axis;      // shared lattice coordinates per axis
  std::vector<double> values;    // row-major, resolution^2
  std::vector<uint8_t> capped;   // 1 where the cap was applied
  double sigma_eps = 0;
  std::vector<double> delta_eps;
  double max_abs = 0;
};

inline constexpr double kFieldCap = 1e12;

// Aubin-Talenti instanton U_{delta,xi}(x).
double bubble_U(double delta, const BallPoint& xi, const BallPoint& x, Dimension dim);

// Hardy bubble V_{mu,sigma}(x); at the singular origin (mu > 0) the cap is
// returned instead of inf.
double bubble_V(double mu, double sigma, const BallPoint& x, Dimension dim);

// Pointwise field value at an arbitrary point of the ball.
double field_value(const ProfileSpec& spec, const BallPoint& x);

FieldGrid assemble_field(const ProfileSpec& spec);

// max |u(R_k x) - u(x)| (negative pattern) or max |u(R_4 x) + u(x)|
// (alternating) over the grid nodes, together with max |u|.
struct SymmetryResidual {
  double residual;
  double max_abs;
};
SymmetryResidual rotation_residual(const ProfileSpec& spec);
// residual of u(R_k^2 x) = u(x); the exact invariance of the alternating field
SymmetryResidual half_turn_residual(const ProfileSpec& spec);

void write_csv(const FieldGrid& grid, std::ostream& out);
void write_json(const FieldGrid& grid, const ProfileSpec& spec, std::ostream& out);

}  // namespace multibubble
