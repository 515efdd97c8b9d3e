#include "multibubble/field.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "json.hpp"

namespace multibubble {

double bubble_U(double delta, const BallPoint& xi, const BallPoint& x, Dimension dim) {
  if (!(delta > 0)) throw DomainError("bubble_U: delta > 0 required");
  const double c0 = bubble_amplitudes(dim, 0.0).first;
  double d2 = 0;
  for (size_t i = 0; i < x.x.size(); ++i) {
    const double xi_i = i < xi.x.size() ? xi.x[i] : 0.0;
    const double d = x.x[i] - xi_i;
    d2 += d * d;
  }
  return c0 * std::pow(delta / (delta * delta + d2), 0.5 * (dim.N() - 2.0));
}

double bubble_V(double mu, double sigma, const BallPoint& x, Dimension dim) {
  if (!(sigma > 0)) throw DomainError("bubble_V: sigma > 0 required");
  const auto [c0, c_mu] = bubble_amplitudes(dim, mu);
  (void)c0;
  const auto [beta1, beta2] = hardy_exponents(dim, mu);
  const double r = x.norm();
  if (r == 0.0 && mu > 0.0) return kFieldCap;  // singular origin, limit policy
  const double denom = sigma * sigma * std::pow(r, beta1) + std::pow(r, beta2);
  const double v = c_mu * std::pow(sigma / denom, 0.5 * (dim.N() - 2.0));
  return std::min(v, kFieldCap);
}

namespace {

std::vector<BallPoint> bubble_positions(const ProfileSpec& spec) {
  // R_k^i xi(t), i = 1..k: the ring orbit rotated one step forward
  const auto orbit = ring_points(spec.ring.k, spec.ring.t, Dimension(spec.N));
  std::vector<BallPoint> pos;
  const int k = spec.ring.k;
  for (int i = 1; i <= k; ++i) pos.push_back(orbit[static_cast<size_t>(i % k)]);
  return pos;
}

struct FieldEvaluator {
  Dimension dim;
  double mu_eps, sigma_eps;
  std::vector<double> deltas;  // per ring bubble, index 1..k
  std::vector<double> signs;
  std::vector<BallPoint> positions;

  explicit FieldEvaluator(const ProfileSpec& spec) : dim(spec.N) {
    if (spec.lambda.size() < 2)
      throw DomainError("ProfileSpec: lambda0 and lambda1 required");
    for (double l : spec.lambda)
      if (!(l > 0)) throw DomainError("ProfileSpec: lambda entries must be positive");
    mu_eps = spec.hardy.mu_eps();
    const double eps_pow = std::pow(spec.hardy.eps, 1.0 / (spec.N - 2.0));
    sigma_eps = spec.lambda[0] * eps_pow;
    positions = bubble_positions(spec);

    const int k = spec.ring.k;
    deltas.resize(static_cast<size_t>(k));
    signs.resize(static_cast<size_t>(k));
    if (spec.ring.pattern == SignPattern::negative) {
      for (int i = 1; i <= k; ++i) {
        deltas[static_cast<size_t>(i - 1)] = spec.lambda[1] * eps_pow;
        signs[static_cast<size_t>(i - 1)] = -1.0;
      }
    } else {
      if (k != 4)
        throw DomainError("alternating pattern defined for the k = 4 square");
      const double l2 = spec.lambda.size() > 2 ? spec.lambda[2] : spec.lambda[1];
      for (int i = 1; i <= k; ++i) {
        const bool odd = i % 2 == 1;
        deltas[static_cast<size_t>(i - 1)] = (odd ? spec.lambda[1] : l2) * eps_pow;
        signs[static_cast<size_t>(i - 1)] = odd ? -1.0 : 1.0;  // (-1)^i
      }
    }
  }

  struct Sample {
    double u;
    bool capped;  // the center bubble hit the cap at this point
  };

  Sample eval(const BallPoint& x) const {
    const double v = bubble_V(mu_eps, sigma_eps, x, dim);
    double u = v;
    for (size_t i = 0; i < positions.size(); ++i)
      u += signs[i] * bubble_U(deltas[i], positions[i], x, dim);
    return {u, v >= kFieldCap || std::fabs(u) >= kFieldCap};
  }

  double operator()(const BallPoint& x) const { return eval(x).u; }
};

BallPoint slice_point(const ProfileSpec& spec, double a, double b) {
  BallPoint p;
  p.x.assign(static_cast<size_t>(spec.N), 0.0);
  p.x[0] = a;
  if (spec.plane == SlicePlane::e1e2)
    p.x[1] = b;
  else
    p.x[2] = b;
  return p;
}

}  // namespace

double field_value(const ProfileSpec& spec, const BallPoint& x) {
  return FieldEvaluator(spec)(x);
}

FieldGrid assemble_field(const ProfileSpec& spec) {
  if (spec.resolution < 2) throw DomainError("assemble_field: resolution >= 2");
  if (spec.extent * std::sqrt(2.0) > 1.0 + 1e-12)
    throw DomainError("assemble_field: grid corners leave the closed ball");

  const FieldEvaluator eval(spec);
  FieldGrid grid;
  grid.resolution = spec.resolution;
  grid.extent = spec.extent;
  grid.plane = spec.plane;
  grid.sigma_eps = eval.sigma_eps;
  grid.delta_eps = eval.deltas;

  const int res = spec.resolution;
  grid.axis.resize(static_cast<size_t>(res));
  for (int i = 0; i < res; ++i)
    grid.axis[static_cast<size_t>(i)] = -spec.extent + 2.0 * spec.extent * i / (res - 1);

  grid.values.resize(static_cast<size_t>(res) * res);
  grid.capped.assign(static_cast<size_t>(res) * res, 0);
  for (int row = 0; row < res; ++row) {
    for (int col = 0; col < res; ++col) {
      const BallPoint p = slice_point(spec, grid.axis[static_cast<size_t>(col)],
                                      grid.axis[static_cast<size_t>(row)]);
      const FieldEvaluator::Sample s = eval.eval(p);
      const size_t idx = static_cast<size_t>(row) * res + col;
      if (s.capped) {
        grid.values[idx] = s.u > 0 ? kFieldCap : -kFieldCap;
        grid.capped[idx] = 1;
      } else {
        grid.values[idx] = s.u;
        grid.max_abs = std::max(grid.max_abs, std::fabs(s.u));
      }
    }
  }
  return grid;
}

namespace {

SymmetryResidual rotation_residual_impl(const ProfileSpec& spec, int turns) {
  const FieldEvaluator eval(spec);
  const int res = spec.resolution;
  const bool anti = spec.ring.pattern == SignPattern::alternating && turns % 2 != 0;

  // exact quarter and half turns avoid spurious trig rounding
  const bool quarter = spec.ring.k == 4 && turns % 4 == 1;
  const bool half = 2 * (turns % spec.ring.k) == spec.ring.k;
  const double phi = 2.0 * M_PI * turns / spec.ring.k;
  const double c = std::cos(phi), s = std::sin(phi);

  SymmetryResidual out{0.0, 0.0};
  for (int row = 0; row < res; ++row) {
    for (int col = 0; col < res; ++col) {
      const double a = -spec.extent + 2.0 * spec.extent * col / (res - 1);
      const double b = -spec.extent + 2.0 * spec.extent * row / (res - 1);
      const BallPoint p = slice_point(spec, a, b);
      const FieldEvaluator::Sample su = eval.eval(p);
      if (su.capped) continue;  // masked in the export

      BallPoint q = p;  // rotate in the x1-x2 plane
      if (quarter) {
        q.x[0] = -p.x[1];
        q.x[1] = p.x[0];
      } else if (half) {
        q.x[0] = -p.x[0];
        q.x[1] = -p.x[1];
      } else {
        q.x[0] = c * p.x[0] - s * p.x[1];
        q.x[1] = s * p.x[0] + c * p.x[1];
      }
      const FieldEvaluator::Sample sr = eval.eval(q);
      if (sr.capped) continue;

      const double diff = anti ? std::fabs(sr.u + su.u) : std::fabs(sr.u - su.u);
      out.residual = std::max(out.residual, diff);
      out.max_abs = std::max(out.max_abs, std::fabs(su.u));
    }
  }
  return out;
}

}  // namespace

SymmetryResidual rotation_residual(const ProfileSpec& spec) {
  return rotation_residual_impl(spec, 1);
}

SymmetryResidual half_turn_residual(const ProfileSpec& spec) {
  return rotation_residual_impl(spec, std::max(1, spec.ring.k / 2));
}

void write_csv(const FieldGrid& grid, std::ostream& out) {
  out << "x1,x2,u,capped\n";
  out << std::setprecision(17);
  const int res = grid.resolution;
  for (int row = 0; row < res; ++row)
    for (int col = 0; col < res; ++col) {
      const size_t idx = static_cast<size_t>(row) * res + col;
      out << grid.axis[static_cast<size_t>(col)] << ','
          << grid.axis[static_cast<size_t>(row)] << ',' << grid.values[idx] << ','
          << static_cast<int>(grid.capped[idx]) << '\n';
    }
}

void write_json(const FieldGrid& grid, const ProfileSpec& spec, std::ostream& out) {
  nlohmann::json j;
  j["metadata"] = {
      {"spec",
       {{"N", spec.N},
        {"k", spec.ring.k},
        {"t", spec.ring.t},
        {"pattern", spec.ring.pattern == SignPattern::negative ? "negative" : "alternating"},
        {"mu0", spec.hardy.mu0},
        {"alpha", spec.hardy.alpha},
        {"eps", spec.hardy.eps},
        {"lambda", spec.lambda},
        {"plane", spec.plane == SlicePlane::e1e2 ? "e1e2" : "e1e3"},
        {"extent", spec.extent},
        {"resolution", spec.resolution}}},
      {"leading_order", true},
      {"version", "0.1.0"}};
  j["sigma_eps"] = grid.sigma_eps;
  j["delta_eps"] = grid.delta_eps;
  j["axis"] = grid.axis;
  j["values"] = grid.values;
  j["capped"] = grid.capped;
  out << j.dump(2) << '\n';
}

}  // namespace multibubble
