#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

#include "multibubble/field.hpp"

#include "oracles.hpp"

using namespace multibubble;

namespace {

BallPoint pt(std::initializer_list<double> coords, int n) {
  BallPoint p;
  p.x.assign(coords);
  p.x.resize(static_cast<size_t>(n), 0.0);
  return p;
}

ProfileSpec base_spec(int n, int k, SignPattern pattern, double t,
                      std::vector<double> lambda) {
  const Dimension dim(n);
  ProfileSpec spec(dim, HardyParams(dim, 1.0, 1.0, 1e-3));
  spec.ring.k = k;
  spec.ring.t = t;
  spec.ring.pattern = pattern;
  spec.lambda = std::move(lambda);
  spec.resolution = 41;
  return spec;
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("bubble U basics") {
  const Dimension d7(7);
  const double c0 = bubble_amplitudes(d7, 0.0).first;
  const BallPoint origin = pt({}, 7);
  CHECK(bubble_U(1.0, origin, origin, d7) == doctest::Approx(c0).epsilon(1e-15));

  // translation covariance
  for (int i = 0; i < 10; ++i) {
    BallPoint xi = pt({oracles::uniform(-0.4, 0.4), oracles::uniform(-0.4, 0.4)}, 7);
    BallPoint x = pt({oracles::uniform(-0.4, 0.4), oracles::uniform(-0.4, 0.4)}, 7);
    BallPoint shifted = x;
    for (size_t c = 0; c < 7; ++c) shifted.x[c] -= xi.x[c];
    CHECK(bubble_U(0.7, xi, x, d7) ==
          doctest::Approx(bubble_U(0.7, origin, shifted, d7)).epsilon(1e-14));
  }

  // radial decay U ~ C0 |x|^{-(N-2)}
  for (double r : {10.0, 100.0}) {
    const BallPoint far = pt({r}, 7);
    const double ratio = bubble_U(1.0, origin, far, d7) / (c0 * std::pow(r, -5.0));
    CHECK(std::fabs(ratio - 1.0) < 3.0 / (r * r));
  }

  CHECK_THROWS_AS(bubble_U(0.0, origin, origin, d7), DomainError);
}

TEST_CASE("bubble V reduces to U at mu = 0") {
  const Dimension d7(7);
  const BallPoint origin = pt({}, 7);
  for (int i = 0; i < 1000; ++i) {
    BallPoint x = pt({oracles::uniform(-0.7, 0.7), oracles::uniform(-0.7, 0.7),
                      oracles::uniform(-0.2, 0.2)},
                     7);
    const double sigma = oracles::uniform(0.1, 2.0);
    const double v = bubble_V(0.0, sigma, x, d7);
    const double u = bubble_U(sigma, origin, x, d7);
    CHECK(v == doctest::Approx(u).epsilon(1e-14));
  }
}

TEST_CASE("bubble V at and near the singular origin") {
  const Dimension d7(7);
  CHECK(bubble_V(0.1, 1.0, pt({}, 7), d7) == kFieldCap);
  // finite but large close to the origin; never inf
  const double v = bubble_V(0.1, 1.0, pt({1e-200}, 7), d7);
  CHECK(std::isfinite(v));
}

TEST_CASE("bubble V spot values against a direct reimplementation") {
  const Dimension d7(7);
  const double mu = 0.1, sigma = 1.0;
  const double mb = 6.25;
  const double b1 = 1.0 - std::sqrt((mb - mu) / mb);
  const double b2 = 1.0 + std::sqrt((mb - mu) / mb);
  const double cmu = std::pow(4.0 * 7.0 * (mb - mu) / 5.0, 1.25);
  for (double r : {0.05, 0.3, 0.8}) {
    const double expected =
        cmu * std::pow(sigma / (sigma * sigma * std::pow(r, b1) + std::pow(r, b2)), 2.5);
    CHECK(bubble_V(mu, sigma, pt({r}, 7), d7) ==
          doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("integral of V^{2*} is independent of sigma") {
  const Dimension d7(7);
  const int n = 7;
  const double omega6 = 2.0 * std::pow(M_PI, 3.5) / std::tgamma(3.5);
  const auto integral = [&](double mu, double sigma) {
    // radial quadrature of |V|^{2*} r^{N-1} after r = s/(1-s)
    const auto f = [&](double s) {
      if (s <= 0.0 || s >= 1.0) return 0.0;
      const double r = s / (1.0 - s);
      const double v = bubble_V(mu, sigma, pt({r}, 7), d7);
      return std::pow(v, 2.0 * n / (n - 2.0)) * std::pow(r, n - 1.0) /
             ((1.0 - s) * (1.0 - s));
    };
    return omega6 * integrate_adaptive(f, 0.0, 1.0, 1e-12, 1e-12, 400000).value;
  };
  const double i1 = integral(0.1, 1.0);
  const double i2 = integral(0.1, 2.5);
  CHECK(i1 == doctest::Approx(i2).epsilon(1e-8));

  // at mu = 0 the full-space integral ties back to the bubble integral b2:
  // int U^{2*} = 2* b2 (a second, independent quadrature route)
  const auto& bi = bubble_integrals(d7);
  CHECK(integral(0.0, 1.0) ==
        doctest::Approx(d7.two_star() * bi.b2).epsilon(1e-8));
  CHECK(integral(0.0, 0.5) ==
        doctest::Approx(std::pow(bi.s0, 3.5)).epsilon(1e-8));  // = S0^{N/2}
}

TEST_CASE("assembled field equals its independent bubble re-sum") {
  auto spec = base_spec(7, 3, SignPattern::negative, 0.5, {1.0, 1.2});
  const Dimension d7(7);
  const double eps_pow = std::pow(spec.hardy.eps, 0.2);
  for (int i = 0; i < 25; ++i) {
    const BallPoint x =
        pt({oracles::uniform(-0.6, 0.6), oracles::uniform(-0.6, 0.6)}, 7);
    double expected = bubble_V(spec.hardy.mu_eps(), 1.0 * eps_pow, x, d7);
    for (int b = 1; b <= 3; ++b) {
      const double phi = 2.0 * M_PI * b / 3.0;
      const BallPoint xi = pt({0.5 * std::cos(phi), 0.5 * std::sin(phi)}, 7);
      expected -= bubble_U(1.2 * eps_pow, xi, x, d7);
    }
    CHECK(field_value(spec, x) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("k=3 field is R3-invariant") {
  auto spec = base_spec(7, 3, SignPattern::negative, 0.5, {1.0, 1.2});
  spec.resolution = 61;
  const auto sym = rotation_residual(spec);
  CHECK(sym.max_abs > 0);
  CHECK(sym.residual <= 1e-12 * sym.max_abs);
}

TEST_CASE("alternating field: exact half-turn symmetry, ring anti-symmetry") {
  // the R4 half turn is an exact invariance of the five-bubble field
  auto spec = base_spec(7, 4, SignPattern::alternating, 0.4, {0.9, 1.1, 0.7});
  spec.resolution = 41;
  const auto half = half_turn_residual(spec);
  CHECK(half.residual <= 1e-12 * half.max_abs);

  // with equal ring speeds, u(R4 x) + u(x) = 2 V(x) exactly: the alternating
  // ring sum is R4-anti-symmetric while the center bubble is R4-even
  auto eq = base_spec(7, 4, SignPattern::alternating, 0.4, {0.9, 1.1, 1.1});
  const Dimension d7(7);
  const double eps_pow = std::pow(eq.hardy.eps, 0.2);
  for (int i = 0; i < 30; ++i) {
    const BallPoint x =
        pt({oracles::uniform(-0.6, 0.6), oracles::uniform(-0.6, 0.6)}, 7);
    BallPoint rx = x;
    rx.x[0] = -x.x[1];
    rx.x[1] = x.x[0];
    const double two_v = 2.0 * bubble_V(eq.hardy.mu_eps(), 0.9 * eps_pow, x, d7);
    const double sum = field_value(eq, x) + field_value(eq, rx);
    CHECK(sum == doctest::Approx(two_v).epsilon(1e-12));
  }

  // consequently the quarter-turn anti-symmetry residual is dominated by the
  // rotation-invariant center bubble, not by rounding
  const auto quarter = rotation_residual(eq);
  CHECK(quarter.residual > 1.0);
}

TEST_CASE("grid validation and capping") {
  auto spec = base_spec(7, 3, SignPattern::negative, 0.5, {1.0, 1.0});
  spec.extent = 0.9;  // corners at 0.9 sqrt2 > 1
  CHECK_THROWS_AS(assemble_field(spec), DomainError);

  auto spec2 = base_spec(7, 4, SignPattern::alternating, 0.4, {1.0, 1.0, 1.0});
  spec2.resolution = 41;  // odd: one node exactly at the singular origin
  const FieldGrid grid = assemble_field(spec2);
  const size_t center = static_cast<size_t>(20) * 41 + 20;
  CHECK(grid.capped[center] == 1);
  CHECK(grid.values[center] == kFieldCap);
  size_t capped_count = 0;
  for (auto c : grid.capped) capped_count += c;
  CHECK(capped_count >= 1);
  for (double v : grid.values) CHECK(std::isfinite(v));
}

TEST_CASE("writers") {
  auto spec = base_spec(7, 3, SignPattern::negative, 0.5, {1.0, 1.0});
  spec.resolution = 5;
  const FieldGrid grid = assemble_field(spec);

  std::ostringstream csv;
  write_csv(grid, csv);
  const std::string text = csv.str();
  CHECK(text.rfind("x1,x2,u,capped\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 5 * 5);

  std::ostringstream js;
  write_json(grid, spec, js);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["metadata"]["leading_order"] == true);
  CHECK(j["metadata"]["spec"]["N"] == 7);
  CHECK(j["values"].size() == 25);
}

TEST_CASE("alternating pattern requires the square") {
  auto spec = base_spec(7, 3, SignPattern::alternating, 0.5, {1.0, 1.0});
  CHECK_THROWS_AS(assemble_field(spec), DomainError);
}

}  // TEST_SUITE
