#include "doctest.h"

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "multibubble/field.hpp"
#include "multibubble/solver.hpp"

#include "oracles.hpp"

using namespace multibubble;

// end-to-end: locate a verified minimum, assemble the field there, export it
TEST_SUITE("pipeline") {

namespace {

ProfileSpec spec_at_minimum(int n, int k, const CriticalPointRecord& rec) {
  const Dimension dim(n);
  ProfileSpec spec(dim, HardyParams(dim, 1.0, 1.0, 1e-3));
  spec.ring.k = k;
  spec.ring.t = rec.t;
  spec.ring.pattern = SignPattern::negative;
  spec.lambda = {rec.lambda[0], rec.lambda[1]};
  spec.resolution = 61;
  return spec;
}

}  // namespace

TEST_CASE("k=2 minimum at N=7 exports a symmetric field") {
  const Dimension d7(7);
  const auto records = find_critical_points(2, d7);
  REQUIRE(records.size() == 2);
  const auto& minimum = records[1];
  REQUIRE(minimum.kind == CriticalKind::local_min);

  const ProfileSpec spec = spec_at_minimum(7, 2, minimum);
  const FieldGrid grid = assemble_field(spec);
  CHECK(grid.max_abs > 0);

  // the two-bubble ring is invariant under the half turn
  const auto sym = rotation_residual(spec);
  CHECK(sym.residual <= 1e-12 * sym.max_abs);

  // spot re-sum at a grid node against the bubble constituents
  const double eps_pow = std::pow(1e-3, 0.2);
  const double a = grid.axis[40], b = grid.axis[17];
  BallPoint x;
  x.x.assign(7, 0.0);
  x.x[0] = a;
  x.x[1] = b;
  double expected = bubble_V(spec.hardy.mu_eps(), minimum.lambda[0] * eps_pow, x, d7);
  for (const auto& xi : ring_points(2, minimum.t, d7))
    expected -= bubble_U(minimum.lambda[1] * eps_pow, xi, x, d7);
  CHECK(grid.values[static_cast<size_t>(17) * 61 + 40] ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("k=3 minimum at the threshold dimension exports a symmetric field") {
  // N = 13 is the recorded threshold where the pair of f3 critical points
  // first appears; the minimum feeds the export
  const Dimension d13(13);
  const auto records = find_critical_points(3, d13);
  REQUIRE(records.size() == 2);
  CHECK(records[0].morse_index == 1);
  REQUIRE(records[1].morse_index == 0);

  const ProfileSpec spec = spec_at_minimum(13, 3, records[1]);
  const auto sym = rotation_residual(spec);
  CHECK(sym.max_abs > 0);
  CHECK(sym.residual <= 1e-12 * sym.max_abs);

  std::ostringstream js;
  const FieldGrid grid = assemble_field(spec);
  write_json(grid, spec, js);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["metadata"]["leading_order"] == true);
  CHECK(j["metadata"]["spec"]["k"] == 3);
  CHECK(j["values"].size() == static_cast<size_t>(61) * 61);
}

}  // TEST_SUITE
