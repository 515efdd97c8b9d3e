#include "doctest.h"

#include <cmath>
#include <cstring>

#include "multibubble/constants.hpp"

#include "oracles.hpp"

using namespace multibubble;

TEST_SUITE("constants") {

TEST_CASE("critical exponent") {
  CHECK(critical_exponent(Dimension(6)) == 3.0);
  CHECK(critical_exponent(Dimension(4)) == 4.0);
  CHECK(critical_exponent(Dimension(7)) == doctest::Approx(2.8).epsilon(1e-15));
  CHECK_THROWS_AS(Dimension(2), DomainError);
}

TEST_CASE("hardy exponents") {
  const Dimension d7(7);
  auto [b1, b2] = hardy_exponents(d7, 0.0);
  CHECK(b1 == 0.0);
  CHECK(b2 == 2.0);

  // both exponents collapse to 1 as mu -> mu_bar
  auto [c1, c2] = hardy_exponents(d7, d7.mu_bar() * (1.0 - 1e-14));
  CHECK(std::fabs(c1 - 1.0) < 1e-6);
  CHECK(std::fabs(c2 - 1.0) < 1e-6);

  // mu = mu_bar/2: beta1 = 1 - sqrt(1/2), cross-checked by beta1*beta2 = mu/mu_bar
  auto [e1, e2] = hardy_exponents(d7, 3.125);
  CHECK(e1 == doctest::Approx(0.2928932188134524).epsilon(1e-14));
  CHECK(e1 * e2 == doctest::Approx(3.125 / 6.25).epsilon(1e-14));

  CHECK_THROWS_AS(hardy_exponents(d7, -0.1), DomainError);
  CHECK_THROWS_AS(hardy_exponents(d7, 6.25), DomainError);
}

TEST_CASE("exponent identities over sampled (N, mu)") {
  for (int n : {3, 5, 7, 9, 12, 20, 31}) {
    const Dimension dim(n);
    for (int i = 0; i < 12; ++i) {
      const double mu = dim.mu_bar() * (i / 12.5);
      auto [b1, b2] = hardy_exponents(dim, mu);
      CHECK(b1 + b2 == doctest::Approx(2.0).epsilon(1e-15));
      CHECK(b1 * b2 == doctest::Approx(mu / dim.mu_bar()).epsilon(2e-14));
      CHECK(b1 <= 1.0);
      CHECK(b2 >= 1.0);
    }
  }
}

TEST_CASE("bubble amplitudes") {
  const Dimension d7(7);
  auto [c0, cmu0] = bubble_amplitudes(d7, 0.0);
  CHECK(c0 == doctest::Approx(std::pow(35.0, 1.25)).epsilon(1e-15));
  CHECK(cmu0 == c0);  // 4 N mu_bar/(N-2) collapses to N(N-2)

  auto [c0b, cmu0b] = bubble_amplitudes(Dimension(10), 0.0);
  CHECK(c0b == doctest::Approx(6400.0).epsilon(1e-14));  // (10*8)^{8/4}
  CHECK(cmu0b == c0b);

  // independent high-precision value of (4*7*5.25/5)^{5/4}
  auto [c0c, cmu1] = bubble_amplitudes(d7, 1.0);
  (void)c0c;
  CHECK(cmu1 == doctest::Approx(68.45956937623096).epsilon(1e-14));

  CHECK_THROWS_AS(bubble_amplitudes(d7, 6.3), DomainError);
}

TEST_CASE("bubble integrals against the Beta closed forms") {
  for (int n : {5, 7, 8, 10, 13}) {
    const auto& bi = bubble_integrals(Dimension(n));
    CHECK(bi.b1 > 0);
    CHECK(bi.b2 > 0);
    CHECK(bi.b1 == doctest::Approx(oracles::b1_closed(n)).epsilon(1e-8));
    CHECK(bi.b2 == doctest::Approx(oracles::b2_closed(n)).epsilon(1e-8));
  }

  // independently computed anchor values at N = 7
  const auto& b7 = bubble_integrals(Dimension(7));
  CHECK(b7.b1 == doctest::Approx(599222.9816172151).epsilon(1e-12));
  CHECK(b7.b2 == doctest::Approx(22979.913536508970).epsilon(1e-12));
}

TEST_CASE("b2 equals S0^{N/2}/2*") {
  for (int n : {7, 9, 11}) {
    const Dimension dim(n);
    const auto& bi = bubble_integrals(dim);
    const double int_u = std::pow(bi.s0, 0.5 * n);  // int U^{2*} = S0^{N/2}
    CHECK(bi.b2 == doctest::Approx(int_u / dim.two_star()).epsilon(1e-10));
  }
}

TEST_CASE("bubble integrals are memoized and deterministic") {
  const Dimension a(9), b(9);
  const auto& r1 = bubble_integrals(a);
  const auto& r2 = bubble_integrals(b);
  CHECK(&r1 == &r2);
  CHECK(std::memcmp(&r1.b1, &r2.b1, sizeof(double)) == 0);
  CHECK_THROWS_AS(bubble_integrals(Dimension(4)), DomainError);
}

TEST_CASE("adaptive quadrature") {
  const auto q = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0,
                                    1e-14, 1e-14, 100000);
  CHECK(q.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  // evaluation cap reached -> typed error carrying the achieved estimate
  CHECK_THROWS_AS(integrate_adaptive(
                      [](double x) { return std::sqrt(std::fabs(x - 0.31)); },
                      0.0, 1.0, 1e-15, 1e-15, 60),
                  QuadratureError);
}

TEST_CASE("hardy params validation") {
  const Dimension d7(7);
  CHECK_NOTHROW(HardyParams(d7, 1.0, 1.0, 1e-3));
  CHECK_THROWS_AS(HardyParams(d7, -1.0, 1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(HardyParams(d7, 1.0, 0.5, 1e-3), DomainError);  // alpha <= 3/5
  CHECK_THROWS_AS(HardyParams(d7, 1.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(HardyParams(d7, 100.0, 1.0, 0.9), DomainError);  // mu_eps >= mu_bar
  const HardyParams hp(d7, 2.0, 1.5, 1e-2);
  CHECK(hp.mu_eps() == doctest::Approx(2e-3).epsilon(1e-12));
}

}  // TEST_SUITE
