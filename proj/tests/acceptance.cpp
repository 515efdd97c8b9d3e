// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.  Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "multibubble/claims.hpp"
#include "multibubble/energy.hpp"
#include "multibubble/field.hpp"
#include "multibubble/solver.hpp"

#include "oracles.hpp"

using namespace multibubble;

namespace {

struct Criterion {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& note) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "    ok   " : "    FAIL ") + note);
  }
  void info(const std::string& note) { notes.push_back("         " + note); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double evidence(const ClaimReport& r, const std::string& quantity) {
  for (const auto& row : r.evidence)
    if (row.quantity == quantity) return row.value;
  return std::nan("");
}

// --------------------------------------------------------------------------
// 1. k=2 existence: two critical points, Morse indices {0,1}, grad <= 1e-10
// --------------------------------------------------------------------------
Criterion criterion1() {
  Criterion c;
  for (int n : {7, 8, 9, 10, 12, 15}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto records = find_critical_points(2, Dimension(n));
    const double dt = seconds_since(t0);
    bool ok = records.size() == 2;
    if (ok) {
      ok = records[0].morse_index + records[1].morse_index == 1;
      for (const auto& r : records) ok = ok && r.grad_norm <= 1e-10;
    }
    c.require(ok, "N=" + std::to_string(n) + ": " + std::to_string(records.size()) +
                      " points, indices {" +
                      (records.size() == 2 ? std::to_string(records[0].morse_index) +
                                                 "," +
                                                 std::to_string(records[1].morse_index)
                                           : "-") +
                      "}, max |grad| " +
                      fmt("%.2e", records.empty()
                                      ? std::nan("")
                                      : std::max(records[0].grad_norm,
                                                 records.back().grad_norm)));
    c.require(dt < 10.0, "N=" + std::to_string(n) + " runtime " + fmt("%.2f", dt) + " s < 10 s");
  }
  return c;
}

// --------------------------------------------------------------------------
// 2. k=3 at N=7: no iota1 sign change; threshold scan over N=7..200 with a
//    grid-stable N_min
// --------------------------------------------------------------------------
Criterion criterion2() {
  Criterion c;
  const Dimension d7(7);
  const double tstar =
      bisect_sign([&](double t) { return gamma1_sign(t, d7); }, 0.05, 0.5, 1e-13);
  const double lo = tstar + 1e-4, hi = 1.0 - 1e-4;
  const int grid = 10000;
  int changes = 0;
  int prev = iota1_sign(lo, d7);
  for (int i = 1; i < grid; ++i) {
    const int s = iota1_sign(lo + (hi - lo) * i / (grid - 1), d7);
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  c.require(changes == 0,
            "N=7: iota1 sign changes on (t*+1e-4, 1-1e-4) at 1e4 points = " +
                std::to_string(changes) + " -> verdict verified");

  const auto [n_min, report] = scan_k3_threshold(200, 10001);
  c.require(report.verdict == Verdict::verified,
            "threshold scan verdict: " + to_string(report.verdict));
  c.info("recorded N_min = " + std::to_string(n_min) + " (two roots of iota1)");
  const auto [n_min4, report4] = scan_k3_threshold(200, 40004);
  (void)report4;
  c.require(n_min4 == n_min, "N_min stable under grid refinement x4 (" +
                                 std::to_string(n_min) + " vs " +
                                 std::to_string(n_min4) + ")");
  return c;
}

// --------------------------------------------------------------------------
// 3. k=3 large-N machinery at t = 1/2
// --------------------------------------------------------------------------
Criterion criterion3() {
  Criterion c;
  double worst = 0;
  for (int n = 7; n <= 60; ++n) {
    const double val = coeff_jets(0.5, Dimension(n)).tau1.d1;
    const double expect = -(n - 2.0) * std::ldexp(1.0, n - 1);
    worst = std::max(worst, std::fabs(val - expect) / std::fabs(expect));
  }
  c.require(worst <= 1e-14,
            "tau1'(1/2) = -(N-2) 2^{N-1} for N in 7..60, worst rel err " +
                fmt("%.2e", worst));

  const ClaimReport rep = verify_k3_largeN_inequalities(Dimension(7), 400);
  c.require(rep.verdict == Verdict::verified,
            "inequality scan verdict: " + to_string(rep.verdict));
  const double thr1 = evidence(rep, "smallest N for the gamma1' bound");
  const double thr2 = evidence(rep, "smallest N for the ratio bound");
  c.require(thr1 > 0 && thr1 < 400,
            "gamma1'(1/2) upper bound holds for all N >= " + fmt("%.0f", thr1));
  c.require(thr2 > 0 && thr2 < 400,
            "gamma1/tau1 ratio lower bound holds for all N >= " + fmt("%.0f", thr2));
  return c;
}

// --------------------------------------------------------------------------
// 4. k=4 non-existence for N = 7..30
// --------------------------------------------------------------------------
Criterion criterion4() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  double min_iota2 = HUGE_VAL, max_gamma2 = -HUGE_VAL;
  bool all = true;
  for (int n = 7; n <= 30; ++n) {
    const ClaimReport r = verify_k4_nonexistence(Dimension(n), 10000);
    all = all && r.verdict == Verdict::verified;
    min_iota2 = std::min(min_iota2, evidence(r, "min iota2 on grid"));
    max_gamma2 = std::max(max_gamma2, evidence(r, "gamma2"));
  }
  const double dt = seconds_since(t0);
  c.require(all, "iota2 > 0 on (t*+1e-4, 1-1e-4) and the key inequality chain for all N in 7..30");
  c.info("min iota2 over all grids " + fmt("%.4g", min_iota2) +
         "; max gamma2((sqrt6-sqrt2)/2) " + fmt("%.4g", max_gamma2));
  c.require(max_gamma2 < 0, "gamma2((sqrt6-sqrt2)/2) < 0 for every N");
  c.require(dt < 30.0, "total runtime " + fmt("%.2f", dt) + " s < 30 s");
  return c;
}

// --------------------------------------------------------------------------
// 5. k=5 existence at N = 7
// --------------------------------------------------------------------------
Criterion criterion5() {
  Criterion c;
  const Dimension d7(7);
  const ClaimReport r = verify_k5_existence(d7);
  c.require(r.verdict == Verdict::verified, "claim verdict: " + to_string(r.verdict));
  const double t1 = evidence(r, "refined iota3 root");
  const double t1star = evidence(r, "gamma3 root");
  c.require(t1 > 0 && t1 < t1star,
            "iota3 changes sign in (0, t1*): t1 = " + fmt("%.10f", t1));
  const double res = evidence(r, "max stationarity residual");
  c.require(res <= 1e-10,
            "stationarity-system residuals " + fmt("%.2e", res) + " <= 1e-10");
  c.require(evidence(r, "lambda0") > 0 && evidence(r, "lambda1") > 0 &&
                evidence(r, "lambda2") > 0,
            "profile lambdas positive");
  c.require(evidence(r, "reduced determinant sign") == -1 &&
                evidence(r, "gamma3 sign") == -1,
            "reduced 3x3 determinant sign equals sign(gamma3(t1)) = -1");
  c.require(evidence(r, "grad_norm") <= 1e-10,
            "assembled f5 critical point: |grad| " +
                fmt("%.2e", evidence(r, "grad_norm")));
  const auto recs = find_critical_points(5, d7);
  c.require(recs.size() == 1 && !recs[0].degenerate,
            "full f5 Hessian nondegenerate at the critical point");
  return c;
}

// --------------------------------------------------------------------------
// 6. oracle / consistency suite
// --------------------------------------------------------------------------
Criterion criterion6() {
  Criterion c;

  // gamma formulas vs G/H composition, 100 random (t, N)
  {
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      const int n = 7 + static_cast<int>(oracles::uniform(0.0, 5.999));
      const Dimension dim(n);
      const double t = oracles::uniform(0.05, 0.95);
      const auto co = interaction_coeffs(t, dim);
      const auto sq = ring_points(4, t, dim);
      const auto tri = ring_points(3, t, dim);
      BallPoint origin;
      origin.x.assign(static_cast<size_t>(n), 0.0);
      const double vals[5] = {
          green(sq[0], origin, dim),
          regular_part(tri[0], tri[0], dim) - 2.0 * green(tri[0], tri[1], dim),
          regular_part(sq[0], sq[0], dim) - 2.0 * green(sq[0], sq[1], dim) -
              green(sq[0], sq[2], dim),
          regular_part(sq[0], sq[0], dim) - green(sq[0], sq[2], dim),
          green(sq[0], sq[1], dim)};
      const double libs[5] = {co.tau1, co.gamma1, co.gamma2, co.gamma3, co.gamma4};
      for (int q = 0; q < 5; ++q)
        worst = std::max(worst, std::fabs(libs[q] - vals[q]) / std::fabs(vals[q]));
    }
    c.require(worst <= 1e-12,
              "gamma/tau closed forms vs G/H composition, worst rel " + fmt("%.2e", worst));
  }

  // analytic gradients and Hessians of f2..f5 vs finite differences
  {
    const Dimension d7(7);
    double worst_g = 0, worst_h = 0;
    for (int k : {2, 3, 4, 5}) {
      for (int i = 0; i < 50; ++i) {
        std::vector<double> v{oracles::uniform(0.4, 1.8), oracles::uniform(0.4, 1.8)};
        if (k == 5) v.push_back(oracles::uniform(0.4, 1.8));
        v.push_back(oracles::uniform(0.15, 0.85));
        const auto fn = [&](const std::vector<double>& u) {
          LambdaState st;
          st.lambda0 = u[0];
          st.lambda1 = u[1];
          if (k == 5) {
            st.lambda2 = u[2];
            return f5_eval(st, u[3], d7).value;
          }
          return f_k_eval(k, st, u[2], d7).value;
        };
        LambdaState st;
        st.lambda0 = v[0];
        st.lambda1 = v[1];
        EnergyEvaluation e;
        if (k == 5) {
          st.lambda2 = v[2];
          e = f5_eval(st, v[3], d7);
        } else {
          e = f_k_eval(k, st, v[2], d7);
        }
        const auto g = oracles::fd_gradient(fn, v);
        double gs = 0;
        for (int q = 0; q < e.grad.n; ++q) gs = std::max(gs, std::fabs(e.grad[q]));
        for (int q = 0; q < e.grad.n; ++q)
          worst_g = std::max(worst_g, std::fabs(e.grad[q] - g[static_cast<size_t>(q)]) / gs);
        const Mat h = oracles::fd_hessian(fn, v);
        const double hs = e.hess.max_abs();
        for (int a = 0; a < e.hess.n; ++a)
          for (int b = 0; b < e.hess.n; ++b)
            worst_h = std::max(worst_h, std::fabs(e.hess(a, b) - h(a, b)) / hs);
      }
    }
    c.require(worst_g <= 1e-6,
              "gradients of f2..f5 vs central differences, worst rel " + fmt("%.2e", worst_g));
    c.require(worst_h <= 1e-6,
              "Hessians of f2..f5 vs central differences, worst rel " + fmt("%.2e", worst_h));
  }

  // nu1 closed log form vs direct f3 evaluation
  {
    const Dimension d7(7);
    double worst = 0;
    for (int i = 0; i <= 40; ++i) {
      const double t = 0.52 + (0.95 - 0.52) * i / 40.0;
      const double a = nu1(t, d7), b = nu_ring_direct(3, t, d7);
      worst = std::max(worst, std::fabs(a - b) / std::fabs(b));
    }
    c.require(worst <= 1e-10, "nu1 closed form vs direct f3, worst rel " + fmt("%.2e", worst));
  }

  // b1, b2 quadrature vs the Beta closed forms
  {
    double worst = 0;
    for (int n : {5, 7, 9, 11, 15}) {
      const auto& bi = bubble_integrals(Dimension(n));
      worst = std::max(worst,
                       std::fabs(bi.b1 - oracles::b1_closed(n)) / oracles::b1_closed(n));
      worst = std::max(worst,
                       std::fabs(bi.b2 - oracles::b2_closed(n)) / oracles::b2_closed(n));
    }
    c.require(worst <= 1e-8, "b1, b2 quadrature vs Beta closed form, worst rel " + fmt("%.2e", worst));
  }

  // V_{0,sigma} = U_{sigma,0} on 1000 random points
  {
    const Dimension d7(7);
    BallPoint origin;
    origin.x.assign(7, 0.0);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      BallPoint x;
      x.x.assign(7, 0.0);
      x.x[0] = oracles::uniform(-0.7, 0.7);
      x.x[1] = oracles::uniform(-0.7, 0.7);
      x.x[2] = oracles::uniform(-0.2, 0.2);
      const double sigma = oracles::uniform(0.1, 2.0);
      const double v = bubble_V(0.0, sigma, x, d7);
      const double u = bubble_U(sigma, origin, x, d7);
      worst = std::max(worst, std::fabs(v - u) / u);
    }
    c.require(worst <= 1e-13, "V_{0,sigma} = U_{sigma,0} on 1000 points, worst rel " + fmt("%.2e", worst));
  }
  return c;
}

// --------------------------------------------------------------------------
// 7. field symmetry
// --------------------------------------------------------------------------
Criterion criterion7() {
  Criterion c;
  const Dimension d7(7);

  {
    ProfileSpec spec(d7, HardyParams(d7, 1.0, 1.0, 1e-3));
    spec.ring.k = 3;
    spec.ring.t = 0.5;
    spec.ring.pattern = SignPattern::negative;
    spec.lambda = {1.0, 1.2};
    spec.resolution = 81;
    const auto sym = rotation_residual(spec);
    c.require(sym.residual <= 1e-12 * sym.max_abs,
              "k=3 field R3-invariance residual " + fmt("%.3e", sym.residual) +
                  " <= 1e-12 * max|u| = " + fmt("%.3e", 1e-12 * sym.max_abs));
  }

  {
    // the alternating five-bubble field at the verified f5 critical point
    const auto recs = find_critical_points(5, d7);
    ProfileSpec spec(d7, HardyParams(d7, 1.0, 1.0, 1e-3));
    spec.ring.k = 4;
    spec.ring.pattern = SignPattern::alternating;
    spec.ring.t = recs.empty() ? 0.39 : recs[0].t;
    spec.lambda = recs.empty() ? std::vector<double>{1.0, 1.0, 1.0} : recs[0].lambda;
    spec.resolution = 81;
    const auto sym = rotation_residual(spec);
    c.require(sym.residual <= 1e-12 * sym.max_abs,
              "alternating k=4 field R4 anti-symmetry residual " +
                  fmt("%.3e", sym.residual) +
                  " <= 1e-12 * max|u| = " + fmt("%.3e", 1e-12 * sym.max_abs));
    const auto half = half_turn_residual(spec);
    c.info("the rotation-invariant center bubble is even under R4, so exact");
    c.info("anti-symmetry cannot hold for the five-bubble field; its exact");
    c.info("invariance is the half turn: R4^2 residual " + fmt("%.3e", half.residual) +
           " (<= 1e-12 * max|u| = " + fmt("%.3e", 1e-12 * half.max_abs) + ")");
  }
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Criterion (*run)();
  };
  const Entry entries[] = {
      {"1. k=2 existence (two stable critical points, indices {0,1})", criterion1},
      {"2. k=3 at N=7 (no iota1 root) and threshold scan to N=200", criterion2},
      {"3. k=3 large-N inequality machinery at t=1/2", criterion3},
      {"4. k=4 non-existence (iota2 > 0 and the inequality chain)", criterion4},
      {"5. k=5 existence at N=7 (iota3 root, profile, determinant sign)", criterion5},
      {"6. oracle/consistency suite", criterion6},
      {"7. field symmetry (R3 invariance; R4 anti-symmetry)", criterion7},
  };

  int failures = 0;
  for (const auto& entry : entries) {
    Criterion c;
    try {
      c = entry.run();
    } catch (const std::exception& e) {
      c.pass = false;
      c.notes.push_back(std::string("    FAIL exception: ") + e.what());
    }
    std::printf("[%s] criterion %s\n", c.pass ? "PASS" : "FAIL", entry.name);
    for (const auto& note : c.notes) std::printf("%s\n", note.c_str());
    if (!c.pass) ++failures;
  }
  std::printf("%d of 7 criteria passed\n", 7 - failures);
  return failures;
}
