#include "multibubble/claims.hpp"

#include <cfloat>
#include <cmath>
#include <sstream>

#include "multibubble/energy.hpp"
#include "multibubble/solver.hpp"

namespace multibubble {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::falsified: return "falsified";
    default: return "inconclusive";
  }
}

nlohmann::json ClaimReport::to_json() const {
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& row : evidence)
    ev.push_back({{"param", row.param}, {"quantity", row.quantity}, {"value", row.value}});
  return {{"claim_id", claim_id},
          {"dim", dim},
          {"verdict", to_string(verdict)},
          {"evidence", ev},
          {"tolerances", tolerances}};
}

namespace {

constexpr double kGridMargin = 1e-4;  // claims are open-interval statements

// strict inequality with margin above the roundoff of the evaluated expression
bool margin_ok(double value, double scale) {
  return value > 10.0 * DBL_EPSILON * std::fabs(scale);
}

void add(ClaimReport& r, const std::string& param, const std::string& quantity,
         double value) {
  r.evidence.push_back({param, quantity, value});
}

ClaimReport inconclusive_from_error(ClaimReport r, const Error& e) {
  r.verdict = Verdict::inconclusive;
  add(r, "error", e.what(), std::nan(""));
  return r;
}

std::string t_param(double t) {
  std::ostringstream os;
  os << "t=" << t;
  return os.str();
}

std::string n_param(int n) {
  std::ostringstream os;
  os << "N=" << n;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// k = 2: two stable critical points
// ---------------------------------------------------------------------------

ClaimReport verify_k2_two_points(Dimension dim) {
  ClaimReport r;
  r.claim_id = "k2-two-points";
  r.dim = dim.N();
  r.tolerances = {{"grad_norm", 1e-10}, {"root_match", 1e-6}, {"dedupe", 1e-8}};
  if (dim.N() < 7) {
    r.verdict = Verdict::inconclusive;
    add(r, n_param(dim.N()), "N below the claim range", dim.N());
    return r;
  }

  try {
    const auto records = find_critical_points(2, dim);
    add(r, "solver", "critical points found", static_cast<double>(records.size()));
    for (const auto& rec : records) {
      add(r, t_param(rec.t), "lambda0", rec.lambda[0]);
      add(r, t_param(rec.t), "lambda1", rec.lambda[1]);
      add(r, t_param(rec.t), "grad_norm", rec.grad_norm);
      add(r, t_param(rec.t), "morse_index", rec.morse_index);
      add(r, t_param(rec.t), "degree_sign", rec.degree_sign);
    }

    // independent route: the roots of iota for the k=2 ring profile
    const double tstar =
        bisect_sign([&](double t) { return gamma3_sign(t, dim); }, 0.05, 0.5, 1e-13);
    const double lo = tstar + kGridMargin, hi = 1.0 - kGridMargin;
    const int grid = 4001;
    std::vector<double> roots;
    double prev_t = lo, prev_v = iota_ring(2, prev_t, dim);
    for (int i = 1; i < grid; ++i) {
      const double t = lo + (hi - lo) * i / (grid - 1);
      double v;
      try {
        v = iota_ring(2, t, dim);
      } catch (const OverflowError&) {
        continue;  // deep in the divergent tail near t = 1 at large N
      }
      if ((prev_v > 0) != (v > 0))
        roots.push_back(bracket_and_refine(
            [&](double x) { return iota_ring(2, x, dim); }, prev_t, t, 1e-14));
      prev_t = t;
      prev_v = v;
    }
    add(r, "iota-route", "profile-curve roots of iota", static_cast<double>(roots.size()));
    for (double root : roots) add(r, t_param(root), "iota root", root);

    bool ok = records.size() == 2 && roots.size() == 2;
    if (ok) {
      ok = records[0].morse_index + records[1].morse_index == 1 &&
           records[0].degree_sign * records[1].degree_sign == -1;
      for (size_t i = 0; i < 2; ++i) {
        ok = ok && records[i].grad_norm <= 1e-10;
        ok = ok && std::fabs(records[i].t - roots[i]) <= 1e-6;
      }
    }
    r.verdict = ok ? Verdict::verified : Verdict::falsified;
  } catch (const Error& e) {
    return inconclusive_from_error(r, e);
  }
  return r;
}

// ---------------------------------------------------------------------------
// k = 3: threshold scan for sign changes of iota1
// ---------------------------------------------------------------------------

std::pair<int, ClaimReport> scan_k3_threshold(int dim_max, int grid) {
  ClaimReport r;
  r.claim_id = "k3-threshold";
  r.dim = 7;
  r.tolerances = {{"grid_margin", kGridMargin}, {"grid_points", static_cast<double>(grid)}};
  if (dim_max < 8) {
    r.verdict = Verdict::inconclusive;
    add(r, n_param(dim_max), "dim_max below 8", dim_max);
    return {0, r};
  }

  int n_min = 0;
  try {
    int changes_at_7 = -1, changes_at_min = 0;
    for (int n = 7; n <= dim_max; ++n) {
      const Dimension dim(n);
      const double tstar =
          bisect_sign([&](double t) { return gamma1_sign(t, dim); }, 0.05, 0.5, 1e-13);
      const double lo = tstar + kGridMargin, hi = 1.0 - kGridMargin;
      int changes = 0;
      int prev = iota1_sign(lo, dim);
      for (int i = 1; i < grid; ++i) {
        const double t = lo + (hi - lo) * i / (grid - 1);
        const int s = iota1_sign(t, dim);
        if (s != 0 && prev != 0 && s != prev) ++changes;
        if (s != 0) prev = s;
      }
      if (n == 7) changes_at_7 = changes;
      if (changes > 0 && n_min == 0) {
        n_min = n;
        changes_at_min = changes;
      }
    }
    add(r, n_param(7), "iota1 sign changes on (t*,1)", changes_at_7);
    add(r, "N_min", "minimal N with sign changes", n_min);
    add(r, n_param(n_min), "sign changes at N_min", changes_at_min);
    if (changes_at_7 != 0 || (n_min > 0 && changes_at_min != 2)) {
      r.verdict = Verdict::falsified;
    } else if (n_min == 0) {
      r.verdict = Verdict::inconclusive;  // scan exhausted below the threshold
    } else {
      r.verdict = Verdict::verified;
    }
  } catch (const Error& e) {
    return {n_min, inconclusive_from_error(r, e)};
  }
  return {n_min, r};
}

// ---------------------------------------------------------------------------
// k = 3: the large-N inequality machinery at t = 1/2
// ---------------------------------------------------------------------------

ClaimReport verify_k3_largeN_inequalities(Dimension dim, int scan_max) {
  ClaimReport r;
  r.claim_id = "k3-inequalities";
  r.dim = dim.N();
  r.tolerances = {{"tau1p_rel", 1e-14}};

  try {
    // tau1'(1/2) = -(N-2) 2^{N-1} exactly
    const double tau1p = coeff_jets(0.5, dim).tau1.d1;
    const double expect = -(dim.N() - 2.0) * std::ldexp(1.0, dim.N() - 1);
    const double rel = std::fabs(tau1p - expect) / std::fabs(expect);
    add(r, n_param(dim.N()), "tau1'(1/2) relative error", rel);

    // scanned thresholds for the three "N large" statements
    int thr_gamma1p = 0, thr_ratio = 0, thr_premise = 0;
    bool tail_gamma1p = true, tail_ratio = true, tail_premise = true;
    for (int n = 7; n <= scan_max; ++n) {
      const Dimension dn(n);
      const CoeffJets j = coeff_jets(0.5, dn);
      const double m = n - 2.0;

      const double bound_gamma1p = 1.1 * m * std::pow(4.0 / 3.0, n - 1.0);
      const bool ok1 = margin_ok(bound_gamma1p - j.gamma1.d1, bound_gamma1p);
      if (ok1 && thr_gamma1p == 0) thr_gamma1p = n;
      if (!ok1 && thr_gamma1p != 0) tail_gamma1p = false;

      const double ratio = j.gamma1.v / j.tau1.v;
      const double bound_ratio =
          (11.0 / 12.0) * std::pow(4.0 / 3.0, m) / std::ldexp(1.0, n - 2);
      const bool ok2 = margin_ok(ratio - bound_ratio, ratio);
      if (ok2 && thr_ratio == 0) thr_ratio = n;
      if (!ok2 && thr_ratio != 0) tail_ratio = false;

      const double premise = j.gamma1.v / (j.tau1.v * j.tau1.v);
      const bool ok3 = margin_ok(1.0 - premise, 1.0);
      if (ok3 && thr_premise == 0) thr_premise = n;
      if (!ok3 && thr_premise != 0) tail_premise = false;

      if (n == dim.N()) {
        add(r, n_param(n), "gamma1'(1/2)", j.gamma1.d1);
        add(r, n_param(n), "gamma1' upper bound", bound_gamma1p);
        add(r, n_param(n), "gamma1/tau1 at 1/2", ratio);
        add(r, n_param(n), "ratio lower bound", bound_ratio);
        add(r, n_param(n), "gamma1/tau1^2 at 1/2", premise);
      }
    }
    add(r, "threshold", "smallest N for the gamma1' bound", thr_gamma1p);
    add(r, "threshold", "smallest N for the ratio bound", thr_ratio);
    add(r, "threshold", "smallest N for gamma1/tau1^2 < 1", thr_premise);

    const bool ok = rel <= 1e-14 && thr_gamma1p > 0 && thr_ratio > 0 &&
                    thr_premise > 0 && tail_gamma1p && tail_ratio && tail_premise;
    r.verdict = ok ? Verdict::verified : Verdict::falsified;
  } catch (const Error& e) {
    return inconclusive_from_error(r, e);
  }
  return r;
}

// ---------------------------------------------------------------------------
// k = 4: non-existence (iota2 > 0 on (t*,1) plus the proof chain)
// ---------------------------------------------------------------------------

namespace {

// LHS of the k=4 key inequality, (T^N + 3T)(1 - t^{N-2})^2; assembled from
// logs with a finite cap so near-1 grid points never produce inf
double k4_key_lhs(double t, int n) {
  const double logT =
      2.0 * std::log(t) - (std::log1p(-t) + std::log1p(t));  // log(t^2/(1-t^2))
  const double w = 1.0 - std::pow(t, n - 2.0);
  const double logw2 = 2.0 * std::log(w);
  const double lg1 = n * logT + logw2;
  const double lg2 = std::log(3.0) + logT + logw2;
  if (lg1 > 690.0 || lg2 > 690.0) return 1e300;
  return std::exp(lg1) + std::exp(lg2);
}

}  // namespace

ClaimReport verify_k4_nonexistence(Dimension dim, int grid) {
  ClaimReport r;
  r.claim_id = "k4-nonexistence";
  r.dim = dim.N();
  r.tolerances = {{"grid_margin", kGridMargin}, {"grid_points", static_cast<double>(grid)}};
  const int n = dim.N();
  if (n < 7) {
    r.verdict = Verdict::inconclusive;
    add(r, n_param(n), "N below the claim range", n);
    return r;
  }

  try {
    bool ok = true;
    const double m = n - 2.0;

    // gamma2 < 0 at (sqrt6 - sqrt2)/2, the bracket sharpening for t*
    const double t0 = 0.5 * (std::sqrt(6.0) - std::sqrt(2.0));
    {
      const CoeffJets j = coeff_jets(t0, dim);
      // roundoff scale of the five-term sum
      const double scale = std::pow(1.0 - t0 * t0, -m) +
                           2.0 * std::pow(std::sqrt(2.0) * t0, -m) +
                           2.0 * std::pow(1.0 + t0 * t0 * t0 * t0, -0.5 * m) +
                           std::pow(2.0 * t0, -m) + std::pow(1.0 + t0 * t0, -m);
      add(r, t_param(t0), "gamma2", j.gamma2.v);
      ok = ok && margin_ok(-j.gamma2.v, scale);
    }

    // iota2 > 0 across (t*,1)
    const double tstar =
        bisect_sign([&](double t) { return gamma2_sign(t, dim); }, 0.05,
                    1.0 / std::sqrt(2.0), 1e-13);
    add(r, "t*", "gamma2 root", tstar);
    ok = ok && margin_ok(tstar - t0, tstar);  // t* > (sqrt6-sqrt2)/2

    double min_iota2 = HUGE_VAL, argmin = 0;
    double min_key = HUGE_VAL;
    const double lo = tstar + kGridMargin, hi = 1.0 - kGridMargin;
    for (int i = 0; i < grid; ++i) {
      const double t = lo + (hi - lo) * i / (grid - 1);
      const auto [alpha1, iota2] = alpha1_iota2(t, dim);
      const CoeffJets j = coeff_jets(t, dim);
      const double scale = std::fabs(j.gamma2.d1) + 2.0 * alpha1 * std::fabs(j.tau1.d1);
      ok = ok && margin_ok(iota2, scale);
      if (iota2 < min_iota2) {
        min_iota2 = iota2;
        argmin = t;
      }
      const double key = k4_key_lhs(t, n);
      min_key = std::min(min_key, key - 1.0);
      ok = ok && margin_ok(key - 1.0, key);
    }
    add(r, t_param(argmin), "min iota2 on grid", min_iota2);
    add(r, "grid", "min of key inequality LHS - 1", min_key);

    // subinterval certificates of the key inequality
    const int sub = 2001;
    double min_sub2 = HUGE_VAL;  // 3 (1-t^5)^2 - 1 on [1/sqrt2, 4/5)
    for (int i = 0; i < sub; ++i) {
      const double t = 1.0 / std::sqrt(2.0) + (0.8 - 1.0 / std::sqrt(2.0)) * i / sub;
      const double v = 3.0 * std::pow(1.0 - std::pow(t, 5.0), 2.0) - 1.0;
      min_sub2 = std::min(min_sub2, v);
      ok = ok && margin_ok(v, 3.0);
    }
    add(r, "[1/sqrt2,4/5)", "min of 3(1-t^5)^2 - 1", min_sub2);

    double min_sub3 = HUGE_VAL;  // T^{N-2} t^4/(1+t)^2 - 1 on [4/5, 1)
    for (int i = 0; i < sub; ++i) {
      const double t = 0.8 + (1.0 - kGridMargin - 0.8) * i / (sub - 1);
      const double logT = 2.0 * std::log(t) - (std::log1p(-t) + std::log1p(t));
      const double lg = m * logT + 4.0 * std::log(t) - 2.0 * std::log1p(t);
      const double v = (lg > 690.0 ? 1e300 : std::exp(lg)) - 1.0;
      min_sub3 = std::min(min_sub3, v);
      ok = ok && margin_ok(v, v + 1.0);
    }
    add(r, "[4/5,1)", "min of the [4/5,1) chain value - 1", min_sub3);

    // monotonicity of f(T) = 3T (1 - (T/(1+T))^{(N-2)/2})^2 and its left endpoint
    const double T_lo = 0.5 * (std::sqrt(3.0) - 1.0);
    double min_fp = HUGE_VAL;
    for (int i = 0; i <= sub; ++i) {
      const double T = T_lo + (1.0 - T_lo) * i / sub;
      const double w = std::pow(T / (1.0 + T), 0.5 * m);
      const double fp = (1.0 - w) * (3.0 - 3.0 * w - 3.0 * m * w / (1.0 + T));
      min_fp = std::min(min_fp, fp);
      ok = ok && margin_ok(fp, 3.0 + 3.0 * m * w);
    }
    const double w_lo = std::pow(T_lo / (1.0 + T_lo), 0.5 * m);
    const double f_lo = 3.0 * T_lo * (1.0 - w_lo) * (1.0 - w_lo);
    add(r, "T-grid", "min of f'(T)", min_fp);
    add(r, "T_lo", "f(T_lo) - 1", f_lo - 1.0);
    ok = ok && margin_ok(f_lo - 1.0, f_lo);

    r.verdict = ok ? Verdict::verified : Verdict::falsified;
  } catch (const Error& e) {
    return inconclusive_from_error(r, e);
  }
  return r;
}

// ---------------------------------------------------------------------------
// k = 5: existence via iota3 root in (0, t1*)
// ---------------------------------------------------------------------------

ClaimReport verify_k5_existence(Dimension dim) {
  ClaimReport r;
  r.claim_id = "k5-existence";
  r.dim = dim.N();
  r.tolerances = {{"profile_residual", 1e-10}, {"grad_norm", 1e-10}};
  if (dim.N() < 7) {
    r.verdict = Verdict::inconclusive;
    add(r, n_param(dim.N()), "N below the claim range", dim.N());
    return r;
  }

  try {
    const TStars ts = find_tstars(dim);
    add(r, "t1*", "gamma3 root", ts.t1star_k5);

    // iota3: -inf at 0+, positive at t1*
    const double lo = kGridMargin, hi = ts.t1star_k5 - kGridMargin;
    const int grid = 4001;
    int changes = 0;
    double bracket_lo = 0, bracket_hi = 0;
    double prev_t = lo, prev_v = iota3(lo, dim);
    add(r, t_param(lo), "iota3 near 0", prev_v);
    for (int i = 1; i < grid; ++i) {
      const double t = lo + (hi - lo) * i / (grid - 1);
      const double v = iota3(t, dim);
      if ((prev_v > 0) != (v > 0)) {
        ++changes;
        bracket_lo = prev_t;
        bracket_hi = t;
      }
      prev_t = t;
      prev_v = v;
    }
    add(r, t_param(hi), "iota3 near t1*", prev_v);
    add(r, "scan", "iota3 sign changes in (0,t1*)", changes);

    bool ok = changes == 1 && prev_v > 0;
    if (!ok) {
      r.verdict = Verdict::falsified;
      return r;
    }

    const double t1 = bracket_and_refine(
        [&](double t) { return iota3(t, dim); }, bracket_lo, bracket_hi, 1e-15);
    add(r, "t1", "refined iota3 root", t1);

    const F5Profile p = lambda_profile_f5(t1, dim);
    add(r, t_param(t1), "lambda0", p.lambda0);
    add(r, t_param(t1), "lambda1", p.lambda1);
    add(r, t_param(t1), "lambda2", p.lambda2);
    const double res = std::max({std::fabs(p.res_eq2), std::fabs(p.res_eq3),
                                 std::fabs(p.res_eq4)});
    add(r, t_param(t1), "max stationarity residual", res);
    ok = ok && p.lambda0 > 0 && p.lambda1 > 0 && p.lambda2 > 0 && res <= 1e-10;

    const int det_sign = f5_hessian_det_sign(t1, dim);
    const int g3_sign = gamma3_sign(t1, dim);
    add(r, t_param(t1), "reduced determinant sign", det_sign);
    add(r, t_param(t1), "gamma3 sign", g3_sign);
    ok = ok && det_sign == g3_sign && g3_sign == -1;

    // polish the full 4-variable critical point and classify it
    NewtonOptions opts;
    opts.scale = bubble_integrals(dim).checked_b2();
    const EnergyFn fn = [&](const std::vector<double>& v) {
      LambdaState st;
      st.lambda0 = v[0];
      st.lambda1 = v[1];
      st.lambda2 = v[2];
      return f5_eval(st, v[3], dim);
    };
    const CriticalPointRecord rec =
        newton_critical(fn, {p.lambda0, p.lambda1, p.lambda2, t1}, opts);
    add(r, t_param(rec.t), "grad_norm", rec.grad_norm);
    add(r, t_param(rec.t), "morse_index", rec.morse_index);
    for (double ev : rec.hess_eigenvalues)
      add(r, t_param(rec.t), "hessian eigenvalue", ev);
    ok = ok && !rec.degenerate && rec.grad_norm <= 1e-10 &&
         std::fabs(rec.t - t1) <= 1e-6;

    r.verdict = ok ? Verdict::verified : Verdict::falsified;
  } catch (const Error& e) {
    return inconclusive_from_error(r, e);
  }
  return r;
}

// ---------------------------------------------------------------------------
// k = 5: conjecture probe on (t2*, 1)
// ---------------------------------------------------------------------------

ClaimReport probe_k5_second_root(Dimension dim) {
  ClaimReport r;
  r.claim_id = "k5-second-root";
  r.dim = dim.N();
  r.tolerances = {{"grid_margin", kGridMargin}};
  if (dim.N() < 7) {
    r.verdict = Verdict::inconclusive;
    add(r, n_param(dim.N()), "N below the claim range", dim.N());
    return r;
  }

  try {
    const TStars ts = find_tstars(dim);
    add(r, "t2*", "gamma3 - 2 tau1^2 root", ts.t2star_k5);

    const double lo = ts.t2star_k5 + kGridMargin, hi = 1.0 - kGridMargin;
    const int grid = 4001;
    int skipped = 0, changes = 0;
    double bracket_lo = 0, bracket_hi = 0;
    double prev_t = lo, prev_v = iota3(lo, dim);
    add(r, t_param(lo), "iota3 near t2*", prev_v);
    double last_finite = prev_v, last_finite_t = lo;
    for (int i = 1; i < grid; ++i) {
      const double t = lo + (hi - lo) * i / (grid - 1);
      double v;
      try {
        v = iota3(t, dim);
      } catch (const OverflowError&) {
        ++skipped;
        continue;
      }
      if ((prev_v > 0) != (v > 0)) {
        ++changes;
        bracket_lo = prev_t;
        bracket_hi = t;
      }
      prev_t = t;
      prev_v = v;
      last_finite = v;
      last_finite_t = t;
    }
    add(r, t_param(last_finite_t), "iota3 near 1", last_finite);
    add(r, "scan", "iota3 sign changes in (t2*,1)", changes);
    if (skipped > 0) add(r, "scan", "grid points skipped for overflow", skipped);

    if (changes >= 1) {
      const double t2 = bracket_and_refine(
          [&](double t) { return iota3(t, dim); }, bracket_lo, bracket_hi, 1e-15);
      add(r, "t2", "refined iota3 root", t2);
      r.verdict = Verdict::verified;
    } else {
      r.verdict = Verdict::inconclusive;  // conjecture probe, never falsified
    }
  } catch (const Error& e) {
    return inconclusive_from_error(r, e);
  }
  return r;
}

}  // namespace multibubble
