#include "multibubble/solver.hpp"

#include <algorithm>
#include <cmath>

namespace multibubble {

RootBracket make_bracket(const std::function<double(double)>& f, double lo,
                         double hi) {
  RootBracket b{lo, hi, f(lo), f(hi)};
  if (b.f_lo != 0.0 && b.f_hi != 0.0 && (b.f_lo > 0) == (b.f_hi > 0))
    throw BracketError("make_bracket: no sign change on [lo,hi]");
  return b;
}

double refine(const std::function<double(double)>& f, const RootBracket& bracket,
              double tol) {
  double a = bracket.lo, b = bracket.hi;
  double fa = bracket.f_lo, fb = bracket.f_hi;
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;

  // Brent: inverse quadratic / secant with bisection fallback
  double c = a, fc = fa;
  double d = b - a, e = d;
  constexpr double kEps = 2.220446049250313e-16;

  for (int iter = 0; iter < 200; ++iter) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * kEps * std::fabs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) return b;

    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q;
      p = std::fabs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::fabs(d) > tol1 ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(b);
  }
  return b;
}

double bracket_and_refine(const std::function<double(double)>& f, double lo,
                          double hi, double tol) {
  return refine(f, make_bracket(f, lo, hi), tol);
}

double bisect_sign(const std::function<int(double)>& sign_fn, double lo,
                   double hi, double xtol) {
  int slo = sign_fn(lo);
  int shi = sign_fn(hi);
  if (slo == 0) return lo;
  if (shi == 0) return hi;
  if (slo == shi)
    throw BracketError("bisect_sign: endpoints have the same sign");
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const int sm = sign_fn(mid);
    if (sm == 0) return mid;
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

TStars find_tstars(Dimension dim) {
  if (dim.N() < 7) throw DomainError("find_tstars: N >= 7 required");
  constexpr double kXtol = 1e-13;
  TStars out{};
  out.tstar_k3 = bisect_sign([&](double t) { return gamma1_sign(t, dim); }, 0.05,
                             0.5, kXtol);
  out.tstar_k4 = bisect_sign([&](double t) { return gamma2_sign(t, dim); }, 0.05,
                             1.0 / std::sqrt(2.0), kXtol);
  out.t1star_k5 = bisect_sign([&](double t) { return gamma3_sign(t, dim); }, 0.05,
                              0.5, kXtol);
  out.t2star_k5 = bisect_sign(
      [&](double t) { return gamma3_minus_2tau1sq_sign(t, dim); }, 0.5, kTMax,
      kXtol);
  return out;
}

Classification classify(const Mat& hess) {
  Classification out;
  out.eigenvalues = symmetric_eigenvalues(hess);
  const double scale = std::max(hess.max_abs(), 1e-300);
  const double thresh = 1e-12 * scale;
  out.morse_index = 0;
  for (double ev : out.eigenvalues) {
    if (std::fabs(ev) <= thresh) out.degenerate = true;
    if (ev < -thresh) ++out.morse_index;
  }
  if (out.degenerate) {
    out.degree_sign = 0;
  } else {
    out.degree_sign = out.morse_index % 2 == 0 ? 1 : -1;
  }
  return out;
}

namespace {

CriticalPointRecord make_record(const std::vector<double>& x, double gn,
                                const Mat& hess) {
  CriticalPointRecord rec;
  rec.lambda.assign(x.begin(), x.end() - 1);
  rec.t = x.back();
  rec.grad_norm = gn;
  const Classification cl = classify(hess);
  rec.hess_eigenvalues = cl.eigenvalues;
  rec.morse_index = cl.morse_index;
  rec.degree_sign = cl.degree_sign;
  rec.degenerate = cl.degenerate;
  rec.kind = cl.degenerate           ? CriticalKind::other
             : cl.morse_index == 0   ? CriticalKind::local_min
             : cl.morse_index == 1   ? CriticalKind::saddle_index_1
                                     : CriticalKind::other;
  return rec;
}

}  // namespace

CriticalPointRecord newton_critical(const EnergyFn& f, std::vector<double> start,
                                    const NewtonOptions& opts) {
  const int n = static_cast<int>(start.size());

  const auto clip = [&](std::vector<double>& v) {
    for (int i = 0; i < n - 1; ++i)
      v[static_cast<size_t>(i)] =
          std::clamp(v[static_cast<size_t>(i)], opts.lambda_min, opts.lambda_max);
    v[static_cast<size_t>(n - 1)] =
        std::clamp(v[static_cast<size_t>(n - 1)], opts.t_min, opts.t_max);
  };

  clip(start);
  EnergyEvaluation e = f(start);
  double gn = e.grad.norm() / opts.scale;

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    if (gn <= opts.grad_tol) return make_record(start, gn, e.hess);

    Vec rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = -e.grad[i];
    Vec dir(n);
    if (!solve(e.hess, rhs, dir)) {
      // singular Hessian: damped gradient descent on |grad|
      const double hscale = std::max(e.hess.max_abs(), 1e-300);
      for (int i = 0; i < n; ++i) dir[i] = -e.grad[i] / hscale;
    }

    bool accepted = false;
    for (double step = 1.0; step >= 1.0 / 4096.0; step *= 0.5) {
      std::vector<double> trial = start;
      for (int i = 0; i < n; ++i) trial[static_cast<size_t>(i)] += step * dir[i];
      clip(trial);
      EnergyEvaluation et;
      try {
        et = f(trial);
      } catch (const Error&) {
        continue;
      }
      const double gnt = et.grad.norm() / opts.scale;
      if (gnt < gn || (step == 1.0 && gnt < 10.0 * gn && gnt < 1e-6)) {
        start = trial;
        e = et;
        gn = gnt;
        accepted = true;
        break;
      }
    }
    if (!accepted)
      throw ConvergenceError("newton_critical: no descent step on |grad|");
  }
  throw ConvergenceError("newton_critical: iteration cap reached");
}

namespace {

bool near_window_edge(const CriticalPointRecord& rec, const NewtonOptions& opts) {
  const double tm = 2e-4;
  if (rec.t <= opts.t_min + tm || rec.t >= opts.t_max - tm) return true;
  for (double l : rec.lambda)
    if (l <= opts.lambda_min * (1 + 1e-6) || l >= opts.lambda_max * (1 - 1e-6))
      return true;
  return false;
}

bool same_point(const CriticalPointRecord& a, const CriticalPointRecord& b) {
  constexpr double kMergeRadius = 1e-8;
  if (a.lambda.size() != b.lambda.size()) return false;
  if (std::fabs(a.t - b.t) > kMergeRadius) return false;
  for (size_t i = 0; i < a.lambda.size(); ++i)
    if (std::fabs(a.lambda[i] - b.lambda[i]) > kMergeRadius) return false;
  return true;
}

}  // namespace

std::vector<CriticalPointRecord> find_critical_points(int k, Dimension dim,
                                                      int seeds) {
  if (k != 2 && k != 3 && k != 5)
    throw DomainError("find_critical_points: k in {2,3,5}");

  NewtonOptions opts;
  opts.scale = bubble_integrals(dim).checked_b2();

  std::vector<std::vector<double>> starts;
  const double margin = 1e-3;

  if (k == 2 || k == 3) {
    const auto sign_fn = [&](double t) {
      return k == 2 ? gamma3_sign(t, dim) : gamma1_sign(t, dim);
    };
    const double tstar = bisect_sign(sign_fn, 0.05, 0.5, 1e-13);
    const double lo = tstar + margin, hi = opts.t_max - margin;
    for (int i = 0; i < seeds; ++i) {
      const double t = lo + (hi - lo) * (i + 0.5) / seeds;
      try {
        const RingProfile p = ring_profile(k, t, dim);
        starts.push_back({p.lambda0, p.lambda1, t});
      } catch (const Error&) {
      }
    }
  } else {
    const TStars ts = find_tstars(dim);
    const int half = seeds / 2;
    for (int i = 0; i < half; ++i) {
      const double t = margin + (ts.t1star_k5 - 2 * margin) * (i + 0.5) / half;
      try {
        const F5Profile p = lambda_profile_f5(t, dim);
        starts.push_back({p.lambda0, p.lambda1, p.lambda2, t});
      } catch (const Error&) {
      }
    }
    for (int i = 0; i < seeds - half; ++i) {
      const double lo = ts.t2star_k5 + margin, hi = opts.t_max - margin;
      const double t = lo + (hi - lo) * (i + 0.5) / (seeds - half);
      try {
        const F5Profile p = lambda_profile_f5(t, dim);
        starts.push_back({p.lambda0, p.lambda1, p.lambda2, t});
      } catch (const Error&) {
      }
    }
  }

  const EnergyFn fn = [&](const std::vector<double>& v) {
    LambdaState st;
    st.lambda0 = v[0];
    st.lambda1 = v[1];
    if (v.size() == 4) {
      st.lambda2 = v[2];
      return f5_eval(st, v[3], dim);
    }
    return f_k_eval(k, st, v[2], dim);
  };

  std::vector<CriticalPointRecord> found;
  for (const auto& s : starts) {
    CriticalPointRecord rec;
    try {
      rec = newton_critical(fn, s, opts);
    } catch (const Error&) {
      continue;
    }
    if (near_window_edge(rec, opts)) continue;
    bool dup = false;
    for (const auto& r : found)
      if (same_point(r, rec)) {
        dup = true;
        break;
      }
    if (!dup) found.push_back(std::move(rec));
  }

  std::sort(found.begin(), found.end(),
            [](const CriticalPointRecord& a, const CriticalPointRecord& b) {
              if (a.t != b.t) return a.t < b.t;
              return a.lambda[0] < b.lambda[0];
            });
  return found;
}

}  // namespace multibubble
