#pragma once

#include <functional>
#include <string>
#include <vector>

#include "multibubble/energy.hpp"

namespace multibubble {

struct RootBracket {
  double lo, hi;
  double f_lo, f_hi;  // opposite signs
};

// Validates the sign change; throws BracketError otherwise.
RootBracket make_bracket(const std::function<double(double)>& f, double lo,
                         double hi);

// Brent's method with guaranteed bisection fallback; the returned root stays
// inside the certificate interval.
double refine(const std::function<double(double)>& f, const RootBracket& bracket,
              double tol);

double bracket_and_refine(const std::function<double(double)>& f, double lo,
                          double hi, double tol);

// Bisection on a sign oracle; for functions whose values overflow doubles.
double bisect_sign(const std::function<int(double)>& sign_fn, double lo,
                   double hi, double xtol);

// The structural roots of the ball landscape:
//   tstar_k3:  gamma1 = 0            in (0, 1/2)
//   tstar_k4:  gamma2 = 0            in (0, 1/sqrt2)
//   t1star_k5: gamma3 = 0            in (0, 1/2)
//   t2star_k5: gamma3 - 2 tau1^2 = 0 in (1/2, 1)
struct TStars {
  double tstar_k3, tstar_k4, t1star_k5, t2star_k5;
};
TStars find_tstars(Dimension dim);

enum class CriticalKind { local_min, saddle_index_1, other };

struct Classification {
  std::vector<double> eigenvalues;  // ascending
  int morse_index = 0;
  int degree_sign = 0;  // sign of det; 0 when degenerate
  bool degenerate = false;
};
Classification classify(const Mat& hess);

struct CriticalPointRecord {
  std::vector<double> lambda;
  double t = 0;
  double grad_norm = 0;  // of the b2-normalized energy
  std::vector<double> hess_eigenvalues;
  int morse_index = 0;
  int degree_sign = 0;
  CriticalKind kind = CriticalKind::other;
  bool degenerate = false;
};

// Energy callback over packed variables (lambda..., t).
using EnergyFn = std::function<EnergyEvaluation(const std::vector<double>&)>;

struct NewtonOptions {
  double grad_tol = 1e-10;  // on the scale-normalized gradient norm
  double scale = 1.0;       // typically b2
  int max_iterations = 200;
  double lambda_min = 1e-4, lambda_max = 1e4;  // the eta-window
  double t_min = 1e-4, t_max = 1.0 - 1e-4;
};

// Damped Newton iteration for grad f = 0; falls back to a gradient step when
// the Hessian is singular at an iterate.
CriticalPointRecord newton_critical(const EnergyFn& f, std::vector<double> start,
                                    const NewtonOptions& opts);

// Multi-start search seeded from the 1-D stationary profiles, deduplicated
// and sorted by t.  k in {2, 3, 5}.
std::vector<CriticalPointRecord> find_critical_points(int k, Dimension dim,
                                                      int seeds = 32);

}  // namespace multibubble
