#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "multibubble/constants.hpp"

#include "json.hpp"

namespace multibubble {

enum class Verdict { verified, falsified, inconclusive };

std::string to_string(Verdict v);

struct EvidenceRow {
  std::string param;     // "t=0.5", "N=12", ...
  std::string quantity;  // what was evaluated
  double value;
};

// Machine-checkable verdict for one of the numbered claims.  A failed
// inequality is reported as `falsified` with the offending sample; these
// routines never throw on mathematical grounds.
struct ClaimReport {
  std::string claim_id;
  int dim = 0;
  Verdict verdict = Verdict::inconclusive;
  std::vector<EvidenceRow> evidence;
  std::map<std::string, double> tolerances;

  nlohmann::json to_json() const;
};

// f2 has exactly two stable critical points, Morse indices {0,1} (k=2, N>=7).
ClaimReport verify_k2_two_points(Dimension dim);

// iota1 sign-change scan: none at N=7; records the minimal N in 7..dim_max
// with two roots.  grid = samples per dimension.
std::pair<int, ClaimReport> scan_k3_threshold(int dim_max, int grid = 20001);

// tau1'(1/2) identity, the gamma1'(1/2) upper bound, the gamma1/tau1 ratio
// lower bound, and the premise gamma1/tau1^2 < 1, with recorded thresholds.
ClaimReport verify_k3_largeN_inequalities(Dimension dim, int scan_max = 400);

// iota2 > 0 on (t*,1) plus the supporting inequality chain (k=4 ring).
ClaimReport verify_k4_nonexistence(Dimension dim, int grid = 10000);

// iota3 sign change in (0,t1*), profile positivity, stationarity residuals,
// reduced-determinant sign, full-Hessian nondegeneracy (k=5).
ClaimReport verify_k5_existence(Dimension dim);

// Conjecture probe on (t2*,1); verdict verified or inconclusive, never
// falsified.
ClaimReport probe_k5_second_root(Dimension dim);

}  // namespace multibubble
