#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "multibubble/claims.hpp"
#include "multibubble/energy.hpp"
#include "multibubble/field.hpp"
#include "multibubble/solver.hpp"

namespace mb = multibubble;
using nlohmann::json;

namespace {

json record_to_json(const mb::CriticalPointRecord& r) {
  const char* kind = r.kind == mb::CriticalKind::local_min        ? "local_min"
                     : r.kind == mb::CriticalKind::saddle_index_1 ? "saddle_index_1"
                                                                  : "other";
  return {{"lambda", r.lambda},
          {"t", r.t},
          {"grad_norm", r.grad_norm},
          {"hess_eigenvalues", r.hess_eigenvalues},
          {"morse_index", r.morse_index},
          {"degree_sign", r.degree_sign},
          {"kind", kind},
          {"degenerate", r.degenerate}};
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream os(out_path);
    if (!os) throw mb::Error("cannot open output file " + out_path);
    os << j.dump(2) << '\n';
  }
}

struct GridSpec {
  double a = 0.1, b = 0.9;
  int n = 101;
};

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  char c1 = 0, c2 = 0;
  std::istringstream is(s);
  if (!(is >> g.a >> c1 >> g.b >> c2 >> g.n) || c1 != ':' || c2 != ':' || g.n < 2)
    throw mb::Error("--t-grid expects a:b:n with n >= 2");
  return g;
}

std::vector<double> parse_lambda(const std::string& s) {
  std::vector<double> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) out.push_back(std::stod(item));
  if (out.size() < 2 || out.size() > 3)
    throw mb::Error("--lambda expects L0,L1 or L0,L1,L2");
  return out;
}

int run_constants(int n, double mu) {
  const mb::Dimension dim(n);
  const mb::BubbleConstants c = mb::bubble_constants(dim, mu);
  emit(json{{"N", n},
            {"two_star", dim.two_star()},
            {"mu_bar", dim.mu_bar()},
            {"beta1", c.beta1},
            {"beta2", c.beta2},
            {"c0", c.c0},
            {"c_mu", c.c_mu},
            {"s0", c.s0},
            {"b1", c.b1},
            {"b2", c.b2}},
       "");
  return 0;
}

int run_tstar(const std::string& which, int n) {
  const mb::Dimension dim(n);
  double lo, hi;
  std::function<int(double)> sign_fn;
  std::function<double(double)> value_fn;
  if (which == "gamma1") {
    lo = 0.05; hi = 0.5;
    sign_fn = [&](double t) { return mb::gamma1_sign(t, dim); };
    value_fn = [&](double t) { return mb::interaction_coeffs(t, dim).gamma1; };
  } else if (which == "gamma2") {
    lo = 0.05; hi = 1.0 / std::sqrt(2.0);
    sign_fn = [&](double t) { return mb::gamma2_sign(t, dim); };
    value_fn = [&](double t) { return mb::interaction_coeffs(t, dim).gamma2; };
  } else if (which == "gamma3") {
    lo = 0.05; hi = 0.5;
    sign_fn = [&](double t) { return mb::gamma3_sign(t, dim); };
    value_fn = [&](double t) { return mb::interaction_coeffs(t, dim).gamma3; };
  } else if (which == "gamma3-2tau1sq") {
    lo = 0.5; hi = mb::kTMax;
    sign_fn = [&](double t) { return mb::gamma3_minus_2tau1sq_sign(t, dim); };
    value_fn = [&](double t) {
      const auto c = mb::interaction_coeffs(t, dim);
      return c.gamma3 - 2.0 * c.tau1 * c.tau1;
    };
  } else {
    throw mb::Error("--which must be gamma1|gamma2|gamma3|gamma3-2tau1sq");
  }

  const double root = mb::bisect_sign(sign_fn, lo, hi, 1e-13);
  double residual = std::nan("");
  try {
    residual = value_fn(root);
  } catch (const mb::Error&) {
  }
  emit(json{{"which", which},
            {"N", n},
            {"t_star", root},
            {"bracket", {lo, hi}},
            {"residual", residual}},
       "");
  return 0;
}

int run_landscape(int k, int n, const std::string& grid_spec, const std::string& out) {
  const mb::Dimension dim(n);
  const GridSpec g = parse_grid(grid_spec);
  std::ofstream os(out);
  if (!os) throw mb::Error("cannot open output file " + out);
  os.precision(17);

  const double nan = std::nan("");
  if (k >= 2 && k <= 4) {
    os << "t,gamma,dgamma,tau1,dtau1,lambda0,lambda1,nu,iota\n";
    for (int i = 0; i < g.n; ++i) {
      const double t = g.a + (g.b - g.a) * i / (g.n - 1);
      double gv = nan, gd = nan, tv = nan, td = nan;
      double l0 = nan, l1 = nan, nu = nan, io = nan;
      try {
        const mb::Jet2 gc = mb::ring_coeff_jet(k, t, dim);
        const mb::Jet2 tau = mb::coeff_jets(t, dim).tau1;
        gv = gc.v;
        gd = gc.d1;
        tv = tau.v;
        td = tau.d1;
        const mb::RingProfile p = mb::ring_profile(k, t, dim);
        l0 = p.lambda0;
        l1 = p.lambda1;
        nu = mb::nu_ring(k, t, dim);
        io = mb::iota_ring(k, t, dim);
      } catch (const mb::Error&) {
      }
      os << t << ',' << gv << ',' << gd << ',' << tv << ',' << td << ',' << l0
         << ',' << l1 << ',' << nu << ',' << io << '\n';
    }
  } else if (k == 5) {
    os << "t,gamma3,gamma4,tau1,lambda0,lambda1,lambda2,nu2,iota3\n";
    for (int i = 0; i < g.n; ++i) {
      const double t = g.a + (g.b - g.a) * i / (g.n - 1);
      double g3 = nan, g4 = nan, tv = nan;
      double l0 = nan, l1 = nan, l2 = nan, nu2 = nan, io3 = nan;
      try {
        const mb::CoeffJets j = mb::coeff_jets(t, dim);
        g3 = j.gamma3.v;
        g4 = j.gamma4.v;
        tv = j.tau1.v;
        io3 = mb::iota3(t, dim);
        const mb::F5Profile p = mb::lambda_profile_f5(t, dim);
        l0 = p.lambda0;
        l1 = p.lambda1;
        l2 = p.lambda2;
        nu2 = mb::nu2_iota3(t, dim).first;
      } catch (const mb::Error&) {
      }
      os << t << ',' << g3 << ',' << g4 << ',' << tv << ',' << l0 << ',' << l1
         << ',' << l2 << ',' << nu2 << ',' << io3 << '\n';
    }
  } else {
    throw mb::Error("--k must be 2..5");
  }
  return 0;
}

int run_critical(int k, int n, bool as_json) {
  const mb::Dimension dim(n);
  const auto records = mb::find_critical_points(k, dim);
  if (as_json) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(record_to_json(r));
    emit(json{{"k", k}, {"N", n}, {"critical_points", arr}}, "");
  } else {
    std::cout << "k=" << k << " N=" << n << ": " << records.size()
              << " critical point(s)\n";
    for (const auto& r : records) {
      std::cout << "  t=" << r.t << "  lambda=(";
      for (size_t i = 0; i < r.lambda.size(); ++i)
        std::cout << (i ? "," : "") << r.lambda[i];
      std::cout << ")  morse_index=" << r.morse_index
                << "  degree=" << r.degree_sign << "  |grad|=" << r.grad_norm
                << '\n';
    }
  }
  return 0;
}

int run_verify(const std::string& claim, int n, int dim_max, const std::string& out) {
  const mb::Dimension dim(n);
  mb::ClaimReport report;
  if (claim == "k2-two-points") {
    report = mb::verify_k2_two_points(dim);
  } else if (claim == "k3-threshold") {
    report = mb::scan_k3_threshold(dim_max).second;
  } else if (claim == "k3-inequalities") {
    report = mb::verify_k3_largeN_inequalities(dim);
  } else if (claim == "k4-nonexistence") {
    report = mb::verify_k4_nonexistence(dim);
  } else if (claim == "k5-existence") {
    report = mb::verify_k5_existence(dim);
  } else if (claim == "k5-second-root") {
    report = mb::probe_k5_second_root(dim);
  } else {
    throw mb::Error("unknown claim " + claim);
  }
  emit(report.to_json(), out);
  return report.verdict == mb::Verdict::falsified ? 2 : 0;
}

int run_profile(int k, const std::string& pattern, int n, double eps, double mu0,
                double alpha, double t, const std::string& lambda_str,
                const std::string& plane, double extent, int res,
                const std::string& out) {
  const mb::Dimension dim(n);
  mb::ProfileSpec spec(dim, mb::HardyParams(dim, mu0, alpha, eps));
  spec.ring.k = k;
  spec.ring.t = t;
  if (pattern == "negative")
    spec.ring.pattern = mb::SignPattern::negative;
  else if (pattern == "alternating")
    spec.ring.pattern = mb::SignPattern::alternating;
  else
    throw mb::Error("--pattern must be negative|alternating");
  spec.lambda = parse_lambda(lambda_str);
  if (plane == "e1e2")
    spec.plane = mb::SlicePlane::e1e2;
  else if (plane == "e1e3")
    spec.plane = mb::SlicePlane::e1e3;
  else
    throw mb::Error("--plane must be e1e2|e1e3");
  spec.extent = extent;
  spec.resolution = res;

  const mb::FieldGrid grid = mb::assemble_field(spec);
  std::ofstream os(out);
  if (!os) throw mb::Error("cannot open output file " + out);
  if (out.size() >= 4 && out.substr(out.size() - 4) == ".csv")
    mb::write_csv(grid, os);
  else
    mb::write_json(grid, spec, os);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduced-energy landscape of multi-bubble configurations on the unit ball"};
  app.require_subcommand(1);

  int dim_n = 7;
  double mu = 0.0;
  auto* constants = app.add_subcommand("constants", "dimension constants and bubble integrals");
  constants->add_option("--dim", dim_n, "space dimension N")->required();
  constants->add_option("--mu", mu, "Hardy coefficient (default 0)");

  std::string which = "gamma1";
  int tstar_n = 7;
  auto* tstar = app.add_subcommand("tstar", "bracketed structural roots t*");
  tstar->add_option("--which", which, "gamma1|gamma2|gamma3|gamma3-2tau1sq")->required();
  tstar->add_option("--dim", tstar_n, "space dimension N")->required();

  int land_k = 3, land_n = 7;
  std::string grid_spec = "0.1:0.9:101", land_out = "landscape.csv";
  auto* landscape = app.add_subcommand("landscape", "profile curves over a t-grid, CSV");
  landscape->add_option("--k", land_k, "ring size (2..5)")->required();
  landscape->add_option("--dim", land_n, "space dimension N")->required();
  landscape->add_option("--t-grid", grid_spec, "a:b:n");
  landscape->add_option("--out", land_out, "output CSV path")->required();

  int crit_k = 2, crit_n = 7;
  bool crit_json = false;
  auto* critical = app.add_subcommand("critical", "locate and classify critical points");
  critical->add_option("--k", crit_k, "ring size (2, 3 or 5)")->required();
  critical->add_option("--dim", crit_n, "space dimension N")->required();
  critical->add_flag("--json", crit_json, "print JSON records");

  std::string claim, verify_out;
  int verify_n = 7, dim_max = 200;
  auto* verify = app.add_subcommand("verify", "machine-check one of the claims");
  verify
      ->add_option("--claim", claim,
                   "k2-two-points|k3-threshold|k3-inequalities|k4-nonexistence|"
                   "k5-existence|k5-second-root")
      ->required();
  verify->add_option("--dim", verify_n, "space dimension N");
  verify->add_option("--dim-max", dim_max, "scan upper bound (k3-threshold)");
  verify->add_option("--out", verify_out, "write the JSON report here");

  int prof_k = 3, prof_n = 7, prof_res = 101;
  double prof_eps = 1e-3, prof_mu0 = 1.0, prof_alpha = 1.0, prof_t = 0.5,
         prof_extent = 0.70;
  std::string prof_pattern = "negative", prof_lambda = "1,1",
              prof_plane = "e1e2", prof_out = "field.csv";
  auto* profile = app.add_subcommand("profile", "assemble and export the bubble field");
  profile->add_option("--k", prof_k, "ring size")->required();
  profile->add_option("--pattern", prof_pattern, "negative|alternating");
  profile->add_option("--dim", prof_n, "space dimension N")->required();
  profile->add_option("--eps", prof_eps, "subcriticality parameter");
  profile->add_option("--mu0", prof_mu0, "Hardy scale mu0");
  profile->add_option("--alpha", prof_alpha, "Hardy exponent alpha");
  profile->add_option("--t", prof_t, "ring radius")->required();
  profile->add_option("--lambda", prof_lambda, "L0,L1[,L2]")->required();
  profile->add_option("--plane", prof_plane, "e1e2|e1e3");
  profile->add_option("--extent", prof_extent, "slice half-width");
  profile->add_option("--res", prof_res, "lattice resolution per axis");
  profile->add_option("--out", prof_out, "output file (.csv or .json)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (constants->parsed()) return run_constants(dim_n, mu);
    if (tstar->parsed()) return run_tstar(which, tstar_n);
    if (landscape->parsed()) return run_landscape(land_k, land_n, grid_spec, land_out);
    if (critical->parsed()) return run_critical(crit_k, crit_n, crit_json);
    if (verify->parsed()) return run_verify(claim, verify_n, dim_max, verify_out);
    if (profile->parsed())
      return run_profile(prof_k, prof_pattern, prof_n, prof_eps, prof_mu0,
                         prof_alpha, prof_t, prof_lambda, prof_plane, prof_extent,
                         prof_res, prof_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
