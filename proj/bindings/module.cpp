#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "multibubble/claims.hpp"
#include "multibubble/energy.hpp"
#include "multibubble/field.hpp"
#include "multibubble/solver.hpp"

namespace py = pybind11;
namespace mb = multibubble;

namespace {

mb::BallPoint make_point(const std::vector<double>& coords) {
  mb::BallPoint p;
  p.x = coords;
  return p;
}

py::dict eval_to_dict(const mb::EnergyEvaluation& e) {
  py::dict out;
  out["value"] = e.value;
  std::vector<double> grad(static_cast<size_t>(e.grad.n));
  for (int i = 0; i < e.grad.n; ++i) grad[static_cast<size_t>(i)] = e.grad[i];
  out["grad"] = grad;
  std::vector<std::vector<double>> hess(static_cast<size_t>(e.hess.n));
  for (int i = 0; i < e.hess.n; ++i) {
    hess[static_cast<size_t>(i)].resize(static_cast<size_t>(e.hess.n));
    for (int j = 0; j < e.hess.n; ++j) hess[static_cast<size_t>(i)][static_cast<size_t>(j)] = e.hess(i, j);
  }
  out["hess"] = hess;
  return out;
}

py::dict record_to_dict(const mb::CriticalPointRecord& r) {
  py::dict out;
  out["lambda"] = r.lambda;
  out["t"] = r.t;
  out["grad_norm"] = r.grad_norm;
  out["hess_eigenvalues"] = r.hess_eigenvalues;
  out["morse_index"] = r.morse_index;
  out["degree_sign"] = r.degree_sign;
  out["degenerate"] = r.degenerate;
  out["kind"] = r.kind == mb::CriticalKind::local_min        ? "local_min"
                : r.kind == mb::CriticalKind::saddle_index_1 ? "saddle_index_1"
                                                             : "other";
  return out;
}

py::dict report_to_dict(const mb::ClaimReport& r) {
  py::dict out;
  out["claim_id"] = r.claim_id;
  out["dim"] = r.dim;
  out["verdict"] = mb::to_string(r.verdict);
  py::list ev;
  for (const auto& row : r.evidence) {
    py::dict d;
    d["param"] = row.param;
    d["quantity"] = row.quantity;
    d["value"] = row.value;
    ev.append(d);
  }
  out["evidence"] = ev;
  out["tolerances"] = r.tolerances;
  return out;
}

mb::LambdaState make_state(const std::vector<double>& lambda) {
  mb::LambdaState st;
  if (lambda.size() < 2) throw mb::DomainError("lambda needs at least two entries");
  st.lambda0 = lambda[0];
  st.lambda1 = lambda[1];
  if (lambda.size() > 2) st.lambda2 = lambda[2];
  return st;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "reduced-energy landscape of multi-bubble configurations on the unit ball";

  py::register_exception<mb::Error>(m, "MultibubbleError");

  m.def("two_star", [](int n) { return mb::Dimension(n).two_star(); }, py::arg("N"));
  m.def("mu_bar", [](int n) { return mb::Dimension(n).mu_bar(); }, py::arg("N"));

  m.def(
      "hardy_exponents",
      [](int n, double mu) { return mb::hardy_exponents(mb::Dimension(n), mu); },
      py::arg("N"), py::arg("mu"));
  m.def(
      "bubble_amplitudes",
      [](int n, double mu) { return mb::bubble_amplitudes(mb::Dimension(n), mu); },
      py::arg("N"), py::arg("mu"));
  m.def(
      "bubble_integrals",
      [](int n) {
        const auto& bi = mb::bubble_integrals(mb::Dimension(n));
        py::dict out;
        out["b1"] = bi.b1;
        out["b2"] = bi.b2;
        out["b2_over_2b1"] = bi.b2_over_2b1;
        out["s0"] = bi.s0;
        return out;
      },
      py::arg("N"));
  m.def(
      "constants",
      [](int n, double mu) {
        const mb::Dimension dim(n);
        const auto c = mb::bubble_constants(dim, mu);
        py::dict out;
        out["N"] = n;
        out["two_star"] = dim.two_star();
        out["mu_bar"] = dim.mu_bar();
        out["beta1"] = c.beta1;
        out["beta2"] = c.beta2;
        out["c0"] = c.c0;
        out["c_mu"] = c.c_mu;
        out["s0"] = c.s0;
        out["b1"] = c.b1;
        out["b2"] = c.b2;
        return out;
      },
      py::arg("N"), py::arg("mu") = 0.0);

  m.def(
      "regular_part",
      [](const std::vector<double>& x, const std::vector<double>& y, int n) {
        return mb::regular_part(make_point(x), make_point(y), mb::Dimension(n));
      },
      py::arg("x"), py::arg("y"), py::arg("N"));
  m.def(
      "green",
      [](const std::vector<double>& x, const std::vector<double>& y, int n) {
        return mb::green(make_point(x), make_point(y), mb::Dimension(n));
      },
      py::arg("x"), py::arg("y"), py::arg("N"));
  m.def(
      "ring_points",
      [](int k, double t, int n) {
        const auto pts = mb::ring_points(k, t, mb::Dimension(n));
        std::vector<std::vector<double>> out;
        for (const auto& p : pts) out.push_back(p.x);
        return out;
      },
      py::arg("k"), py::arg("t"), py::arg("N"));
  m.def(
      "interaction_coeffs",
      [](double t, int n) {
        const auto c = mb::interaction_coeffs(t, mb::Dimension(n));
        py::dict out;
        out["tau1"] = c.tau1;
        out["gamma1"] = c.gamma1;
        out["gamma2"] = c.gamma2;
        out["gamma3"] = c.gamma3;
        out["gamma4"] = c.gamma4;
        out["dtau1"] = c.dtau1;
        out["dgamma1"] = c.dgamma1;
        out["dgamma2"] = c.dgamma2;
        out["dgamma3"] = c.dgamma3;
        out["dgamma4"] = c.dgamma4;
        return out;
      },
      py::arg("t"), py::arg("N"));

  m.def(
      "psi",
      [](const std::vector<double>& lambda, const std::vector<std::vector<double>>& xi,
         int n) {
        std::vector<mb::BallPoint> pts;
        for (const auto& p : xi) pts.push_back(make_point(p));
        return mb::psi(lambda, pts, mb::Dimension(n));
      },
      py::arg("lambda"), py::arg("xi"), py::arg("N"));
  m.def(
      "psi_tilde",
      [](const std::vector<double>& lambda, const std::vector<std::vector<double>>& xi,
         int n) {
        std::vector<mb::BallPoint> pts;
        for (const auto& p : xi) pts.push_back(make_point(p));
        return mb::psi_tilde(lambda, pts, mb::Dimension(n));
      },
      py::arg("lambda"), py::arg("xi"), py::arg("N"));
  m.def(
      "f_eval",
      [](int k, const std::vector<double>& lambda, double t, int n) {
        const mb::Dimension dim(n);
        const mb::LambdaState st = make_state(lambda);
        return eval_to_dict(k == 5 ? mb::f5_eval(st, t, dim)
                                   : mb::f_k_eval(k, st, t, dim));
      },
      py::arg("k"), py::arg("lambda"), py::arg("t"), py::arg("N"));

  m.def(
      "ring_coeff",
      [](int k, double t, int n) {
        const auto jet = mb::ring_interaction_jet(k, t, mb::Dimension(n));
        py::dict out;
        out["value"] = jet.v;
        out["d1"] = jet.d1;
        out["d2"] = jet.d2;
        return out;
      },
      py::arg("k"), py::arg("t"), py::arg("N"),
      "generic k-gon ring coefficient H(xi1,xi1) - sum G(xi1,xi_j)");
  m.def(
      "iota_ring",
      [](int k, double t, int n) { return mb::iota_ring(k, t, mb::Dimension(n)); },
      py::arg("k"), py::arg("t"), py::arg("N"));

  m.def(
      "ring_profile",
      [](int k, double t, int n) {
        const auto p = mb::ring_profile(k, t, mb::Dimension(n));
        py::dict out;
        out["lambda0"] = p.lambda0;
        out["lambda1"] = p.lambda1;
        out["alpha"] = p.alpha;
        out["beta"] = p.beta;
        return out;
      },
      py::arg("k"), py::arg("t"), py::arg("N"));
  m.def(
      "lambda_profile_f5",
      [](double t, int n) {
        const auto p = mb::lambda_profile_f5(t, mb::Dimension(n));
        py::dict out;
        out["lambda0"] = p.lambda0;
        out["lambda1"] = p.lambda1;
        out["lambda2"] = p.lambda2;
        out["residuals"] = std::vector<double>{p.res_eq2, p.res_eq3, p.res_eq4};
        return out;
      },
      py::arg("t"), py::arg("N"));

  m.def("nu1", [](double t, int n) { return mb::nu1(t, mb::Dimension(n)); },
        py::arg("t"), py::arg("N"));
  m.def("iota1", [](double t, int n) { return mb::iota1(t, mb::Dimension(n)); },
        py::arg("t"), py::arg("N"));
  m.def("iota1_sign", [](double t, int n) { return mb::iota1_sign(t, mb::Dimension(n)); },
        py::arg("t"), py::arg("N"));
  m.def("alpha1_iota2",
        [](double t, int n) { return mb::alpha1_iota2(t, mb::Dimension(n)); },
        py::arg("t"), py::arg("N"));
  m.def("iota3", [](double t, int n) { return mb::iota3(t, mb::Dimension(n)); },
        py::arg("t"), py::arg("N"));
  m.def("nu2_iota3", [](double t, int n) { return mb::nu2_iota3(t, mb::Dimension(n)); },
        py::arg("t"), py::arg("N"));
  m.def("f5_hessian_det_sign",
        [](double t, int n) { return mb::f5_hessian_det_sign(t, mb::Dimension(n)); },
        py::arg("t"), py::arg("N"));

  m.def(
      "find_tstars",
      [](int n) {
        const auto ts = mb::find_tstars(mb::Dimension(n));
        py::dict out;
        out["tstar_k3"] = ts.tstar_k3;
        out["tstar_k4"] = ts.tstar_k4;
        out["t1star_k5"] = ts.t1star_k5;
        out["t2star_k5"] = ts.t2star_k5;
        return out;
      },
      py::arg("N"));
  m.def(
      "critical_points",
      [](int k, int n) {
        py::list out;
        for (const auto& r : mb::find_critical_points(k, mb::Dimension(n)))
          out.append(record_to_dict(r));
        return out;
      },
      py::arg("k"), py::arg("N"));

  m.def(
      "verify_claim",
      [](const std::string& claim, int n, int dim_max) {
        const mb::Dimension dim(n);
        if (claim == "k2-two-points") return report_to_dict(mb::verify_k2_two_points(dim));
        if (claim == "k3-threshold")
          return report_to_dict(mb::scan_k3_threshold(dim_max).second);
        if (claim == "k3-inequalities")
          return report_to_dict(mb::verify_k3_largeN_inequalities(dim));
        if (claim == "k4-nonexistence")
          return report_to_dict(mb::verify_k4_nonexistence(dim));
        if (claim == "k5-existence") return report_to_dict(mb::verify_k5_existence(dim));
        if (claim == "k5-second-root")
          return report_to_dict(mb::probe_k5_second_root(dim));
        throw mb::Error("unknown claim " + claim);
      },
      py::arg("claim"), py::arg("N") = 7, py::arg("dim_max") = 200);

  m.def(
      "bubble_U",
      [](double delta, const std::vector<double>& xi, const std::vector<double>& x,
         int n) {
        return mb::bubble_U(delta, make_point(xi), make_point(x), mb::Dimension(n));
      },
      py::arg("delta"), py::arg("xi"), py::arg("x"), py::arg("N"));
  m.def(
      "bubble_V",
      [](double mu, double sigma, const std::vector<double>& x, int n) {
        return mb::bubble_V(mu, sigma, make_point(x), mb::Dimension(n));
      },
      py::arg("mu"), py::arg("sigma"), py::arg("x"), py::arg("N"));

  m.def(
      "assemble_field",
      [](int n, int k, const std::string& pattern, double t,
         const std::vector<double>& lambda, double mu0, double alpha, double eps,
         const std::string& plane, double extent, int resolution) {
        const mb::Dimension dim(n);
        mb::ProfileSpec spec(dim, mb::HardyParams(dim, mu0, alpha, eps));
        spec.ring.k = k;
        spec.ring.t = t;
        spec.ring.pattern = pattern == "alternating" ? mb::SignPattern::alternating
                                                     : mb::SignPattern::negative;
        spec.lambda = lambda;
        spec.plane = plane == "e1e3" ? mb::SlicePlane::e1e3 : mb::SlicePlane::e1e2;
        spec.extent = extent;
        spec.resolution = resolution;
        const mb::FieldGrid grid = mb::assemble_field(spec);
        const mb::SymmetryResidual sym = mb::rotation_residual(spec);
        py::dict out;
        out["axis"] = grid.axis;
        out["values"] = grid.values;
        out["capped"] = grid.capped;
        out["sigma_eps"] = grid.sigma_eps;
        out["delta_eps"] = grid.delta_eps;
        out["max_abs"] = grid.max_abs;
        out["rotation_residual"] = sym.residual;
        return out;
      },
      py::arg("N"), py::arg("k"), py::arg("pattern"), py::arg("t"), py::arg("lambda"),
      py::arg("mu0") = 1.0, py::arg("alpha") = 1.0, py::arg("eps") = 1e-3,
      py::arg("plane") = "e1e2", py::arg("extent") = 0.70, py::arg("resolution") = 101);
}
