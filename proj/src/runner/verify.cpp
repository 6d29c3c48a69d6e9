#include "q5/runner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace q5::runner {
namespace {

CheckResult check(std::string name, double measured, double tol, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = tol;
  c.passed = std::isfinite(measured) && measured <= tol;
  c.detail = std::move(detail);
  return c;
}

CheckResult band(std::string name, double measured, double lo, double hi) {
  CheckResult c;
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = hi;
  c.passed = measured >= lo && measured <= hi;
  c.detail = "band [" + fmt12(lo) + " " + fmt12(hi) + "]";
  return c;
}

double state_distance(const StateVector& a, const StateVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

const char* kind_name(PairKind k) { return k == PairKind::XX ? "XX" : "YY"; }

}  // namespace

double loglog_slope(const std::vector<int>& n, const std::vector<double>& err) {
  if (n.size() != err.size() || n.size() < 2) throw std::invalid_argument("slope fit needs >= 2 matching points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double x = std::log(static_cast<double>(n[i])), y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::vector<CheckResult> algebra_checks() {
  return {
      check("algebra.commutator_tables", so5::verify_commutators().max_deviation(), 1e-13),
      check("algebra.trace_normalization", so5::trace_normalization_deviation(), 1e-13),
      check("algebra.lie_relation", so5::lie_relation_deviation(), 1e-13),
  };
}

std::vector<CheckResult> decomposition_checks(std::uint64_t seed, int alphas_per_combo) {
  // distinct (kind, ab, mn) entanglers of the Hamiltonian
  std::set<std::tuple<int, LevelPair, LevelPair>> combos;
  for (const auto& t : two_body_terms(preset(4))) combos.insert({static_cast<int>(t.kind), t.left, t.right});
  std::vector<CheckResult> out;
  for (auto form : {circuit::EntanglerForm::Improved, circuit::EntanglerForm::Original}) {
    Rng rng(seed);
    double worst = 0.0;
    std::string where;
    for (const auto& [k, ab, mn] : combos) {
      const PairKind kind = static_cast<PairKind>(k);
      for (int a = 0; a < alphas_per_combo; ++a) {
        const double alpha = (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
        const auto circ = circuit::decompose_two_qudit_givens(kind, ab, mn, alpha, 0, 1, 2, form);
        const double d = (circuit::circuit_matrix(circ, 2) -
                          Eigen::MatrixXcd(circuit::two_qudit_givens_matrix(kind, ab, mn, alpha)))
                             .cwiseAbs()
                             .maxCoeff();
        if (d > worst) {
          worst = d;
          where = std::string(kind_name(kind)) + " " + std::to_string(ab.first) + std::to_string(ab.second) + "/" +
                  std::to_string(mn.first) + std::to_string(mn.second);
        }
      }
    }
    out.push_back(check("decomposition." + circuit::to_string(form), worst, 1e-10,
                        std::to_string(combos.size()) + " combos, worst at " + where));
  }
  return out;
}

std::vector<CheckResult> mapping_checks(const PairingSigns& qu5it_signs) {
  std::vector<CheckResult> out;
  for (auto kind : {mappings::Mapping::PaJW, mappings::Mapping::StS})
    for (int np : {1, 2}) {
      double spectral = 0.0, leak = 0.0;
      for (int s = 0; s <= 4; ++s) {
        const auto rep = mappings::verify_equivalence(kind, np, preset(s), qu5it_signs);
        spectral = std::max(spectral, rep.spectral);
        leak = std::max(leak, rep.leakage);
      }
      const std::string base = "mapping." + mappings::to_string(kind) + "." + std::to_string(np);
      out.push_back(check(base + ".spectral", spectral, 1e-10, "sets 0-4"));
      out.push_back(check(base + ".leakage", leak, 1e-12, "unphysical states invariant"));
    }
  return out;
}

std::vector<CheckResult> trotter_order_checks() {
  const ModelInstance m{4, preset(3)};
  const std::vector<int> ns{8, 16, 32, 64};
  std::vector<CheckResult> out;
  std::vector<double> slopes_sz;
  for (char label : {'A', 'B'}) {
    const StateVector psi0 = q5::initial_state(4, label);
    const StateVector ex = oracle::evolve_exact(m, psi0, 1.0);
    const double sz_ex = expect_diagonal(ex, diag::spin_z);
    std::vector<double> e_state, e_sz;
    for (int n : ns) {
      const StateVector tr = oracle::evolve_trotter(m, psi0, 1.0, n);
      e_state.push_back(state_distance(tr, ex));
      e_sz.push_back(std::abs(expect_diagonal(tr, diag::spin_z) - sz_ex));
    }
    const double ss = loglog_slope(ns, e_state);
    const double sz = loglog_slope(ns, e_sz);
    slopes_sz.push_back(sz);
    if (label == 'A') {
      out.push_back(band("trotter.order.state_A", -ss, 0.8, 1.2));
      auto c = band("trotter.order.sz_A", -sz, 0.8, 1.2);
      // the observable error cancels at first order for this real start state
      c.expected_fail = true;
      c.detail += ", observable error is second order";
      out.push_back(c);
    }
  }
  CheckResult slower;
  slower.name = "trotter.b_slower_than_a";
  slower.measured = -slopes_sz[1];
  slower.tolerance = -slopes_sz[0];
  slower.passed = -slopes_sz[1] < -slopes_sz[0];
  slower.detail = "fitted sz error slopes, B then A";
  out.push_back(slower);
  return out;
}

RunResult cmd_verify(const ExperimentConfig& c) {
  RunResult r;
  r.manifest = RunManifest::for_config("verify", c);
  Stopwatch sw(r.manifest);
  auto add = [&](std::vector<CheckResult> v) { r.checks.insert(r.checks.end(), v.begin(), v.end()); };

  add(algebra_checks());
  CheckResult tight = check("algebra.commutator_tables.tight", so5::verify_commutators().max_deviation(), 1e-16,
                            "below double rounding on sqrt2 entries");
  tight.expected_fail = true;
  r.checks.push_back(tight);
  sw.lap("algebra");

  add(decomposition_checks(c.seed));
  sw.lap("decomposition");

  PairingSigns signs;
  if (c.inject == "sigma14") {
    signs.s14 = -signs.s14;
    r.summary.push_back("injected: pairing sign of level pair (1,4) flipped on the qu5it side");
  }
  add(mapping_checks(signs));
  sw.lap("mappings");

  add(trotter_order_checks());
  sw.lap("trotter");
  return r;
}

}  // namespace q5::runner
