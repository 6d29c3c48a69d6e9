#include "q5/runner.hpp"
#include "reference_densities.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

using namespace q5;
using namespace q5::runner;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool all_passed(const std::vector<CheckResult>& v, std::string& detail) {
  bool ok = true;
  for (const auto& c : v)
    if (!c.passed) {
      ok = false;
      detail += " " + c.name + "=" + fmt12(c.measured);
    }
  return ok;
}

void spectrum_reproduction() {
  const auto t0 = Clock::now();
  std::map<std::tuple<int, int, int>, SpectrumResult> cache;
  int bad = 0, total = 0;
  double worst = 0.0;
  std::string where;
  for (const auto& row : kReferenceDensities)
    for (int s = 0; s <= 4; ++s) {
      const auto key = std::make_tuple(row.omega, row.particle_number, s);
      if (!cache.count(key)) cache.emplace(key, spectrum({row.omega, preset(s)}, row.particle_number, 3));
      const auto& sp = cache.at(key);
      ++total;
      const double got = static_cast<std::size_t>(row.level) < sp.densities.size()
                             ? sp.densities[static_cast<std::size_t>(row.level)]
                             : NAN;
      const double d = std::abs(got - row.density[s]);
      if (!(d <= 5e-4)) {
        ++bad;
        char buf[160];
        std::snprintf(buf, sizeof buf, " [omega=%d N=%d level=%d set-%d got %.5f want %.3f]", row.omega,
                      row.particle_number, row.level, s, got, row.density[s]);
        where += buf;
      } else {
        worst = std::max(worst, d);
      }
    }
  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d cells within 5e-4, %.2f s", total - bad, total, secs);
  report(1, "spectrum densities", bad == 0 && secs < 60.0, buf + where);
}

void closed_form_oracle() {
  std::mt19937_64 g(2024);
  std::uniform_real_distribution<double> u(-2, 2), tt(0, 10);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const CouplingSet c{u(g), u(g), u(g)};
    const double t = tt(g);
    const Mat5 ref = (cplx(0, -t) * one_body_h(c)).exp();
    worst = std::max(worst, (oracle::u1_closed_form(c, t) - ref).cwiseAbs().maxCoeff());
  }
  const double want[] = {0.5, 0.2, 0.2, 0.1};
  double beta_dev = 0.0;
  for (int s = 1; s <= 4; ++s) {
    const auto p = oracle::closed_form_params(preset(s));
    beta_dev = std::max(beta_dev, std::abs(p.beta * p.beta - want[s - 1]));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max entry deviation %.3g, beta^2 deviation %.3g", worst, beta_dev);
  report(2, "closed-form one-qu5it evolution", worst <= 1e-12 && beta_dev <= 1e-10, buf);
}

void decomposition() {
  const auto t0 = Clock::now();
  const auto checks = decomposition_checks(7, 20);
  const double secs = seconds_since(t0);
  std::string detail;
  bool ok = all_passed(checks, detail);
  char buf[120];
  std::snprintf(buf, sizeof buf, "%zu forms, %.2f s", checks.size(), secs);
  report(3, "controlled-gate entanglers", ok && secs < 10.0, buf + detail);
}

void trotter_order() {
  const auto checks = trotter_order_checks();
  bool sz_ok = false, slower_ok = false;
  std::string detail;
  for (const auto& c : checks) {
    if (c.name == "trotter.order.sz_A") {
      sz_ok = c.passed;
      detail += "Sz slope " + fmt12(c.measured) + " in [0.8, 1.2]";
    }
    if (c.name == "trotter.b_slower_than_a") {
      slower_ok = c.passed;
      detail += ", " + c.detail;
    }
  }
  report(4, "Trotter order and state dependence", sz_ok && slower_ok, detail);
}

void resource_formulas() {
  const long long qc = circuit::count_resources(40, circuit::Backend::Controlled).controlled_entangling();
  const long long qn = circuit::count_resources(40, circuit::Backend::Native).native_entangling();
  const long long pj = mappings::count_pajw(40).cnot;
  const long long st = mappings::count_sts(40).cnot;
  std::vector<int> omegas;
  for (int q = 1; q <= 20; ++q) omegas.push_back(2 * q);
  const auto rows = mappings::comparison_table(omegas);
  const bool ok = qc == 45600 && qn == 7600 && pj == 24600 && st == 130920 && rows.size() == 80;
  char buf[200];
  std::snprintf(buf, sizeof buf, "controlled %lld, native %lld, paJW %lld, StS %lld, %zu table rows", qc, qn, pj, st,
                rows.size());
  report(5, "per-step resource counts", ok, buf);
}

void mapping_equivalence() {
  const auto checks = mapping_checks();
  std::string detail;
  const bool ok = all_passed(checks, detail);
  double worst_spec = 0.0, worst_leak = 0.0;
  for (const auto& c : checks) {
    double& w = c.name.find("spectral") != std::string::npos ? worst_spec : worst_leak;
    w = std::max(w, c.measured);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "spectral %.3g, leakage %.3g", worst_spec, worst_leak);
  report(6, "qubit mapping equivalence", ok, buf + detail);
}

void algebra() {
  const auto checks = algebra_checks();
  std::string detail;
  const bool ok = all_passed(checks, detail);
  std::string vals;
  for (const auto& c : checks) vals += (vals.empty() ? "" : ", ") + c.name + " " + fmt12(c.measured);
  report(7, "so(5) algebra", ok, vals + detail);
}

void sectors() {
  const auto t0 = Clock::now();
  const auto s = enumerate_sector(20, 20);
  const double secs = seconds_since(t0);
  const bool ok = s.size() == 1936881 && pow5(10) == 9765625 && secs < 30.0;
  char buf[120];
  std::snprintf(buf, sizeof buf, "%zu of %zu, %.2f s", s.size(), pow5(10), secs);
  report(8, "sector combinatorics", ok, buf);
}

void sign_problem_stats() {
  const ModelInstance m{8, preset(4)};
  const auto a = oracle::sign_problem(m, initial_state(8, 'A'), 0.4);
  const auto b = oracle::sign_problem(m, initial_state(8, 'B'), 0.4);
  const bool ok_a = std::abs(a.mean + 0.03) <= 0.005 && std::abs(a.stddev - 0.13) <= 0.005 && std::abs(a.sz + 1.4) <= 0.05;
  const bool ok_b =
      std::abs(b.mean + 0.004) <= 0.0005 && std::abs(b.stddev - 0.011) <= 0.0005 && std::abs(b.sz + 0.17) <= 0.005;
  char buf[200];
  std::snprintf(buf, sizeof buf, "A %.5f/%.5f/%.4f, B %.6f/%.6f/%.5f", a.mean, a.stddev, a.sz, b.mean, b.stddev, b.sz);
  report(9, "sign-problem statistics", ok_a && ok_b, buf);
}

void determinism() {
  ExperimentConfig c;
  c.omega = 6;
  c.n_trot = {1, 4};
  c.shots = 500;
  c.seed = 11;
  const auto r1 = data_rows(render_csv(cmd_evolve(c)));
  const auto r2 = data_rows(render_csv(cmd_evolve(c)));
  c.threads = 3;
  const auto r3 = data_rows(render_csv(cmd_evolve(c)));
  const bool same = r1 == r2 && r1 == r3 && !r1.empty();

  std::mt19937_64 g(5);
  std::normal_distribution<double> d;
  std::vector<cplx> amp(pow5(6));
  for (auto& x : amp) x = {d(g), d(g)};
  StateVector psi(6, amp);
  psi.normalize();
  Eigen::MatrixXcd m(25, 25);
  for (int i = 0; i < 25; ++i)
    for (int j = 0; j < 25; ++j) m(i, j) = {d(g), d(g)};
  const Mat25 u = Eigen::HouseholderQR<Eigen::MatrixXcd>(m).householderQ();
  ApplyOptions par;
  par.threads = 4;
  par.min_groups_per_thread = 1;
  double dev = 0.0;
  for (auto [a, b] : {std::pair{0, 5}, std::pair{3, 1}, std::pair{2, 4}}) {
    const auto s = apply_gate(psi, DenseGate::pair(a, b, u));
    const auto p = apply_gate(psi, DenseGate::pair(a, b, u), par);
    for (std::size_t i = 0; i < s.size(); ++i) dev = std::max(dev, std::abs(s[i] - p[i]));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu data rows identical: %s, threaded deviation %.3g", r1.size(), same ? "yes" : "no",
                dev);
  report(10, "determinism", same && dev <= 1e-12, buf);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> steps{spectrum_reproduction, closed_form_oracle, decomposition,
                                                 trotter_order,        resource_formulas,  mapping_equivalence,
                                                 algebra,              sectors,            sign_problem_stats,
                                                 determinism};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      steps[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), "exception", false, e.what());
    }
  }
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
