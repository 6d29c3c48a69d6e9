#include "q5/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace q5::oracle {

SignProblemStats sign_problem(const ModelInstance& m, const StateVector& psi0, double t, double zero_tol) {
  const StateVector s = evolve_exact(m, psi0, t);
  const int n = s.n_qudits();
  SignProblemStats out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double p = std::norm(s[i]);
    if (p <= zero_tol) continue;
    out.probabilities.push_back(p);
    double szi = 0.0;
    for (int k = 0; k < n; ++k) szi += diag::spin_z[static_cast<std::size_t>(digit_of(i, k, n))];
    const double x = p * szi;
    if (std::abs(x) > zero_tol) out.spin_densities.push_back(x);
    out.sz += x;
  }
  std::sort(out.probabilities.begin(), out.probabilities.end(), std::greater<>());
  std::sort(out.spin_densities.begin(), out.spin_densities.end());
  if (!out.spin_densities.empty()) {
    double s1 = 0.0;
    for (double x : out.spin_densities) s1 += x;
    out.mean = s1 / static_cast<double>(out.spin_densities.size());
    double v = 0.0;
    for (double x : out.spin_densities) v += (x - out.mean) * (x - out.mean);
    out.stddev = std::sqrt(v / static_cast<double>(out.spin_densities.size()));
  }
  return out;
}

double trotter_step_n_violation(const ModelInstance& m, const StateVector& psi0, double dt,
                                const circuit::TrotterOptions& opts) {
  const double n0 = expect_diagonal(psi0, diag::number);
  const StateVector s = circuit::execute(circuit::trotter_step(m, dt, opts), psi0);
  return std::abs(expect_diagonal(s, diag::number) - n0);
}

double single_factor_n_violation(const ModelInstance& m, const StateVector& psi0, double dt) {
  if (m.n_qudits() < 2) throw std::domain_error("single-factor diagnostic needs at least two qudits");
  const double n0 = expect_diagonal(psi0, diag::number);
  for (const auto& t : two_body_terms(m.couplings)) {
    if (t.kind != PairKind::XX || t.left == LevelPair{1, 2} || t.left == LevelPair{2, 3}) continue;
    circuit::CircuitIR c;
    c.n_qudits = m.n_qudits();
    c.gates.emplace_back(circuit::TwoQuditGivens{t.kind, t.left.first, t.left.second, t.right.first,
                                                 t.right.second, dt * t.coefficient, 0, 1});
    const StateVector s = circuit::execute(c, psi0);
    return std::abs(expect_diagonal(s, diag::number) - n0);
  }
  throw std::domain_error("single-factor diagnostic needs g != 0");
}

}  // namespace q5::oracle
