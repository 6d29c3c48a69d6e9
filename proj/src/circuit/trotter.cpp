#include "q5/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace q5::circuit {
namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

CircuitIR trotter_step(const ModelInstance& m, double dt, const TrotterOptions& opts) {
  m.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::domain_error("trotter_step needs a finite dt > 0");
  const auto& c = m.couplings;
  const int n = m.n_qudits();

  CircuitIR out;
  out.n_qudits = n;
  out.metadata["backend"] = to_string(opts.backend);
  out.metadata["entangler"] = to_string(opts.form);
  out.metadata["ordering"] = kTrotterOrdering;
  out.metadata["dt"] = fmt(dt);
  out.metadata["omega"] = std::to_string(m.omega);

  // The operator product is U2g U2V U1Tz U1X13 U1Npair; the list runs right to left.
  Diag5 np{}, tz{};
  for (std::size_t d = 0; d < 5; ++d) {
    np[d] = dt * c.g * diag::pairs[d];
    tz[d] = -dt * c.epsilon * diag::spin_z[d];
  }
  for (int q = 0; q < n; ++q) out.gates.emplace_back(PhaseDiag{q, np});
  for (int q = 0; q < n; ++q) out.gates.emplace_back(GivensRot{GivensKind::X, 1, 3, -dt * (c.v + c.g), q});
  for (int q = 0; q < n; ++q) out.gates.emplace_back(PhaseDiag{q, tz});

  const auto terms = two_body_terms(c, opts.signs);
  for (bool vsector : {true, false}) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (const auto& t : terms) {
          const bool is_v = t.left == LevelPair{1, 2} || t.left == LevelPair{2, 3};
          if (is_v != vsector) continue;
          const double angle = dt * t.coefficient;
          if (opts.backend == Backend::Native) {
            out.gates.emplace_back(
                TwoQuditGivens{t.kind, t.left.first, t.left.second, t.right.first, t.right.second, angle, i, j});
          } else {
            out.append(decompose_two_qudit_givens(t.kind, t.left, t.right, angle, i, j, n, opts.form));
          }
        }
  }
  return out;
}

CircuitIR trotter_step(const ModelInstance& m, double dt, Backend backend) {
  TrotterOptions o;
  o.backend = backend;
  return trotter_step(m, dt, o);
}

CircuitIR trotter_circuit(const ModelInstance& m, double t, int n_steps, const TrotterOptions& opts) {
  if (n_steps < 1) throw std::domain_error("trotter_circuit needs n_steps >= 1");
  const CircuitIR step = trotter_step(m, t / n_steps, opts);
  CircuitIR out = step;
  for (int k = 1; k < n_steps; ++k) out.append(step);
  out.metadata["n_trot"] = std::to_string(n_steps);
  out.metadata["t"] = fmt(t);
  return out;
}

}  // namespace q5::circuit
