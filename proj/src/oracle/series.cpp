#include "q5/oracle.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace q5::oracle {
namespace {

std::string g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::size_t dominant_index(const StateVector& s) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (std::norm(s[i]) > std::norm(s[best])) best = i;
  return best;
}

}  // namespace

std::string to_string(EvolverKind k) { return k == EvolverKind::Exact ? "exact" : "trotter"; }

std::vector<double> uniform_grid(double t_max, int points) {
  if (points < 1) throw std::domain_error("grid needs at least one point");
  std::vector<double> g;
  for (int k = 0; k < points; ++k) g.push_back(points == 1 ? 0.0 : t_max * k / (points - 1));
  return g;
}

StateVector evolve_trotter(const ModelInstance& m, const StateVector& psi0, double t, int n_steps,
                           const circuit::TrotterOptions& opts, const ApplyOptions& apply) {
  if (n_steps < 1) throw std::domain_error("evolve_trotter needs n_steps >= 1");
  if (t == 0.0) return psi0;
  const circuit::CircuitIR step = circuit::trotter_step(m, t / n_steps, opts);
  std::vector<DenseGate> gates;
  gates.reserve(step.gates.size());
  for (const auto& g : step.gates) gates.push_back(circuit::to_dense(g));
  StateVector s = psi0;
  for (int k = 0; k < n_steps; ++k)
    for (const auto& g : gates) apply_gate_inplace(s, g, apply);
  return s;
}

std::vector<SeriesRow> observable_series(const ModelInstance& m, const StateVector& psi0,
                                         const std::vector<double>& t_grid, const SeriesOptions& opts) {
  if (opts.kind == EvolverKind::Trotter && opts.n_trot < 1) throw std::domain_error("n_trot must be >= 1");
  ExactEvolver exact(m, opts.exact);
  ApplyOptions ao;
  ao.threads = opts.threads;
  const std::size_t start = dominant_index(psi0);
  const std::string start_digits = digit_string(start, psi0.n_qudits());

  std::vector<SeriesRow> rows;
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    const double t = t_grid[k];
    const StateVector s = opts.kind == EvolverKind::Exact ? exact.evolve(psi0, t)
                                                          : evolve_trotter(m, psi0, t, opts.n_trot, opts.trotter, ao);
    SeriesRow r;
    r.t = t;
    r.survival = std::norm(inner_product(psi0, s));
    r.pairs = expect_diagonal(s, diag::pairs);
    r.sz = expect_diagonal(s, diag::spin_z);
    r.n = expect_diagonal(s, diag::number);
    r.evolver = to_string(opts.kind);
    r.n_trot = opts.kind == EvolverKind::Exact ? 0 : opts.n_trot;
    r.shots = opts.shots;
    if (opts.shots > 0) {
      const ShotHistogram h = sample(s, opts.shots, opts.seed + k);
      r.shot_survival = h.frequency(start_digits);
      r.shot_pairs = h.estimate_diagonal(diag::pairs);
      r.shot_sz = h.estimate_diagonal(diag::spin_z);
      r.shot_n = h.estimate_diagonal(diag::number);
    }
    rows.push_back(r);
  }
  return rows;
}

void write_series_csv(std::ostream& os, const std::vector<SeriesRow>& rows) {
  const bool shots = !rows.empty() && rows.front().shots > 0;
  os << "t,survival,pairs,sz,n,evolver,n_trot,shots";
  if (shots) os << ",shot_survival,shot_pairs,shot_sz,shot_n";
  os << '\n';
  for (const auto& r : rows) {
    os << g12(r.t) << ',' << g12(r.survival) << ',' << g12(r.pairs) << ',' << g12(r.sz) << ',' << g12(r.n) << ','
       << r.evolver << ',' << r.n_trot << ',' << r.shots;
    if (shots)
      os << ',' << g12(r.shot_survival) << ',' << g12(r.shot_pairs) << ',' << g12(r.shot_sz) << ',' << g12(r.shot_n);
    os << '\n';
  }
}

double late_time_variance(const ModelInstance& m, const StateVector& psi0, double t_from, double t_to, int points,
                          const Diag5& observable) {
  if (points < 2) throw std::domain_error("late_time_variance needs at least two points");
  ExactEvolver ev(m);
  double s = 0.0, s2 = 0.0;
  for (int k = 0; k < points; ++k) {
    const double t = t_from + (t_to - t_from) * k / (points - 1);
    const double x = expect_diagonal(ev.evolve(psi0, t), observable);
    s += x;
    s2 += x * x;
  }
  const double mean = s / points;
  return s2 / points - mean * mean;
}

}  // namespace q5::oracle
