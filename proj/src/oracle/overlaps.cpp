#include "q5/oracle.hpp"

#include <algorithm>
#include <set>

namespace q5::oracle {

double OverlapSpectrum::total() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.overlap;
  return s;
}

double OverlapSpectrum::largest() const { return entries.empty() ? 0.0 : entries.front().overlap; }

double OverlapSpectrum::inverse_participation() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.overlap * e.overlap;
  return s > 0.0 ? 1.0 / s : 0.0;
}

OverlapSpectrum eigen_overlaps(const ModelInstance& m, const StateVector& psi0, const OverlapOptions& opts) {
  const int n = m.n_qudits();
  if (psi0.n_qudits() != n) throw std::domain_error("eigen_overlaps: state and model sizes differ");
  std::set<int> present;
  for (std::size_t i = 0; i < psi0.size(); ++i)
    if (psi0[i] != cplx(0.0)) present.insert(particle_number_of(i, n));

  EvolverOptions eo;
  eo.krylov_threshold = opts.dense_limit;
  ExactEvolver ev(m, eo);
  OverlapSpectrum out;
  for (int nn : present) {
    const SectorIndex& sec = ev.sector(nn);
    const EigenSystem& es = ev.sector_eigensystem(nn);
    Eigen::VectorXcd c(static_cast<Eigen::Index>(sec.size()));
    for (std::size_t k = 0; k < sec.size(); ++k) c(static_cast<Eigen::Index>(k)) = psi0[sec.indices[k]];
    const Eigen::VectorXcd a = es.vectors.adjoint() * c;
    Eigen::Index i = 0;
    while (i < a.size()) {
      Eigen::Index j = i;
      double p = 0.0;
      while (j < a.size() && es.values(j) - es.values(i) <= opts.degeneracy_tol) {
        p += std::norm(a(j));
        ++j;
      }
      if (p > opts.zero_tol) out.entries.push_back({es.values(i), p, static_cast<int>(j - i)});
      i = j;
    }
  }
  std::stable_sort(out.entries.begin(), out.entries.end(), [](const OverlapEntry& x, const OverlapEntry& y) {
    if (x.overlap != y.overlap) return x.overlap > y.overlap;
    return x.energy < y.energy;
  });
  return out;
}

}  // namespace q5::oracle
