#include "q5/agassi.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

namespace q5 {

EigenSystem hermitian_eigensystem(const Eigen::MatrixXcd& h, bool with_vectors) {
  EigenSystem out;
  const auto opt = with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.real(), opt);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    out.values = es.eigenvalues();
    if (with_vectors) out.vectors = es.eigenvectors().cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, opt);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    out.values = es.eigenvalues();
    if (with_vectors) out.vectors = es.eigenvectors();
  }
  if (with_vectors) fix_eigenvector_phases(out.vectors);
  return out;
}

void fix_eigenvector_phases(Eigen::MatrixXcd& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      const cplx z = vectors(r, c);
      if (std::abs(z) > 1e-12) {
        vectors.col(c) *= std::conj(z) / std::abs(z);
        break;
      }
    }
  }
}

SpectrumResult spectrum(const ModelInstance& m, int particle_number, int k, const SpectrumOptions& opts) {
  if (k < 1) throw std::domain_error("spectrum needs k >= 1");
  const SectorIndex sec = enumerate_sector(m.omega, particle_number);
  if (sec.size() == 0)
    throw std::domain_error("sector N=" + std::to_string(particle_number) + " is empty for omega=" +
                            std::to_string(m.omega));
  const OperatorMatrix h = sector_hamiltonian(m, sec);
  SpectrumResult res;
  std::size_t want = static_cast<std::size_t>(k);
  if (want > sec.size()) {
    want = sec.size();
    res.truncated = true;
  }
  std::vector<double> ev;
  if (sec.size() <= opts.dense_limit) {
    const EigenSystem es = hermitian_eigensystem(Eigen::MatrixXcd(h), false);
    ev.assign(es.values.data(), es.values.data() + es.values.size());
  } else {
    ev = lanczos_lowest(h, static_cast<int>(want), opts.lanczos_max_iter, opts.lanczos_tol);
    res.iterative = true;
  }
  std::sort(ev.begin(), ev.end());
  ev.resize(std::min(ev.size(), want));
  for (double e : ev) res.densities.push_back(e / m.omega);
  return res;
}

}  // namespace q5
