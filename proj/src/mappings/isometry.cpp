#include "q5/mappings.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace q5::mappings {
namespace {

Eigen::VectorXd ket(int bits, int n) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(1 << n);
  v(bits) = 1.0;
  return v;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

std::string to_string(Mapping m) { return m == Mapping::PaJW ? "paJW" : "StS"; }

Mapping parse_mapping(const std::string& s) {
  if (s == "paJW" || s == "pajw") return Mapping::PaJW;
  if (s == "StS" || s == "sts") return Mapping::StS;
  throw std::domain_error("unknown mapping '" + s + "'");
}

int qubits_per_qudit(Mapping m) { return m == Mapping::PaJW ? 4 : 3; }

StateMapIsometry isometry(Mapping kind) {
  StateMapIsometry iso{kind, qubits_per_qudit(kind), {}};
  if (kind == Mapping::PaJW) {
    iso.images = {ket(0b1111, 4), ket(0b0101, 4), (ket(0b0110, 4) + ket(0b1001, 4)) / std::sqrt(2.0), ket(0b1010, 4),
                  ket(0b0000, 4)};
  } else {
    for (int d = 0; d < 5; ++d) iso.images.push_back(ket(d, 3));
  }
  return iso;
}

Eigen::SparseMatrix<double> isometry_matrix(Mapping kind, int n_qudits) {
  const StateMapIsometry iso = isometry(kind);
  Eigen::SparseMatrix<double> v1(1 << iso.qubits, 5);
  std::vector<Eigen::Triplet<double>> t;
  for (int d = 0; d < 5; ++d)
    for (Eigen::Index r = 0; r < iso.images[static_cast<std::size_t>(d)].size(); ++r)
      if (iso.images[static_cast<std::size_t>(d)](r) != 0.0)
        t.emplace_back(static_cast<int>(r), d, iso.images[static_cast<std::size_t>(d)](r));
  v1.setFromTriplets(t.begin(), t.end());
  Eigen::SparseMatrix<double> v = v1;
  for (int k = 1; k < n_qudits; ++k) {
    // kron(v, v1)
    Eigen::SparseMatrix<double> w(v.rows() * v1.rows(), v.cols() * v1.cols());
    std::vector<Eigen::Triplet<double>> tw;
    for (int a = 0; a < v.outerSize(); ++a)
      for (Eigen::SparseMatrix<double>::InnerIterator ia(v, a); ia; ++ia)
        for (int b = 0; b < v1.outerSize(); ++b)
          for (Eigen::SparseMatrix<double>::InnerIterator ib(v1, b); ib; ++ib)
            tw.emplace_back(static_cast<int>(ia.row() * v1.rows() + ib.row()),
                            static_cast<int>(ia.col() * v1.cols() + ib.col()), ia.value() * ib.value());
    w.setFromTriplets(tw.begin(), tw.end());
    v = std::move(w);
  }
  return v;
}

Eigen::VectorXcd embed_state(const StateVector& psi, Mapping kind) {
  const Eigen::SparseMatrix<double> v = isometry_matrix(kind, psi.n_qudits());
  const Eigen::Map<const Eigen::VectorXcd> a(psi.amplitudes().data(), static_cast<Eigen::Index>(psi.size()));
  return v.cast<cplx>() * a;
}

double leakage(const OperatorMatrix& h_qubit, const Eigen::SparseMatrix<double>& v) {
  const Eigen::SparseMatrix<cplx> vc = v.cast<cplx>();
  const Eigen::MatrixXcd hv = Eigen::MatrixXcd(h_qubit * vc);
  const Eigen::MatrixXcd proj = Eigen::MatrixXcd(vc) * (Eigen::MatrixXcd(vc).adjoint() * hv);
  return max_abs(hv - proj);
}

EquivalenceReport verify_equivalence(Mapping kind, int n_mode_pairs, const CouplingSet& c,
                                     const PairingSigns& qu5it_signs) {
  if (n_mode_pairs < 1 || n_mode_pairs > 2) throw std::domain_error("equivalence checked for 1 or 2 mode pairs");
  const OperatorMatrix hq = kind == Mapping::PaJW ? pajw_operator(c, n_mode_pairs).matrix()
                                                  : sts_operator(c, n_mode_pairs).matrix();
  const Eigen::SparseMatrix<double> v = isometry_matrix(kind, n_mode_pairs);
  HamiltonianOptions ho;
  ho.signs = qu5it_signs;
  const Eigen::MatrixXcd h5 = Eigen::MatrixXcd(full_hamiltonian({2 * n_mode_pairs, c}, ho));
  const Eigen::MatrixXcd vd = Eigen::MatrixXcd(v.cast<cplx>());
  const Eigen::MatrixXcd compressed = vd.adjoint() * Eigen::MatrixXcd(hq) * vd;

  EquivalenceReport r;
  r.conjugation = max_abs(compressed - h5);
  r.leakage = leakage(hq, v);
  r.hermiticity = hermiticity_defect(hq);
  const Eigen::VectorXd e1 = hermitian_eigensystem(0.5 * (compressed + compressed.adjoint()), false).values;
  const Eigen::VectorXd e2 = hermitian_eigensystem(h5, false).values;
  r.spectral = (e1 - e2).cwiseAbs().maxCoeff();
  return r;
}

std::vector<double> physical_sector_spectrum(Mapping kind, int n_mode_pairs, const CouplingSet& c,
                                             int particle_number) {
  const OperatorMatrix hq = kind == Mapping::PaJW ? pajw_operator(c, n_mode_pairs).matrix()
                                                  : sts_operator(c, n_mode_pairs).matrix();
  const Eigen::SparseMatrix<double> v = isometry_matrix(kind, n_mode_pairs);
  const SectorIndex sec = enumerate_sector(2 * n_mode_pairs, particle_number);
  Eigen::MatrixXcd basis(v.rows(), static_cast<Eigen::Index>(sec.size()));
  const Eigen::MatrixXcd vd = Eigen::MatrixXcd(v.cast<cplx>());
  for (std::size_t k = 0; k < sec.size(); ++k)
    basis.col(static_cast<Eigen::Index>(k)) = vd.col(static_cast<Eigen::Index>(sec.indices[k]));
  const Eigen::MatrixXcd hs = basis.adjoint() * (hq * basis);
  const Eigen::VectorXd e = hermitian_eigensystem(0.5 * (hs + hs.adjoint()), false).values;
  return {e.data(), e.data() + e.size()};
}

}  // namespace q5::mappings
