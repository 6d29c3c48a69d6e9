#include "q5/oracle.hpp"

#include <cmath>
#include <set>

namespace q5::oracle {

std::string to_string(EvolutionPath p) {
  switch (p) {
    case EvolutionPath::Auto: return "auto";
    case EvolutionPath::DenseFull: return "dense-full";
    case EvolutionPath::Blocked: return "blocked";
    case EvolutionPath::Krylov: return "krylov";
  }
  return "?";
}

ExactEvolver::ExactEvolver(const ModelInstance& m, EvolverOptions opts) : model_(m), opts_(opts) { m.validate(); }

ExactEvolver::SectorCache& ExactEvolver::cache(int particle_number) const {
  auto it = sectors_.find(particle_number);
  if (it == sectors_.end()) {
    SectorCache c;
    c.index = enumerate_sector(model_.omega, particle_number);
    it = sectors_.emplace(particle_number, std::move(c)).first;
  }
  return it->second;
}

const SectorIndex& ExactEvolver::sector(int particle_number) const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache(particle_number).index;
}

const EigenSystem& ExactEvolver::sector_eigensystem(int particle_number) const {
  std::lock_guard<std::mutex> lock(mu_);
  SectorCache& c = cache(particle_number);
  if (!c.eig) {
    if (c.index.size() > opts_.krylov_threshold)
      throw ResourceError("sector of dimension " + std::to_string(c.index.size()) +
                          " exceeds the dense eigensolve threshold");
    const OperatorMatrix h = sector_hamiltonian(model_, c.index, opts_.signs);
    c.eig = std::make_unique<EigenSystem>(hermitian_eigensystem(Eigen::MatrixXcd(h)));
  }
  return *c.eig;
}

StateVector ExactEvolver::evolve_dense_full(const StateVector& psi, double t) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (!full_) {
      HamiltonianOptions ho;
      ho.signs = opts_.signs;
      const OperatorMatrix h = full_hamiltonian(model_, ho);
      full_ = std::make_unique<EigenSystem>(hermitian_eigensystem(Eigen::MatrixXcd(h)));
    }
  }
  const Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), static_cast<Eigen::Index>(psi.size()));
  Eigen::VectorXcd c = full_->vectors.adjoint() * v;
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) *= std::exp(cplx(0.0, -full_->values(i) * t));
  const Eigen::VectorXcd out = full_->vectors * c;
  return StateVector(psi.n_qudits(), std::vector<cplx>(out.data(), out.data() + out.size()));
}

StateVector ExactEvolver::evolve(const StateVector& psi, double t) const {
  const int n = model_.n_qudits();
  if (psi.n_qudits() != n) throw std::domain_error("evolve: state and model sizes differ");
  const std::size_t dim = psi.size();

  EvolutionPath path = opts_.path;
  if (path == EvolutionPath::DenseFull) {
    if (dim > opts_.dense_full_limit)
      throw ResourceError("dense full-space evolution limited to dimension " + std::to_string(opts_.dense_full_limit));
    last_path_ = path;
    return evolve_dense_full(psi, t);
  }

  std::set<int> present;
  for (std::size_t i = 0; i < dim; ++i)
    if (psi[i] != cplx(0.0)) present.insert(particle_number_of(i, n));
  if (dim > opts_.full_space_limit && present.size() > 1)
    throw ResourceError("register of dimension " + std::to_string(dim) +
                        " exceeds the full-space limit; the state must lie in one particle-number sector");

  StateVector out(n);
  out[0] = 0.0;
  bool used_krylov = false;
  for (int nn : present) {
    const SectorIndex& sec = sector(nn);
    Eigen::VectorXcd c(static_cast<Eigen::Index>(sec.size()));
    for (std::size_t k = 0; k < sec.size(); ++k) c(static_cast<Eigen::Index>(k)) = psi[sec.indices[k]];
    Eigen::VectorXcd r;
    if (path == EvolutionPath::Krylov || sec.size() > opts_.krylov_threshold) {
      OperatorMatrix h = sector_hamiltonian(model_, sec, opts_.signs);
      r = krylov_expm(h, c, t, opts_.krylov_tol, opts_.krylov_dim);
      used_krylov = true;
    } else {
      const EigenSystem& es = sector_eigensystem(nn);
      Eigen::VectorXcd a = es.vectors.adjoint() * c;
      for (Eigen::Index i = 0; i < a.size(); ++i) a(i) *= std::exp(cplx(0.0, -es.values(i) * t));
      r = es.vectors * a;
    }
    for (std::size_t k = 0; k < sec.size(); ++k) out[sec.indices[k]] = r(static_cast<Eigen::Index>(k));
  }
  last_path_ = used_krylov ? EvolutionPath::Krylov : EvolutionPath::Blocked;
  return out;
}

StateVector evolve_exact(const ModelInstance& m, const StateVector& psi, double t, const EvolverOptions& opts) {
  return ExactEvolver(m, opts).evolve(psi, t);
}

}  // namespace q5::oracle
