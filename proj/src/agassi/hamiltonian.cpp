#include "q5/agassi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace q5 {
namespace {

struct Nz1 {
  int row, col;
  cplx value;
};

template <int D>
std::vector<Nz1> nonzeros(const Eigen::Matrix<cplx, D, D>& m) {
  std::vector<Nz1> out;
  for (int c = 0; c < D; ++c)
    for (int r = 0; r < D; ++r)
      if (std::abs(m(r, c)) > 0.0) out.push_back({r, c, m(r, c)});
  return out;
}

// Column-driven assembly: for basis column `col`, emit every (row, value) of H.
template <typename Emit>
void for_each_column_entry(std::size_t col, int n, const std::vector<Nz1>& h1, const std::vector<Nz1>& h2,
                           const std::vector<std::size_t>& stride, Emit&& emit) {
  std::vector<int> d = decode_index(col, n);
  for (int k = 0; k < n; ++k) {
    const int dk = d[static_cast<std::size_t>(k)];
    for (const auto& e : h1) {
      if (e.col != dk) continue;
      const std::size_t row = col + stride[static_cast<std::size_t>(k)] * e.row - stride[static_cast<std::size_t>(k)] * dk;
      emit(row, e.value);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int di = d[static_cast<std::size_t>(i)], dj = d[static_cast<std::size_t>(j)];
      const int local = 5 * di + dj;
      for (const auto& e : h2) {
        if (e.col != local) continue;
        const int ri = e.row / 5, rj = e.row % 5;
        const std::size_t row = col + stride[static_cast<std::size_t>(i)] * ri - stride[static_cast<std::size_t>(i)] * di +
                                stride[static_cast<std::size_t>(j)] * rj - stride[static_cast<std::size_t>(j)] * dj;
        emit(row, e.value);
      }
    }
}

std::vector<std::size_t> strides(int n) {
  std::vector<std::size_t> s(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) s[static_cast<std::size_t>(k)] = pow5(n - 1 - k);
  return s;
}

}  // namespace

OperatorMatrix full_hamiltonian(const ModelInstance& m, const HamiltonianOptions& opts) {
  m.validate();
  const int n = m.n_qudits();
  if (n > opts.max_qudits)
    throw std::length_error("full Hamiltonian for " + std::to_string(n) + " qudits exceeds max_qudits=" +
                            std::to_string(opts.max_qudits) + "; use a sector Hamiltonian");
  const auto h1 = nonzeros<5>(one_body_h(m.couplings));
  const auto h2 = nonzeros<25>(two_body_matrix(m.couplings, opts.signs));
  const auto st = strides(n);
  const std::size_t dim = pow5(n);

  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(dim * static_cast<std::size_t>(n * 3 + n * (n - 1) * 8));
  for (std::size_t col = 0; col < dim; ++col)
    for_each_column_entry(col, n, h1, h2, st, [&](std::size_t row, cplx v) {
      trip.emplace_back(static_cast<int>(row), static_cast<int>(col), v);
    });
  OperatorMatrix h(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  h.setFromTriplets(trip.begin(), trip.end());
  h.prune(cplx(0.0), 0.0);
  return h;
}

OperatorMatrix sector_hamiltonian(const ModelInstance& m, const SectorIndex& sector, const PairingSigns& signs) {
  m.validate();
  if (sector.omega != m.omega) throw std::domain_error("sector and model disagree on omega");
  const int n = m.n_qudits();
  const auto h1 = nonzeros<5>(one_body_h(m.couplings));
  const auto h2 = nonzeros<25>(two_body_matrix(m.couplings, signs));
  const auto st = strides(n);
  const std::size_t dim = sector.size();

  std::vector<Eigen::Triplet<cplx>> trip;
  for (std::size_t c = 0; c < dim; ++c)
    for_each_column_entry(sector.indices[c], n, h1, h2, st, [&](std::size_t row, cplx v) {
      const std::size_t r = sector.position(row);
      if (r == SectorIndex::npos) throw std::logic_error("Hamiltonian left its particle-number sector");
      trip.emplace_back(static_cast<int>(r), static_cast<int>(c), v);
    });
  OperatorMatrix h(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  h.setFromTriplets(trip.begin(), trip.end());
  h.prune(cplx(0.0), 0.0);
  return h;
}

double cross_sector_norm(const OperatorMatrix& h, int n_qudits) {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < h.outerSize(); ++r)
    for (OperatorMatrix::InnerIterator it(h, r); it; ++it) {
      const int nr = particle_number_of(static_cast<std::size_t>(it.row()), n_qudits);
      const int nc = particle_number_of(static_cast<std::size_t>(it.col()), n_qudits);
      if (nr != nc) worst = std::max(worst, std::abs(it.value()));
    }
  return worst;
}

double hermiticity_defect(const OperatorMatrix& h) {
  const OperatorMatrix d = h - OperatorMatrix(h.adjoint());
  double worst = 0.0;
  for (Eigen::Index r = 0; r < d.outerSize(); ++r)
    for (OperatorMatrix::InnerIterator it(d, r); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

}  // namespace q5
