#pragma once

#include "q5/engine.hpp"
#include "q5/so5.hpp"

#include <Eigen/Sparse>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace q5 {

struct CouplingSet {
  double epsilon = 1.0;
  double v = 0.0;
  double g = 0.0;
};

CouplingSet preset(int index);
// Accepts "set-0".."set-4" or a bare digit.
CouplingSet preset(const std::string& name);
bool is_preset_name(const std::string& name);

struct ModelInstance {
  int omega = 2;
  CouplingSet couplings;

  int n_qudits() const { return omega / 2; }
  void validate() const;
};

Mat5 one_body_h(const CouplingSet& c);

enum class PairKind { XX, YY };
using LevelPair = std::pair<int, int>;

struct TwoBodyTerm {
  // Full multiplier of G_left (x) G_right in the Hamiltonian, signs included.
  double coefficient;
  PairKind kind;
  LevelPair left, right;
  int sign_left = 1, sign_right = 1;
};

// Per-level-pair sign in the pairing sector.
struct PairingSigns {
  int s01 = 1, s03 = 1, s14 = -1, s34 = -1;
  int of(const LevelPair& p) const;
};

std::vector<TwoBodyTerm> two_body_terms(const CouplingSet& c, const PairingSigns& signs = {});
// Sum of all two-body terms as a 25x25 matrix on an ordered qudit pair.
Mat25 two_body_matrix(const CouplingSet& c, const PairingSigns& signs = {});

using OperatorMatrix = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;

struct HamiltonianOptions {
  int max_qudits = 8;
  PairingSigns signs{};
};

OperatorMatrix full_hamiltonian(const ModelInstance& m, const HamiltonianOptions& opts = {});

struct SectorIndex {
  int omega = 0;
  int particle_number = 0;
  std::vector<std::size_t> indices;

  std::size_t size() const { return indices.size(); }
  // position of a register index inside the sector, or npos
  std::size_t position(std::size_t register_index) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

SectorIndex enumerate_sector(int omega, int particle_number);
int particle_number_of(std::size_t index, int n_qudits);

// Hamiltonian restricted to one sector, built without the full register matrix.
OperatorMatrix sector_hamiltonian(const ModelInstance& m, const SectorIndex& sector,
                                  const PairingSigns& signs = {});

// Verifies [H, N_total] = 0 entrywise; returns max |H_ij| over cross-sector entries.
double cross_sector_norm(const OperatorMatrix& h, int n_qudits);
double hermiticity_defect(const OperatorMatrix& h);

struct SpectrumOptions {
  std::size_t dense_limit = 4096;
  int lanczos_max_iter = 600;
  double lanczos_tol = 1e-11;
};

struct SpectrumResult {
  std::vector<double> densities;  // E_i / omega, ascending
  bool truncated = false;
  bool iterative = false;
};

SpectrumResult spectrum(const ModelInstance& m, int particle_number, int k, const SpectrumOptions& opts = {});

struct Dimensionless {
  double vbar, gbar, gbar0;
};
Dimensionless dimensionless(const ModelInstance& m);

StateVector initial_state(int omega, char label);
std::vector<int> initial_digits(int omega, char label);

struct SpectrumRow {
  int omega, particle_number;
  std::string set;
  int level;
  double energy_density;
};
void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows);

// Dense Hermitian eigensolve; real arithmetic when the matrix has no imaginary part.
struct EigenSystem {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};
EigenSystem hermitian_eigensystem(const Eigen::MatrixXcd& h, bool with_vectors = true);
// First nonzero component of every eigenvector made real and positive.
void fix_eigenvector_phases(Eigen::MatrixXcd& vectors);

// Lowest k eigenvalues by Lanczos with full reorthogonalization.
std::vector<double> lanczos_lowest(const OperatorMatrix& h, int k, int max_iter, double tol,
                                   std::uint64_t seed = 12345);

}  // namespace q5
