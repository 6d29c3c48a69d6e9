#pragma once

#include "q5/agassi.hpp"
#include "q5/circuit.hpp"
#include "q5/engine.hpp"

#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace q5::oracle {

struct ClosedFormParams {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;

  double a(double t) const;
  double b(double t) const;
  double c(double t) const;
};

ClosedFormParams closed_form_params(const CouplingSet& c);
// One-qu5it e^{-itH} assembled entry by entry, no numerical exponential.
Mat5 u1_closed_form(const CouplingSet& c, double t);

// Raised when a requested evolution exceeds the configured size limits.
struct ResourceError : std::length_error {
  using std::length_error::length_error;
};

enum class EvolutionPath { Auto, DenseFull, Blocked, Krylov };
std::string to_string(EvolutionPath p);

struct EvolverOptions {
  EvolutionPath path = EvolutionPath::Auto;
  // one dense eigensolve on the whole register
  std::size_t dense_full_limit = 625;
  // 5^6; above this the state must live in one sector
  std::size_t full_space_limit = 15625;
  // sector dimension above which Krylov replaces the cached eigensolve
  std::size_t krylov_threshold = 20000;
  double krylov_tol = 1e-10;
  int krylov_dim = 40;
  PairingSigns signs{};
};

class ExactEvolver {
 public:
  explicit ExactEvolver(const ModelInstance& m, EvolverOptions opts = {});

  StateVector evolve(const StateVector& psi, double t) const;
  const ModelInstance& model() const { return model_; }
  // Path the last evolve call actually used.
  EvolutionPath last_path() const { return last_path_; }

  // Cached sector eigensystem (dense); throws ResourceError above krylov_threshold.
  const EigenSystem& sector_eigensystem(int particle_number) const;
  const SectorIndex& sector(int particle_number) const;

 private:
  struct SectorCache {
    SectorIndex index;
    std::unique_ptr<EigenSystem> eig;
    std::unique_ptr<OperatorMatrix> h;
  };
  SectorCache& cache(int particle_number) const;
  StateVector evolve_dense_full(const StateVector& psi, double t) const;

  ModelInstance model_;
  EvolverOptions opts_;
  mutable std::mutex mu_;
  mutable std::map<int, SectorCache> sectors_;
  mutable std::unique_ptr<EigenSystem> full_;
  mutable EvolutionPath last_path_ = EvolutionPath::Auto;
};

StateVector evolve_exact(const ModelInstance& m, const StateVector& psi, double t, const EvolverOptions& opts = {});

// e^{-i t H} v by Lanczos with adaptive substeps; tol bounds the per-substep error estimate.
Eigen::VectorXcd krylov_expm(const OperatorMatrix& h, const Eigen::VectorXcd& v, double t, double tol = 1e-10,
                             int krylov_dim = 40);

struct OverlapEntry {
  double energy;
  double overlap;
  int degeneracy;
};

struct OverlapSpectrum {
  // descending overlap, ties by ascending energy
  std::vector<OverlapEntry> entries;

  double total() const;
  double largest() const;
  std::size_t count() const { return entries.size(); }
  // 1 / sum p^2
  double inverse_participation() const;
};

struct OverlapOptions {
  double zero_tol = 1e-12;
  // eigenvalues closer than this share one overlap entry
  double degeneracy_tol = 1e-7;
  std::size_t dense_limit = 4096;
};

OverlapSpectrum eigen_overlaps(const ModelInstance& m, const StateVector& psi0, const OverlapOptions& opts = {});

enum class EvolverKind { Exact, Trotter };
std::string to_string(EvolverKind k);

struct SeriesOptions {
  EvolverKind kind = EvolverKind::Exact;
  int n_trot = 1;
  circuit::TrotterOptions trotter{};
  std::uint64_t shots = 0;
  std::uint64_t seed = 1;
  int threads = 1;
  EvolverOptions exact{};
};

struct SeriesRow {
  double t = 0.0;
  double survival = 0.0, pairs = 0.0, sz = 0.0, n = 0.0;
  std::string evolver;
  int n_trot = 0;
  std::uint64_t shots = 0;
  // shot estimates; survival here is the frequency of the initial digit string
  double shot_survival = 0.0, shot_pairs = 0.0, shot_sz = 0.0, shot_n = 0.0;
};

std::vector<SeriesRow> observable_series(const ModelInstance& m, const StateVector& psi0,
                                         const std::vector<double>& t_grid, const SeriesOptions& opts = {});
std::vector<double> uniform_grid(double t_max, int points);
// header: t,survival,pairs,sz,n,evolver,n_trot,shots[,shot_survival,shot_pairs,shot_sz,shot_n]
void write_series_csv(std::ostream& os, const std::vector<SeriesRow>& rows);

// Evolve with n LO Trotter steps of size t/n.
StateVector evolve_trotter(const ModelInstance& m, const StateVector& psi0, double t, int n_steps,
                           const circuit::TrotterOptions& opts = {}, const ApplyOptions& apply = {});

struct SignProblemStats {
  std::vector<double> probabilities;   // nonzero |<i|psi>|^2, descending
  std::vector<double> spin_densities;  // nonzero <psi|i><i|S_z|psi>, ascending
  double mean = 0.0;
  double stddev = 0.0;  // population
  double sz = 0.0;
};

SignProblemStats sign_problem(const ModelInstance& m, const StateVector& psi0, double t, double zero_tol = 1e-14);

// |<N> - N(psi0)| after one full LO Trotter step.
double trotter_step_n_violation(const ModelInstance& m, const StateVector& psi0, double dt,
                                const circuit::TrotterOptions& opts = {});
// Same for one isolated g-sector exp(-i dt c X(x)X) factor on qudits (0,1).
double single_factor_n_violation(const ModelInstance& m, const StateVector& psi0, double dt);

// Population variance of an observable column over t in [t_from, t_to] on a uniform grid.
double late_time_variance(const ModelInstance& m, const StateVector& psi0, double t_from, double t_to, int points,
                          const Diag5& observable);

}  // namespace q5::oracle
