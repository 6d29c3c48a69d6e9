#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace q5 {

using cplx = std::complex<double>;
using Mat5 = Eigen::Matrix<cplx, 5, 5>;
using Mat25 = Eigen::Matrix<cplx, 25, 25>;
using Diag5 = std::array<double, 5>;

inline constexpr int kLevels = 5;

// Per-digit diagonals shared by every module.
namespace diag {
inline constexpr Diag5 spin_z{0, -1, 0, 1, 0};
inline constexpr Diag5 pairs{0, 1, 0, 1, 2};
inline constexpr Diag5 number{0, 2, 2, 2, 4};
inline constexpr Diag5 parity{1, 1, -1, 1, 1};
}  // namespace diag

std::size_t pow5(int n);

// Big-endian: qudit 0 is the most significant base-5 digit.
std::size_t encode_digits(const std::vector<int>& digits);
std::vector<int> decode_index(std::size_t index, int n_qudits);
int digit_of(std::size_t index, int qudit, int n_qudits);
std::string digit_string(std::size_t index, int n_qudits);

class StateVector {
 public:
  StateVector() = default;
  // |0...0>
  explicit StateVector(int n_qudits);
  StateVector(int n_qudits, std::vector<cplx> amplitudes);

  int n_qudits() const { return n_; }
  std::size_t size() const { return amp_.size(); }

  cplx& operator[](std::size_t i) { return amp_[i]; }
  const cplx& operator[](std::size_t i) const { return amp_[i]; }

  std::vector<cplx>& amplitudes() { return amp_; }
  const std::vector<cplx>& amplitudes() const { return amp_; }

  double norm() const;
  void normalize();

 private:
  int n_ = 0;
  std::vector<cplx> amp_;
};

StateVector init_basis_state(int n_qudits, const std::vector<int>& digits);

struct DenseGate {
  int arity = 1;
  Eigen::MatrixXcd matrix;
  std::array<int, 2> targets{0, 0};

  static DenseGate single(int qudit, const Mat5& m);
  // Local index of the 25x25 matrix is 5*d(q0) + d(q1).
  static DenseGate pair(int q0, int q1, const Mat25& m);

  bool is_unitary(double tol = 1e-12) const;
  DenseGate adjoint() const;
};

struct ApplyOptions {
  int threads = 1;
  // Below this many amplitude groups the kernel stays on the calling thread.
  std::size_t min_groups_per_thread = 256;
};

void apply_gate_inplace(StateVector& state, const DenseGate& gate, const ApplyOptions& opts = {});
StateVector apply_gate(StateVector state, const DenseGate& gate, const ApplyOptions& opts = {});

cplx inner_product(const StateVector& a, const StateVector& b);

double expect_diagonal(const StateVector& state, const Diag5& per_qudit_diag);
// Expectation of the product (not sum) of per-digit factors, e.g. parity.
double expect_product_diagonal(const StateVector& state, const Diag5& per_qudit_factor);

// Named and versioned so outputs can record exactly how shots were drawn.
inline constexpr const char* kPrngId = "mt19937_64+u53+inverse-cdf/1";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // 53-bit uniform in [0,1), independent of the standard library's distributions.
  double uniform();
  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

struct ShotHistogram {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string prng = kPrngId;

  double frequency(const std::string& digits) const;
  // Shot estimate of a per-digit diagonal sum.
  double estimate_diagonal(const Diag5& per_qudit_diag) const;
};

ShotHistogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

}  // namespace q5
