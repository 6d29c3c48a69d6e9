#include "q5/engine.hpp"

#include <cmath>
#include <stdexcept>

namespace q5 {

std::size_t pow5(int n) {
  if (n < 0) throw std::domain_error("pow5: negative exponent");
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= 5;
  return r;
}

std::size_t encode_digits(const std::vector<int>& digits) {
  std::size_t idx = 0;
  for (int d : digits) {
    if (d < 0 || d >= kLevels) throw std::domain_error("digit outside 0..4: " + std::to_string(d));
    idx = idx * 5 + static_cast<std::size_t>(d);
  }
  return idx;
}

std::vector<int> decode_index(std::size_t index, int n_qudits) {
  std::vector<int> d(static_cast<std::size_t>(n_qudits));
  for (int k = n_qudits - 1; k >= 0; --k) {
    d[static_cast<std::size_t>(k)] = static_cast<int>(index % 5);
    index /= 5;
  }
  return d;
}

int digit_of(std::size_t index, int qudit, int n_qudits) {
  return static_cast<int>((index / pow5(n_qudits - 1 - qudit)) % 5);
}

std::string digit_string(std::size_t index, int n_qudits) {
  std::string s(static_cast<std::size_t>(n_qudits), '0');
  for (int k = n_qudits - 1; k >= 0; --k) {
    s[static_cast<std::size_t>(k)] = static_cast<char>('0' + index % 5);
    index /= 5;
  }
  return s;
}

StateVector::StateVector(int n_qudits) : n_(n_qudits), amp_(pow5(n_qudits), cplx(0.0)) {
  if (n_qudits < 1) throw std::domain_error("StateVector needs at least one qudit");
  amp_[0] = 1.0;
}

StateVector::StateVector(int n_qudits, std::vector<cplx> amplitudes)
    : n_(n_qudits), amp_(std::move(amplitudes)) {
  if (amp_.size() != pow5(n_qudits)) throw std::domain_error("amplitude count is not 5^n");
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  for (auto& a : amp_) a /= n;
}

StateVector init_basis_state(int n_qudits, const std::vector<int>& digits) {
  if (static_cast<int>(digits.size()) != n_qudits)
    throw std::domain_error("digit count does not match qudit count");
  const std::size_t idx = encode_digits(digits);
  StateVector s(n_qudits);
  s[0] = 0.0;
  s[idx] = 1.0;
  return s;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw std::domain_error("inner_product: size mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double expect_diagonal(const StateVector& state, const Diag5& d) {
  const int n = state.n_qudits();
  double total = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double p = std::norm(state[i]);
    if (p == 0.0) continue;
    double v = 0.0;
    std::size_t idx = i;
    for (int k = 0; k < n; ++k) {
      v += d[idx % 5];
      idx /= 5;
    }
    total += p * v;
  }
  return total;
}

double expect_product_diagonal(const StateVector& state, const Diag5& f) {
  const int n = state.n_qudits();
  double total = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double p = std::norm(state[i]);
    if (p == 0.0) continue;
    double v = 1.0;
    std::size_t idx = i;
    for (int k = 0; k < n; ++k) {
      v *= f[idx % 5];
      idx /= 5;
    }
    total += p * v;
  }
  return total;
}

DenseGate DenseGate::single(int qudit, const Mat5& m) {
  DenseGate g;
  g.arity = 1;
  g.matrix = m;
  g.targets = {qudit, qudit};
  return g;
}

DenseGate DenseGate::pair(int q0, int q1, const Mat25& m) {
  if (q0 == q1) throw std::domain_error("two-qudit gate needs distinct targets");
  DenseGate g;
  g.arity = 2;
  g.matrix = m;
  g.targets = {q0, q1};
  return g;
}

bool DenseGate::is_unitary(double tol) const {
  const auto n = matrix.rows();
  const Eigen::MatrixXcd d = matrix.adjoint() * matrix - Eigen::MatrixXcd::Identity(n, n);
  return d.cwiseAbs().maxCoeff() <= tol;
}

DenseGate DenseGate::adjoint() const {
  DenseGate g = *this;
  g.matrix = matrix.adjoint();
  return g;
}

}  // namespace q5
