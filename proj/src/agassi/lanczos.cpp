#include "q5/agassi.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace q5 {

std::vector<double> lanczos_lowest(const OperatorMatrix& h, int k, int max_iter, double tol, std::uint64_t seed) {
  const Eigen::Index n = h.rows();
  if (k < 1 || k > n) throw std::domain_error("lanczos: k out of range");
  const int m_max = static_cast<int>(std::min<Eigen::Index>(max_iter, n));

  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd;
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = nd(gen);
  v.normalize();

  Eigen::MatrixXcd basis(n, m_max);
  std::vector<double> alpha, beta;
  std::vector<double> prev;
  std::vector<double> result;

  for (int j = 0; j < m_max; ++j) {
    basis.col(j) = v;
    Eigen::VectorXcd w = h * v;
    const double a = std::real(v.dot(w));
    alpha.push_back(a);
    // full reorthogonalization, twice
    for (int pass = 0; pass < 2; ++pass) w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).adjoint() * w);
    const double b = w.norm();

    const int m = j + 1;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) t(i, i) = alpha[static_cast<std::size_t>(i)];
    for (int i = 0; i + 1 < m; ++i) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
    std::vector<double> cur(es.eigenvalues().data(), es.eigenvalues().data() + std::min(m, k));

    const bool exhausted = b < 1e-12 || m == m_max;
    if (static_cast<int>(cur.size()) == k && prev.size() == cur.size()) {
      double d = 0.0;
      for (std::size_t i = 0; i < cur.size(); ++i) d = std::max(d, std::abs(cur[i] - prev[i]));
      if (d < tol && m > 2 * k) return cur;
    }
    if (exhausted) {
      if (static_cast<int>(cur.size()) < k) throw std::runtime_error("lanczos: Krylov space exhausted before k values");
      return cur;
    }
    prev = cur;
    beta.push_back(b);
    v = w / b;
  }
  return result;
}

}  // namespace q5
