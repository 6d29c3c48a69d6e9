#include "q5/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace q5::oracle {

Eigen::VectorXcd krylov_expm(const OperatorMatrix& h, const Eigen::VectorXcd& v, double t, double tol,
                             int krylov_dim) {
  if (h.rows() != v.size()) throw std::domain_error("krylov_expm: size mismatch");
  const double beta0 = v.norm();
  if (beta0 == 0.0 || t == 0.0) return v;
  const int m_max = static_cast<int>(std::min<Eigen::Index>(krylov_dim, v.size()));

  const double sgn = t < 0.0 ? -1.0 : 1.0;
  const double total = std::abs(t);
  Eigen::VectorXcd w = v;
  double done = 0.0;
  double tau = total;
  int guard = 0;
  while (done < total) {
    if (++guard > 100000) throw std::runtime_error("krylov_expm: step control did not converge");
    const double nrm = w.norm();
    Eigen::MatrixXcd basis(w.size(), m_max + 1);
    std::vector<double> alpha, beta;
    basis.col(0) = w / nrm;
    int m = 0;
    double last_beta = 0.0;
    for (int j = 0; j < m_max; ++j) {
      Eigen::VectorXcd q = h * basis.col(j);
      const double a = std::real(basis.col(j).dot(q));
      alpha.push_back(a);
      q -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).adjoint() * q);
      q -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).adjoint() * q);
      last_beta = q.norm();
      m = j + 1;
      if (last_beta < 1e-13) break;
      beta.push_back(last_beta);
      basis.col(j + 1) = q / last_beta;
    }
    Eigen::MatrixXd tm = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) tm(i, i) = alpha[static_cast<std::size_t>(i)];
    for (int i = 0; i + 1 < m; ++i) tm(i, i + 1) = tm(i + 1, i) = beta[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tm);
    const Eigen::VectorXd lam = es.eigenvalues();
    const Eigen::MatrixXd s = es.eigenvectors();

    const bool invariant = last_beta < 1e-13;
    const bool last = tau >= total - done;
    if (last) tau = total - done;
    for (;;) {
      Eigen::VectorXcd ph(m);
      for (int i = 0; i < m; ++i) ph(i) = std::exp(cplx(0.0, -sgn * lam(i) * tau)) * s(0, i);
      const Eigen::VectorXcd y = s.cast<cplx>() * ph;
      // residual estimate from the last Krylov coefficient
      const double err = invariant ? 0.0 : last_beta * std::abs(y(m - 1)) * nrm;
      if (err <= tol || tau < 1e-14 * total) {
        w = nrm * (basis.leftCols(m) * y);
        done = (last && tau == total - done) ? total : done + tau;
        if (err < 0.1 * tol) tau *= 2.0;
        break;
      }
      tau *= 0.5;
    }
  }
  return w;
}

}  // namespace q5::oracle
