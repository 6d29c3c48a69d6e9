#include "q5/so5.hpp"

#include <cmath>
#include <stdexcept>

namespace q5::so5 {
namespace {

void check_levels(int i, int j) {
  if (i < 0 || j < 0 || i > 4 || j > 4) throw std::domain_error("Givens levels must lie in 0..4");
  if (i >= j) throw std::domain_error("Givens levels must satisfy i < j");
}

}  // namespace

std::string to_string(GivensKind k) { return k == GivensKind::X ? "X" : "Y"; }

GivensOperator givens(GivensKind kind, int i, int j) {
  check_levels(i, j);
  Mat5 m = Mat5::Zero();
  if (kind == GivensKind::X) {
    m(i, j) = 1.0;
    m(j, i) = 1.0;
  } else {
    m(i, j) = cplx(0.0, -1.0);
    m(j, i) = cplx(0.0, 1.0);
  }
  return {kind, i, j, m};
}

Mat5 exp_givens(GivensKind kind, int i, int j, double theta) {
  check_levels(i, j);
  Mat5 u = Mat5::Identity();
  const double c = std::cos(theta), s = std::sin(theta);
  u(i, i) = c;
  u(j, j) = c;
  if (kind == GivensKind::X) {
    u(i, j) = cplx(0.0, -s);
    u(j, i) = cplx(0.0, -s);
  } else {
    u(i, j) = -s;
    u(j, i) = s;
  }
  return u;
}

Mat5 permutation_gate(GivensKind kind, int a, int b) {
  check_levels(a, b);
  Mat5 u = Mat5::Identity();
  u(a, a) = 0.0;
  u(b, b) = 0.0;
  if (kind == GivensKind::X) {
    u(a, b) = 1.0;
    u(b, a) = 1.0;
  } else {
    u(a, b) = cplx(0.0, 1.0);
    u(b, a) = cplx(0.0, -1.0);
  }
  return u;
}

Mat5 phase_gate(const Diag5& phases) {
  Mat5 u = Mat5::Zero();
  for (int k = 0; k < 5; ++k) u(k, k) = std::polar(1.0, phases[k]);
  return u;
}

Mat5 commutator(const Mat5& a, const Mat5& b) { return a * b - b * a; }

}  // namespace q5::so5
