#include "q5/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace q5::circuit {
namespace {

constexpr std::array<std::pair<int, int>, 4> kChain{{{0, 1}, {1, 2}, {2, 3}, {3, 4}}};

double tail_norm(const std::array<double, 5>& v, int from) {
  double s = 0.0;
  for (int k = from; k < 5; ++k) s += v[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(k)];
  return std::sqrt(s);
}

// Angles of the X01..X34 chain from |0>, whose output magnitudes are
// c0, s0 c1, s0 s1 c2, s0 s1 s2 c3, s0 s1 s2 s3 (phases (-i)^d).
std::array<double, 4> chain_from_zero(const std::array<double, 5>& v) {
  return {std::atan2(tail_norm(v, 1), v[0]), std::atan2(tail_norm(v, 2), v[1]), std::atan2(tail_norm(v, 3), v[2]),
          std::atan2(v[4], v[3])};
}

// Phase of circuit output level d for each start level.
cplx output_phase(int start_level, int d) {
  static const cplx from1[5] = {{0, -1}, {1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  if (start_level == 1) return from1[d];
  return std::pow(cplx(0, -1), d);
}

}  // namespace

CircuitIR prep_single(const std::array<double, 4>& angles, int start_level) {
  if (start_level < 0 || start_level > 4) throw std::domain_error("start level outside 0..4");
  CircuitIR c;
  c.n_qudits = 1;
  c.metadata["kind"] = "prep_single";
  c.metadata["start_level"] = std::to_string(start_level);
  for (std::size_t k = 0; k < 4; ++k)
    c.gates.emplace_back(GivensRot{GivensKind::X, kChain[k].first, kChain[k].second, angles[k], 0});
  return c;
}

std::array<double, 4> fit_prep_single(const Eigen::VectorXcd& target, int start_level) {
  if (target.size() != 5) throw std::domain_error("fit_prep_single needs a 5-component target");
  if (start_level != 0 && start_level != 1) throw std::domain_error("fit supports start level 0 or 1");
  // Remove the known output phases, then one global phase fixed on the largest component.
  Eigen::VectorXcd w(5);
  for (int d = 0; d < 5; ++d) w(d) = std::conj(output_phase(start_level, d)) * target(d);
  Eigen::Index big = 0;
  w.cwiseAbs().maxCoeff(&big);
  const cplx ref = w(big) / std::abs(w(big));
  std::array<double, 5> mag{};
  double nrm = 0.0;
  for (int d = 0; d < 5; ++d) {
    mag[static_cast<std::size_t>(d)] = std::real(std::conj(ref) * w(d));
    nrm += mag[static_cast<std::size_t>(d)] * mag[static_cast<std::size_t>(d)];
  }
  nrm = std::sqrt(nrm);
  for (auto& x : mag) x /= nrm;
  if (start_level == 0) return chain_from_zero(mag);
  // from |1>: s0, c0 c1, c0 s1 c2, c0 s1 s2 c3, c0 s1 s2 s3
  const double c0 = tail_norm(mag, 1);
  return {std::atan2(mag[0], c0), std::atan2(tail_norm(mag, 2), mag[1]), std::atan2(tail_norm(mag, 3), mag[2]),
          std::atan2(mag[4], mag[3])};
}

CircuitIR prep_two(const std::vector<double>& angles, bool real_frame) {
  if (angles.size() != 24) throw std::domain_error("prep_two needs exactly 24 angles, got " + std::to_string(angles.size()));
  CircuitIR c;
  c.n_qudits = 2;
  c.metadata["kind"] = "prep_two";
  c.metadata["start"] = "00";
  c.metadata["real_frame"] = real_frame ? "1" : "0";
  for (std::size_t k = 0; k < 4; ++k)
    c.gates.emplace_back(GivensRot{GivensKind::X, kChain[k].first, kChain[k].second, angles[k], 0});
  for (int m = 0; m < 5; ++m)
    for (std::size_t k = 0; k < 4; ++k)
      c.gates.emplace_back(CtrlGivens{0, {m}, 1, GivensKind::X, kChain[k].first, kChain[k].second,
                                      angles[4 + 4 * static_cast<std::size_t>(m) + k]});
  if (real_frame) {
    // undo the (-i)^d phases of each chain
    const double h = std::numbers::pi / 2;
    for (int q = 0; q < 2; ++q) c.gates.emplace_back(PhaseDiag{q, {0.0, h, 2 * h, 3 * h, 0.0}});
  }
  return c;
}

std::vector<double> fit_prep_two(const Eigen::VectorXcd& target) {
  if (target.size() != 25) throw std::domain_error("fit_prep_two needs a 25-component target");
  Eigen::Index big = 0;
  target.cwiseAbs().maxCoeff(&big);
  const cplx ref = target(big) / std::abs(target(big));
  Eigen::VectorXd r(25);
  for (int k = 0; k < 25; ++k) r(k) = std::real(std::conj(ref) * target(k));
  r.normalize();

  std::array<double, 5> u{};
  for (int m = 0; m < 5; ++m) u[static_cast<std::size_t>(m)] = r.segment(5 * m, 5).norm();
  std::vector<double> out;
  for (double a : chain_from_zero(u)) out.push_back(a);
  for (int m = 0; m < 5; ++m) {
    std::array<double, 5> v{};
    const double um = u[static_cast<std::size_t>(m)];
    if (um > 0.0)
      for (int d = 0; d < 5; ++d) v[static_cast<std::size_t>(d)] = r(5 * m + d) / um;
    else
      v[0] = 1.0;
    for (double a : chain_from_zero(v)) out.push_back(a);
  }
  return out;
}

}  // namespace q5::circuit
