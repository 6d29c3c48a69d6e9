#include "q5/agassi.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace q5 {

CouplingSet preset(int index) {
  switch (index) {
    case 0: return {1.0, 0.0, 0.0};
    case 1: return {1.0, 0.5, 0.5};
    case 2: return {1.0, 1.5, 0.5};
    case 3: return {1.0, 0.5, 1.5};
    case 4: return {1.0, 1.5, 1.5};
  }
  throw std::domain_error("unknown coupling preset " + std::to_string(index));
}

bool is_preset_name(const std::string& name) {
  std::string s = name;
  if (s.rfind("set-", 0) == 0) s = s.substr(4);
  return s.size() == 1 && s[0] >= '0' && s[0] <= '4';
}

CouplingSet preset(const std::string& name) {
  if (!is_preset_name(name)) throw std::domain_error("unknown coupling preset '" + name + "'");
  return preset(name.back() - '0');
}

void ModelInstance::validate() const {
  if (omega < 2 || omega % 2 != 0) throw std::domain_error("omega must be even and >= 2");
}

Mat5 one_body_h(const CouplingSet& c) {
  using so5::GivensKind;
  Mat5 h = Mat5::Zero();
  for (int k = 0; k < 5; ++k) h(k, k) = c.epsilon * diag::spin_z[k] - c.g * diag::pairs[k];
  h -= (c.v + c.g) * so5::givens(GivensKind::X, 1, 3).matrix;
  return h;
}

int PairingSigns::of(const LevelPair& p) const {
  if (p == LevelPair{0, 1}) return s01;
  if (p == LevelPair{0, 3}) return s03;
  if (p == LevelPair{1, 4}) return s14;
  if (p == LevelPair{3, 4}) return s34;
  throw std::domain_error("level pair outside the pairing sector");
}

std::vector<TwoBodyTerm> two_body_terms(const CouplingSet& c, const PairingSigns& signs) {
  std::vector<TwoBodyTerm> out;
  const std::vector<LevelPair> vpairs = {{1, 2}, {2, 3}};
  const std::vector<LevelPair> gpairs = {{0, 1}, {0, 3}, {1, 4}, {3, 4}};
  if (c.v != 0.0) {
    for (const auto& r : vpairs)
      for (const auto& s : vpairs) {
        out.push_back({-c.v, PairKind::XX, r, s, 1, 1});
        out.push_back({+c.v, PairKind::YY, r, s, 1, 1});
      }
  }
  if (c.g != 0.0) {
    for (const auto& r : gpairs)
      for (const auto& s : gpairs) {
        const int sr = signs.of(r), ss = signs.of(s);
        const double coef = -0.5 * c.g * sr * ss;
        out.push_back({coef, PairKind::XX, r, s, sr, ss});
        out.push_back({coef, PairKind::YY, r, s, sr, ss});
      }
  }
  return out;
}

Mat25 two_body_matrix(const CouplingSet& c, const PairingSigns& signs) {
  using so5::GivensKind;
  Mat25 m = Mat25::Zero();
  for (const auto& t : two_body_terms(c, signs)) {
    const GivensKind k = t.kind == PairKind::XX ? GivensKind::X : GivensKind::Y;
    const Mat5 a = so5::givens(k, t.left.first, t.left.second).matrix;
    const Mat5 b = so5::givens(k, t.right.first, t.right.second).matrix;
    m += t.coefficient * Eigen::kroneckerProduct(a, b).eval();
  }
  return m;
}

Dimensionless dimensionless(const ModelInstance& m) {
  m.validate();
  const auto& c = m.couplings;
  if (c.epsilon == 0.0) throw std::domain_error("dimensionless parameters need epsilon != 0");
  const double w = m.omega - 1.0;
  const double gbar = w * c.g / c.epsilon;
  return {w * c.v / c.epsilon, gbar, gbar + c.v / c.epsilon};
}

std::vector<int> initial_digits(int omega, char label) {
  if (omega < 2 || omega % 2) throw std::domain_error("omega must be even and >= 2");
  const int n = omega / 2;
  if (label == 'A' || label == 'a') return std::vector<int>(static_cast<std::size_t>(n), 1);
  if (label == 'B' || label == 'b') {
    if (omega % 4 != 0) throw std::domain_error("state B needs omega divisible by 4");
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n / 2; ++k) d[static_cast<std::size_t>(k)] = 4;
    return d;
  }
  throw std::domain_error(std::string("unknown initial state label ") + label);
}

StateVector initial_state(int omega, char label) {
  return init_basis_state(omega / 2, initial_digits(omega, label));
}

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows) {
  os << "omega,N,set,level,energy_density\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.12g", r.energy_density);
    os << r.omega << ',' << r.particle_number << ',' << r.set << ',' << r.level << ',' << buf << '\n';
  }
}

}  // namespace q5
