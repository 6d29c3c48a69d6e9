#include "q5/circuit.hpp"

#include <stdexcept>

namespace q5::circuit {

CircuitIR decompose_two_qudit_givens(PairKind kind, LevelPair ab, LevelPair mn, double alpha, int q0, int q1,
                                     int n_qudits, EntanglerForm form) {
  const auto [a, b] = ab;
  const auto [m, n] = mn;
  if (a < 0 || b > 4 || a >= b || m < 0 || n > 4 || m >= n) throw std::domain_error("invalid level pairs");

  // XX: the rotation is X_mn, the flip on the target is Y^_mn, the outer gate X^_ab.
  // YY: every kind swaps.
  const GivensKind rot = kind == PairKind::XX ? GivensKind::X : GivensKind::Y;
  const GivensKind flip = kind == PairKind::XX ? GivensKind::Y : GivensKind::X;

  CircuitIR c;
  c.n_qudits = n_qudits;
  c.metadata["entangler"] = to_string(form);

  const CtrlPermute outer{q1, {n}, q0, rot, a, b};
  auto flips = [&](std::vector<std::vector<int>> sets) {
    for (auto& s : sets) c.gates.emplace_back(CtrlPermute{q0, std::move(s), q1, flip, m, n});
  };
  auto rotate = [&](double angle) { c.gates.emplace_back(GivensRot{rot, m, n, angle, q1}); };

  const double half = 0.5 * alpha;
  const double sign = kind == PairKind::XX ? 1.0 : -1.0;
  c.gates.emplace_back(outer);
  if (form == EntanglerForm::Improved) {
    flips({{a}, {b}});
    rotate(-sign * half);
    flips({{a}, {b}});
    rotate(sign * half);
  } else {
    std::vector<int> rest;
    for (int l = 0; l < 5; ++l)
      if (l != a && l != b) rest.push_back(l);
    flips({rest});
    rotate(sign * half);
    flips({rest});
    rotate(sign * half);
  }
  c.gates.emplace_back(outer);
  c.validate();
  return c;
}

}  // namespace q5::circuit
