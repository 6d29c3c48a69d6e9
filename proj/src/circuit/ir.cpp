#include "q5/circuit.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <stdexcept>

namespace q5::circuit {
namespace {

void check_qudit(int q, int n, const char* what) {
  if (q < 0 || q >= n) throw std::domain_error(std::string(what) + " qudit index out of range");
}

void check_levels(int i, int j) {
  if (i < 0 || j > 4 || i >= j) throw std::domain_error("level pair must satisfy 0 <= i < j <= 4");
}

void check_controls(const std::vector<int>& states) {
  if (states.empty()) throw std::domain_error("controlled gate needs at least one control state");
  for (int s : states)
    if (s < 0 || s > 4) throw std::domain_error("control state outside 0..4");
}

Mat25 controlled(const std::vector<int>& states, const Mat5& u) {
  Mat5 p = Mat5::Zero(), q = Mat5::Identity();
  for (int s : states) {
    p(s, s) = 1.0;
    q(s, s) = 0.0;
  }
  return Eigen::kroneckerProduct(p, u).eval() + Eigen::kroneckerProduct(q, Mat5::Identity()).eval();
}

}  // namespace

void CircuitIR::validate() const {
  if (n_qudits < 1) throw std::domain_error("circuit needs at least one qudit");
  for (const auto& g : gates) {
    std::visit(
        [&](const auto& op) {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, PhaseDiag>) {
            check_qudit(op.qudit, n_qudits, "phase");
          } else if constexpr (std::is_same_v<T, GivensRot>) {
            check_qudit(op.qudit, n_qudits, "givens");
            check_levels(op.i, op.j);
          } else if constexpr (std::is_same_v<T, CtrlGivens>) {
            check_qudit(op.control, n_qudits, "control");
            check_qudit(op.target, n_qudits, "target");
            if (op.control == op.target) throw std::domain_error("control equals target");
            check_controls(op.control_states);
            check_levels(op.i, op.j);
          } else if constexpr (std::is_same_v<T, CtrlPermute>) {
            check_qudit(op.control, n_qudits, "control");
            check_qudit(op.target, n_qudits, "target");
            if (op.control == op.target) throw std::domain_error("control equals target");
            check_controls(op.control_states);
            check_levels(op.a, op.b);
          } else {
            check_qudit(op.q0, n_qudits, "pair");
            check_qudit(op.q1, n_qudits, "pair");
            if (op.q0 == op.q1) throw std::domain_error("two-qudit gate on a single qudit");
            check_levels(op.a, op.b);
            check_levels(op.m, op.n);
          }
        },
        g);
  }
}

void CircuitIR::append(const CircuitIR& other) {
  if (other.n_qudits != n_qudits) throw std::domain_error("append: qudit count mismatch");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Backend parse_backend(const std::string& s) {
  if (s == "native") return Backend::Native;
  if (s == "controlled") return Backend::Controlled;
  throw std::domain_error("unknown backend '" + s + "' (expected native or controlled)");
}

std::string to_string(Backend b) { return b == Backend::Native ? "native" : "controlled"; }
std::string to_string(EntanglerForm f) { return f == EntanglerForm::Improved ? "improved" : "original"; }

Mat25 two_qudit_givens_matrix(PairKind kind, LevelPair ab, LevelPair mn, double alpha) {
  const GivensKind k = kind == PairKind::XX ? GivensKind::X : GivensKind::Y;
  const Mat5 ga = so5::givens(k, ab.first, ab.second).matrix;
  const Mat5 gm = so5::givens(k, mn.first, mn.second).matrix;
  const Mat25 gg = Eigen::kroneckerProduct(ga, gm).eval();
  // (G(x)G)^2 is the projector P onto the 4 touched product states
  const Mat25 p = gg * gg;
  return Mat25::Identity() - p + std::cos(alpha) * p - cplx(0.0, std::sin(alpha)) * gg;
}

DenseGate to_dense(const GateOp& g) {
  return std::visit(
      [](const auto& op) -> DenseGate {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, PhaseDiag>) {
          return DenseGate::single(op.qudit, so5::phase_gate(op.phases));
        } else if constexpr (std::is_same_v<T, GivensRot>) {
          return DenseGate::single(op.qudit, so5::exp_givens(op.kind, op.i, op.j, op.angle));
        } else if constexpr (std::is_same_v<T, CtrlGivens>) {
          check_controls(op.control_states);
          return DenseGate::pair(op.control, op.target,
                                 controlled(op.control_states, so5::exp_givens(op.kind, op.i, op.j, op.angle)));
        } else if constexpr (std::is_same_v<T, CtrlPermute>) {
          check_controls(op.control_states);
          return DenseGate::pair(op.control, op.target,
                                 controlled(op.control_states, so5::permutation_gate(op.kind, op.a, op.b)));
        } else {
          return DenseGate::pair(op.q0, op.q1, two_qudit_givens_matrix(op.kind, {op.a, op.b}, {op.m, op.n}, op.angle));
        }
      },
      g);
}

CircuitIR inverse(const CircuitIR& c) {
  CircuitIR out;
  out.n_qudits = c.n_qudits;
  out.metadata = c.metadata;
  out.metadata["inverse"] = "1";
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    GateOp g = *it;
    std::visit(
        [](auto& op) {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, PhaseDiag>) {
            for (auto& p : op.phases) p = -p;
          } else if constexpr (std::is_same_v<T, CtrlPermute>) {
            // both permutation gates are involutions
          } else {
            op.angle = -op.angle;
          }
        },
        g);
    out.gates.push_back(g);
  }
  return out;
}

StateVector execute(const CircuitIR& c, StateVector state, const ApplyOptions& opts) {
  if (state.n_qudits() != c.n_qudits) throw std::domain_error("execute: circuit and state sizes differ");
  c.validate();
  for (const auto& g : c.gates) apply_gate_inplace(state, to_dense(g), opts);
  return state;
}

Eigen::MatrixXcd circuit_matrix(const CircuitIR& c, int max_qudits) {
  if (c.n_qudits > max_qudits) throw std::length_error("circuit_matrix: register too large for dense composition");
  const std::size_t dim = pow5(c.n_qudits);
  Eigen::MatrixXcd u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    StateVector s(c.n_qudits);
    s[0] = 0.0;
    s[k] = 1.0;
    s = execute(c, std::move(s));
    for (std::size_t r = 0; r < dim; ++r) u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = s[r];
  }
  return u;
}

}  // namespace q5::circuit
