#include "q5/circuit.hpp"

#include <doctest.h>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

using namespace q5;
using namespace q5::circuit;

namespace {

Eigen::MatrixXcd dense_exp(const OperatorMatrix& h, double t) {
  return (cplx(0, -t) * Eigen::MatrixXcd(h)).exp();
}

double opdist(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

Mat5 g5(PairKind k, LevelPair p) {
  return so5::givens(k == PairKind::XX ? GivensKind::X : GivensKind::Y, p.first, p.second).matrix;
}

int count_two_qudit(const CircuitIR& c) {
  int n = 0;
  for (const auto& g : c.gates) n += std::holds_alternative<TwoQuditGivens>(g);
  return n;
}

Eigen::VectorXcd vec(const StateVector& s) {
  return Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(), static_cast<Eigen::Index>(s.size()));
}

}  // namespace

TEST_CASE("non-interacting step") {
  const ModelInstance m{4, preset(0)};
  const auto c = trotter_step(m, 0.1);
  CHECK(count_two_qudit(c) == 0);
  for (const auto& g : c.gates) CHECK((std::holds_alternative<PhaseDiag>(g) || std::holds_alternative<GivensRot>(g)));
  // e^{-i dt eps Sz} per qudit
  const auto u = circuit_matrix(c, 2);
  const auto ref = dense_exp(full_hamiltonian(m), 0.1);
  CHECK(opdist(u, ref) < 1e-14);
}

TEST_CASE("native step has 40 two-qudit Givens per pair") {
  CHECK(count_two_qudit(trotter_step({4, preset(1)}, 0.1)) == 40);
  CHECK(count_two_qudit(trotter_step({6, preset(4)}, 0.1)) == 120);
}

TEST_CASE("native and controlled steps are the same unitary") {
  const ModelInstance m{4, preset(4)};
  for (auto form : {EntanglerForm::Improved, EntanglerForm::Original}) {
    TrotterOptions o;
    o.backend = Backend::Controlled;
    o.form = form;
    CHECK(opdist(circuit_matrix(trotter_step(m, 0.37), 2), circuit_matrix(trotter_step(m, 0.37, o), 2)) < 1e-12);
  }
}

TEST_CASE("one-step error is second order in dt") {
  for (int omega : {2, 4}) {
    const ModelInstance m{omega, preset(1)};
    const auto h = full_hamiltonian(m);
    const double e1 = opdist(circuit_matrix(trotter_step(m, 0.01), 2), dense_exp(h, 0.01));
    const double e2 = opdist(circuit_matrix(trotter_step(m, 0.005), 2), dense_exp(h, 0.005));
    CHECK(e1 > 0.0);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.1));
  }
}

TEST_CASE("step order metadata") {
  const auto c = trotter_step({4, preset(2)}, 0.2);
  CHECK(c.metadata.at("backend") == "native");
  c.validate();
  // first gates are the one-body block
  CHECK(std::holds_alternative<PhaseDiag>(c.gates.front()));
  CHECK(std::string(kTrotterOrdering).find("U1") == 0);
}

TEST_CASE("entangler decomposition against the matrix exponential") {
  const auto id = circuit_matrix(decompose_two_qudit_givens(PairKind::XX, {1, 3}, {1, 3}, 0.0), 2);
  CHECK(opdist(id, Eigen::MatrixXcd::Identity(25, 25)) < 1e-15);
  const Mat25 x13 = Eigen::kroneckerProduct(g5(PairKind::XX, {1, 3}), g5(PairKind::XX, {1, 3}));
  const Eigen::MatrixXcd want = (cplx(0, -0.7) * Eigen::MatrixXcd(x13)).exp();
  CHECK(opdist(circuit_matrix(decompose_two_qudit_givens(PairKind::XX, {1, 3}, {1, 3}, 0.7), 2), want) < 1e-10);

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ang(-3.2, 3.2);
  double worst = 0.0;
  std::set<std::tuple<int, LevelPair, LevelPair>> seen;
  for (const auto& t : two_body_terms(preset(4))) {
    if (!seen.insert({static_cast<int>(t.kind), t.left, t.right}).second) continue;
    const Eigen::MatrixXcd gg = Eigen::kroneckerProduct(g5(t.kind, t.left), g5(t.kind, t.right));
    for (int k = 0; k < 5; ++k) {
      const double a = ang(rng);
      for (auto form : {EntanglerForm::Improved, EntanglerForm::Original}) {
        const auto c = decompose_two_qudit_givens(t.kind, t.left, t.right, a, 0, 1, 2, form);
        worst = std::max(worst, opdist(circuit_matrix(c, 2), (cplx(0, -a) * gg).exp()));
      }
    }
  }
  CHECK(seen.size() == 40);
  CHECK(worst < 1e-10);
}

TEST_CASE("entangler gate counts per form") {
  const auto a = tally(decompose_two_qudit_givens(PairKind::YY, {0, 1}, {3, 4}, 0.4));
  CHECK(a.controlled_entangling() == 6);
  const auto b = tally(decompose_two_qudit_givens(PairKind::YY, {0, 1}, {3, 4}, 0.4, 0, 1, 2, EntanglerForm::Original));
  CHECK(b.controlled_entangling() == 8);
}

TEST_CASE("closed-form resource counts") {
  const auto c4 = count_resources(4, Backend::Controlled);
  CHECK(c4.cx == 120);
  CHECK(c4.cy == 120);
  CHECK(c4.gx == 42);
  CHECK(c4.gy == 40);
  CHECK(c4.phase == 4);
  CHECK(count_resources(40, Backend::Controlled).controlled_entangling() == 45600);
  CHECK(count_resources(40, Backend::Native).native_entangling() == 7600);
  CHECK(count_resources(2, Backend::Native).native_entangling() == 0);
  for (int omega : {4, 6, 8})
    for (auto be : {Backend::Native, Backend::Controlled})
      for (auto form : {EntanglerForm::Improved, EntanglerForm::Original}) {
        TrotterOptions o;
        o.backend = be;
        o.form = form;
        CHECK(tally(trotter_step({omega, preset(4)}, 0.1, o)) == count_resources(omega, be, form));
      }
}

TEST_CASE("text round trip") {
  TrotterOptions o;
  o.backend = Backend::Controlled;
  CircuitIR c = trotter_step({6, preset(3)}, 0.123456789, o);
  const CircuitIR p = prep_single({0.1, 0.2, 0.3, 0.4});
  CHECK(to_text(from_text(to_text(p))) == to_text(p));
  const std::string s = to_text(c);
  const CircuitIR back = from_text(s);
  CHECK(to_text(back) == s);
  CHECK(back.gates.size() == c.gates.size());
  CHECK(opdist(circuit_matrix(back, 3), circuit_matrix(c, 3)) == 0.0);
  try {
    from_text("# q5-circuit 1\nQUDITS 1\nBOGUS 1 2\n");
    FAIL("expected a parse error");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("inverse and execution") {
  TrotterOptions o;
  o.backend = Backend::Controlled;
  CircuitIR c = trotter_step({4, preset(4)}, 0.3, o);
  CircuitIR both = c;
  both.append(inverse(c));
  CHECK(opdist(circuit_matrix(both, 2), Eigen::MatrixXcd::Identity(25, 25)) < 1e-12);
  const StateVector psi = initial_state(4, 'A');
  CircuitIR empty;
  empty.n_qudits = 2;
  CHECK((vec(execute(empty, psi)) - vec(psi)).norm() == 0.0);
  CHECK((vec(execute(c, psi)) - circuit_matrix(c, 2) * vec(psi)).norm() < 1e-13);
}

TEST_CASE("single-qudit preparation") {
  const StateVector one = init_basis_state(1, {1});
  const auto z = execute(prep_single({0, 0, 0, 0}), one);
  CHECK(std::abs(z[1] - 1.0) < 1e-15);
  const auto p = execute(prep_single({std::numbers::pi / 2, 0, 0, 0}), one);
  CHECK(std::abs(std::abs(p[0]) - 1.0) < 1e-15);

  Eigen::SelfAdjointEigenSolver<Mat5> es(one_body_h(preset(1)));
  const Eigen::VectorXcd ground = es.eigenvectors().col(0);
  const auto out = execute(prep_single(fit_prep_single(ground)), one);
  const Eigen::VectorXcd v = vec(out);
  CHECK((v.adjoint() * one_body_h(preset(1)) * v)(0).real() == doctest::Approx(-1.914214).epsilon(1e-6 / 1.914214));

  const auto c = prep_single({0.3, -1.1, 2.0, 0.7});
  const auto back = execute(inverse(c), execute(c, one));
  CHECK(std::abs(back[1] - 1.0) < 1e-12);
}

TEST_CASE("two-qudit preparation") {
  const auto z = execute(prep_two(std::vector<double>(24, 0.0)), StateVector(2));
  CHECK(std::abs(z[0] - 1.0) < 1e-15);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(-3, 3);
  std::vector<double> a(24);
  for (auto& x : a) x = ang(rng);
  const auto r = execute(prep_two(a), StateVector(2));
  double im = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k) im = std::max(im, std::abs(r[k].imag()));
  CHECK(im < 1e-12);

  const ModelInstance m{4, preset(1)};
  const auto sec = enumerate_sector(4, 4);
  const auto es = hermitian_eigensystem(Eigen::MatrixXcd(sector_hamiltonian(m, sec)));
  Eigen::VectorXcd target = Eigen::VectorXcd::Zero(25);
  for (std::size_t k = 0; k < sec.size(); ++k) target(static_cast<Eigen::Index>(sec.indices[k])) = es.vectors(static_cast<Eigen::Index>(k), 0);
  const Eigen::VectorXcd out = vec(execute(prep_two(fit_prep_two(target)), StateVector(2)));
  const double e = (out.adjoint() * Eigen::MatrixXcd(full_hamiltonian(m)) * out)(0).real() / 4.0;
  CHECK(std::abs(e - es.values(0) / 4.0) <= 1e-10);
  CHECK(std::abs(e + 1.125) <= 1e-4);
}
