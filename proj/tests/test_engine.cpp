#include "q5/engine.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace q5;

namespace {

StateVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> d;
  std::vector<cplx> a(pow5(n));
  for (auto& x : a) x = {d(g), d(g)};
  StateVector s(n, a);
  s.normalize();
  return s;
}

Eigen::MatrixXcd random_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> d;
  Eigen::MatrixXcd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = {d(g), d(g)};
  return Eigen::HouseholderQR<Eigen::MatrixXcd>(m).householderQ();
}

// full-register matrix built entry by entry from digit strings
Eigen::MatrixXcd embed(const DenseGate& g, int n) {
  const std::size_t dim = pow5(n);
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const auto dr = decode_index(r, n), dc = decode_index(c, n);
      bool rest_equal = true;
      for (int q = 0; q < n; ++q) {
        const bool target = q == g.targets[0] || (g.arity == 2 && q == g.targets[1]);
        if (!target && dr[static_cast<std::size_t>(q)] != dc[static_cast<std::size_t>(q)]) rest_equal = false;
      }
      if (!rest_equal) continue;
      int li, lj;
      if (g.arity == 1) {
        li = dr[static_cast<std::size_t>(g.targets[0])];
        lj = dc[static_cast<std::size_t>(g.targets[0])];
      } else {
        li = 5 * dr[static_cast<std::size_t>(g.targets[0])] + dr[static_cast<std::size_t>(g.targets[1])];
        lj = 5 * dc[static_cast<std::size_t>(g.targets[0])] + dc[static_cast<std::size_t>(g.targets[1])];
      }
      full(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = g.matrix(li, lj);
    }
  return full;
}

double distance(const StateVector& a, const Eigen::VectorXcd& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b(static_cast<Eigen::Index>(i))));
  return m;
}

Eigen::VectorXcd as_vector(const StateVector& s) {
  return Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(), static_cast<Eigen::Index>(s.size()));
}

}  // namespace

TEST_CASE("big-endian base-5 encoding") {
  CHECK(encode_digits({1}) == 1);
  CHECK(encode_digits({1, 1, 1, 1}) == 156);
  CHECK(encode_digits({4, 4, 0, 0}) == 600);
  CHECK(decode_index(600, 4) == std::vector<int>{4, 4, 0, 0});
  CHECK(digit_of(7, 0, 2) == 1);
  CHECK(digit_of(7, 1, 2) == 2);
  CHECK(digit_string(156, 4) == "1111");
  for (std::size_t i = 0; i < pow5(3); ++i) CHECK(encode_digits(decode_index(i, 3)) == i);
  CHECK_THROWS(encode_digits({5}));
}

TEST_CASE("basis states") {
  const auto s = init_basis_state(1, {1});
  CHECK(s[1] == cplx(1.0));
  CHECK(s.norm() == doctest::Approx(1.0));
  const auto a = init_basis_state(4, {1, 1, 1, 1});
  CHECK(a[156] == cplx(1.0));
  CHECK(std::abs(inner_product(init_basis_state(1, {0}), init_basis_state(1, {1}))) == 0.0);
}

TEST_CASE("single-qudit gates against the embedded matrix") {
  for (int q = 0; q < 3; ++q) {
    const Mat5 u = random_unitary(5, 10 + q);
    const auto g = DenseGate::single(q, u);
    const auto psi = random_state(3, 3 + q);
    const auto out = apply_gate(psi, g);
    CHECK(distance(out, embed(g, 3) * as_vector(psi)) < 1e-12);
    CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("two-qudit gates on every ordered pair") {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      const Mat25 u = random_unitary(25, 100 + 3 * a + b);
      const auto g = DenseGate::pair(a, b, u);
      const auto psi = random_state(3, 7);
      CHECK(distance(apply_gate(psi, g), embed(g, 3) * as_vector(psi)) < 1e-12);
    }
  CHECK_THROWS(DenseGate::pair(1, 1, Mat25::Identity()));
}

TEST_CASE("identity and Givens examples") {
  const auto psi = random_state(2, 1);
  CHECK(distance(apply_gate(psi, DenseGate::single(1, Mat5::Identity())), as_vector(psi)) == 0.0);
  Mat5 x01 = Mat5::Zero();
  x01(0, 1) = x01(1, 0) = 1.0;
  x01(2, 2) = x01(3, 3) = x01(4, 4) = 1.0;
  const auto out = apply_gate(init_basis_state(1, {0}), DenseGate::single(0, x01));
  CHECK(std::abs(out[1] - 1.0) < 1e-15);
}

TEST_CASE("threaded kernel matches sequential") {
  const auto psi = random_state(5, 99);
  const auto g = DenseGate::pair(3, 1, random_unitary(25, 5));
  ApplyOptions par;
  par.threads = 4;
  par.min_groups_per_thread = 1;
  const auto a = apply_gate(psi, g);
  const auto b = apply_gate(psi, g, par);
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  CHECK(d <= 1e-12);
}

TEST_CASE("norm stays 1 over a long random sequence") {
  auto psi = random_state(3, 4);
  for (int k = 0; k < 50; ++k) {
    if (k % 2) apply_gate_inplace(psi, DenseGate::single(k % 3, random_unitary(5, 1000 + k)));
    else apply_gate_inplace(psi, DenseGate::pair(k % 3, (k + 1) % 3, random_unitary(25, 2000 + k)));
  }
  CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
}

TEST_CASE("diagonal expectations") {
  CHECK(expect_diagonal(init_basis_state(4, {1, 1, 1, 1}), diag::spin_z) == doctest::Approx(-4.0));
  CHECK(expect_diagonal(init_basis_state(4, {4, 4, 0, 0}), diag::pairs) == doctest::Approx(4.0));
  const auto psi = random_state(2, 8);
  double manual = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const auto d = decode_index(i, 2);
    manual += std::norm(psi[i]) * (diag::number[static_cast<std::size_t>(d[0])] + diag::number[static_cast<std::size_t>(d[1])]);
  }
  CHECK(expect_diagonal(psi, diag::number) == doctest::Approx(manual).epsilon(1e-12));
  double par = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const auto d = decode_index(i, 2);
    par += std::norm(psi[i]) * diag::parity[static_cast<std::size_t>(d[0])] * diag::parity[static_cast<std::size_t>(d[1])];
  }
  CHECK(expect_product_diagonal(psi, diag::parity) == doctest::Approx(par).epsilon(1e-12));
}

TEST_CASE("sampling") {
  const auto h = sample(init_basis_state(2, {3, 1}), 100, 5);
  CHECK(h.counts.size() == 1);
  CHECK(h.counts.at("31") == 100);
  CHECK(h.prng == std::string(kPrngId));

  StateVector two(1);
  two[0] = 1.0 / std::sqrt(2.0);
  two[4] = 1.0 / std::sqrt(2.0);
  const auto big = sample(two, 1000000, 42);
  CHECK(std::abs(static_cast<double>(big.counts.at("0")) - 500000.0) <= 1500.0);
  CHECK(std::abs(static_cast<double>(big.counts.at("4")) - 500000.0) <= 1500.0);

  const auto psi = random_state(2, 12);
  const auto s1 = sample(psi, 5000, 77), s2 = sample(psi, 5000, 77);
  CHECK(s1.counts == s2.counts);
  CHECK(sample(psi, 5000, 78).counts != s1.counts);
  CHECK(big.estimate_diagonal(diag::number) == doctest::Approx(2.0).epsilon(0.01));
  CHECK_THROWS(sample(psi, 0, 1));
}

TEST_CASE("uniform draws lie in [0, 1)") {
  Rng r(3);
  double lo = 1.0, hi = 0.0, mean = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const double u = r.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    mean += u;
  }
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
  CHECK(mean / 100000 == doctest::Approx(0.5).epsilon(0.01));
}
