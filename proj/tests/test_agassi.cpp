#include "q5/agassi.hpp"

#include <doctest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <random>
#include <sstream>

using namespace q5;

namespace {

Mat5 x(int i, int j) { return so5::givens(so5::GivensKind::X, i, j).matrix; }

// direct count of digit strings with the requested particle number
std::size_t brute_sector_size(int omega, int n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < pow5(omega / 2); ++i)
    if (particle_number_of(i, omega / 2) == n) ++c;
  return c;
}

Eigen::MatrixXcd dense(const OperatorMatrix& h) { return Eigen::MatrixXcd(h); }

}  // namespace

TEST_CASE("presets") {
  CHECK(preset(1).v == 0.5);
  CHECK(preset(2).v == 1.5);
  CHECK(preset(3).g == 1.5);
  CHECK(preset("set-4").g == 1.5);
  CHECK(preset("0").v == 0.0);
  CHECK(is_preset_name("set-2"));
  CHECK_FALSE(is_preset_name("set-9"));
  CHECK_THROWS(preset(7));
  CHECK_THROWS(ModelInstance{3, preset(1)}.validate());
}

TEST_CASE("one-body block") {
  Mat5 d0 = Mat5::Zero();
  for (int k = 0; k < 5; ++k) d0(k, k) = diag::spin_z[static_cast<std::size_t>(k)];
  CHECK((one_body_h(preset(0)) - d0).cwiseAbs().maxCoeff() == 0.0);
  const Mat5 h = one_body_h(preset(1));
  CHECK(h(1, 3).real() == doctest::Approx(-1.0));
  CHECK(h(1, 1).real() == doctest::Approx(-1.5));
  CHECK(h(4, 4).real() == doctest::Approx(-1.0));
  CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  Eigen::SelfAdjointEigenSolver<Mat5> es(h);
  CHECK(es.eigenvalues()(0) == doctest::Approx(-1.914214).epsilon(1e-6));
}

TEST_CASE("two-body terms") {
  CHECK(two_body_terms(preset(0)).empty());
  const auto t = two_body_terms(preset(1));
  bool found_v = false, found_g = false;
  for (const auto& term : t) {
    if (term.kind == PairKind::XX && term.left == LevelPair{1, 2} && term.right == LevelPair{1, 2}) {
      CHECK(term.coefficient == doctest::Approx(-0.5));
      found_v = true;
    }
    if (term.kind == PairKind::XX && term.left == LevelPair{0, 1} && term.right == LevelPair{1, 4}) {
      CHECK(term.coefficient == doctest::Approx(0.25));
      found_g = true;
    }
  }
  CHECK(found_v);
  CHECK(found_g);
  CHECK(two_body_terms(preset(4)).size() == 40);

  // the V sector written out from its definition
  const CouplingSet c{1.0, 0.7, 0.0};
  Mat25 v = Mat25::Zero();
  const Mat5 y12 = so5::givens(so5::GivensKind::Y, 1, 2).matrix, y23 = so5::givens(so5::GivensKind::Y, 2, 3).matrix;
  for (const Mat5& a : {x(1, 2), x(2, 3)})
    for (const Mat5& b : {x(1, 2), x(2, 3)}) v -= c.v * Mat25(Eigen::kroneckerProduct(a, b));
  for (const Mat5& a : {y12, y23})
    for (const Mat5& b : {y12, y23}) v += c.v * Mat25(Eigen::kroneckerProduct(a, b));
  CHECK((two_body_matrix(c) - v).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("full Hamiltonian structure") {
  std::mt19937_64 g(4);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int k = 0; k < 5; ++k) {
    const ModelInstance m{6, {u(g), u(g), u(g)}};
    const auto h = full_hamiltonian(m);
    CHECK(hermiticity_defect(h) < 1e-15);
    CHECK(cross_sector_norm(h, 3) == 0.0);
  }
  const ModelInstance m2{2, preset(3)};
  CHECK((dense(full_hamiltonian(m2)) - Eigen::MatrixXcd(one_body_h(preset(3)))).cwiseAbs().maxCoeff() == 0.0);

  // two qudits: h1 (x) 1 + 1 (x) h1 + H2
  const ModelInstance m4{4, preset(4)};
  const Mat5 h1 = one_body_h(preset(4));
  const Mat25 ref = Mat25(Eigen::kroneckerProduct(h1, Mat5::Identity())) +
                    Mat25(Eigen::kroneckerProduct(Mat5::Identity(), h1)) + two_body_matrix(preset(4));
  CHECK((dense(full_hamiltonian(m4)) - Eigen::MatrixXcd(ref)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(full_hamiltonian(ModelInstance{20, preset(1)}), std::length_error);
}

TEST_CASE("sector enumeration") {
  const auto s = enumerate_sector(2, 2);
  CHECK(s.indices == std::vector<std::size_t>{1, 2, 3});
  CHECK(enumerate_sector(4, 4).size() == 11);
  CHECK(enumerate_sector(4, 3).size() == 0);
  for (int omega : {2, 4, 6, 8})
    for (int n = 0; n <= 2 * omega; n += 2) CHECK(enumerate_sector(omega, n).size() == brute_sector_size(omega, n));
  const auto s8 = enumerate_sector(8, 8);
  for (std::size_t k = 0; k < s8.size(); ++k) CHECK(s8.position(s8.indices[k]) == k);
  CHECK(s8.position(0) == SectorIndex::npos);
}

TEST_CASE("sector Hamiltonian equals the restricted full matrix") {
  const ModelInstance m{6, preset(4)};
  const auto full = dense(full_hamiltonian(m));
  for (int n : {2, 6}) {
    const auto sec = enumerate_sector(6, n);
    const auto hs = dense(sector_hamiltonian(m, sec));
    double d = 0.0;
    for (std::size_t i = 0; i < sec.size(); ++i)
      for (std::size_t j = 0; j < sec.size(); ++j)
        d = std::max(d, std::abs(hs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -
                                 full(static_cast<Eigen::Index>(sec.indices[i]), static_cast<Eigen::Index>(sec.indices[j]))));
    CHECK(d == 0.0);
  }
}

TEST_CASE("spectrum examples") {
  CHECK(spectrum({2, preset(2)}, 0, 3).densities == std::vector<double>{0.0});
  CHECK(spectrum({2, preset(2)}, 0, 3).truncated);
  CHECK(spectrum({4, preset(1)}, 4, 1).densities[0] == doctest::Approx(-1.125).epsilon(5e-4 / 1.125));
  CHECK(std::abs(spectrum({4, preset(1)}, 2, 1).densities[0] + 0.701) <= 5e-4);
  CHECK(std::abs(spectrum({4, preset(1)}, 6, 1).densities[0] + 0.951) <= 5e-4);
  CHECK(std::abs(spectrum({4, preset(3)}, 8, 1).densities[0] + 1.500) <= 5e-4);
  const auto e = spectrum({8, preset(4)}, 8, 3).densities;
  CHECK(std::abs(e[0] + 4.456) <= 5e-4);
  CHECK(std::abs(e[1] + 3.900) <= 5e-4);
  CHECK(std::abs(e[2] + 3.168) <= 5e-4);
  CHECK_THROWS(spectrum({4, preset(1)}, 3, 1));
}

TEST_CASE("Lanczos agrees with the dense solver") {
  const ModelInstance m{8, preset(3)};
  SpectrumOptions it;
  it.dense_limit = 10;
  const auto a = spectrum(m, 8, 3);
  const auto b = spectrum(m, 8, 3, it);
  CHECK(b.iterative);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(a.densities[static_cast<std::size_t>(k)] - b.densities[static_cast<std::size_t>(k)]) < 1e-9);
}

TEST_CASE("dimensionless couplings") {
  const auto d0 = dimensionless({8, preset(0)});
  CHECK(d0.vbar == 0.0);
  CHECK(d0.gbar == 0.0);
  CHECK(dimensionless({2, preset(2)}).vbar == doctest::Approx(1.5));
  CHECK(dimensionless({8, preset(3)}).gbar0 == doctest::Approx(11.0));
}

TEST_CASE("initial states") {
  CHECK(initial_digits(2, 'A') == std::vector<int>{1});
  CHECK(initial_digits(8, 'B') == std::vector<int>{4, 4, 0, 0});
  for (char l : {'A', 'B'}) CHECK(expect_diagonal(initial_state(8, l), diag::number) == doctest::Approx(8.0));
  CHECK_THROWS(initial_digits(6, 'B'));
  CHECK_THROWS(initial_digits(4, 'C'));
}

TEST_CASE("spectrum CSV") {
  std::ostringstream os;
  write_spectrum_csv(os, {{2, 2, "set-1", 0, -0.95710678118654757}});
  CHECK(os.str() == "omega,N,set,level,energy_density\n2,2,set-1,0,-0.957106781187\n");
}
