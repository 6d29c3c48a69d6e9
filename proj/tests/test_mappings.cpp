#include "q5/mappings.hpp"

#include <doctest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <sstream>

using namespace q5;
using namespace q5::mappings;

namespace {

Eigen::Matrix2cd letter(char c) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'Z': m << 1, 0, 0, -1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case '0': m << 1, 0, 0, 0; break;
    case '1': m << 0, 0, 0, 1; break;
    case '+': m << 0, 1, 0, 0; break;
    case '-': m << 0, 0, 1, 0; break;
  }
  return m;
}

// qubit 0 leftmost
Eigen::MatrixXcd kron_string(const std::string& s) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char c : s) m = Eigen::MatrixXcd(Eigen::kroneckerProduct(m, letter(c)));
  return m;
}

double maxabs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("monomial algebra") {
  const Monomial a{2.0, "+Z"}, b{cplx(0, 1), "-1"};
  const Monomial ab = multiply(a, b);
  CHECK(maxabs(ab.coefficient * kron_string(ab.letters) - 2.0 * cplx(0, 1) * kron_string("+Z") * kron_string("-1")) < 1e-15);
  const Monomial ad = adjoint(a);
  CHECK(maxabs(ad.coefficient * kron_string(ad.letters) - (2.0 * kron_string("+Z")).adjoint()) == 0.0);
  CHECK(multiply(Monomial{1.0, "0"}, Monomial{1.0, "1"}).coefficient == cplx(0.0));
}

TEST_CASE("operator sums against Kronecker products") {
  OperatorSum s(3);
  s.add(0.5, "XYZ").add(cplx(0, 2), "+I1").add(-1.0, "ZZX");
  const Eigen::MatrixXcd want = 0.5 * kron_string("XYZ") + cplx(0, 2) * kron_string("+I1") - kron_string("ZZX");
  CHECK(maxabs(Eigen::MatrixXcd(s.matrix()) - want) < 1e-15);
  CHECK(maxabs(Eigen::MatrixXcd(s.adjoint().matrix()) - want.adjoint()) < 1e-15);
  CHECK(maxabs(Eigen::MatrixXcd((s * s).matrix()) - want * want) < 1e-13);

  OperatorSum h(2);
  h.add(1.0, "XY").add(0.3, "ZI");
  const auto terms = h.pauli_terms();
  CHECK(maxabs(Eigen::MatrixXcd(pauli_matrix(terms, 2)) - Eigen::MatrixXcd(h.matrix())) < 1e-15);
  CHECK(canonicalize({{1.0, "XZ"}, {0.5, "IZ"}, {-1.0, "XZ"}}) == std::vector<PauliTerm>{{0.5, "IZ"}});
}

TEST_CASE("Pauli text round trip") {
  const auto h = pajw_hamiltonian(preset(4), 2);
  CHECK(pauli_from_text(to_text(h)) == h);
  CHECK_THROWS(pauli_from_text("0.5 XQ\n"));
}

TEST_CASE("isometries") {
  for (auto kind : {Mapping::PaJW, Mapping::StS}) {
    const auto iso = isometry(kind);
    CHECK(iso.images.size() == 5);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        CHECK(iso.images[static_cast<std::size_t>(a)].dot(iso.images[static_cast<std::size_t>(b)]) ==
              doctest::Approx(a == b ? 1.0 : 0.0));
    const auto v = isometry_matrix(kind, 2);
    CHECK(v.rows() == (1 << (2 * iso.qubits)));
    CHECK(v.cols() == 25);
    const Eigen::MatrixXd vtv = Eigen::MatrixXd(v).transpose() * Eigen::MatrixXd(v);
    CHECK((vtv - Eigen::MatrixXd::Identity(25, 25)).cwiseAbs().maxCoeff() < 1e-15);
  }
  // level 2 is the symmetric pair state under paJW
  CHECK(isometry(Mapping::PaJW).images[2](0b0110) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(isometry(Mapping::StS).images[4](4) == 1.0);
}

TEST_CASE("mapped Hamiltonians reproduce the qu5it model") {
  for (auto kind : {Mapping::PaJW, Mapping::StS})
    for (int pairs : {1, 2})
      for (int s = 0; s <= 4; ++s) {
        CAPTURE(s);
        const auto r = verify_equivalence(kind, pairs, preset(s));
        CHECK(r.conjugation <= 1e-10);
        CHECK(r.leakage <= 1e-12);
        CHECK(r.spectral <= 1e-10);
        CHECK(r.hermiticity <= 1e-12);
      }
  const auto e = physical_sector_spectrum(Mapping::StS, 2, preset(1), 4);
  CHECK(e.front() / 4.0 == doctest::Approx(-1.125).epsilon(5e-4 / 1.125));
  const auto f = physical_sector_spectrum(Mapping::PaJW, 2, preset(1), 4);
  CHECK(std::abs(f.front() - e.front()) < 1e-10);
}

TEST_CASE("a flipped pairing sign is detected") {
  PairingSigns bad;
  bad.s14 = -bad.s14;
  for (auto kind : {Mapping::PaJW, Mapping::StS}) {
    const auto r = verify_equivalence(kind, 2, preset(4), bad);
    CHECK(r.spectral > 1e-3);
  }
}

TEST_CASE("frame operator diagonalizes each term") {
  for (const std::string p : {"+-I0", "Z+1-", "+I+-", "0-1+"}) {
    const auto gates = g_operator(p);
    const int n = static_cast<int>(p.size());
    const Eigen::MatrixXcd g = Eigen::MatrixXcd(clifford_matrix(gates, n));
    const Eigen::MatrixXcd term = kron_string(p) + kron_string(p).adjoint();
    const Eigen::MatrixXcd d = g * term * g.adjoint();
    CAPTURE(p);
    CHECK((d - Eigen::MatrixXcd(d.diagonal().asDiagonal())).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(maxabs(g * g.adjoint() - Eigen::MatrixXcd::Identity(1 << n, 1 << n)) < 1e-14);
  }
  const auto c = clifford_matrix({{CliffordGate::CNOT, 0, 1}}, 2);
  CHECK(Eigen::MatrixXcd(c)(3, 2) == cplx(1.0));
}

TEST_CASE("compiled counts match the closed forms") {
  for (int pairs : {1, 2}) {
    const int omega = 2 * pairs;
    const auto a = compile_trotter_step(pajw_operator(preset(4), pairs));
    const auto ca = count_pajw(omega);
    CHECK(a.h == ca.h);
    CHECK(a.rz == ca.rz);
    CHECK(a.cnot == ca.cnot);
    const auto b = compile_trotter_step(sts_operator(preset(4), pairs));
    const auto cb = count_sts(omega);
    CHECK(b.h == cb.h);
    CHECK(b.rz == cb.rz);
    CHECK(b.cnot == cb.cnot);
  }
  const auto gray = compile_trotter_step(sts_operator(preset(4), 2), LadderStyle::Gray);
  CHECK(gray.cnot < count_sts(4).cnot);
  CHECK(to_string(LadderStyle::Gray) == "gray");
}

TEST_CASE("resource formulas") {
  const auto s4 = count_sts(4);
  CHECK(s4.h == 36);
  CHECK(s4.rz == 530);
  CHECK(s4.cnot == 708);
  CHECK(count_pajw(40).cnot == 24600);
  CHECK(count_sts(40).cnot == 130920);
  CHECK(count_pajw(2).cnot == 14);
  CHECK(count_sts(2).cnot == 10);
}

TEST_CASE("comparison table") {
  CHECK(decimal_power(5, 2) == "25");
  CHECK(decimal_power(2, 64) == "18446744073709551616");
  CHECK(decimal_power(7, 0) == "1");
  const auto rows = comparison_table({4});
  std::map<std::string, ComparisonRow> by;
  for (const auto& r : rows) by[r.mapping] = r;
  CHECK(by.at("qu5it-native").hilbert_dim == "25");
  CHECK(by.at("paJW").hilbert_dim == "256");
  CHECK(by.at("StS").hilbert_dim == "64");
  const auto big = comparison_table({8});
  for (const auto& r : big)
    if (r.mapping == "qu5it-native") CHECK(r.hilbert_dim == "625");
    else if (r.mapping == "paJW") CHECK(r.hilbert_dim == "65536");
    else if (r.mapping == "StS") CHECK(r.hilbert_dim == "4096");
  for (int omega = 4; omega <= 40; omega += 2) {
    std::map<std::string, long long> e;
    for (const auto& r : comparison_table({omega})) e[r.mapping] = r.entangling;
    CAPTURE(omega);
    CHECK(e.at("qu5it-controlled") > e.at("paJW"));
  }
  std::ostringstream os;
  write_comparison_csv(os, comparison_table({2}));
  CHECK(os.str().rfind("omega,mapping,hilbert_dim,entangling\n", 0) == 0);
}
