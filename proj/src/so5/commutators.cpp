#include "q5/so5.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace q5::so5 {
namespace {

const double r2 = std::sqrt(2.0);
const cplx I(0.0, 1.0);

Mat5 G(Gen g) { return generator(g).matrix; }
Mat5 T(int a) { return standard_generator(a); }
Mat5 Z() { return Mat5::Zero(); }

struct Entry {
  std::string row, col;
  Mat5 a, b;
  Mat5 expected;
};

std::vector<Entry> ladder_table() {
  const Mat5 Tp = G(Gen::TPlus), Tm = G(Gen::TMinus), Tz = G(Gen::Tz);
  const Mat5 bu = G(Gen::BUp), bd = G(Gen::BDown), bz = G(Gen::Bz);
  const Mat5 bud = G(Gen::BUpDag), bdd = G(Gen::BDownDag), bzd = G(Gen::BzDag);
  const Mat5 N = G(Gen::N);
  const Mat5 Nu = G(Gen::NTildeUp), Nd = G(Gen::NTildeDown), Nt = G(Gen::NTilde);

  const std::vector<std::pair<std::string, Mat5>> ops = {
      {"T+", Tp}, {"T-", Tm}, {"Tz", Tz}, {"b_up", bu}, {"b_down", bd},
      {"b_z", bz}, {"b_up^dag", bud}, {"b_down^dag", bdd}, {"b_z^dag", bzd}, {"N", N}};

  // upper triangle, row-major, [row, col]
  const std::vector<Mat5> cells = {
      // T+
      Z(), 2.0 * Tz, -Tp, -r2 * bz, Z(), -r2 * bd, Z(), r2 * bzd, r2 * bud, Z(),
      // T-
      Z(), Tm, Z(), -r2 * bz, -r2 * bu, r2 * bzd, Z(), r2 * bdd, Z(),
      // Tz
      Z(), -bu, bd, Z(), bud, -bdd, Z(), Z(),
      // b_up
      Z(), Z(), Z(), -Nu, Z(), -Tm / r2, 2.0 * bu,
      // b_down
      Z(), Z(), Z(), -Nd, -Tp / r2, 2.0 * bd,
      // b_z
      Z(), -Tp / r2, -Tm / r2, -Nt, 2.0 * bz,
      // b_up^dag
      Z(), Z(), Z(), -2.0 * bud,
      // b_down^dag
      Z(), Z(), -2.0 * bdd,
      // b_z^dag
      Z(), -2.0 * bzd,
      // N
      Z()};

  std::vector<Entry> out;
  std::size_t k = 0;
  for (std::size_t r = 0; r < ops.size(); ++r)
    for (std::size_t c = r; c < ops.size(); ++c)
      out.push_back({ops[r].first, ops[c].first, ops[r].second, ops[c].second, cells[k++]});
  return out;
}

std::vector<Entry> standard_table() {
  const Mat5 Nu = G(Gen::NTildeUp), Nd = G(Gen::NTildeDown);
  const std::vector<Mat5> cells = {
      // T1
      Z(), I * T(3), -I * T(2), I * T(9) / r2, -I * T(8) / r2, I * T(9) / r2, -I * T(8) / r2,
      I * (T(7) + T(5)) / r2, -I * (T(6) + T(4)) / r2, Z(),
      // T2
      Z(), I * T(1), -I * T(8) / r2, -I * T(9) / r2, I * T(8) / r2, I * T(9) / r2,
      I * (T(4) - T(6)) / r2, I * (T(5) - T(7)) / r2, Z(),
      // T3
      Z(), -I * T(5), I * T(4), I * T(7), -I * T(6), Z(), Z(), Z(),
      // T4
      Z(), I * Nd, Z(), Z(), -I * T(2) / r2, I * T(1) / r2, -I * T(5),
      // T5
      Z(), Z(), Z(), -I * T(1) / r2, -I * T(2) / r2, I * T(4),
      // T6
      Z(), I * Nu, I * T(2) / r2, I * T(1) / r2, -I * T(7),
      // T7
      Z(), -I * T(1) / r2, I * T(2) / r2, I * T(6),
      // T8
      Z(), I * T(10), -I * T(9),
      // T9
      Z(), I * T(8),
      // T10
      Z()};
  std::vector<Entry> out;
  std::size_t k = 0;
  for (int r = 1; r <= 10; ++r)
    for (int c = r; c <= 10; ++c)
      out.push_back({"T" + std::to_string(r), "T" + std::to_string(c), T(r), T(c), cells[k++]});
  return out;
}

}  // namespace

double CommutatorReport::max_deviation() const {
  double m = 0.0;
  for (const auto& c : cells) m = std::max(m, c.deviation);
  return m;
}

CommutatorReport verify_commutators() {
  CommutatorReport rep;
  for (const auto& [name, table] : {std::pair{std::string("ladder"), ladder_table()},
                                    std::pair{std::string("standard"), standard_table()}}) {
    for (const auto& e : table) {
      const double dev = (commutator(e.a, e.b) - e.expected).cwiseAbs().maxCoeff();
      rep.cells.push_back({name, e.row, e.col, dev});
    }
  }
  return rep;
}

double trace_normalization_deviation() {
  double m = 0.0;
  for (int a = 1; a <= 10; ++a)
    for (int b = 1; b <= 10; ++b) {
      const cplx tr = (standard_generator(a) * standard_generator(b)).trace();
      m = std::max(m, std::abs(tr - cplx(a == b ? 2.0 : 0.0)));
    }
  return m;
}

double lie_relation_deviation() {
  auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  double m = 0.0;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      for (int k = 1; k <= 5; ++k)
        for (int l = 1; l <= 5; ++l) {
          const Mat5 lhs = commutator(lie_l(i, j), lie_l(k, l));
          const Mat5 rhs = I * (d(j, k) * lie_l(i, l) + d(i, l) * lie_l(j, k) - d(j, l) * lie_l(i, k) -
                                d(i, k) * lie_l(j, l));
          m = std::max(m, (lhs - rhs).cwiseAbs().maxCoeff());
        }
  return m;
}

}  // namespace q5::so5
