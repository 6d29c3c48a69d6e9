#include "q5/so5.hpp"

#include <cmath>
#include <stdexcept>

namespace q5::so5 {
namespace {

const double kSqrt2 = std::sqrt(2.0);

Mat5 unit(int r, int c) {
  Mat5 m = Mat5::Zero();
  m(r, c) = 1.0;
  return m;
}

Mat5 diag5(const Diag5& d) {
  Mat5 m = Mat5::Zero();
  for (int k = 0; k < 5; ++k) m(k, k) = d[k];
  return m;
}

}  // namespace

std::string to_string(Gen g) {
  switch (g) {
    case Gen::TPlus: return "T+";
    case Gen::TMinus: return "T-";
    case Gen::Tz: return "Tz";
    case Gen::BUp: return "b_up";
    case Gen::BDown: return "b_down";
    case Gen::Bz: return "b_z";
    case Gen::BUpDag: return "b_up^dag";
    case Gen::BDownDag: return "b_down^dag";
    case Gen::BzDag: return "b_z^dag";
    case Gen::N: return "N";
    case Gen::NTildeUp: return "Ntilde_up";
    case Gen::NTildeDown: return "Ntilde_down";
    case Gen::NTilde: return "Ntilde";
    case Gen::Omega5: return "Omega5";
    case Gen::NPairs: return "N_pairs";
  }
  return "?";
}

std::vector<Gen> table_generators() {
  return {Gen::TPlus, Gen::TMinus, Gen::Tz, Gen::BUp, Gen::BDown,
          Gen::Bz, Gen::BUpDag, Gen::BDownDag, Gen::BzDag, Gen::N};
}

AlgebraElement generator(Gen g) {
  Mat5 m;
  switch (g) {
    case Gen::TPlus: m = kSqrt2 * (unit(2, 1) + unit(3, 2)); break;
    case Gen::TMinus: m = kSqrt2 * (unit(1, 2) + unit(2, 3)); break;
    case Gen::Tz: m = diag5(diag::spin_z); break;
    case Gen::BUp: m = unit(0, 3) - unit(1, 4); break;
    case Gen::BDown: m = unit(0, 1) - unit(3, 4); break;
    case Gen::Bz: m = unit(0, 2) + unit(2, 4); break;
    case Gen::BUpDag: m = generator(Gen::BUp).matrix.adjoint(); break;
    case Gen::BDownDag: m = generator(Gen::BDown).matrix.adjoint(); break;
    case Gen::BzDag: m = generator(Gen::Bz).matrix.adjoint(); break;
    case Gen::N: m = diag5(diag::number); break;
    case Gen::Omega5: {
      const Mat5 n = generator(Gen::N).matrix;
      m = (n.trace() / 5.0) * Mat5::Identity();
      break;
    }
    case Gen::NTildeUp:
      m = 0.5 * generator(Gen::N).matrix + generator(Gen::Tz).matrix - 0.5 * generator(Gen::Omega5).matrix;
      break;
    case Gen::NTildeDown:
      m = 0.5 * generator(Gen::N).matrix - generator(Gen::Tz).matrix - 0.5 * generator(Gen::Omega5).matrix;
      break;
    case Gen::NTilde: m = 0.5 * (generator(Gen::N).matrix - generator(Gen::Omega5).matrix); break;
    case Gen::NPairs: m = diag5(diag::pairs); break;
  }
  return {g, m};
}

Mat5 standard_generator(int a) {
  const cplx i1(0.0, 1.0);
  auto G = [](Gen g) { return generator(g).matrix; };
  switch (a) {
    case 1: return 0.5 * (G(Gen::TPlus) + G(Gen::TMinus));
    case 2: return (G(Gen::TPlus) - G(Gen::TMinus)) / (2.0 * i1);
    case 3: return G(Gen::Tz);
    case 4: return (G(Gen::BDownDag) + G(Gen::BDown)) / kSqrt2;
    case 5: return (G(Gen::BDownDag) - G(Gen::BDown)) / (i1 * kSqrt2);
    case 6: return (G(Gen::BUpDag) + G(Gen::BUp)) / kSqrt2;
    case 7: return (G(Gen::BUpDag) - G(Gen::BUp)) / (i1 * kSqrt2);
    case 8: return (G(Gen::BzDag) + G(Gen::Bz)) / kSqrt2;
    case 9: return (G(Gen::BzDag) - G(Gen::Bz)) / (i1 * kSqrt2);
    case 10: return 0.5 * (G(Gen::N) - G(Gen::Omega5));
    default: throw std::domain_error("standard generator index must be 1..10");
  }
}

Mat5 lie_l(int i, int j) {
  if (i < 1 || i > 5 || j < 1 || j > 5) throw std::domain_error("L_ij index must be 1..5");
  if (i == j) return Mat5::Zero();
  if (i > j) return -lie_l(j, i);
  auto T = standard_generator;
  const int key = 10 * i + j;
  switch (key) {
    case 12: return T(1);
    case 23: return T(2);
    case 13: return T(3);
    case 15: return -(T(4) + T(6)) / kSqrt2;
    case 34: return (T(6) - T(4)) / kSqrt2;
    case 14: return (T(5) + T(7)) / kSqrt2;
    case 35: return (T(7) - T(5)) / kSqrt2;
    case 24: return T(8);
    case 25: return T(9);
    case 45: return -T(10);
  }
  throw std::logic_error("unreachable L_ij index");
}

}  // namespace q5::so5
