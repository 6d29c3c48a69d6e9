#pragma once

#include "q5/engine.hpp"

#include <string>
#include <vector>

namespace q5::so5 {

enum class Gen {
  TPlus,
  TMinus,
  Tz,
  BUp,
  BDown,
  Bz,
  BUpDag,
  BDownDag,
  BzDag,
  N,
  NTildeUp,
  NTildeDown,
  NTilde,
  Omega5,
  NPairs,
};

struct AlgebraElement {
  Gen name;
  Mat5 matrix;
};

std::string to_string(Gen g);
AlgebraElement generator(Gen g);
// The ten generators in table order: T+, T-, Tz, b_up, b_down, b_z, their daggers, N.
std::vector<Gen> table_generators();

// Hermitian standard-form generator T_a, a in 1..10, Tr(T_a T_b) = 2 delta_ab.
Mat5 standard_generator(int a);
// L_ij for 1 <= i,j <= 5, antisymmetric, rebuilt from the T_a.
Mat5 lie_l(int i, int j);

enum class GivensKind { X, Y };
std::string to_string(GivensKind k);

struct GivensOperator {
  GivensKind kind;
  int i, j;
  Mat5 matrix;
};

// X_ij = |i><j| + |j><i|,  Y_ij has (i,j) = -i and (j,i) = +i.
GivensOperator givens(GivensKind kind, int i, int j);
// exp(-i theta G_ij) in closed form.
Mat5 exp_givens(GivensKind kind, int i, int j, double theta);
// Two-level permutation gates: X^_ab swaps a and b, Y^_ab = i(|a><b| - |b><a|); identity elsewhere.
Mat5 permutation_gate(GivensKind kind, int a, int b);
// Diagonal unitary diag(exp(i phi_k)).
Mat5 phase_gate(const Diag5& phases);

Mat5 commutator(const Mat5& a, const Mat5& b);

struct CommutatorCell {
  std::string table;
  std::string row, col;
  double deviation;
};

struct CommutatorReport {
  std::vector<CommutatorCell> cells;
  double max_deviation() const;
  bool ok(double tol) const { return max_deviation() <= tol; }
};

CommutatorReport verify_commutators();
// max_ab |Tr(T_a T_b) - 2 delta_ab|
double trace_normalization_deviation();
// max over i,j,k,l of the so(5) bracket residual for L_ij
double lie_relation_deviation();

}  // namespace q5::so5
