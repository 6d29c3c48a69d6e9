#pragma once

#include "q5/agassi.hpp"
#include "q5/circuit.hpp"
#include "q5/engine.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace q5::mappings {

// Real-coefficient Pauli string, qubit 0 leftmost (most significant bit).
struct PauliTerm {
  double coefficient;
  std::string letters;
  bool operator==(const PauliTerm&) const = default;
};

// Product of single-qubit factors from {I, Z, 0, 1, +, -}:
// 0 = |0><0|, 1 = |1><1|, + = |0><1|, - = |1><0|.
struct Monomial {
  cplx coefficient;
  std::string letters;
};

Monomial multiply(const Monomial& a, const Monomial& b);
Monomial adjoint(const Monomial& m);

class OperatorSum {
 public:
  explicit OperatorSum(int n_qubits = 0) : n_(n_qubits) {}

  int n_qubits() const { return n_; }
  const std::vector<Monomial>& monomials() const { return terms_; }

  // Letters may also contain X and Y, expanded into monomials.
  OperatorSum& add(cplx coefficient, const std::string& letters);
  OperatorSum& add(const OperatorSum& other, cplx scale = 1.0);
  OperatorSum operator*(const OperatorSum& other) const;
  OperatorSum adjoint() const;
  // Merge identical letter strings, drop |c| < tol, sort lexicographically.
  void canonicalize(double tol = 1e-15);

  OperatorMatrix matrix() const;
  std::vector<PauliTerm> pauli_terms(double tol = 1e-15) const;

 private:
  int n_;
  std::vector<Monomial> terms_;
};

OperatorSum operator+(OperatorSum a, const OperatorSum& b);
OperatorSum operator*(cplx s, OperatorSum a);

// Canonical list: sorted, like terms merged, |c| < tol dropped.
std::vector<PauliTerm> canonicalize(std::vector<PauliTerm> terms, double tol = 1e-15);
OperatorMatrix pauli_matrix(const std::vector<PauliTerm>& terms, int n_qubits);
// One term per line: "coefficient letters".
std::string to_text(const std::vector<PauliTerm>& terms);
std::vector<PauliTerm> pauli_from_text(const std::string& text);

enum class Mapping { PaJW, StS };
std::string to_string(Mapping m);
Mapping parse_mapping(const std::string& s);
int qubits_per_qudit(Mapping m);

// JW annihilation c_n = prod_{l<n} (-Z_l) sigma^-_n, occupied = |0>.
OperatorSum jw_annihilation(int mode, int n_qubits);

// Qubits 4p + {0,1,2,3} hold k-down, k-up, -k-down, -k-up of mode pair p.
OperatorSum pajw_operator(const CouplingSet& c, int n_mode_pairs);
std::vector<PauliTerm> pajw_hamiltonian(const CouplingSet& c, int n_mode_pairs);

struct FactoredTerm {
  double coefficient;
  std::string letters;  // over {I, Z, X, 0, 1, +, -}
  bool plus_adjoint;    // term is c (P + P^dag)
};

std::vector<FactoredTerm> sts_one_body_terms(const CouplingSet& c);
// 6-letter rows on an ordered pair of triples.
std::vector<FactoredTerm> sts_two_body_terms(const CouplingSet& c);
OperatorSum sts_operator(const CouplingSet& c, int n_mode_pairs);
std::vector<PauliTerm> sts_hamiltonian(const CouplingSet& c, int n_mode_pairs);

struct StateMapIsometry {
  Mapping kind;
  int qubits;
  std::vector<Eigen::VectorXd> images;  // one per qu5it level
};
StateMapIsometry isometry(Mapping kind);
// 2^{q n} x 5^n tensor-product isometry
Eigen::SparseMatrix<double> isometry_matrix(Mapping kind, int n_qudits);
Eigen::VectorXcd embed_state(const StateVector& psi, Mapping kind);

struct EquivalenceReport {
  double conjugation = 0.0;  // max |V^dag H_q V - H_5|
  double leakage = 0.0;      // max |(1 - V V^dag) H_q V|
  double spectral = 0.0;     // max eigenvalue difference on the physical subspace
  double hermiticity = 0.0;
};

EquivalenceReport verify_equivalence(Mapping kind, int n_mode_pairs, const CouplingSet& c,
                                     const PairingSigns& qu5it_signs = {});
double leakage(const OperatorMatrix& h_qubit, const Eigen::SparseMatrix<double>& v);

// Eigenvalues of V^dag H V restricted to one qu5it particle-number sector.
std::vector<double> physical_sector_spectrum(Mapping kind, int n_mode_pairs, const CouplingSet& c,
                                             int particle_number);

// ---- Pauli-evolution resource compiler ----

struct CliffordGate {
  enum Kind { H, CNOT } kind;
  int a, b;  // CNOT control a, target b; H acts on a
};

// CNOTs from the pivot (first raising/lowering qubit) along a rooted tree, deepest edges first, then H on the pivot.
// Extra tree edges are taken from diagonal ZZ pairs when given.
std::vector<CliffordGate> g_operator(const std::string& letters,
                                     const std::vector<std::pair<int, int>>& preferred_edges = {});
OperatorMatrix clifford_matrix(const std::vector<CliffordGate>& gates, int n_qubits);

enum class LadderStyle {
  Nested,  // outer Gray cycle over projector qubits, inner cycle over the rest
  Gray     // one cyclic Gray code over all free qubits
};
std::string to_string(LadderStyle s);

struct BlockCost {
  std::string label;
  long long h = 0, rz = 0, cnot = 0;
  int grouped = 1;  // number of P + P^dag terms sharing this frame
};

struct CompileReport {
  std::vector<BlockCost> blocks;
  BlockCost diagonal;
  long long h = 0, rz = 0, cnot = 0;
};

CompileReport compile_trotter_step(const OperatorSum& h, LadderStyle style = LadderStyle::Nested);

// Closed-form per-step totals.
circuit::ResourceCount count_pajw(int omega);
circuit::ResourceCount count_sts(int omega);

struct ComparisonRow {
  int omega;
  std::string mapping;
  std::string hilbert_dim;  // exact decimal
  long long entangling;
};
std::vector<ComparisonRow> comparison_table(const std::vector<int>& omegas);
void write_comparison_csv(std::ostream& os, const std::vector<ComparisonRow>& rows);
std::string decimal_power(unsigned base, unsigned exponent);

}  // namespace q5::mappings
