#include "q5/mappings.hpp"

#include <stdexcept>

namespace q5::mappings {

OperatorSum jw_annihilation(int mode, int n_qubits) {
  if (mode < 0 || mode >= n_qubits) throw std::domain_error("JW mode out of range");
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  for (int l = 0; l < mode; ++l) s[static_cast<std::size_t>(l)] = 'Z';
  s[static_cast<std::size_t>(mode)] = '-';
  OperatorSum c(n_qubits);
  c.add(mode % 2 ? -1.0 : 1.0, s);
  return c;
}

OperatorSum pajw_operator(const CouplingSet& cs, int n_mode_pairs) {
  if (n_mode_pairs < 1 || n_mode_pairs > 3) throw std::domain_error("paJW operator built for 1..3 mode pairs");
  const int nq = 4 * n_mode_pairs;
  std::vector<OperatorSum> c, cd;
  for (int n = 0; n < nq; ++n) {
    c.push_back(jw_annihilation(n, nq));
    cd.push_back(c.back().adjoint());
  }
  OperatorSum sz(nq), sp(nq), b(nq);
  for (int p = 0; p < n_mode_pairs; ++p) {
    const int kd = 4 * p, ku = 4 * p + 1, mkd = 4 * p + 2, mku = 4 * p + 3;
    sz.add(0.5 * (cd[ku] * c[ku]));
    sz.add(0.5 * (cd[mku] * c[mku]));
    sz.add(-0.5 * (cd[kd] * c[kd]));
    sz.add(-0.5 * (cd[mkd] * c[mkd]));
    sp.add(cd[ku] * c[kd]);
    sp.add(cd[mku] * c[mkd]);
    b.add(c[mku] * c[ku]);
    b.add(c[mkd] * c[kd]);
  }
  sz.canonicalize(0.0);
  sp.canonicalize(0.0);
  b.canonicalize(0.0);
  const OperatorSum sm = sp.adjoint();
  OperatorSum h(nq);
  h.add(sz, cs.epsilon);
  h.add(sp * sp, -0.5 * cs.v);
  h.add(sm * sm, -0.5 * cs.v);
  h.add(b.adjoint() * b, -cs.g);
  h.canonicalize();
  return h;
}

std::vector<PauliTerm> pajw_hamiltonian(const CouplingSet& c, int n_mode_pairs) {
  return pajw_operator(c, n_mode_pairs).pauli_terms();
}

}  // namespace q5::mappings
