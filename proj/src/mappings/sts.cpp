#include "q5/mappings.hpp"

#include <stdexcept>

namespace q5::mappings {

std::vector<FactoredTerm> sts_one_body_terms(const CouplingSet& c) {
  return {
      {-c.epsilon, "0Z1", false},
      {-(c.v + c.g), "0X1", false},
      {-0.5 * c.g, "III", false},
      {0.5 * c.g, "ZIZ", false},
      {-c.g, "1Z0", false},
  };
}

std::vector<FactoredTerm> sts_two_body_terms(const CouplingSet& c) {
  std::vector<FactoredTerm> out;
  for (const char* s : {"0+-0+-", "0+-01+", "01+0+-", "01+01+"}) out.push_back({-2.0 * c.v, s, true});
  const char* left[] = {"0--", "00-", "-0+", "-++"};
  const char* right[] = {"0++", "00+", "+0-", "+--"};
  const int sign[] = {1, 1, -1, -1};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out.push_back({-c.g * sign[i] * sign[j], std::string(left[i]) + right[j], true});
  return out;
}

OperatorSum sts_operator(const CouplingSet& c, int n_mode_pairs) {
  if (n_mode_pairs < 1 || n_mode_pairs > 4) throw std::domain_error("StS operator built for 1..4 mode pairs");
  const int nq = 3 * n_mode_pairs;
  OperatorSum h(nq);
  auto place = [&](const std::string& local, int offset) {
    std::string s(static_cast<std::size_t>(nq), 'I');
    s.replace(static_cast<std::size_t>(offset), local.size(), local);
    return s;
  };
  for (int p = 0; p < n_mode_pairs; ++p)
    for (const auto& t : sts_one_body_terms(c)) {
      if (t.coefficient == 0.0) continue;
      h.add(t.coefficient, place(t.letters, 3 * p));
    }
  for (int i = 0; i < n_mode_pairs; ++i)
    for (int j = i + 1; j < n_mode_pairs; ++j)
      for (const auto& t : sts_two_body_terms(c)) {
        if (t.coefficient == 0.0) continue;
        std::string s(static_cast<std::size_t>(nq), 'I');
        s.replace(static_cast<std::size_t>(3 * i), 3, t.letters.substr(0, 3));
        s.replace(static_cast<std::size_t>(3 * j), 3, t.letters.substr(3, 3));
        OperatorSum p(nq);
        p.add(t.coefficient, s);
        h.add(p);
        h.add(p.adjoint());
      }
  h.canonicalize();
  return h;
}

std::vector<PauliTerm> sts_hamiltonian(const CouplingSet& c, int n_mode_pairs) {
  return sts_operator(c, n_mode_pairs).pauli_terms();
}

}  // namespace q5::mappings
