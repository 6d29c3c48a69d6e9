#include "q5/mappings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace q5::mappings {
namespace {

using M2 = Eigen::Matrix2cd;

M2 letter_matrix(char c) {
  M2 m = M2::Zero();
  switch (c) {
    case 'I': m(0, 0) = 1; m(1, 1) = 1; break;
    case 'Z': m(0, 0) = 1; m(1, 1) = -1; break;
    case '0': m(0, 0) = 1; break;
    case '1': m(1, 1) = 1; break;
    case '+': m(0, 1) = 1; break;
    case '-': m(1, 0) = 1; break;
    default: throw std::invalid_argument(std::string("bad monomial letter '") + c + "'");
  }
  return m;
}

// m = s * letter, or s = 0
std::pair<cplx, char> identify(const M2& m) {
  const cplx a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  if (b != 0.0) return {b, '+'};
  if (c != 0.0) return {c, '-'};
  if (a == 0.0 && d == 0.0) return {0.0, 'I'};
  if (a == d) return {a, 'I'};
  if (a == -d) return {a, 'Z'};
  if (d == 0.0) return {a, '0'};
  if (a == 0.0) return {d, '1'};
  throw std::logic_error("product left the monomial alphabet");
}

void expand_xy(cplx coef, const std::string& letters, std::size_t pos, std::string cur, std::vector<Monomial>& out) {
  if (pos == letters.size()) {
    out.push_back({coef, cur});
    return;
  }
  const char c = letters[pos];
  if (c == 'X') {
    expand_xy(coef, letters, pos + 1, cur + '+', out);
    expand_xy(coef, letters, pos + 1, cur + '-', out);
  } else if (c == 'Y') {
    expand_xy(coef * cplx(0, -1), letters, pos + 1, cur + '+', out);
    expand_xy(coef * cplx(0, 1), letters, pos + 1, cur + '-', out);
  } else {
    letter_matrix(c);
    expand_xy(coef, letters, pos + 1, cur + c, out);
  }
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Monomial multiply(const Monomial& a, const Monomial& b) {
  if (a.letters.size() != b.letters.size()) throw std::domain_error("monomial length mismatch");
  Monomial r{a.coefficient * b.coefficient, std::string(a.letters.size(), 'I')};
  for (std::size_t k = 0; k < a.letters.size(); ++k) {
    const auto [s, l] = identify(letter_matrix(a.letters[k]) * letter_matrix(b.letters[k]));
    if (s == 0.0) return {0.0, r.letters};
    r.coefficient *= s;
    r.letters[k] = l;
  }
  return r;
}

Monomial adjoint(const Monomial& m) {
  Monomial r{std::conj(m.coefficient), m.letters};
  for (auto& c : r.letters) {
    if (c == '+') c = '-';
    else if (c == '-') c = '+';
  }
  return r;
}

OperatorSum& OperatorSum::add(cplx coefficient, const std::string& letters) {
  if (static_cast<int>(letters.size()) != n_)
    throw std::domain_error("operator string '" + letters + "' does not have " + std::to_string(n_) + " letters");
  expand_xy(coefficient, letters, 0, "", terms_);
  return *this;
}

OperatorSum& OperatorSum::add(const OperatorSum& other, cplx scale) {
  if (other.n_ != n_) throw std::domain_error("operator sum size mismatch");
  for (const auto& m : other.terms_) terms_.push_back({scale * m.coefficient, m.letters});
  return *this;
}

OperatorSum OperatorSum::operator*(const OperatorSum& other) const {
  if (other.n_ != n_) throw std::domain_error("operator sum size mismatch");
  OperatorSum r(n_);
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) {
      Monomial p = multiply(a, b);
      if (p.coefficient != 0.0) r.terms_.push_back(std::move(p));
    }
  r.canonicalize(0.0);
  return r;
}

OperatorSum OperatorSum::adjoint() const {
  OperatorSum r(n_);
  for (const auto& m : terms_) r.terms_.push_back(mappings::adjoint(m));
  return r;
}

void OperatorSum::canonicalize(double tol) {
  std::map<std::string, cplx> acc;
  for (const auto& m : terms_) acc[m.letters] += m.coefficient;
  terms_.clear();
  for (const auto& [l, c] : acc)
    if (std::abs(c) > tol) terms_.push_back({c, l});
}

OperatorSum operator+(OperatorSum a, const OperatorSum& b) {
  a.add(b);
  return a;
}

OperatorSum operator*(cplx s, OperatorSum a) {
  OperatorSum r(a.n_qubits());
  r.add(a, s);
  return r;
}

OperatorMatrix OperatorSum::matrix() const {
  const std::size_t dim = std::size_t{1} << n_;
  std::vector<Eigen::Triplet<cplx>> trip;
  for (const auto& m : terms_) {
    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t row = col;
      bool zero = false;
      double sign = 1.0;
      for (int k = 0; k < n_ && !zero; ++k) {
        const std::size_t bit = std::size_t{1} << (n_ - 1 - k);
        const bool one = col & bit;
        switch (m.letters[static_cast<std::size_t>(k)]) {
          case 'I': break;
          case 'Z': if (one) sign = -sign; break;
          case '0': zero = one; break;
          case '1': zero = !one; break;
          case '+': zero = !one; row &= ~bit; break;
          case '-': zero = one; row |= bit; break;
        }
      }
      if (!zero) trip.emplace_back(static_cast<int>(row), static_cast<int>(col), sign * m.coefficient);
    }
  }
  OperatorMatrix h(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  h.setFromTriplets(trip.begin(), trip.end());
  h.prune(cplx(0.0), 0.0);
  return h;
}

std::vector<PauliTerm> OperatorSum::pauli_terms(double tol) const {
  std::map<std::string, cplx> acc;
  for (const auto& m : terms_) {
    std::vector<std::pair<cplx, std::string>> cur{{m.coefficient, ""}};
    for (char c : m.letters) {
      std::vector<std::pair<cplx, std::string>> next;
      auto push = [&](cplx s, char l) {
        for (const auto& [k, str] : cur) next.push_back({k * s, str + l});
      };
      switch (c) {
        case 'I': push(1.0, 'I'); break;
        case 'Z': push(1.0, 'Z'); break;
        case '0': push(0.5, 'I'); push(0.5, 'Z'); break;
        case '1': push(0.5, 'I'); push(-0.5, 'Z'); break;
        case '+': push(0.5, 'X'); push(cplx(0, 0.5), 'Y'); break;
        case '-': push(0.5, 'X'); push(cplx(0, -0.5), 'Y'); break;
      }
      cur = std::move(next);
    }
    for (const auto& [k, str] : cur) acc[str] += k;
  }
  std::vector<PauliTerm> out;
  for (const auto& [l, c] : acc) {
    if (std::abs(c) <= tol) continue;
    if (std::abs(c.imag()) > 1e-12 * std::max(1.0, std::abs(c)))
      throw std::domain_error("operator is not Hermitian: imaginary Pauli coefficient on " + l);
    out.push_back({c.real(), l});
  }
  return out;
}

std::vector<PauliTerm> canonicalize(std::vector<PauliTerm> terms, double tol) {
  std::map<std::string, double> acc;
  for (const auto& t : terms) acc[t.letters] += t.coefficient;
  std::vector<PauliTerm> out;
  for (const auto& [l, c] : acc)
    if (std::abs(c) > tol) out.push_back({c, l});
  return out;
}

OperatorMatrix pauli_matrix(const std::vector<PauliTerm>& terms, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<Eigen::Triplet<cplx>> trip;
  for (const auto& t : terms) {
    if (static_cast<int>(t.letters.size()) != n_qubits) throw std::domain_error("Pauli string length mismatch");
    std::size_t flip = 0;
    for (int k = 0; k < n_qubits; ++k) {
      const char c = t.letters[static_cast<std::size_t>(k)];
      if (c == 'X' || c == 'Y') flip |= std::size_t{1} << (n_qubits - 1 - k);
      else if (c != 'I' && c != 'Z') throw std::invalid_argument(std::string("bad Pauli letter '") + c + "'");
    }
    for (std::size_t col = 0; col < dim; ++col) {
      cplx ph = t.coefficient;
      for (int k = 0; k < n_qubits; ++k) {
        const bool one = col & (std::size_t{1} << (n_qubits - 1 - k));
        const char c = t.letters[static_cast<std::size_t>(k)];
        if (c == 'Z' && one) ph = -ph;
        if (c == 'Y') ph *= one ? cplx(0, -1) : cplx(0, 1);
      }
      trip.emplace_back(static_cast<int>(col ^ flip), static_cast<int>(col), ph);
    }
  }
  OperatorMatrix h(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  h.setFromTriplets(trip.begin(), trip.end());
  h.prune(cplx(0.0), 0.0);
  return h;
}

std::string to_text(const std::vector<PauliTerm>& terms) {
  std::string out;
  for (const auto& t : terms) out += fmt17(t.coefficient) + ' ' + t.letters + '\n';
  return out;
}

std::vector<PauliTerm> pauli_from_text(const std::string& text) {
  std::vector<PauliTerm> out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string c, l;
    if (!(ls >> c >> l)) throw std::invalid_argument("Pauli text line " + std::to_string(lineno) + ": expected 2 fields");
    std::size_t pos = 0;
    const double v = std::stod(c, &pos);
    if (pos != c.size()) throw std::invalid_argument("Pauli text line " + std::to_string(lineno) + ": bad coefficient");
    for (char ch : l)
      if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z')
        throw std::invalid_argument("Pauli text line " + std::to_string(lineno) + ": bad letter");
    out.push_back({v, l});
  }
  return out;
}

}  // namespace q5::mappings
