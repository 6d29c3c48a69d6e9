#include "q5/circuit.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace q5::circuit {
namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string states(const std::vector<int>& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s[k]);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

int to_int(const std::string& s) {
  std::size_t pos = 0;
  const int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

GivensKind kind_of(const std::string& s) {
  if (s == "X") return GivensKind::X;
  if (s == "Y") return GivensKind::Y;
  throw std::invalid_argument("bad Givens kind '" + s + "'");
}

// "c:s1,s2" -> control c, states
std::pair<int, std::vector<int>> parse_control(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("control field needs 'qudit:states'");
  std::vector<int> st;
  for (const auto& t : split(s.substr(colon + 1), ',')) st.push_back(to_int(t));
  return {to_int(s.substr(0, colon)), st};
}

std::pair<int, int> parse_levels(const std::string& s) {
  const auto v = split(s, ',');
  if (v.size() != 2) throw std::invalid_argument("levels field needs 'i,j'");
  return {to_int(v[0]), to_int(v[1])};
}

}  // namespace

std::string to_text(const CircuitIR& c) {
  std::ostringstream os;
  os << "# q5-circuit 1\n";
  os << "QUDITS " << c.n_qudits << '\n';
  for (const auto& [k, v] : c.metadata) os << "META " << k << ' ' << v << '\n';
  for (const auto& g : c.gates) {
    std::visit(
        [&](const auto& op) {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, PhaseDiag>) {
            os << "PHASE - " << op.qudit << " - - ";
            for (int k = 0; k < 5; ++k) os << (k ? "," : "") << num(op.phases[static_cast<std::size_t>(k)]);
          } else if constexpr (std::is_same_v<T, GivensRot>) {
            os << "GIVENS " << so5::to_string(op.kind) << ' ' << op.qudit << " - " << op.i << ',' << op.j << ' '
               << num(op.angle);
          } else if constexpr (std::is_same_v<T, CtrlGivens>) {
            os << "CGIVENS " << so5::to_string(op.kind) << ' ' << op.target << ' ' << op.control << ':'
               << states(op.control_states) << ' ' << op.i << ',' << op.j << ' ' << num(op.angle);
          } else if constexpr (std::is_same_v<T, CtrlPermute>) {
            os << "CPERM " << so5::to_string(op.kind) << ' ' << op.target << ' ' << op.control << ':'
               << states(op.control_states) << ' ' << op.a << ',' << op.b << " -";
          } else {
            os << "GG " << (op.kind == PairKind::XX ? "XX" : "YY") << ' ' << op.q0 << ',' << op.q1 << " - " << op.a
               << ',' << op.b << ';' << op.m << ',' << op.n << ' ' << num(op.angle);
          }
          os << '\n';
        },
        g);
  }
  return os.str();
}

CircuitIR from_text(const std::string& text) {
  CircuitIR c;
  bool have_qudits = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string op;
    ls >> op;
    try {
      if (op == "QUDITS") {
        ls >> c.n_qudits;
        have_qudits = true;
        continue;
      }
      if (op == "META") {
        std::string k, v;
        ls >> k;
        std::getline(ls, v);
        if (!v.empty() && v[0] == ' ') v.erase(0, 1);
        c.metadata[k] = v;
        continue;
      }
      std::string kind, targets, controls, levels, angle;
      if (!(ls >> kind >> targets >> controls >> levels >> angle)) throw std::invalid_argument("expected 6 fields");
      if (op == "PHASE") {
        PhaseDiag g;
        g.qudit = to_int(targets);
        const auto ph = split(angle, ',');
        if (ph.size() != 5) throw std::invalid_argument("PHASE needs 5 angles");
        for (int k = 0; k < 5; ++k) g.phases[static_cast<std::size_t>(k)] = to_double(ph[static_cast<std::size_t>(k)]);
        c.gates.emplace_back(g);
      } else if (op == "GIVENS") {
        GivensRot g;
        g.kind = kind_of(kind);
        g.qudit = to_int(targets);
        std::tie(g.i, g.j) = parse_levels(levels);
        g.angle = to_double(angle);
        c.gates.emplace_back(g);
      } else if (op == "CGIVENS") {
        CtrlGivens g;
        g.kind = kind_of(kind);
        g.target = to_int(targets);
        std::tie(g.control, g.control_states) = parse_control(controls);
        std::tie(g.i, g.j) = parse_levels(levels);
        g.angle = to_double(angle);
        c.gates.emplace_back(g);
      } else if (op == "CPERM") {
        CtrlPermute g;
        g.kind = kind_of(kind);
        g.target = to_int(targets);
        std::tie(g.control, g.control_states) = parse_control(controls);
        std::tie(g.a, g.b) = parse_levels(levels);
        c.gates.emplace_back(g);
      } else if (op == "GG") {
        TwoQuditGivens g;
        if (kind == "XX") g.kind = PairKind::XX;
        else if (kind == "YY") g.kind = PairKind::YY;
        else throw std::invalid_argument("GG kind must be XX or YY");
        const auto q = split(targets, ',');
        if (q.size() != 2) throw std::invalid_argument("GG needs two targets");
        g.q0 = to_int(q[0]);
        g.q1 = to_int(q[1]);
        const auto semi = levels.find(';');
        if (semi == std::string::npos) throw std::invalid_argument("GG levels need 'a,b;m,n'");
        std::tie(g.a, g.b) = parse_levels(levels.substr(0, semi));
        std::tie(g.m, g.n) = parse_levels(levels.substr(semi + 1));
        g.angle = to_double(angle);
        c.gates.emplace_back(g);
      } else {
        throw std::invalid_argument("unknown gate '" + op + "'");
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("circuit text line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_qudits) throw std::invalid_argument("circuit text has no QUDITS line");
  c.validate();
  return c;
}

}  // namespace q5::circuit
