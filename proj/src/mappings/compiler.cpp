#include "q5/mappings.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace q5::mappings {
namespace {

using Mask = std::uint32_t;

bool is_sigma(char c) { return c == '+' || c == '-' || c == 'X' || c == 'Y'; }
bool is_projector(char c) { return c == '0' || c == '1'; }

Mask bit_of(int q, int n) { return Mask{1} << (n - 1 - q); }

std::string pattern(const std::string& letters) {
  std::string p = letters;
  for (auto& c : p) {
    if (is_sigma(c)) c = 's';
    else if (is_projector(c)) c = 'L';
  }
  return p;
}

struct Block {
  std::string label;
  std::string letters;
  int grouped = 0;
};

struct Cube {
  Mask core, free;
};

long long pow2(int k) { return 1LL << k; }

// all strings core | s for s subset of free
template <typename F>
void for_each_member(const Cube& c, F&& f) {
  Mask s = 0;
  do {
    f(c.core | s);
    s = (s - c.free) & c.free;
  } while (s != 0);
}

long long cube_cost(const Cube& c) {
  const int k = std::popcount(c.free);
  return 2LL * (std::popcount(c.core) - 1) + (k > 0 ? pow2(k) : 0);
}

long long ladder(int k_sigma, int k_proj, LadderStyle style) {
  if (style == LadderStyle::Gray) return k_sigma + k_proj > 0 ? pow2(k_sigma + k_proj) : 0;
  return (k_sigma > 0 ? pow2(k_sigma + k_proj) : 0) + (k_proj > 0 ? pow2(k_proj) : 0);
}

}  // namespace

std::string to_string(LadderStyle s) { return s == LadderStyle::Nested ? "nested" : "gray"; }

std::vector<CliffordGate> g_operator(const std::string& letters, const std::vector<std::pair<int, int>>& preferred) {
  std::vector<int> sig;
  for (int k = 0; k < static_cast<int>(letters.size()); ++k)
    if (is_sigma(letters[static_cast<std::size_t>(k)])) sig.push_back(k);
  if (sig.empty()) throw std::domain_error("g_operator needs at least one raising/lowering factor");
  const int pivot = sig.front();
  const int n = static_cast<int>(letters.size());

  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  auto link = [&](int a, int b) {
    const int ra = find(a), rb = find(b);
    if (ra == rb) return;
    parent[static_cast<std::size_t>(ra)] = rb;
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  const std::set<int> in_sig(sig.begin(), sig.end());
  for (const auto& [a, b] : preferred)
    if (in_sig.count(a) && in_sig.count(b) && a != b) link(a, b);
  for (int s : sig)
    if (find(s) != find(pivot)) {
      // attach the component through its smallest member
      int rep = s;
      for (int t : sig)
        if (find(t) == find(s)) rep = std::min(rep, t);
      link(pivot, rep);
    }

  // orient away from the pivot
  std::vector<int> depth(static_cast<std::size_t>(n), -1), par(static_cast<std::size_t>(n), -1);
  std::queue<int> q;
  q.push(pivot);
  depth[static_cast<std::size_t>(pivot)] = 0;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(u)])
      if (depth[static_cast<std::size_t>(w)] < 0) {
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
        par[static_cast<std::size_t>(w)] = u;
        q.push(w);
      }
  }
  std::vector<int> children(sig.begin() + 1, sig.end());
  std::stable_sort(children.begin(), children.end(), [&](int a, int b) {
    if (depth[static_cast<std::size_t>(a)] != depth[static_cast<std::size_t>(b)])
      return depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)];
    return a < b;
  });
  std::vector<CliffordGate> out;
  for (int ch : children) out.push_back({CliffordGate::CNOT, par[static_cast<std::size_t>(ch)], ch});
  out.push_back({CliffordGate::H, pivot, pivot});
  return out;
}

OperatorMatrix clifford_matrix(const std::vector<CliffordGate>& gates, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  OperatorMatrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  u.setIdentity();
  const double r = 1.0 / std::sqrt(2.0);
  for (const auto& g : gates) {
    std::vector<Eigen::Triplet<cplx>> t;
    const std::size_t ba = std::size_t{1} << (n_qubits - 1 - g.a);
    for (std::size_t col = 0; col < dim; ++col) {
      if (g.kind == CliffordGate::CNOT) {
        const std::size_t bb = std::size_t{1} << (n_qubits - 1 - g.b);
        t.emplace_back(static_cast<int>((col & ba) ? col ^ bb : col), static_cast<int>(col), 1.0);
      } else {
        const bool one = col & ba;
        t.emplace_back(static_cast<int>(col & ~ba), static_cast<int>(col), r);
        t.emplace_back(static_cast<int>(col | ba), static_cast<int>(col), one ? -r : r);
      }
    }
    OperatorMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    m.setFromTriplets(t.begin(), t.end());
    u = OperatorMatrix(m * u);
  }
  return u;
}

CompileReport compile_trotter_step(const OperatorSum& hin, LadderStyle style) {
  OperatorSum h = hin;
  h.canonicalize(1e-14);
  const int n = h.n_qubits();
  if (n > 24) throw std::domain_error("compiler limited to 24 qubits");

  // diagonal part as Z-strings
  std::map<Mask, double> zs;
  std::map<std::string, cplx> off;
  for (const auto& m : h.monomials()) {
    if (std::any_of(m.letters.begin(), m.letters.end(), is_sigma)) {
      off[m.letters] += m.coefficient;
      continue;
    }
    std::vector<std::pair<Mask, double>> cur{{0, 1.0}};
    for (int k = 0; k < n; ++k) {
      const char c = m.letters[static_cast<std::size_t>(k)];
      if (c == 'I') continue;
      std::vector<std::pair<Mask, double>> next;
      for (const auto& [mask, s] : cur) {
        if (c == 'Z') next.push_back({mask | bit_of(k, n), s});
        else {
          next.push_back({mask, 0.5 * s});
          next.push_back({mask | bit_of(k, n), c == '0' ? 0.5 * s : -0.5 * s});
        }
      }
      cur = std::move(next);
    }
    if (std::abs(m.coefficient.imag()) > 1e-12) throw std::domain_error("diagonal term with complex coefficient");
    for (const auto& [mask, s] : cur) zs[mask] += s * m.coefficient.real();
  }
  std::set<Mask> strings;
  for (const auto& [mask, c] : zs)
    if (mask != 0 && std::abs(c) > 1e-12) strings.insert(mask);

  // off-diagonal P + P^dag pairs, grouped by support pattern
  std::map<std::string, Block> blocks;
  std::set<std::string> seen;
  for (const auto& [letters, c] : off) {
    if (seen.count(letters)) continue;
    const Monomial adj = adjoint(Monomial{c, letters});
    const auto it = off.find(adj.letters);
    const cplx partner = it == off.end() ? cplx(0.0) : it->second;
    if (std::abs(partner - adj.coefficient) > 1e-12 * std::max(1.0, std::abs(c)))
      throw std::domain_error("operator is not Hermitian at " + letters);
    seen.insert(letters);
    seen.insert(adj.letters);
    const std::string rep = std::min(letters, adj.letters);
    auto& b = blocks[pattern(rep)];
    if (b.grouped == 0) {
      b.label = rep;
      b.letters = rep;
    }
    ++b.grouped;
  }

  std::vector<std::pair<int, int>> zz;
  for (Mask s : strings)
    if (std::popcount(s) == 2) {
      std::vector<int> q;
      for (int k = 0; k < n; ++k)
        if (s & bit_of(k, n)) q.push_back(k);
      zz.push_back({q[0], q[1]});
    }

  // a string may only be absorbed by the smallest blocks whose support covers it
  auto support_of = [&](const std::string& pat) {
    Mask m = 0;
    for (int k = 0; k < n; ++k)
      if (pat[static_cast<std::size_t>(k)] != 'I') m |= bit_of(k, n);
    return m;
  };
  std::map<Mask, int> tightest;
  for (Mask s : strings)
    for (const auto& [pat, b] : blocks) {
      const Mask sup = support_of(pat);
      if ((s & sup) != s) continue;
      auto [it, fresh] = tightest.emplace(s, std::popcount(sup));
      if (!fresh) it->second = std::min(it->second, std::popcount(sup));
    }

  CompileReport rep;
  std::set<Mask> absorbed;
  for (const auto& [pat, b] : blocks) {
    int m = 0, kp = 0, idle = 0;
    for (char c : pat) {
      m += c == 's';
      kp += c == 'L';
      idle += c == 'Z';
    }
    const auto g = g_operator(b.letters, zz);
    const int pivot = g.back().a;
    for (Mask s : strings) {
      if (std::popcount(s) < 2 || absorbed.count(s)) continue;
      const auto t = tightest.find(s);
      if (t == tightest.end() || t->second != std::popcount(support_of(pat))) continue;
      Mask z = s;
      for (const auto& gate : g)
        if (gate.kind == CliffordGate::CNOT && (z & bit_of(gate.b, n))) z ^= bit_of(gate.a, n);
      if (std::popcount(z) == 1 && z != bit_of(pivot, n)) absorbed.insert(s);
    }
    BlockCost bc;
    bc.label = b.label;
    bc.grouped = b.grouped;
    bc.h = 2;
    bc.rz = pow2(m - 1 + kp);
    bc.cnot = 2LL * (m - 1) + 2LL * idle + ladder(m - 1, kp, style);
    rep.blocks.push_back(bc);
  }

  // remaining diagonal strings: greedy cube cover
  std::set<Mask> open;
  for (Mask s : strings)
    if (!absorbed.count(s)) open.insert(s);
  BlockCost diag;
  diag.label = "diagonal";
  diag.rz = static_cast<long long>(strings.size());
  auto heavy_left = [&] {
    return std::any_of(open.begin(), open.end(), [](Mask s) { return std::popcount(s) >= 2; });
  };
  while (heavy_left()) {
    Mask support = 0;
    for (Mask s : open)
      if (std::popcount(s) >= 2) support |= s;
    std::vector<int> qs;
    for (int k = 0; k < n; ++k)
      if (support & bit_of(k, n)) qs.push_back(k);
    Cube best{0, 0};
    int best_score = -1;
    long long best_cost = 0;
    // each support qubit is out, core, or free
    std::vector<int> state(qs.size(), 0);
    for (;;) {
      Cube c{0, 0};
      for (std::size_t i = 0; i < qs.size(); ++i) {
        if (state[i] == 1) c.core |= bit_of(qs[i], n);
        if (state[i] == 2) c.free |= bit_of(qs[i], n);
      }
      if (c.core != 0) {
        bool ok = true;
        int score = 0;
        for_each_member(c, [&](Mask s) {
          if (!open.count(s)) ok = false;
          else if (std::popcount(s) >= 2) ++score;
        });
        const long long cost = cube_cost(c);
        if (ok && score > 0 &&
            (score > best_score || (score == best_score && cost < best_cost))) {
          best = c;
          best_score = score;
          best_cost = cost;
        }
      }
      std::size_t i = 0;
      while (i < state.size() && ++state[i] == 3) state[i++] = 0;
      if (i == state.size()) break;
    }
    if (best_score <= 0) throw std::logic_error("cube cover made no progress");
    for_each_member(best, [&](Mask s) { open.erase(s); });
    diag.cnot += best_cost;
  }
  rep.diagonal = diag;
  for (const auto& b : rep.blocks) {
    rep.h += b.h;
    rep.rz += b.rz;
    rep.cnot += b.cnot;
  }
  rep.rz += diag.rz;
  rep.cnot += diag.cnot;
  return rep;
}

}  // namespace q5::mappings
