#include "q5/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace q5 {
namespace {

struct Kernel1 {
  std::array<cplx, 25> m;
  std::size_t stride;

  std::size_t base(std::size_t g) const { return (g / stride) * 5 * stride + g % stride; }

  void run(cplx* a, std::size_t g0, std::size_t g1) const {
    std::array<cplx, 5> in;
    for (std::size_t g = g0; g < g1; ++g) {
      const std::size_t b = base(g);
      for (int d = 0; d < 5; ++d) in[d] = a[b + d * stride];
      for (int r = 0; r < 5; ++r) {
        cplx s = 0.0;
        for (int c = 0; c < 5; ++c) s += m[r * 5 + c] * in[c];
        a[b + r * stride] = s;
      }
    }
  }
};

struct Kernel2 {
  std::array<cplx, 625> m;
  std::array<std::size_t, 25> offset;  // local index -> amplitude offset
  std::size_t hi, lo;                  // strides of the more and less significant target

  std::size_t base(std::size_t g) const {
    const std::size_t c = g % lo;
    const std::size_t mid = hi / (5 * lo);
    const std::size_t b = (g / lo) % mid;
    const std::size_t a = g / (lo * mid);
    return a * 5 * hi + b * 5 * lo + c;
  }

  void run(cplx* amp, std::size_t g0, std::size_t g1) const {
    std::array<cplx, 25> in;
    for (std::size_t g = g0; g < g1; ++g) {
      const std::size_t b = base(g);
      for (int k = 0; k < 25; ++k) in[k] = amp[b + offset[k]];
      for (int r = 0; r < 25; ++r) {
        cplx s = 0.0;
        const cplx* row = &m[r * 25];
        for (int c = 0; c < 25; ++c) s += row[c] * in[c];
        amp[b + offset[r]] = s;
      }
    }
  }
};

template <class K>
void dispatch(const K& k, cplx* amp, std::size_t groups, const ApplyOptions& opts) {
  const int want = std::max(1, opts.threads);
  const std::size_t per = std::max<std::size_t>(1, opts.min_groups_per_thread);
  const int workers = static_cast<int>(std::min<std::size_t>(want, std::max<std::size_t>(1, groups / per)));
  if (workers <= 1) {
    k.run(amp, 0, groups);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::size_t chunk = (groups + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t g0 = std::min(groups, chunk * w);
    const std::size_t g1 = std::min(groups, g0 + chunk);
    pool.emplace_back([&k, amp, g0, g1] { k.run(amp, g0, g1); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

void apply_gate_inplace(StateVector& state, const DenseGate& gate, const ApplyOptions& opts) {
  const int n = state.n_qudits();
  auto check_target = [n](int q) {
    if (q < 0 || q >= n) throw std::domain_error("gate target outside register");
  };
  if (gate.arity == 1) {
    if (gate.matrix.rows() != 5 || gate.matrix.cols() != 5)
      throw std::domain_error("single-qudit gate must be 5x5");
    check_target(gate.targets[0]);
    Kernel1 k;
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c) k.m[r * 5 + c] = gate.matrix(r, c);
    k.stride = pow5(n - 1 - gate.targets[0]);
    dispatch(k, state.amplitudes().data(), state.size() / 5, opts);
    return;
  }
  if (gate.arity != 2) throw std::domain_error("gate arity must be 1 or 2");
  if (gate.matrix.rows() != 25 || gate.matrix.cols() != 25)
    throw std::domain_error("two-qudit gate must be 25x25");
  const int q0 = gate.targets[0], q1 = gate.targets[1];
  check_target(q0);
  check_target(q1);
  if (q0 == q1) throw std::domain_error("two-qudit gate targets must differ");
  if (n < 2) throw std::domain_error("two-qudit gate on a one-qudit register");
  Kernel2 k;
  for (int r = 0; r < 25; ++r)
    for (int c = 0; c < 25; ++c) k.m[r * 25 + c] = gate.matrix(r, c);
  const std::size_t s0 = pow5(n - 1 - q0), s1 = pow5(n - 1 - q1);
  for (int d0 = 0; d0 < 5; ++d0)
    for (int d1 = 0; d1 < 5; ++d1) k.offset[d0 * 5 + d1] = d0 * s0 + d1 * s1;
  k.hi = std::max(s0, s1);
  k.lo = std::min(s0, s1);
  dispatch(k, state.amplitudes().data(), state.size() / 25, opts);
}

StateVector apply_gate(StateVector state, const DenseGate& gate, const ApplyOptions& opts) {
  apply_gate_inplace(state, gate, opts);
  return state;
}

}  // namespace q5
