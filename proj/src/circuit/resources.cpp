#include "q5/circuit.hpp"

#include <stdexcept>

namespace q5::circuit {

ResourceCount count_resources(int omega, Backend backend, EntanglerForm form) {
  if (omega < 2 || omega % 2) throw std::domain_error("omega must be even and >= 2");
  const long long q = omega / 2;
  const long long pairs = q * (q - 1) / 2;
  ResourceCount r;
  r.gx = q;
  r.phase = 2 * q;
  if (backend == Backend::Native) {
    r.gxx = 20 * pairs;
    r.gyy = 20 * pairs;
    return r;
  }
  // 20 XX and 20 YY entanglers per pair, each with 2 rotations
  const long long outer = 2, inner = form == EntanglerForm::Improved ? 4 : 6;
  r.cx = 20 * pairs * (outer + inner);
  r.cy = 20 * pairs * (outer + inner);
  r.gx += 40 * pairs;
  r.gy = 40 * pairs;
  return r;
}

ResourceCount tally(const CircuitIR& c) {
  ResourceCount r;
  for (const auto& g : c.gates) {
    std::visit(
        [&](const auto& op) {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, PhaseDiag>) {
            ++r.phase;
          } else if constexpr (std::is_same_v<T, GivensRot>) {
            ++(op.kind == GivensKind::X ? r.gx : r.gy);
          } else if constexpr (std::is_same_v<T, CtrlGivens>) {
            (op.kind == GivensKind::X ? r.gx : r.gy) += static_cast<long long>(op.control_states.size());
          } else if constexpr (std::is_same_v<T, CtrlPermute>) {
            (op.kind == GivensKind::X ? r.cx : r.cy) += static_cast<long long>(op.control_states.size());
          } else {
            ++(op.kind == PairKind::XX ? r.gxx : r.gyy);
          }
        },
        g);
  }
  return r;
}

}  // namespace q5::circuit
