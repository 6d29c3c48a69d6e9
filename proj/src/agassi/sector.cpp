#include "q5/agassi.hpp"

#include <algorithm>
#include <stdexcept>

namespace q5 {

std::size_t SectorIndex::position(std::size_t register_index) const {
  auto it = std::lower_bound(indices.begin(), indices.end(), register_index);
  if (it == indices.end() || *it != register_index) return npos;
  return static_cast<std::size_t>(it - indices.begin());
}

int particle_number_of(std::size_t index, int n_qudits) {
  int total = 0;
  for (int k = 0; k < n_qudits; ++k) {
    total += static_cast<int>(diag::number[index % 5]);
    index /= 5;
  }
  return total;
}

SectorIndex enumerate_sector(int omega, int particle_number) {
  if (omega < 2 || omega % 2) throw std::domain_error("omega must be even and >= 2");
  if (particle_number < 0 || particle_number > 2 * omega)
    throw std::domain_error("particle number must lie in 0..2*omega");
  const int n = omega / 2;
  SectorIndex s;
  s.omega = omega;
  s.particle_number = particle_number;
  if (particle_number % 2) return s;

  // Most significant digit first, ascending, so output comes out sorted.
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> prefix(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> left(static_cast<std::size_t>(n) + 1, 0);
  left[0] = particle_number;
  int k = 0;
  digit[0] = -1;
  while (k >= 0) {
    auto ku = static_cast<std::size_t>(k);
    if (++digit[ku] > 4) {
      --k;
      continue;
    }
    const int rem = left[ku] - static_cast<int>(diag::number[static_cast<std::size_t>(digit[ku])]);
    const int slots = n - k - 1;
    if (rem < 0 || rem > 4 * slots) continue;
    prefix[ku + 1] = prefix[ku] * 5 + static_cast<std::size_t>(digit[ku]);
    left[ku + 1] = rem;
    if (slots == 0) {
      s.indices.push_back(prefix[ku + 1]);
      continue;
    }
    ++k;
    digit[static_cast<std::size_t>(k)] = -1;
  }
  return s;
}

}  // namespace q5
