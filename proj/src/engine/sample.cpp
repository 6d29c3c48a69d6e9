#include "q5/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace q5 {

double Rng::uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

double ShotHistogram::frequency(const std::string& digits) const {
  if (shots == 0) return 0.0;
  auto it = counts.find(digits);
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(shots);
}

double ShotHistogram::estimate_diagonal(const Diag5& d) const {
  if (shots == 0) return 0.0;
  double s = 0.0;
  for (const auto& [key, c] : counts) {
    double v = 0.0;
    for (char ch : key) v += d[static_cast<std::size_t>(ch - '0')];
    s += v * static_cast<double>(c);
  }
  return s / static_cast<double>(shots);
}

ShotHistogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::domain_error("sample: shots must be >= 1");
  std::vector<double> cdf(state.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    acc += std::norm(state[i]);
    cdf[i] = acc;
  }
  if (acc <= 0.0) throw std::domain_error("sample: zero state");
  std::vector<std::uint64_t> hits(state.size(), 0);
  Rng rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx >= state.size()) idx = state.size() - 1;
    // never land on an exactly-zero amplitude via a flat cdf segment
    while (std::norm(state[idx]) == 0.0 && idx > 0) --idx;
    ++hits[idx];
  }
  ShotHistogram h;
  h.shots = shots;
  h.seed = seed;
  for (std::size_t i = 0; i < hits.size(); ++i)
    if (hits[i]) h.counts[digit_string(i, state.n_qudits())] = hits[i];
  return h;
}

}  // namespace q5
