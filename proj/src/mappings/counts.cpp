#include "q5/mappings.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace q5::mappings {
namespace {

void check_omega(int omega) {
  if (omega < 2 || omega % 2) throw std::domain_error("omega must be even and >= 2");
}

circuit::ResourceCount per_step(int omega, long long h1, long long rz1, long long cx1, long long h2, long long rz2,
                                long long cx2) {
  check_omega(omega);
  const long long q = omega / 2, pairs = q * (q - 1) / 2;
  circuit::ResourceCount r;
  r.h = q * h1 + pairs * h2;
  r.rz = q * rz1 + pairs * rz2;
  r.cnot = q * cx1 + pairs * cx2;
  return r;
}

}  // namespace

circuit::ResourceCount count_pajw(int omega) { return per_step(omega, 2, 14, 14, 16, 64, 128); }
circuit::ResourceCount count_sts(int omega) { return per_step(omega, 2, 9, 10, 32, 512, 688); }

std::string decimal_power(unsigned base, unsigned exponent) {
  std::vector<unsigned> digits{1};  // little endian
  for (unsigned e = 0; e < exponent; ++e) {
    unsigned long long carry = 0;
    for (auto& d : digits) {
      const unsigned long long v = static_cast<unsigned long long>(d) * base + carry;
      d = static_cast<unsigned>(v % 10);
      carry = v / 10;
    }
    while (carry) {
      digits.push_back(static_cast<unsigned>(carry % 10));
      carry /= 10;
    }
  }
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) s += static_cast<char>('0' + *it);
  return s;
}

std::vector<ComparisonRow> comparison_table(const std::vector<int>& omegas) {
  std::vector<ComparisonRow> rows;
  for (int omega : omegas) {
    check_omega(omega);
    const unsigned q = static_cast<unsigned>(omega / 2);
    const auto c = circuit::count_resources(omega, circuit::Backend::Controlled);
    const auto n = circuit::count_resources(omega, circuit::Backend::Native);
    rows.push_back({omega, "qu5it-controlled", decimal_power(5, q), c.controlled_entangling()});
    rows.push_back({omega, "qu5it-native", decimal_power(5, q), n.native_entangling()});
    rows.push_back({omega, "paJW", decimal_power(2, 2 * static_cast<unsigned>(omega)), count_pajw(omega).cnot});
    rows.push_back({omega, "StS", decimal_power(2, 3 * q), count_sts(omega).cnot});
  }
  return rows;
}

void write_comparison_csv(std::ostream& os, const std::vector<ComparisonRow>& rows) {
  os << "omega,mapping,hilbert_dim,entangling\n";
  for (const auto& r : rows) os << r.omega << ',' << r.mapping << ',' << r.hilbert_dim << ',' << r.entangling << '\n';
}

}  // namespace q5::mappings
