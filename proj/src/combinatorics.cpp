#include "gdeutsch/combinatorics.hpp"

#include <array>

#include "gdeutsch/errors.hpp"

namespace gdeutsch {

namespace {

constexpr std::uint32_t kFactorialTableSize = 256;

const std::vector<BigInt>& factorial_table() {
  static const std::vector<BigInt> table = [] {
    std::vector<BigInt> t(kFactorialTableSize);
    t[0] = 1;
    for (std::uint32_t i = 1; i < kFactorialTableSize; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

// Visits partitions of `remaining` into parts <= max_part, at most
// `parts_left` of them, largest part first (reverse lexicographic).
template <class Visit>
void partitions(std::uint32_t remaining, std::uint32_t max_part, std::uint32_t parts_left,
                std::vector<std::uint32_t>& parts, Visit&& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  if (parts_left == 0) return;
  for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
    // Even using `part` everywhere cannot cover the remainder.
    if (static_cast<std::uint64_t>(part) * parts_left < remaining) break;
    parts.push_back(part);
    partitions(remaining - part, part, parts_left - 1, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

BigInt factorial(std::uint32_t n) {
  const auto& table = factorial_table();
  if (n < table.size()) return table[n];
  BigInt result = table.back();
  for (std::uint32_t i = kFactorialTableSize; i <= n; ++i) result *= i;
  return result;
}

std::vector<RowProfile> enumerate_profiles(std::uint32_t n_domain, std::uint32_t m_range) {
  if (n_domain == 0 || m_range == 0) throw InvalidArgument("N and M must be positive");
  std::vector<RowProfile> profiles;
  std::vector<std::uint32_t> parts;
  partitions(n_domain, n_domain, m_range, parts, [&](const std::vector<std::uint32_t>& p) {
    RowProfile profile{std::vector<std::uint32_t>(n_domain + 1, 0)};
    for (auto part : p) ++profile.counts[part];
    profile.counts[0] = m_range - static_cast<std::uint32_t>(p.size());
    profiles.push_back(std::move(profile));
  });
  return profiles;
}

BigInt multiplicity(const RowProfile& profile, std::uint32_t n_domain, std::uint32_t m_range) {
  if (!is_valid_profile(profile, n_domain, m_range)) {
    throw InvalidArgument("row profile violates the constraints for N = " +
                          std::to_string(n_domain) + ", M = " + std::to_string(m_range));
  }
  BigInt column_denominator = 1;
  BigInt row_denominator = 1;
  for (std::uint32_t l = 0; l < profile.counts.size(); ++l) {
    const BigInt fl = factorial(l);
    for (std::uint32_t r = 0; r < profile.counts[l]; ++r) column_denominator *= fl;
    row_denominator *= factorial(profile.counts[l]);
  }
  return (factorial(n_domain) / column_denominator) * (factorial(m_range) / row_denominator);
}

std::vector<ProfileMultiplicity> profile_multiplicities(std::uint32_t n_domain,
                                                        std::uint32_t m_range) {
  std::vector<ProfileMultiplicity> out;
  for (auto& profile : enumerate_profiles(n_domain, m_range)) {
    BigInt count = multiplicity(profile, n_domain, m_range);
    out.push_back({std::move(profile), std::move(count)});
  }
  return out;
}

bool check_total(std::uint32_t n_domain, std::uint32_t m_range) {
  BigInt total = 0;
  for (const auto& pm : profile_multiplicities(n_domain, m_range)) total += pm.count;
  return total == big_pow(m_range, n_domain);
}

}  // namespace gdeutsch
