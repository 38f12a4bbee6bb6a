#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace gdeutsch::oracle {

std::uint64_t partitions_at_most(std::uint32_t n, std::uint32_t k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  if (k > n) return partitions_at_most(n, n);
  return partitions_at_most(n, k - 1) + partitions_at_most(n - k, k);
}

std::vector<RowProfile> scan_profiles(std::uint32_t n_domain, std::uint32_t m_range) {
  std::vector<RowProfile> found;
  std::vector<std::uint32_t> tuple(n_domain + 1, 0);
  while (true) {
    std::uint64_t ones = 0;
    std::uint64_t rows = 0;
    for (std::uint32_t l = 0; l <= n_domain; ++l) {
      ones += static_cast<std::uint64_t>(l) * tuple[l];
      rows += tuple[l];
    }
    if (ones == n_domain && rows == m_range) found.push_back(RowProfile{tuple});
    std::uint32_t i = 0;
    while (i <= n_domain && ++tuple[i] > m_range) tuple[i++] = 0;
    if (i > n_domain) break;
  }
  return found;
}

Complex trace_amplitude(const FunctionSpec& f, std::uint32_t alpha, std::uint32_t beta) {
  const std::uint32_t m_range = f.m_range();
  const std::uint32_t n_domain = f.n_domain();
  const double norm = 1.0 / std::sqrt(static_cast<double>(m_range) * n_domain);
  Complex trace = 0.0;
  for (std::uint32_t m = 0; m < m_range; ++m) {
    for (std::uint32_t n = 0; n < n_domain; ++n) {
      const double phase = 2.0 * std::numbers::pi *
                           (static_cast<double>(alpha * m) / m_range +
                            static_cast<double>(beta * n) / n_domain);
      const Complex basis = norm * Complex(std::cos(phase), std::sin(phase));
      const double state = f[n] == m ? 1.0 / std::sqrt(static_cast<double>(n_domain)) : 0.0;
      trace += std::conj(basis) * state;
    }
  }
  return trace;
}

Rational per_row_constant_indication(const FunctionSpec& f) {
  Rational total = 0;
  for (std::uint32_t alpha = 0; alpha < f.m_range(); ++alpha) {
    std::uint64_t ones = 0;
    for (std::uint32_t n = 0; n < f.n_domain(); ++n) ones += f[n] == alpha ? 1 : 0;
    total += Rational(BigInt(ones * ones), BigInt(std::uint64_t{f.n_domain()} * f.n_domain()));
  }
  return total - Rational(BigInt(1), BigInt(f.m_range()));
}

BayesResult enumerate_bayes(std::uint32_t n_domain, std::uint32_t m_range, std::uint32_t k) {
  Rational joint_constant = 0;
  Rational evidence = 0;
  const Rational prior(BigInt(1), big_pow(m_range, n_domain));
  for (const auto& f : enumerate_all(n_domain, m_range)) {
    const Rational likelihood = rational_pow(per_row_constant_indication(f), k);
    evidence += prior * likelihood;
    if (is_constant(f)) joint_constant += prior * likelihood;
  }
  return {evidence, evidence == 0 ? Rational(0) : joint_constant / evidence};
}

}  // namespace gdeutsch::oracle
