#pragma once

// Independent reference computations for the tests. Nothing here calls the
// code path it is used to check.

#include <cstdint>
#include <vector>

#include "gdeutsch/ftm.hpp"
#include "gdeutsch/function_space.hpp"
#include "gdeutsch/rational.hpp"

namespace gdeutsch::oracle {

/// Partitions of n into at most k parts, by the standard recurrence
/// p(n, k) = p(n, k - 1) + p(n - k, k).
std::uint64_t partitions_at_most(std::uint32_t n, std::uint32_t k);

/// Every (N+1)-tuple in {0..M}^(N+1) satisfying the profile constraints, by
/// scanning the whole grid.
std::vector<RowProfile> scan_profiles(std::uint32_t n_domain, std::uint32_t m_range);

/// Tr(F(alpha,beta)^dagger phi(|f>)) from explicitly built matrices.
Complex trace_amplitude(const FunctionSpec& f, std::uint32_t alpha, std::uint32_t beta);

/// Pr(C'|f) as sum_alpha Pr(K_alpha|f) - 1/M with one exact term per row.
Rational per_row_constant_indication(const FunctionSpec& f);

struct BayesResult {
  Rational evidence;
  Rational posterior;
};

/// Bayes' rule summed over all M^N functions with an exact likelihood per
/// function.
BayesResult enumerate_bayes(std::uint32_t n_domain, std::uint32_t m_range, std::uint32_t k);

}  // namespace gdeutsch::oracle
