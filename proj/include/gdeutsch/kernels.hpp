#pragma once

// Data-parallel kernels. Each has an OpenMP implementation (namespace omp)
// and a straightforward single-threaded reference (namespace serial) that the
// tests and benchmarks compare it against. Both produce identical results.

#include <cstdint>
#include <map>
#include <vector>

#include "gdeutsch/ftm.hpp"
#include "gdeutsch/function_space.hpp"
#include "gdeutsch/montecarlo.hpp"

namespace gdeutsch::kernels {

struct CensusEntry {
  std::uint64_t functions = 0;
  /// Range of sum_alpha s_alpha^2 observed over functions with this profile.
  std::uint64_t min_square_sum = UINT64_MAX;
  std::uint64_t max_square_sum = 0;

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

using ProfileCensus = std::map<RowProfile, CensusEntry>;

namespace serial {

std::vector<double> outcome_probabilities(const FunctionSpec& f);
std::vector<std::uint64_t> square_sum_histogram(std::uint32_t n_domain, std::uint32_t m_range,
                                                std::uint64_t cap);
ProfileCensus profile_census(std::uint32_t n_domain, std::uint32_t m_range, std::uint64_t cap);
double orthonormality_defect(std::uint32_t m_range, std::uint32_t n_domain);
PosteriorEstimate simulate_trials(const ExperimentConfig& config);

}  // namespace serial

namespace omp {

std::vector<double> outcome_probabilities(const FunctionSpec& f);
/// Entry s counts functions with sum_alpha s_alpha^2 == s; size N^2 + 1.
std::vector<std::uint64_t> square_sum_histogram(std::uint32_t n_domain, std::uint32_t m_range,
                                                std::uint64_t cap);
/// Per-profile function count over all M^N functions.
ProfileCensus profile_census(std::uint32_t n_domain, std::uint32_t m_range, std::uint64_t cap);
double orthonormality_defect(std::uint32_t m_range, std::uint32_t n_domain);
PosteriorEstimate simulate_trials(const ExperimentConfig& config);

}  // namespace omp

/// Fills the derived fields (estimate, std_error) from the counts.
void finalize(PosteriorEstimate& estimate);

}  // namespace gdeutsch::kernels
