#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gdeutsch/ftm.hpp"
#include "gdeutsch/function_space.hpp"
#include "gdeutsch/rational.hpp"
#include "gdeutsch/rng.hpp"

namespace gdeutsch {

struct ExperimentConfig {
  std::uint32_t n_domain = 0;
  std::uint32_t m_range = 0;
  std::uint32_t k_target = 1;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

/// Throws InvalidArgument unless N, M, k and trials are all >= 1.
void validate(const ExperimentConfig& config);

struct PosteriorEstimate {
  std::uint64_t trials = 0;
  /// Trials whose first k non-FAIL outcomes were all constant indications.
  std::uint64_t conditioning_events = 0;
  std::uint64_t constant_and_conditioned = 0;
  /// Trials ended by a NOT_CONSTANT outcome (an exact verdict).
  std::uint64_t not_constant_verdicts = 0;
  std::uint64_t total_outcomes = 0;
  std::uint64_t fail_outcomes = 0;
  std::uint64_t error_outcomes = 0;
  /// constant_and_conditioned / conditioning_events; empty when nothing conditioned.
  std::optional<double> estimate;
  /// Binomial standard error of estimate.
  double std_error = 0.0;

  friend bool operator==(const PosteriorEstimate&, const PosteriorEstimate&) = default;
};

/// Inverse-CDF sampler over the canonical (alpha, beta) order. Probabilities
/// below kStructuralZeroTolerance are treated as exactly zero, so ERROR
/// outcomes (and C' outcomes of balanced functions) are never drawn.
class OutcomeSampler {
 public:
  explicit OutcomeSampler(const OutcomeDistribution& distribution);

  /// u in [0, 1).
  FtmOutcome sample(double u) const;

  template <class Rng>
  FtmOutcome operator()(Rng& rng) const {
    return sample(uniform_unit(rng));
  }

 private:
  std::uint32_t n_domain_;
  std::vector<double> cdf_;
};

template <class Rng>
FtmOutcome sample_outcome(const FunctionSpec& f, Rng& rng) {
  return OutcomeSampler(outcome_distribution(f))(rng);
}

/// Functions with M^N at or below this share precomputed samplers.
inline constexpr std::uint64_t kSamplerCacheLimit = 4096;

/// Per trial: draw f uniformly, measure repeatedly discarding FAILs, stop on
/// the first NOT_CONSTANT outcome or after k constant indications. Trial i
/// uses substream(seed, i), so the result is identical for any thread count.
PosteriorEstimate run_experiment(const ExperimentConfig& config);
/// Single-threaded reference for run_experiment.
PosteriorEstimate run_experiment_serial(const ExperimentConfig& config);

/// sum over all M^N functions of M^-N Pr(C'|f)^k, by direct enumeration.
Rational brute_force_evidence(std::uint32_t n_domain, std::uint32_t m_range, std::uint32_t k,
                              std::uint64_t cap = kDefaultEnumerationCap);

/// |estimate - exact| <= sigmas * std_error. False when nothing conditioned.
bool agrees_with(const PosteriorEstimate& estimate, double exact, double sigmas);

}  // namespace gdeutsch
