#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "gdeutsch/montecarlo.hpp"

namespace gdeutsch::detail {

struct TrialTally {
  std::uint64_t conditioning_events = 0;
  std::uint64_t constant_and_conditioned = 0;
  std::uint64_t not_constant_verdicts = 0;
  std::uint64_t total_outcomes = 0;
  std::uint64_t fail_outcomes = 0;
  std::uint64_t error_outcomes = 0;

  TrialTally& operator+=(const TrialTally& o) {
    conditioning_events += o.conditioning_events;
    constant_and_conditioned += o.constant_and_conditioned;
    not_constant_verdicts += o.not_constant_verdicts;
    total_outcomes += o.total_outcomes;
    fail_outcomes += o.fail_outcomes;
    error_outcomes += o.error_outcomes;
    return *this;
  }
};

/// One trial of the k-run conditioning protocol. `sampler_for(f)` returns a
/// pointer to a cached sampler for f, or nullptr to build one on the spot.
template <class SamplerFor>
TrialTally run_trial(const ExperimentConfig& config, std::uint64_t trial, SamplerFor&& sampler_for) {
  TrialTally tally;
  auto rng = substream(config.seed, trial);
  const FunctionSpec f = sample_uniform(config.n_domain, config.m_range, rng);
  // With a single output value every outcome is FAIL; nothing can condition.
  if (config.m_range == 1) return tally;

  std::optional<OutcomeSampler> local;
  const OutcomeSampler* sampler = sampler_for(f);
  if (sampler == nullptr) sampler = &local.emplace(outcome_distribution_serial(f));

  std::uint32_t hits = 0;
  while (true) {
    const FtmOutcome outcome = (*sampler)(rng);
    ++tally.total_outcomes;
    switch (classify_outcome(outcome, config.m_range, config.n_domain)) {
      case OutcomeClass::Fail:
        ++tally.fail_outcomes;
        continue;
      case OutcomeClass::Error:
        ++tally.error_outcomes;
        continue;
      case OutcomeClass::NotConstant:
        ++tally.not_constant_verdicts;
        return tally;
      case OutcomeClass::ConstantIndication:
        if (++hits == config.k_target) {
          ++tally.conditioning_events;
          if (is_constant(f)) ++tally.constant_and_conditioned;
          return tally;
        }
        continue;
    }
  }
}

inline PosteriorEstimate to_estimate(const ExperimentConfig& config, const TrialTally& t) {
  PosteriorEstimate e;
  e.trials = config.trials;
  e.conditioning_events = t.conditioning_events;
  e.constant_and_conditioned = t.constant_and_conditioned;
  e.not_constant_verdicts = t.not_constant_verdicts;
  e.total_outcomes = t.total_outcomes;
  e.fail_outcomes = t.fail_outcomes;
  e.error_outcomes = t.error_outcomes;
  return e;
}

}  // namespace gdeutsch::detail
