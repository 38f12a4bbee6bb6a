#include "gdeutsch/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "gdeutsch/errors.hpp"
#include "gdeutsch/kernels.hpp"

namespace gdeutsch {

void validate(const ExperimentConfig& config) {
  if (config.n_domain == 0 || config.m_range == 0) {
    throw InvalidArgument("experiment needs N >= 1 and M >= 1");
  }
  if (config.k_target == 0) throw InvalidArgument("experiment needs k >= 1");
  if (config.trials == 0) throw InvalidArgument("experiment needs at least one trial");
}

OutcomeSampler::OutcomeSampler(const OutcomeDistribution& distribution)
    : n_domain_(distribution.n_domain), cdf_(distribution.probabilities.size(), 0.0) {
  double total = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < cdf_.size(); ++i) {
    const double p = distribution.probabilities[i];
    if (p >= kStructuralZeroTolerance) {
      total += p;
      last_nonzero = i;
    }
    cdf_[i] = total;
  }
  if (total <= 0.0) throw InvalidArgument("outcome distribution has no mass");
  for (auto& c : cdf_) c /= total;
  std::fill(cdf_.begin() + static_cast<std::ptrdiff_t>(last_nonzero), cdf_.end(), 1.0);
}

FtmOutcome OutcomeSampler::sample(double u) const {
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto index = static_cast<std::uint32_t>(
      std::min<std::ptrdiff_t>(it - cdf_.begin(), static_cast<std::ptrdiff_t>(cdf_.size()) - 1));
  return {index / n_domain_, index % n_domain_};
}

PosteriorEstimate run_experiment(const ExperimentConfig& config) {
  return kernels::omp::simulate_trials(config);
}

PosteriorEstimate run_experiment_serial(const ExperimentConfig& config) {
  return kernels::serial::simulate_trials(config);
}

Rational brute_force_evidence(std::uint32_t n_domain, std::uint32_t m_range, std::uint32_t k,
                              std::uint64_t cap) {
  const auto histogram = kernels::omp::square_sum_histogram(n_domain, m_range, cap);
  Rational sum = 0;
  for (std::size_t s = 0; s < histogram.size(); ++s) {
    if (histogram[s] == 0) continue;
    sum += Rational(BigInt(histogram[s])) *
           rational_pow(constant_indication_from_square_sum(s, n_domain, m_range), k);
  }
  return sum / Rational(big_pow(m_range, n_domain));
}

bool agrees_with(const PosteriorEstimate& estimate, double exact, double sigmas) {
  if (!estimate.estimate) return false;
  return std::abs(*estimate.estimate - exact) <= sigmas * estimate.std_error;
}

}  // namespace gdeutsch
