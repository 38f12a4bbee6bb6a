// Reference kernels: direct transcriptions of the definitions, no caching
// beyond what the protocol needs, no threading.

#include <cmath>

#include "detail/trial.hpp"
#include "gdeutsch/errors.hpp"
#include "gdeutsch/kernels.hpp"

namespace gdeutsch::kernels {

void finalize(PosteriorEstimate& e) {
  if (e.conditioning_events == 0) {
    e.estimate.reset();
    e.std_error = 0.0;
    return;
  }
  const double p = static_cast<double>(e.constant_and_conditioned) /
                   static_cast<double>(e.conditioning_events);
  e.estimate = p;
  e.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(e.conditioning_events));
}

namespace serial {

std::vector<double> outcome_probabilities(const FunctionSpec& f) {
  std::vector<double> probabilities;
  probabilities.reserve(static_cast<std::size_t>(f.m_range()) * f.n_domain());
  for (std::uint32_t alpha = 0; alpha < f.m_range(); ++alpha) {
    for (std::uint32_t beta = 0; beta < f.n_domain(); ++beta) {
      probabilities.push_back(std::norm(amplitude(f, {alpha, beta})));
    }
  }
  return probabilities;
}

std::vector<std::uint64_t> square_sum_histogram(std::uint32_t n_domain, std::uint32_t m_range,
                                                std::uint64_t cap) {
  std::vector<std::uint64_t> histogram(static_cast<std::size_t>(n_domain) * n_domain + 1, 0);
  for (const auto& f : enumerate_all(n_domain, m_range, cap)) {
    ++histogram[square_sum(row_sums(f))];
  }
  return histogram;
}

ProfileCensus profile_census(std::uint32_t n_domain, std::uint32_t m_range, std::uint64_t cap) {
  ProfileCensus census;
  for (const auto& f : enumerate_all(n_domain, m_range, cap)) {
    auto& entry = census[row_profile(f)];
    const std::uint64_t sq = square_sum(row_sums(f));
    ++entry.functions;
    entry.min_square_sum = std::min(entry.min_square_sum, sq);
    entry.max_square_sum = std::max(entry.max_square_sum, sq);
  }
  return census;
}

double orthonormality_defect(std::uint32_t m_range, std::uint32_t n_domain) {
  std::vector<ComplexMatrix> basis;
  for (std::uint32_t alpha = 0; alpha < m_range; ++alpha) {
    for (std::uint32_t beta = 0; beta < n_domain; ++beta) {
      basis.push_back(ftm_matrix(alpha, beta, m_range, n_domain));
    }
  }
  double defect = 0.0;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Complex expected = a == b ? 1.0 : 0.0;
      defect = std::max(defect, std::abs(scalar_product(basis[a], basis[b]) - expected));
    }
  }
  return defect;
}

PosteriorEstimate simulate_trials(const ExperimentConfig& config) {
  validate(config);
  detail::TrialTally tally;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    tally += detail::run_trial(config, trial,
                               [](const FunctionSpec&) -> const OutcomeSampler* { return nullptr; });
  }
  auto estimate = detail::to_estimate(config, tally);
  finalize(estimate);
  return estimate;
}

}  // namespace serial
}  // namespace gdeutsch::kernels
