#include <omp.h>

#include <algorithm>
#include <cmath>

#include "detail/phase.hpp"
#include "detail/trial.hpp"
#include "gdeutsch/errors.hpp"
#include "gdeutsch/kernels.hpp"

namespace gdeutsch::kernels::omp {

namespace {

// Below this many complex multiply-adds a thread team costs more than it saves.
constexpr std::uint64_t kGridParallelThreshold = 1 << 14;
constexpr std::uint64_t kRanksPerChunk = 1 << 14;

/// Walks a contiguous range of function ranks in lexicographic order,
/// maintaining row sums, the row profile and the square sum incrementally.
class Odometer {
 public:
  Odometer(std::uint64_t rank, std::uint32_t n_domain, std::uint32_t m_range)
      : m_range_(m_range), values_(n_domain), sums_(m_range, 0), profile_(n_domain + 1, 0) {
    for (std::uint32_t i = n_domain; i-- > 0;) {
      values_[i] = static_cast<std::uint32_t>(rank % m_range);
      rank /= m_range;
    }
    for (auto v : values_) ++sums_[v];
    for (auto s : sums_) {
      ++profile_[s];
      square_sum_ += static_cast<std::uint64_t>(s) * s;
    }
  }

  void advance() {
    for (std::size_t i = values_.size(); i-- > 0;) {
      const std::uint32_t from = values_[i];
      const std::uint32_t to = from + 1 < m_range_ ? from + 1 : 0;
      move(from, to);
      values_[i] = to;
      if (to != 0) return;
    }
  }

  std::uint64_t square_sum() const { return square_sum_; }
  const std::vector<std::uint32_t>& profile() const { return profile_; }

 private:
  void move(std::uint32_t from, std::uint32_t to) {
    std::uint32_t& s_from = sums_[from];
    --profile_[s_from];
    square_sum_ -= 2ULL * s_from - 1;
    --s_from;
    ++profile_[s_from];

    std::uint32_t& s_to = sums_[to];
    --profile_[s_to];
    square_sum_ += 2ULL * s_to + 1;
    ++s_to;
    ++profile_[s_to];
  }

  std::uint32_t m_range_;
  std::vector<std::uint32_t> values_;
  std::vector<std::uint32_t> sums_;
  std::vector<std::uint32_t> profile_;
  std::uint64_t square_sum_ = 0;
};

std::uint64_t chunk_count(std::uint64_t total) {
  return std::max<std::uint64_t>(1, (total + kRanksPerChunk - 1) / kRanksPerChunk);
}

std::uint64_t chunk_begin(std::uint64_t total, std::uint64_t chunks, std::uint64_t c) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(total) * c / chunks);
}

}  // namespace

std::vector<double> outcome_probabilities(const FunctionSpec& f) {
  const std::uint32_t m_range = f.m_range();
  const std::uint32_t n_domain = f.n_domain();
  std::vector<Complex> roots_m(m_range);
  std::vector<Complex> roots_n(n_domain);
  for (std::uint32_t t = 0; t < m_range; ++t) roots_m[t] = detail::unit_phase(t, m_range);
  for (std::uint32_t t = 0; t < n_domain; ++t) roots_n[t] = detail::unit_phase(t, n_domain);
  const double scale = std::sqrt(static_cast<double>(m_range)) * n_domain;
  const auto values = f.values();

  std::vector<double> probabilities(static_cast<std::size_t>(m_range) * n_domain);
  const std::uint64_t work = static_cast<std::uint64_t>(m_range) * n_domain * n_domain;
  const auto rows = static_cast<std::int64_t>(m_range);

#pragma omp parallel for schedule(static) if (work >= kGridParallelThreshold)
  for (std::int64_t a = 0; a < rows; ++a) {
    const auto alpha = static_cast<std::uint64_t>(a);
    for (std::uint32_t beta = 0; beta < n_domain; ++beta) {
      Complex sum = 0.0;
      for (std::uint32_t n = 0; n < n_domain; ++n) {
        sum += std::conj(roots_m[(alpha * values[n]) % m_range] *
                         roots_n[(static_cast<std::uint64_t>(beta) * n) % n_domain]);
      }
      probabilities[alpha * n_domain + beta] = std::norm(sum / scale);
    }
  }
  return probabilities;
}

std::vector<std::uint64_t> square_sum_histogram(std::uint32_t n_domain, std::uint32_t m_range,
                                                std::uint64_t cap) {
  if (n_domain == 0 || m_range == 0) throw InvalidArgument("N and M must be positive");
  const std::uint64_t total = checked_function_count(n_domain, m_range, cap);
  const std::uint64_t chunks = chunk_count(total);
  const std::size_t bins = static_cast<std::size_t>(n_domain) * n_domain + 1;
  std::vector<std::uint64_t> histogram(bins, 0);

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
      const std::uint64_t begin = chunk_begin(total, chunks, c);
      const std::uint64_t end = chunk_begin(total, chunks, c + 1);
      Odometer odometer(begin, n_domain, m_range);
      for (std::uint64_t r = begin; r < end; ++r) {
        ++local[odometer.square_sum()];
        if (r + 1 < end) odometer.advance();
      }
    }
#pragma omp critical
    for (std::size_t s = 0; s < bins; ++s) histogram[s] += local[s];
  }
  return histogram;
}

ProfileCensus profile_census(std::uint32_t n_domain, std::uint32_t m_range, std::uint64_t cap) {
  if (n_domain == 0 || m_range == 0) throw InvalidArgument("N and M must be positive");
  const std::uint64_t total = checked_function_count(n_domain, m_range, cap);
  const std::uint64_t chunks = chunk_count(total);
  std::vector<std::map<std::vector<std::uint32_t>, CensusEntry>> partial(chunks);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t begin = chunk_begin(total, chunks, c);
    const std::uint64_t end = chunk_begin(total, chunks, c + 1);
    auto& local = partial[c];
    Odometer odometer(begin, n_domain, m_range);
    for (std::uint64_t r = begin; r < end; ++r) {
      auto& entry = local[odometer.profile()];
      ++entry.functions;
      entry.min_square_sum = std::min(entry.min_square_sum, odometer.square_sum());
      entry.max_square_sum = std::max(entry.max_square_sum, odometer.square_sum());
      if (r + 1 < end) odometer.advance();
    }
  }

  ProfileCensus census;
  for (const auto& local : partial) {
    for (const auto& [counts, e] : local) {
      auto& entry = census[RowProfile{counts}];
      entry.functions += e.functions;
      entry.min_square_sum = std::min(entry.min_square_sum, e.min_square_sum);
      entry.max_square_sum = std::max(entry.max_square_sum, e.max_square_sum);
    }
  }
  return census;
}

double orthonormality_defect(std::uint32_t m_range, std::uint32_t n_domain) {
  const auto size = static_cast<std::int64_t>(m_range) * n_domain;
  std::vector<ComplexMatrix> basis(static_cast<std::size_t>(size), ComplexMatrix(m_range, n_domain));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < size; ++i) {
    basis[i] = ftm_matrix(static_cast<std::uint32_t>(i / n_domain),
                          static_cast<std::uint32_t>(i % n_domain), m_range, n_domain);
  }
  double defect = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : defect)
  for (std::int64_t a = 0; a < size; ++a) {
    for (std::int64_t b = 0; b < size; ++b) {
      const Complex expected = a == b ? 1.0 : 0.0;
      defect = std::max(defect, std::abs(scalar_product(basis[a], basis[b]) - expected));
    }
  }
  return defect;
}

PosteriorEstimate simulate_trials(const ExperimentConfig& config) {
  validate(config);
  std::vector<std::optional<OutcomeSampler>> cache;
  const auto count = function_count(config.n_domain, config.m_range);
  if (config.m_range > 1 && count && *count <= kSamplerCacheLimit) {
    cache.resize(*count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t rank = 0; rank < static_cast<std::int64_t>(*count); ++rank) {
      cache[rank].emplace(outcome_distribution_serial(
          function_at(static_cast<std::uint64_t>(rank), config.n_domain, config.m_range)));
    }
  }
  auto sampler_for = [&](const FunctionSpec& f) -> const OutcomeSampler* {
    if (cache.empty()) return nullptr;
    return &*cache[function_rank(f)];
  };

  detail::TrialTally tally;
#pragma omp parallel
  {
    detail::TrialTally local;
#pragma omp for schedule(static)
    for (std::int64_t trial = 0; trial < static_cast<std::int64_t>(config.trials); ++trial) {
      local += detail::run_trial(config, static_cast<std::uint64_t>(trial), sampler_for);
    }
#pragma omp critical
    tally += local;
  }
  auto estimate = detail::to_estimate(config, tally);
  finalize(estimate);
  return estimate;
}

}  // namespace gdeutsch::kernels::omp
