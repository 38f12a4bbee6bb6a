#include "selfcheck.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gdeutsch/asymptotics.hpp"
#include "gdeutsch/combinatorics.hpp"
#include "gdeutsch/ftm.hpp"
#include "gdeutsch/inference.hpp"
#include "gdeutsch/kernels.hpp"
#include "gdeutsch/montecarlo.hpp"

namespace gdeutsch::cli {

namespace {

struct Limits {
  std::uint32_t basis_side;
  std::uint32_t random_functions;
  std::uint32_t total_side;
  std::uint64_t sweep_functions;
  std::uint32_t permutation_side;
  std::uint64_t mc_trials;
};

constexpr Limits kFast{6, 100, 12, 10'000, 16, 100'000};
constexpr Limits kFull{12, 1000, 24, 1'000'000, 32, 1'000'000};
constexpr std::uint32_t kSweepSide = 24;

/// (N, M) pairs with N, M <= kSweepSide and M^N <= limit.
std::vector<std::pair<std::uint32_t, std::uint32_t>> sweep_pairs(std::uint64_t limit) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t n = 1; n <= kSweepSide; ++n) {
    for (std::uint32_t m = 1; m <= kSweepSide; ++m) {
      const auto count = function_count(n, m);
      if (count && *count <= limit) pairs.emplace_back(n, m);
    }
  }
  return pairs;
}

/// Partitions of n into parts no larger than k (equivalently, at most k parts).
std::uint64_t partition_count(std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (std::uint32_t part = 1; part <= k; ++part) {
    for (std::uint32_t total = part; total <= n; ++total) ways[total] += ways[total - part];
  }
  return ways[n];
}

using Suite = std::function<std::string()>;  // empty string on success

std::string check_basis(const Limits& lim) {
  for (std::uint32_t m = 1; m <= lim.basis_side; ++m) {
    for (std::uint32_t n = 1; n <= lim.basis_side; ++n) {
      const double defect = ftm_orthonormality_defect(m, n);
      if (defect > kProbabilityTolerance) {
        return "M=" + std::to_string(m) + " N=" + std::to_string(n) +
               " defect=" + std::to_string(defect);
      }
    }
  }
  return {};
}

std::string check_distributions(const Limits& lim) {
  auto rng = substream(20240601, 0);
  std::uniform_int_distribution<std::uint32_t> side(1, 12);
  for (std::uint32_t i = 0; i < lim.random_functions; ++i) {
    const std::uint32_t n = side(rng);
    const std::uint32_t m = side(rng);
    const FunctionSpec f = sample_uniform(n, m, rng);
    const auto dist = outcome_distribution(f);
    const std::string where = " for f=(" + to_literal(f) + "), M=" + std::to_string(m);
    if (std::abs(dist.total() - 1.0) > kProbabilityTolerance) return "normalization" + where;
    if (std::abs(dist.probability(0, 0) - 1.0 / m) > kStructuralZeroTolerance) return "FAIL" + where;
    for (std::uint32_t b = 1; b < n; ++b) {
      if (dist.probability(0, b) > kStructuralZeroTolerance) return "ERROR mass" + where;
    }
    const double exact = to_double(pr_constant_indication(f));
    if (std::abs(dist.class_total(OutcomeClass::ConstantIndication) - exact) > kProbabilityTolerance) {
      return "complex/exact mismatch" + where;
    }
  }
  return {};
}

std::string check_totals(const Limits& lim) {
  for (std::uint32_t n = 1; n <= lim.total_side; ++n) {
    for (std::uint32_t m = 1; m <= lim.total_side; ++m) {
      if (!check_total(n, m)) return "sum C != M^N at N=" + std::to_string(n) + " M=" + std::to_string(m);
      if (enumerate_profiles(n, m).size() != partition_count(n, m)) {
        return "profile count at N=" + std::to_string(n) + " M=" + std::to_string(m);
      }
    }
  }
  return {};
}

std::string check_census(const Limits& lim, std::uint64_t cap) {
  for (const auto& [n, m] : sweep_pairs(std::min(lim.sweep_functions, cap))) {
    const auto census = kernels::omp::profile_census(n, m, cap);
    const auto profiles = enumerate_profiles(n, m);
    const std::string where = " at N=" + std::to_string(n) + " M=" + std::to_string(m);
    if (census.size() != profiles.size()) return "profile set" + where;
    for (const auto& profile : profiles) {
      const auto it = census.find(profile);
      if (it == census.end()) return "missing profile" + where;
      if (BigInt(it->second.functions) != multiplicity(profile, n, m)) return "multiplicity" + where;
      const auto expected = profile_square_sum(profile);
      if (it->second.min_square_sum != expected || it->second.max_square_sum != expected) {
        return "grouped likelihood" + where;
      }
    }
  }
  return {};
}

std::string check_evidence(const Limits& lim, std::uint64_t cap) {
  for (const auto& [n, m] : sweep_pairs(std::min(lim.sweep_functions, cap))) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      if (quantum_evidence({n, m, k}) != brute_force_evidence(n, m, k, cap)) {
        return "evidence at N=" + std::to_string(n) + " M=" + std::to_string(m) +
               " k=" + std::to_string(k);
      }
    }
  }
  return {};
}

std::string check_extremes(const Limits& lim) {
  for (std::uint32_t n = 2; n <= 64; ++n) {
    if (pr_constant_subspace(worst_case_function(n, 2)) != worst_case_pr(n)) {
      return "worst case at N=" + std::to_string(n);
    }
  }
  const double crossing = worst_case_crossing();
  if (!(crossing > 0.79 && crossing < 0.80)) return "crossing " + std::to_string(crossing);
  for (std::uint32_t n = 2; n <= lim.permutation_side; ++n) {
    const auto stats = best_case_stats(n);
    if (stats.constant_indication_probability != 0 || stats.fail_probability != Rational(BigInt(1), BigInt(n))) {
      return "permutation at N=" + std::to_string(n);
    }
  }
  return {};
}

std::string check_montecarlo(const Limits& lim) {
  const ExperimentConfig config{3, 2, 1, lim.mc_trials, 42};
  const auto estimate = run_experiment(config);
  if (!agrees_with(estimate, 0.75, 4.0)) return "estimate disagrees with 3/4";
  if (estimate.error_outcomes != 0) return "ERROR outcomes sampled";
  return {};
}

}  // namespace

bool run_selfcheck(CheckLevel level, std::uint64_t cap, std::ostream& out) {
  const Limits& lim = level == CheckLevel::Full ? kFull : kFast;
  const std::vector<std::pair<std::string, Suite>> suites = {
      {"ftm-orthonormality", [&] { return check_basis(lim); }},
      {"distribution-invariants", [&] { return check_distributions(lim); }},
      {"multiplicity-totals", [&] { return check_totals(lim); }},
      {"profile-census", [&] { return check_census(lim, cap); }},
      {"evidence-oracle", [&] { return check_evidence(lim, cap); }},
      {"worst-and-best-case", [&] { return check_extremes(lim); }},
      {"montecarlo-agreement", [&] { return check_montecarlo(lim); }},
  };
  bool ok = true;
  for (const auto& [name, suite] : suites) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = suite();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::ostringstream line;
    line.precision(3);
    line << (failure.empty() ? "PASS " : "FAIL ") << name << " (" << std::fixed << elapsed.count()
         << " s)";
    if (!failure.empty()) line << ": " << failure;
    out << line.str() << '\n';
    ok = ok && failure.empty();
  }
  out << (ok ? "selfcheck: all suites passed" : "selfcheck: FAILED") << '\n';
  return ok;
}

}  // namespace gdeutsch::cli
