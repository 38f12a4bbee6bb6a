// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gdeutsch/asymptotics.hpp"
#include "gdeutsch/combinatorics.hpp"
#include "gdeutsch/ftm.hpp"
#include "gdeutsch/inference.hpp"
#include "gdeutsch/kernels.hpp"
#include "gdeutsch/montecarlo.hpp"
#include "gdeutsch/report.hpp"
#include "oracles.hpp"

using namespace gdeutsch;

namespace {

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

std::string at(std::uint32_t n, std::uint32_t m) {
  return " at N=" + std::to_string(n) + " M=" + std::to_string(m);
}

// (N, M) with N, M <= 24 and M^N <= 10^6.
std::vector<std::pair<std::uint32_t, std::uint32_t>> sweep_pairs() {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t n = 1; n <= 24; ++n) {
    for (std::uint32_t m = 1; m <= 24; ++m) {
      const auto count = function_count(n, m);
      if (count && *count <= 1'000'000) pairs.emplace_back(n, m);
    }
  }
  return pairs;
}

using Check = std::function<std::string()>;  // empty on success

std::string deutsch_recovery() {
  const FunctionSpec constants[] = {FunctionSpec(2, {0, 0}), FunctionSpec(2, {1, 1})};
  const FunctionSpec balanced[] = {FunctionSpec(2, {0, 1}), FunctionSpec(2, {1, 0})};
  auto near = [](double a, double b) { return std::abs(a - b) <= kProbabilityTolerance; };
  for (const auto& f : constants) {
    const auto d = outcome_distribution(f);
    if (!near(d.probability(1, 0), 0.5) || !near(d.probability(0, 0), 0.5)) return "constant " + to_literal(f);
    if (pr_constant_indication(f) != frac(1, 2)) return "exact SAME for " + to_literal(f);
  }
  for (const auto& f : balanced) {
    const auto d = outcome_distribution(f);
    if (!near(d.probability(1, 1), 0.5) || !near(d.probability(0, 0), 0.5)) return "balanced " + to_literal(f);
    if (pr_constant_indication(f) != 0) return "exact SAME for " + to_literal(f);
  }
  if (quantum_posterior({2, 2, 1}) != 1) return "posterior(2,2,1) != 1";
  return {};
}

std::string fail_universality() {
  auto rng = substream(1729, 0);
  std::uniform_int_distribution<std::uint32_t> side(1, 12);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t n = side(rng), m = side(rng);
    const auto f = sample_uniform(n, m, rng);
    if (std::abs(outcome_distribution(f).class_total(OutcomeClass::Fail) - 1.0 / m) > kStructuralZeroTolerance) {
      return "f=(" + to_literal(f) + ")" + at(n, m);
    }
  }
  return {};
}

std::string basis_validity() {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    for (std::uint32_t m = 1; m <= 8; ++m) {
      if (ftm_orthonormality_defect(m, n) > kProbabilityTolerance) return "orthonormality" + at(n, m);
      // Parseval on every function of the smaller grids, a random sample otherwise.
      auto rng = substream(n * 100 + m, 0);
      for (int i = 0; i < 64; ++i) {
        const auto f = sample_uniform(n, m, rng);
        if (std::abs(outcome_distribution(f).total() - 1.0) > kProbabilityTolerance) {
          return "completeness for f=(" + to_literal(f) + ")" + at(n, m);
        }
      }
    }
  }
  return {};
}

std::string grouped_likelihood() {
  for (const auto& [n, m] : sweep_pairs()) {
    const auto census = kernels::omp::profile_census(n, m, kDefaultEnumerationCap);
    for (const auto& [profile, entry] : census) {
      // Pr(C'|f) depends on f only through its square sum, so one value per
      // profile means the census range collapses to the profile's own sum.
      if (entry.min_square_sum != profile_square_sum(profile) || entry.max_square_sum != entry.min_square_sum) {
        return "square sums" + at(n, m);
      }
      if (profile_likelihood(profile, m) != constant_indication_from_square_sum(entry.min_square_sum, n, m)) {
        return "likelihood" + at(n, m);
      }
    }
  }
  // Spot-check the square-sum shortcut against the per-row exact path.
  auto rng = substream(4, 0);
  for (int i = 0; i < 500; ++i) {
    const auto f = sample_uniform(1 + i % 9, 1 + i % 7, rng);
    if (profile_likelihood(row_profile(f), f.m_range()) != oracle::per_row_constant_indication(f)) {
      return "per-row likelihood for f=(" + to_literal(f) + ")";
    }
  }
  for (std::uint32_t n = 2; n <= 32; ++n) {
    const auto stats = best_case_stats(n);
    if (stats.fail_probability != frac(1, n) || stats.constant_indication_probability != 0) {
      return "permutation" + at(n, n);
    }
  }
  return {};
}

std::string combinatorial_completeness() {
  for (std::uint32_t n = 1; n <= 24; ++n) {
    for (std::uint32_t m = 1; m <= 24; ++m) {
      if (!check_total(n, m)) return "sum C" + at(n, m);
      if (enumerate_profiles(n, m).size() != oracle::partitions_at_most(n, m)) return "profile count" + at(n, m);
    }
  }
  return {};
}

std::string posterior_oracle() {
  for (const auto& [n, m] : sweep_pairs()) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      if (quantum_evidence({n, m, k}) != brute_force_evidence(n, m, k)) {
        return "evidence" + at(n, m) + " k=" + std::to_string(k);
      }
    }
  }
  if (quantum_posterior({3, 2, 1}) != frac(3, 4)) return "quantum(3,2,1)";
  if (classical_posterior({3, 2, 1}) != frac(1, 4)) return "classical(3,2,1)";
  // The 8-function enumeration, done per function.
  const auto bayes = oracle::enumerate_bayes(3, 2, 1);
  if (bayes.posterior != frac(3, 4) || bayes.evidence != frac(1, 6)) return "enumeration(3,2,1)";
  return {};
}

std::string classical_formula() {
  for (std::uint32_t n = 1; n <= 24; ++n) {
    for (std::uint32_t m = 1; m <= 24; ++m) {
      if (classical_posterior({n, m, 0}) != quantum_posterior({n, m, 0})) return "prior" + at(n, m);
      for (std::uint32_t k = 1; k <= n; ++k) {
        const Rational expected(BigInt(1), big_pow(m, n - k));
        if (classical_posterior({n, m, k}) != expected) return "M^(k-N)" + at(n, m);
      }
      if (classical_posterior({n, m, n}) != 1) return "k=N" + at(n, m);
    }
  }
  return {};
}

std::string worst_case() {
  for (std::uint32_t n = 2; n <= 64; ++n) {
    const BigInt nn = n;
    const Rational expected = Rational(1) - Rational(BigInt(2), nn) + Rational(BigInt(2), nn * nn);
    for (std::uint32_t m : {2u, 5u}) {
      if (pr_constant_subspace(worst_case_function(n, m)) != expected) return "Pr_E" + at(n, m);
    }
  }
  const auto curve = figure1_curve(11);
  for (int i = 1; i <= 7; ++i) {
    if (!(curve[i].quantum_eps < curve[i].classical_eps)) return "quantum not below classical at eta=0." + std::to_string(i);
  }
  if (!(curve[9].quantum_eps > curve[9].classical_eps)) return "no reversal by eta=0.9";
  const double crossing = worst_case_crossing();
  if (!(crossing > 0.79 && crossing < 0.80)) return "crossing " + format_significant(crossing, 12);
  return {};
}

std::string figure_presets() {
  for (const auto& [n, m] : {std::pair{8u, 2u}, {16u, 2u}, {16u, 8u}, {24u, 24u}}) {
    for (std::uint32_t k = 1; k <= 2; ++k) {
      if (!(quantum_posterior({n, m, k}) > classical_posterior({n, m, k}))) {
        return "quantum <= classical" + at(n, m) + " k=" + std::to_string(k);
      }
    }
  }
  return {};
}

std::string montecarlo_consistency() {
  const ExperimentConfig config{3, 2, 1, 1'000'000, 42};
  const auto e = run_experiment(config);
  if (!agrees_with(e, 0.75, 4.0)) return "estimate outside 4 sigma of 3/4";
  const double n = static_cast<double>(e.total_outcomes);
  const double fail = e.fail_outcomes / n;
  if (std::abs(fail - 0.5) > 3 * std::sqrt(0.25 / n)) return "FAIL frequency " + format_significant(fail, 6);
  std::ostringstream first, second;
  ExperimentReport report{config, e, frac(3, 4), 4.0, true};
  write_experiment(first, report, {Format::Json, "-", 12});
  report.estimate = run_experiment(config);
  write_experiment(second, report, {Format::Json, "-", 12});
  if (first.str() != second.str()) return "rerun not byte-identical";
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria = {
      {"1 Deutsch recovery", deutsch_recovery},
      {"2 FAIL universality", fail_universality},
      {"3 FTM basis validity", basis_validity},
      {"4 grouped-likelihood correction", grouped_likelihood},
      {"5 combinatorial completeness", combinatorial_completeness},
      {"6 posterior oracle equivalence", posterior_oracle},
      {"7 classical formula", classical_formula},
      {"8 worst case", worst_case},
      {"9 figure presets", figure_presets},
      {"10 Monte-Carlo consistency", montecarlo_consistency},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::printf("%s %s (%.3f s)%s%s\n", failure.empty() ? "PASS" : "FAIL", name.c_str(), elapsed.count(),
                failure.empty() ? "" : ": ", failure.c_str());
    failures += failure.empty() ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
