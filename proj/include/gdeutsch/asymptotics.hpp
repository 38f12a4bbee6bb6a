#pragma once

#include <cstdint>
#include <vector>

#include "gdeutsch/function_space.hpp"
#include "gdeutsch/rational.hpp"

namespace gdeutsch {

/// One sample of the large-N worst-case error curves.
struct WorstCaseCurvePoint {
  double eta = 0.0;            ///< runs per domain point, k/N
  double quantum_eps = 0.0;    ///< exp(-2 eta)
  double classical_eps = 0.0;  ///< 1 - eta
};

/// The near-constant function: 0 everywhere except f(N-1) = 1.
FunctionSpec worst_case_function(std::uint32_t n_domain, std::uint32_t m_range);

/// Pr(K | g) = 1 - 2/N + 2/N^2, independent of M.
Rational worst_case_pr(std::uint32_t n_domain);

/// Pr(C' | g) = worst_case_pr(N) - 1/M, for finite-M studies.
Rational worst_case_constant_indication(std::uint32_t n_domain, std::uint32_t m_range);

/// Smallest k with worst_case_pr(N)^k <= epsilon.
std::uint64_t runs_for_error(std::uint32_t n_domain, double epsilon);

/// `count` points with eta uniform on [0, 1], endpoints included.
std::vector<WorstCaseCurvePoint> figure1_curve(std::uint32_t count);

/// The eta in (0, 1) where exp(-2 eta) = 1 - eta, by bisection.
double worst_case_crossing(double tolerance = 1e-9);

/// Measurement statistics of a permutation (N = M).
struct BestCaseStats {
  Rational fail_probability;
  Rational not_constant_probability;
  Rational constant_indication_probability;
};

/// Computed on the identity permutation through the exact path.
BestCaseStats best_case_stats(std::uint32_t n_domain);

}  // namespace gdeutsch
