#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gdeutsch/function_space.hpp"
#include "gdeutsch/rational.hpp"

namespace gdeutsch {

/// Posterior Pr(const | k) for N-point domain, M-value range, conditioned on
/// k constant-indicating outcomes (quantum) or k constant samples (classical).
struct PosteriorQuery {
  std::uint32_t n_domain = 1;
  std::uint32_t m_range = 1;
  std::uint32_t k_runs = 0;
};

/// Pr(const and k) = M^(1-N) (1 - 1/M)^k.
Rational joint_constant(const PosteriorQuery& q);

/// Single-run constant-indication likelihood shared by all functions with
/// this profile: sum_l j_l l^2 / N^2 - 1/M.
Rational profile_likelihood(const RowProfile& profile, std::uint32_t m_range);

/// Per-profile terms M^-N L^k C of the evidence, in canonical profile order.
std::vector<Rational> evidence_terms(const PosteriorQuery& q);

/// Pr(k), summed over row profiles. Exactly 1 for k = 0.
Rational quantum_evidence(const PosteriorQuery& q);

/// joint_constant / quantum_evidence. Throws DegenerateResult when the
/// evidence is zero (M = 1 and k >= 1: no outcome can indicate constancy).
Rational quantum_posterior(const PosteriorQuery& q);

/// M^(k-N) for k >= 1; the prior M^(1-N) at k = 0. Throws InvalidArgument
/// when k > N.
Rational classical_posterior(const PosteriorQuery& q);

enum class Algorithm { Quantum, Classical, Both };

struct PosteriorRow {
  std::uint32_t k = 0;
  std::optional<Rational> quantum;
  std::optional<Rational> classical;
};

/// Rows for k = 1..k_max. The classical column requires k_max <= N; the
/// quantum column alone may go beyond N.
std::vector<PosteriorRow> posterior_table(std::uint32_t n_domain, std::uint32_t m_range,
                                          std::uint32_t k_max, Algorithm algorithm = Algorithm::Both);

}  // namespace gdeutsch
