#include "gdeutsch/inference.hpp"

#include <algorithm>

#include "gdeutsch/combinatorics.hpp"
#include "gdeutsch/errors.hpp"
#include "gdeutsch/ftm.hpp"

namespace gdeutsch {

namespace {

void validate(const PosteriorQuery& q) {
  if (q.n_domain == 0 || q.m_range == 0) throw InvalidArgument("posterior needs N >= 1 and M >= 1");
}

}  // namespace

Rational joint_constant(const PosteriorQuery& q) {
  validate(q);
  const Rational prior(BigInt(q.m_range), big_pow(q.m_range, q.n_domain));
  const Rational per_run = Rational(1) - Rational(BigInt(1), BigInt(q.m_range));
  return prior * rational_pow(per_run, q.k_runs);
}

Rational profile_likelihood(const RowProfile& profile, std::uint32_t m_range) {
  return constant_indication_from_square_sum(profile_square_sum(profile), profile.n_domain(),
                                             m_range);
}

std::vector<Rational> evidence_terms(const PosteriorQuery& q) {
  validate(q);
  const auto profiles = profile_multiplicities(q.n_domain, q.m_range);
  const Rational prior(BigInt(1), big_pow(q.m_range, q.n_domain));
  std::vector<Rational> terms(profiles.size());
  // Exact arithmetic: the split across threads cannot change any term.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(profiles.size()); ++i) {
    const auto& pm = profiles[i];
    terms[i] = prior * rational_pow(profile_likelihood(pm.profile, q.m_range), q.k_runs) *
               Rational(pm.count);
  }
  return terms;
}

Rational quantum_evidence(const PosteriorQuery& q) {
  validate(q);
  // Zero-likelihood profiles would contribute 0^0 here; the evidence of no
  // observations is 1 by definition.
  if (q.k_runs == 0) return Rational(1);
  Rational sum = 0;
  for (const auto& term : evidence_terms(q)) sum += term;
  return sum;
}

Rational quantum_posterior(const PosteriorQuery& q) {
  const Rational evidence = quantum_evidence(q);
  if (evidence == 0) {
    throw DegenerateResult("Pr(k) is zero for N = " + std::to_string(q.n_domain) + ", M = " +
                           std::to_string(q.m_range) + ", k = " + std::to_string(q.k_runs) +
                           ": no function can produce a constant indication");
  }
  return joint_constant(q) / evidence;
}

Rational classical_posterior(const PosteriorQuery& q) {
  validate(q);
  if (q.k_runs > q.n_domain) {
    throw InvalidArgument("classical sampling of k = " + std::to_string(q.k_runs) +
                          " points exceeds the domain size N = " + std::to_string(q.n_domain));
  }
  // With no samples the posterior is the prior M^(1-N); one sample is
  // always consistent with constancy, so k = 1 gives the same value.
  const std::uint32_t k = std::max<std::uint32_t>(q.k_runs, 1);
  return Rational(BigInt(1), big_pow(q.m_range, q.n_domain - k));
}

std::vector<PosteriorRow> posterior_table(std::uint32_t n_domain, std::uint32_t m_range,
                                          std::uint32_t k_max, Algorithm algorithm) {
  const bool quantum = algorithm != Algorithm::Classical;
  const bool classical = algorithm != Algorithm::Quantum;
  if (classical && k_max > n_domain) {
    throw InvalidArgument("k_max = " + std::to_string(k_max) +
                          " exceeds N = " + std::to_string(n_domain) +
                          " with the classical column requested");
  }
  std::vector<PosteriorRow> rows;
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    const PosteriorQuery q{n_domain, m_range, k};
    PosteriorRow row{k, std::nullopt, std::nullopt};
    if (quantum) row.quantum = quantum_posterior(q);
    if (classical) row.classical = classical_posterior(q);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gdeutsch
