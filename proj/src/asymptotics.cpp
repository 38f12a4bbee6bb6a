#include "gdeutsch/asymptotics.hpp"

#include <cmath>
#include <numeric>

#include "gdeutsch/errors.hpp"
#include "gdeutsch/ftm.hpp"

namespace gdeutsch {

FunctionSpec worst_case_function(std::uint32_t n_domain, std::uint32_t m_range) {
  if (n_domain < 2 || m_range < 2) {
    throw InvalidArgument("the near-constant worst case needs N >= 2 and M >= 2");
  }
  std::vector<std::uint32_t> values(n_domain, 0);
  values.back() = 1;
  return FunctionSpec(m_range, std::move(values));
}

Rational worst_case_pr(std::uint32_t n_domain) {
  if (n_domain < 2) throw InvalidArgument("worst_case_pr needs N >= 2");
  const BigInt n = n_domain;
  return Rational(1) - Rational(BigInt(2), n) + Rational(BigInt(2), n * n);
}

Rational worst_case_constant_indication(std::uint32_t n_domain, std::uint32_t m_range) {
  if (m_range < 2) throw InvalidArgument("worst_case_constant_indication needs M >= 2");
  return worst_case_pr(n_domain) - Rational(BigInt(1), BigInt(m_range));
}

namespace {

// Exact power checks are cheap up to this exponent; beyond it the log-domain
// estimate is used as is.
constexpr std::uint64_t kExactCheckLimit = 4096;

}  // namespace

std::uint64_t runs_for_error(std::uint32_t n_domain, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidArgument("runs_for_error needs 0 < epsilon < 1");
  }
  const Rational p = worst_case_pr(n_domain);
  const double n = n_domain;
  const double log_p = std::log1p(-2.0 / n + 2.0 / (n * n));
  auto k = static_cast<std::uint64_t>(std::max(1.0, std::ceil(std::log(epsilon) / log_p)));
  if (k > kExactCheckLimit) return k;

  // Correct the floating-point ceiling against the exact bound p^k <= epsilon.
  const Rational eps = from_double(epsilon);
  while (rational_pow(p, k) > eps) ++k;
  while (k > 1 && rational_pow(p, k - 1) <= eps) --k;
  return k;
}

std::vector<WorstCaseCurvePoint> figure1_curve(std::uint32_t count) {
  if (count < 2) throw InvalidArgument("figure1_curve needs at least 2 samples");
  std::vector<WorstCaseCurvePoint> curve;
  curve.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const double eta = static_cast<double>(i) / (count - 1);
    curve.push_back({eta, std::exp(-2.0 * eta), 1.0 - eta});
  }
  return curve;
}

double worst_case_crossing(double tolerance) {
  // exp(-2 eta) - (1 - eta) is negative at 1/2 and positive at 1.
  auto gap = [](double eta) { return std::exp(-2.0 * eta) - (1.0 - eta); };
  double lo = 0.5;
  double hi = 1.0;
  while (hi - lo > tolerance) {
    const double mid = std::midpoint(lo, hi);
    (gap(mid) < 0.0 ? lo : hi) = mid;
  }
  return std::midpoint(lo, hi);
}

BestCaseStats best_case_stats(std::uint32_t n_domain) {
  if (n_domain < 2) throw InvalidArgument("best_case_stats needs N = M >= 2");
  std::vector<std::uint32_t> identity(n_domain);
  std::iota(identity.begin(), identity.end(), 0U);
  const FunctionSpec f(n_domain, std::move(identity));

  BestCaseStats stats;
  stats.fail_probability = Rational(BigInt(1), BigInt(f.m_range()));
  stats.constant_indication_probability = pr_constant_indication(f);
  // ERROR outcomes carry no probability, so the rest is NOT_CONSTANT.
  stats.not_constant_probability =
      Rational(1) - stats.fail_probability - stats.constant_indication_probability;
  return stats;
}

}  // namespace gdeutsch
