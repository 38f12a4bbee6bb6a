#include "gdeutsch/ftm.hpp"

#include <cmath>

#include "detail/phase.hpp"
#include "gdeutsch/errors.hpp"
#include "gdeutsch/kernels.hpp"

namespace gdeutsch {

FunctionMatrix::FunctionMatrix(std::uint32_t m_rows, std::uint32_t n_cols)
    : rows_(m_rows), cols_(n_cols), entries_(static_cast<std::size_t>(m_rows) * n_cols, 0.0) {}

double FunctionMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double e : entries_) sum += e * e;
  return std::sqrt(sum);
}

ComplexMatrix::ComplexMatrix(std::uint32_t m_rows, std::uint32_t n_cols)
    : rows_(m_rows), cols_(n_cols), entries_(static_cast<std::size_t>(m_rows) * n_cols) {}

std::string_view to_string(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::ConstantIndication:
      return "CONSTANT_INDICATION";
    case OutcomeClass::Fail:
      return "FAIL";
    case OutcomeClass::NotConstant:
      return "NOT_CONSTANT";
    case OutcomeClass::Error:
      return "ERROR";
  }
  return "UNKNOWN";
}

double OutcomeDistribution::total() const {
  double sum = 0.0;
  for (double p : probabilities) sum += p;
  return sum;
}

FunctionMatrix final_matrix(const FunctionSpec& f) {
  FunctionMatrix matrix(f.m_range(), f.n_domain());
  const double scale = 1.0 / std::sqrt(static_cast<double>(f.n_domain()));
  for (std::uint32_t n = 0; n < f.n_domain(); ++n) matrix(f[n], n) = scale;
  return matrix;
}

namespace {

void require_index(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

using detail::unit_phase;

}  // namespace

Complex ftm_entry(std::uint32_t alpha, std::uint32_t beta, std::uint32_t m, std::uint32_t n,
                  std::uint32_t m_range, std::uint32_t n_domain) {
  require_index(alpha < m_range && m < m_range && beta < n_domain && n < n_domain,
                "ftm_entry: index out of range");
  const double scale = 1.0 / std::sqrt(static_cast<double>(m_range) * n_domain);
  return scale * unit_phase(static_cast<std::uint64_t>(alpha) * m, m_range) *
         unit_phase(static_cast<std::uint64_t>(beta) * n, n_domain);
}

ComplexMatrix ftm_matrix(std::uint32_t alpha, std::uint32_t beta, std::uint32_t m_range,
                         std::uint32_t n_domain) {
  ComplexMatrix matrix(m_range, n_domain);
  for (std::uint32_t m = 0; m < m_range; ++m) {
    for (std::uint32_t n = 0; n < n_domain; ++n) {
      matrix(m, n) = ftm_entry(alpha, beta, m, n, m_range, n_domain);
    }
  }
  return matrix;
}

Complex scalar_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_index(a.rows() == b.rows() && a.cols() == b.cols(), "scalar_product: shape mismatch");
  Complex sum = 0.0;
  for (std::uint32_t m = 0; m < a.rows(); ++m) {
    for (std::uint32_t n = 0; n < a.cols(); ++n) sum += std::conj(a(m, n)) * b(m, n);
  }
  return sum;
}

Complex scalar_product(const ComplexMatrix& a, const FunctionMatrix& b) {
  require_index(a.rows() == b.rows() && a.cols() == b.cols(), "scalar_product: shape mismatch");
  Complex sum = 0.0;
  for (std::uint32_t m = 0; m < a.rows(); ++m) {
    for (std::uint32_t n = 0; n < a.cols(); ++n) sum += std::conj(a(m, n)) * b(m, n);
  }
  return sum;
}

Complex amplitude(const FunctionSpec& f, FtmOutcome outcome) {
  const std::uint32_t m_range = f.m_range();
  const std::uint32_t n_domain = f.n_domain();
  require_index(outcome.alpha < m_range && outcome.beta < n_domain,
                "amplitude: outcome index out of range");
  Complex sum = 0.0;
  for (std::uint32_t n = 0; n < n_domain; ++n) {
    sum += std::conj(unit_phase(static_cast<std::uint64_t>(outcome.alpha) * f[n], m_range) *
                     unit_phase(static_cast<std::uint64_t>(outcome.beta) * n, n_domain));
  }
  return sum / (std::sqrt(static_cast<double>(m_range)) * n_domain);
}

namespace {

OutcomeDistribution with_class_totals(const FunctionSpec& f, std::vector<double> probabilities) {
  OutcomeDistribution dist;
  dist.m_range = f.m_range();
  dist.n_domain = f.n_domain();
  dist.probabilities = std::move(probabilities);
  for (std::uint32_t alpha = 0; alpha < dist.m_range; ++alpha) {
    for (std::uint32_t beta = 0; beta < dist.n_domain; ++beta) {
      const auto c = classify_outcome({alpha, beta}, dist.m_range, dist.n_domain);
      dist.class_totals[static_cast<std::size_t>(c)] += dist.probability(alpha, beta);
    }
  }
  return dist;
}

}  // namespace

OutcomeDistribution outcome_distribution(const FunctionSpec& f) {
  return with_class_totals(f, kernels::omp::outcome_probabilities(f));
}

OutcomeDistribution outcome_distribution_serial(const FunctionSpec& f) {
  return with_class_totals(f, kernels::serial::outcome_probabilities(f));
}

OutcomeClass classify_outcome(FtmOutcome outcome, std::uint32_t m_range, std::uint32_t n_domain) {
  require_index(outcome.alpha < m_range && outcome.beta < n_domain,
                "classify_outcome: outcome index out of range");
  if (outcome.alpha == 0) return outcome.beta == 0 ? OutcomeClass::Fail : OutcomeClass::Error;
  return outcome.beta == 0 ? OutcomeClass::ConstantIndication : OutcomeClass::NotConstant;
}

Rational pr_k_alpha(const FunctionSpec& f, std::uint32_t alpha) {
  require_index(alpha < f.m_range(), "pr_k_alpha: alpha out of range");
  const auto sums = row_sums(f);
  const std::uint64_t s = sums[alpha];
  const std::uint64_t n = f.n_domain();
  return Rational(BigInt(s * s), BigInt(n * n));
}

Rational pr_constant_subspace(const FunctionSpec& f) {
  const std::uint64_t n = f.n_domain();
  return Rational(BigInt(square_sum(row_sums(f))), BigInt(n * n));
}

Rational constant_indication_from_square_sum(std::uint64_t square_sum, std::uint32_t n_domain,
                                             std::uint32_t m_range) {
  const std::uint64_t n = n_domain;
  return Rational(BigInt(square_sum), BigInt(n * n)) - Rational(BigInt(1), BigInt(m_range));
}

Rational pr_constant_indication(const FunctionSpec& f) {
  return constant_indication_from_square_sum(square_sum(row_sums(f)), f.n_domain(), f.m_range());
}

double ftm_orthonormality_defect(std::uint32_t m_range, std::uint32_t n_domain) {
  return kernels::omp::orthonormality_defect(m_range, n_domain);
}

ComplexMatrix deutsch_flag_matrix(DeutschFlag flag) {
  // Sign pattern of the input-register and output-register factors.
  double input_sign = 1.0;
  double output_sign = 1.0;
  switch (flag) {
    case DeutschFlag::Same:
      output_sign = -1.0;
      break;
    case DeutschFlag::Different:
      input_sign = -1.0;
      output_sign = -1.0;
      break;
    case DeutschFlag::Fail:
      break;
    case DeutschFlag::Error:
      input_sign = -1.0;
      break;
  }
  const double input[2] = {1.0, input_sign};
  const double output[2] = {1.0, output_sign};
  ComplexMatrix matrix(2, 2);
  // |n>|m> maps to the matrix unit at row m, column n.
  for (std::uint32_t n = 0; n < 2; ++n) {
    for (std::uint32_t m = 0; m < 2; ++m) matrix(m, n) = 0.5 * input[n] * output[m];
  }
  return matrix;
}

FtmOutcome deutsch_flag_outcome(DeutschFlag flag) {
  switch (flag) {
    case DeutschFlag::Same:
      return {1, 0};
    case DeutschFlag::Different:
      return {1, 1};
    case DeutschFlag::Fail:
      return {0, 0};
    case DeutschFlag::Error:
      return {0, 1};
  }
  return {0, 0};
}

std::optional<FunctionSpec> find_constancy_ambiguity(std::uint32_t n_domain, std::uint32_t m_range,
                                                     std::uint64_t cap) {
  for (const auto& f : enumerate_all(n_domain, m_range, cap)) {
    if (is_constant(f)) continue;
    if (pr_constant_indication(f) > 0) return f;
  }
  return std::nullopt;
}

}  // namespace gdeutsch
