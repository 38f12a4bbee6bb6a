#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gdeutsch/function_space.hpp"
#include "gdeutsch/rational.hpp"

namespace gdeutsch {

using Complex = std::complex<double>;

/// Comparison tolerance for probabilities computed on the complex path.
inline constexpr double kProbabilityTolerance = 1e-10;
/// Tolerance for quantities that vanish identically (ERROR amplitudes,
/// FAIL - 1/M).
inline constexpr double kStructuralZeroTolerance = 1e-12;

/// Real M x N register state phi(|f>), entry (m, n) = delta_{m, f(n)} / sqrt(N).
class FunctionMatrix {
 public:
  FunctionMatrix(std::uint32_t m_rows, std::uint32_t n_cols);

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  double operator()(std::uint32_t m, std::uint32_t n) const { return entries_[m * cols_ + n]; }
  double& operator()(std::uint32_t m, std::uint32_t n) { return entries_[m * cols_ + n]; }
  double frobenius_norm() const;

 private:
  std::uint32_t rows_;
  std::uint32_t cols_;
  std::vector<double> entries_;
};

/// Dense complex M x N matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix(std::uint32_t m_rows, std::uint32_t n_cols);

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  Complex operator()(std::uint32_t m, std::uint32_t n) const { return entries_[m * cols_ + n]; }
  Complex& operator()(std::uint32_t m, std::uint32_t n) { return entries_[m * cols_ + n]; }

 private:
  std::uint32_t rows_;
  std::uint32_t cols_;
  std::vector<Complex> entries_;
};

/// Index pair naming the Fourier basis matrix F(alpha, beta).
struct FtmOutcome {
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;

  friend bool operator==(const FtmOutcome&, const FtmOutcome&) = default;
};

enum class OutcomeClass : std::uint8_t { ConstantIndication = 0, Fail = 1, NotConstant = 2, Error = 3 };

inline constexpr std::array<OutcomeClass, 4> kOutcomeClasses = {
    OutcomeClass::ConstantIndication, OutcomeClass::Fail, OutcomeClass::NotConstant,
    OutcomeClass::Error};

std::string_view to_string(OutcomeClass c);

/// Measurement statistics over the M x N Fourier basis for one function.
struct OutcomeDistribution {
  std::uint32_t m_range = 0;
  std::uint32_t n_domain = 0;
  std::vector<double> probabilities;  // alpha-major, beta-minor
  std::array<double, 4> class_totals{};

  double probability(std::uint32_t alpha, std::uint32_t beta) const {
    return probabilities[static_cast<std::size_t>(alpha) * n_domain + beta];
  }
  double class_total(OutcomeClass c) const { return class_totals[static_cast<std::size_t>(c)]; }
  double total() const;
};

FunctionMatrix final_matrix(const FunctionSpec& f);

/// (1/sqrt(MN)) exp(i 2 pi alpha m / M) exp(i 2 pi beta n / N).
Complex ftm_entry(std::uint32_t alpha, std::uint32_t beta, std::uint32_t m, std::uint32_t n,
                  std::uint32_t m_range, std::uint32_t n_domain);

ComplexMatrix ftm_matrix(std::uint32_t alpha, std::uint32_t beta, std::uint32_t m_range,
                         std::uint32_t n_domain);

/// Tr(a^dagger b).
Complex scalar_product(const ComplexMatrix& a, const ComplexMatrix& b);
Complex scalar_product(const ComplexMatrix& a, const FunctionMatrix& b);

/// F(alpha, beta) . F = (1/(sqrt(M) N)) sum_n exp(-i2pi alpha f(n)/M) exp(-i2pi beta n/N),
/// summed with n ascending. Equals 1/sqrt(M) at (0, 0).
Complex amplitude(const FunctionSpec& f, FtmOutcome outcome);

/// Full probability grid plus class totals. Rows are computed in parallel;
/// every entry uses the same n-ascending summation so the result does not
/// depend on thread count.
OutcomeDistribution outcome_distribution(const FunctionSpec& f);
/// Single-threaded reference for outcome_distribution.
OutcomeDistribution outcome_distribution_serial(const FunctionSpec& f);

OutcomeClass classify_outcome(FtmOutcome outcome, std::uint32_t m_range, std::uint32_t n_domain);

/// Pr(K_alpha | f) = (row sum alpha)^2 / N^2.
Rational pr_k_alpha(const FunctionSpec& f, std::uint32_t alpha);

/// Pr(K | f) = sum_alpha s_alpha^2 / N^2 = sum_l j_l l^2 / N^2.
Rational pr_constant_subspace(const FunctionSpec& f);

/// Pr(C' | f) = Pr(K | f) - 1/M.
Rational pr_constant_indication(const FunctionSpec& f);

/// Pr(C' | f) expressed through sum_alpha s_alpha^2, shared by every function
/// with the same row profile.
Rational constant_indication_from_square_sum(std::uint64_t square_sum, std::uint32_t n_domain,
                                             std::uint32_t m_range);

/// Largest |Tr(F_a^dagger F_b) - delta_ab| over all pairs of Fourier basis
/// matrices for (M, N).
double ftm_orthonormality_defect(std::uint32_t m_range, std::uint32_t n_domain);

/// The four measurement flags of the two-point, two-value case.
enum class DeutschFlag : std::uint8_t { Same, Different, Fail, Error };

/// phi of the flag state written as (input ket) x (output ket) with
/// |0> +/- |1> factors and overall 1/2.
ComplexMatrix deutsch_flag_matrix(DeutschFlag flag);
FtmOutcome deutsch_flag_outcome(DeutschFlag flag);

/// A non-constant function with a positive constant-indication probability,
/// i.e. proof that "f is constant" cannot be decided without error for (N, M).
/// nullopt means every non-constant function is orthogonal to C'.
std::optional<FunctionSpec> find_constancy_ambiguity(std::uint32_t n_domain, std::uint32_t m_range,
                                                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace gdeutsch
