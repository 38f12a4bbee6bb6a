#pragma once

// Plot-ready CSV/JSON renderings of every result type. Numbers are printed
// with a fixed number of significant digits; exact rationals additionally
// carry numerator/denominator strings in JSON.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gdeutsch/asymptotics.hpp"
#include "gdeutsch/combinatorics.hpp"
#include "gdeutsch/ftm.hpp"
#include "gdeutsch/inference.hpp"
#include "gdeutsch/montecarlo.hpp"

namespace gdeutsch {

enum class Format { Csv, Json };

struct OutputSpec {
  Format format = Format::Csv;
  std::string destination = "-";  ///< "-" is standard output
  int precision = 12;
};

inline constexpr int kMinPrecision = 3;
inline constexpr int kMaxPrecision = 17;

/// Throws InvalidArgument if precision is outside [3, 17].
void validate(const OutputSpec& spec);

void write_distribution(std::ostream& out, const FunctionSpec& f, const OutcomeDistribution& dist,
                        const OutputSpec& spec);

void write_posterior_table(std::ostream& out, std::uint32_t n_domain, std::uint32_t m_range,
                           const std::vector<PosteriorRow>& rows, const OutputSpec& spec);

struct CurveMetadata {
  std::uint32_t samples = 0;
  double crossing_eta = 0.0;
  double crossing_tolerance = 0.0;
};

void write_worst_case(std::ostream& out, const std::vector<WorstCaseCurvePoint>& curve,
                      const CurveMetadata& meta, const OutputSpec& spec);
/// Single-line JSON object, written alongside the CSV form.
std::string curve_metadata_json(const CurveMetadata& meta, int precision);

void write_profiles(std::ostream& out, std::uint32_t n_domain, std::uint32_t m_range,
                    const std::vector<ProfileMultiplicity>& profiles, const OutputSpec& spec);

struct ExperimentReport {
  ExperimentConfig config;
  PosteriorEstimate estimate;
  Rational exact_posterior;
  double sigmas = 4.0;
  bool agreement = false;
};

void write_experiment(std::ostream& out, const ExperimentReport& report, const OutputSpec& spec);

}  // namespace gdeutsch
