#include "gdeutsch/report.hpp"

#include <ostream>
#include <string>

#include "json.hpp"

#include "gdeutsch/errors.hpp"

namespace gdeutsch {

using nlohmann::ordered_json;

namespace {

std::string fmt(double v, int precision) { return format_significant(v, precision); }

/// The double nearest to v's printed form, so JSON carries the same digits.
double rounded(double v, int precision) { return std::stod(fmt(v, precision)); }

ordered_json exact_json(const Rational& r, int precision) {
  return ordered_json{{"value", rounded(to_double(r), precision)},
                      {"numerator", to_string(boost::multiprecision::numerator(r))},
                      {"denominator", to_string(boost::multiprecision::denominator(r))}};
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

}  // namespace

void validate(const OutputSpec& spec) {
  if (spec.precision < kMinPrecision || spec.precision > kMaxPrecision) {
    throw InvalidArgument("precision must be between " + std::to_string(kMinPrecision) + " and " +
                          std::to_string(kMaxPrecision));
  }
}

void write_distribution(std::ostream& out, const FunctionSpec& f, const OutcomeDistribution& dist,
                        const OutputSpec& spec) {
  validate(spec);
  const int p = spec.precision;
  if (spec.format == Format::Csv) {
    out << "alpha,beta,probability,class\n";
    for (std::uint32_t a = 0; a < dist.m_range; ++a) {
      for (std::uint32_t b = 0; b < dist.n_domain; ++b) {
        out << a << ',' << b << ',' << fmt(dist.probability(a, b), p) << ','
            << to_string(classify_outcome({a, b}, dist.m_range, dist.n_domain)) << '\n';
      }
    }
    return;
  }
  ordered_json outcomes = ordered_json::array();
  for (std::uint32_t a = 0; a < dist.m_range; ++a) {
    for (std::uint32_t b = 0; b < dist.n_domain; ++b) {
      outcomes.push_back({{"alpha", a},
                          {"beta", b},
                          {"probability", rounded(dist.probability(a, b), p)},
                          {"class", to_string(classify_outcome({a, b}, dist.m_range, dist.n_domain))}});
    }
  }
  ordered_json totals = ordered_json::object();
  for (auto c : kOutcomeClasses) totals[std::string(to_string(c))] = rounded(dist.class_total(c), p);
  emit(out, ordered_json{{"n_domain", dist.n_domain},
                         {"m_range", dist.m_range},
                         {"function", std::vector<std::uint32_t>(f.values().begin(), f.values().end())},
                         {"outcomes", std::move(outcomes)},
                         {"class_totals", std::move(totals)}});
}

void write_posterior_table(std::ostream& out, std::uint32_t n_domain, std::uint32_t m_range,
                           const std::vector<PosteriorRow>& rows, const OutputSpec& spec) {
  validate(spec);
  const int p = spec.precision;
  if (spec.format == Format::Csv) {
    out << "k,quantum,classical\n";
    for (const auto& row : rows) {
      out << row.k << ',';
      if (row.quantum) out << fmt(to_double(*row.quantum), p);
      out << ',';
      if (row.classical) out << fmt(to_double(*row.classical), p);
      out << '\n';
    }
    return;
  }
  ordered_json table = ordered_json::array();
  for (const auto& row : rows) {
    table.push_back({{"k", row.k},
                     {"quantum", row.quantum ? exact_json(*row.quantum, p) : ordered_json()},
                     {"classical", row.classical ? exact_json(*row.classical, p) : ordered_json()}});
  }
  emit(out, ordered_json{{"n_domain", n_domain}, {"m_range", m_range}, {"rows", std::move(table)}});
}

std::string curve_metadata_json(const CurveMetadata& meta, int precision) {
  return ordered_json{{"samples", meta.samples},
                      {"crossing_eta", rounded(meta.crossing_eta, precision)},
                      {"crossing_tolerance", meta.crossing_tolerance}}
      .dump();
}

void write_worst_case(std::ostream& out, const std::vector<WorstCaseCurvePoint>& curve,
                      const CurveMetadata& meta, const OutputSpec& spec) {
  validate(spec);
  const int p = spec.precision;
  if (spec.format == Format::Csv) {
    out << "eta,quantum_eps,classical_eps\n";
    for (const auto& point : curve) {
      out << fmt(point.eta, p) << ',' << fmt(point.quantum_eps, p) << ','
          << fmt(point.classical_eps, p) << '\n';
    }
    return;
  }
  ordered_json rows = ordered_json::array();
  for (const auto& point : curve) {
    rows.push_back({{"eta", rounded(point.eta, p)},
                    {"quantum_eps", rounded(point.quantum_eps, p)},
                    {"classical_eps", rounded(point.classical_eps, p)}});
  }
  emit(out, ordered_json{{"metadata", ordered_json::parse(curve_metadata_json(meta, p))},
                         {"rows", std::move(rows)}});
}

void write_profiles(std::ostream& out, std::uint32_t n_domain, std::uint32_t m_range,
                    const std::vector<ProfileMultiplicity>& profiles, const OutputSpec& spec) {
  validate(spec);
  if (spec.format == Format::Csv) {
    for (std::uint32_t l = 0; l <= n_domain; ++l) out << 'j' << l << ',';
    out << "count\n";
    for (const auto& pm : profiles) {
      for (auto j : pm.profile.counts) out << j << ',';
      out << to_string(pm.count) << '\n';
    }
    return;
  }
  ordered_json rows = ordered_json::array();
  for (const auto& pm : profiles) {
    rows.push_back({{"profile", pm.profile.counts}, {"count", to_string(pm.count)}});
  }
  emit(out, ordered_json{{"n_domain", n_domain}, {"m_range", m_range}, {"profiles", std::move(rows)}});
}

void write_experiment(std::ostream& out, const ExperimentReport& report, const OutputSpec& spec) {
  validate(spec);
  const int p = spec.precision;
  const auto& c = report.config;
  const auto& e = report.estimate;
  const double exact = to_double(report.exact_posterior);
  if (spec.format == Format::Csv) {
    out << "n,m,k,trials,seed,conditioning_events,constant_and_conditioned,"
           "not_constant_verdicts,total_outcomes,fail_outcomes,error_outcomes,estimate,std_error,"
           "exact_posterior,agreement\n";
    out << c.n_domain << ',' << c.m_range << ',' << c.k_target << ',' << c.trials << ',' << c.seed
        << ',' << e.conditioning_events << ',' << e.constant_and_conditioned << ','
        << e.not_constant_verdicts << ',' << e.total_outcomes << ',' << e.fail_outcomes << ','
        << e.error_outcomes << ',' << (e.estimate ? fmt(*e.estimate, p) : std::string()) << ','
        << fmt(e.std_error, p) << ',' << fmt(exact, p) << ','
        << (report.agreement ? "true" : "false") << '\n';
    return;
  }
  emit(out,
       ordered_json{
           {"config",
            {{"n_domain", c.n_domain},
             {"m_range", c.m_range},
             {"k", c.k_target},
             {"trials", c.trials},
             {"seed", c.seed}}},
           {"counts",
            {{"conditioning_events", e.conditioning_events},
             {"constant_and_conditioned", e.constant_and_conditioned},
             {"not_constant_verdicts", e.not_constant_verdicts},
             {"total_outcomes", e.total_outcomes},
             {"fail_outcomes", e.fail_outcomes},
             {"error_outcomes", e.error_outcomes}}},
           {"estimate", e.estimate ? ordered_json(rounded(*e.estimate, p)) : ordered_json()},
           {"std_error", rounded(e.std_error, p)},
           {"exact_posterior", exact_json(report.exact_posterior, p)},
           {"sigmas", report.sigmas},
           {"agreement", report.agreement}});
}

}  // namespace gdeutsch
