#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gdeutsch/asymptotics.hpp"
#include "gdeutsch/combinatorics.hpp"
#include "gdeutsch/errors.hpp"
#include "gdeutsch/ftm.hpp"
#include "gdeutsch/inference.hpp"
#include "gdeutsch/montecarlo.hpp"
#include "gdeutsch/report.hpp"
#include "selfcheck.hpp"

namespace gdeutsch::cli {

namespace {

constexpr double kAgreementSigmas = 4.0;

struct FigurePreset {
  std::uint32_t n_domain;
  std::uint32_t m_range;
  std::uint32_t k_max;
  const char* caption;
};

// Posterior-versus-k plot presets,
// k running up to N - 1.
const std::map<std::string, FigurePreset>& figure_presets() {
  static const std::map<std::string, FigurePreset> presets = {
      {"fig2", {8, 2, 7, "N=8, M=2, linear scale"}},
      {"fig3", {16, 2, 15, "N=16, M=2, log scale"}},
      {"fig4", {16, 8, 15, "N=16, M=8, log scale"}},
      {"fig5", {24, 24, 23, "N=24, M=24, log scale"}},
  };
  return presets;
}

constexpr std::uint32_t kFigure1Samples = 101;

struct OutputOptions {
  std::string format = "csv";
  std::string destination = "-";
  int precision = 12;

  OutputSpec spec() const {
    OutputSpec s;
    s.format = format == "json" ? Format::Json : Format::Csv;
    s.destination = destination;
    s.precision = precision;
    validate(s);
    return s;
  }
};

void add_output_options(CLI::App* sub, OutputOptions& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", o.destination, "Output file ('-' for standard output)")
      ->capture_default_str();
  sub->add_option("--precision", o.precision, "Significant digits for decimal output")
      ->check(CLI::Range(kMinPrecision, kMaxPrecision))
      ->capture_default_str();
}

/// Calls write(stream) on stdout or on the requested file.
void with_destination(const OutputSpec& spec, std::ostream& out,
                      const std::function<void(std::ostream&)>& write) {
  if (spec.destination == "-") {
    write(out);
    return;
  }
  std::ofstream file(spec.destination);
  if (!file) throw InvalidArgument("cannot open output file '" + spec.destination + "'");
  write(file);
}

/// Expands "--config FILE" into "--key=value" tokens placed right after the
/// subcommand name, so explicit flags (which come later) take precedence.
std::vector<std::string> expand_config(std::vector<std::string> args,
                                       const std::vector<std::string>& subcommands) {
  std::vector<std::string> injected;
  for (std::size_t i = 0; i < args.size();) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
      continue;
    }
    std::ifstream file(path);
    if (!file) throw InvalidArgument("cannot read config file '" + path + "'");
    std::string line;
    while (std::getline(file, line)) {
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw InvalidArgument("config line '" + line + "' is not key=value");
      }
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      injected.push_back("--" + trim(line.substr(0, eq)) + "=" + trim(line.substr(eq + 1)));
    }
  }
  if (injected.empty()) return args;
  const auto sub = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
    return std::find(subcommands.begin(), subcommands.end(), a) != subcommands.end();
  });
  if (sub == args.end()) throw InvalidArgument("--config needs a subcommand");
  args.insert(sub + 1, injected.begin(), injected.end());
  return args;
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "quantum") return Algorithm::Quantum;
  if (name == "classical") return Algorithm::Classical;
  return Algorithm::Both;
}

int cmd_dist(const std::string& literal, std::uint32_t m_range, const OutputOptions& o,
             std::ostream& out) {
  const OutputSpec spec = o.spec();
  const FunctionSpec f = parse_function_literal(literal, m_range);
  const OutcomeDistribution dist = outcome_distribution(f);
  with_destination(spec, out, [&](std::ostream& s) { write_distribution(s, f, dist, spec); });
  return kSuccess;
}

int cmd_posterior(std::uint32_t n_domain, std::uint32_t m_range, std::uint32_t k_max,
                  Algorithm algorithm, const OutputOptions& o, std::ostream& out) {
  const OutputSpec spec = o.spec();
  const auto rows = posterior_table(n_domain, m_range, k_max, algorithm);
  with_destination(spec, out, [&](std::ostream& s) {
    write_posterior_table(s, n_domain, m_range, rows, spec);
  });
  return kSuccess;
}

int cmd_worstcase(std::uint32_t samples, const std::string& meta_path, const OutputOptions& o,
                  std::ostream& out, std::ostream& err) {
  const OutputSpec spec = o.spec();
  constexpr double kCrossingTolerance = 1e-9;
  const CurveMetadata meta{samples, worst_case_crossing(kCrossingTolerance), kCrossingTolerance};
  const auto curve = figure1_curve(samples);
  with_destination(spec, out, [&](std::ostream& s) { write_worst_case(s, curve, meta, spec); });
  const std::string meta_json = curve_metadata_json(meta, spec.precision);
  if (!meta_path.empty()) {
    std::ofstream file(meta_path);
    if (!file) throw InvalidArgument("cannot open metadata file '" + meta_path + "'");
    file << meta_json << '\n';
  } else if (spec.format == Format::Csv) {
    err << meta_json << '\n';
  }
  return kSuccess;
}

int cmd_montecarlo(const ExperimentConfig& config, bool serial, const OutputOptions& o,
                   std::ostream& out, std::ostream& err) {
  const OutputSpec spec = o.spec();
  validate(config);
  ExperimentReport report;
  report.config = config;
  report.sigmas = kAgreementSigmas;
  report.estimate = serial ? run_experiment_serial(config) : run_experiment(config);
  if (report.estimate.conditioning_events == 0) {
    err << "montecarlo: no trial produced " << config.k_target
        << " constant indications; the posterior estimate is undefined\n";
    return kDegenerate;
  }
  report.exact_posterior = quantum_posterior({config.n_domain, config.m_range, config.k_target});
  report.agreement = agrees_with(report.estimate, to_double(report.exact_posterior), report.sigmas);
  with_destination(spec, out, [&](std::ostream& s) { write_experiment(s, report, spec); });
  return kSuccess;
}

int cmd_profiles(std::uint32_t n_domain, std::uint32_t m_range, const OutputOptions& o,
                 std::ostream& out) {
  const OutputSpec spec = o.spec();
  const auto profiles = profile_multiplicities(n_domain, m_range);
  with_destination(spec, out, [&](std::ostream& s) {
    write_profiles(s, n_domain, m_range, profiles, spec);
  });
  return kSuccess;
}

int cmd_oracle(std::uint32_t n_domain, std::uint32_t m_range, std::uint32_t k_max,
               std::uint64_t cap, std::ostream& out) {
  out << "k,profile_sum,brute_force,equal\n";
  bool all_equal = true;
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    const Rational profile_sum = quantum_evidence({n_domain, m_range, k});
    const Rational brute = brute_force_evidence(n_domain, m_range, k, cap);
    const bool equal = profile_sum == brute;
    all_equal = all_equal && equal;
    out << k << ',' << profile_sum << ',' << brute << ',' << (equal ? "true" : "false") << '\n';
  }
  return all_equal ? kSuccess : kCheckFailed;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Deutsch constancy test: FTM measurement statistics, exact Bayesian "
               "posteriors and Monte-Carlo validation.",
               "gdeutsch"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  std::uint64_t cap = kDefaultEnumerationCap;
  app.add_option("--cap", cap, "Enumeration cap on M^N for brute-force sweeps")
      ->capture_default_str();
  // Consumed by expand_config before parsing; declared for --help.
  std::string config_path;
  app.add_option("--config", config_path, "key=value file; explicit flags override it");

  std::uint32_t n_domain = 0;
  std::uint32_t m_range = 0;
  std::uint32_t k = 1;

  OutputOptions dist_out;
  std::string literal;
  auto* dist = app.add_subcommand("dist", "Outcome distribution of one function over the FTM basis");
  dist->add_option("function", literal, "Comma-separated values f(0),...,f(N-1)")->required();
  dist->add_option("--m", m_range, "Range size M")->required()->check(CLI::PositiveNumber);
  add_output_options(dist, dist_out);

  OutputOptions post_out;
  std::string algorithm = "both";
  auto* posterior = app.add_subcommand("posterior", "Exact Pr(const|k) for k = 1..kmax");
  posterior->add_option("--n", n_domain, "Domain size N")->required()->check(CLI::PositiveNumber);
  posterior->add_option("--m", m_range, "Range size M")->required()->check(CLI::PositiveNumber);
  posterior->add_option("--kmax,--k", k, "Largest k")->required();
  posterior->add_option("--algorithm", algorithm, "Columns to compute")
      ->check(CLI::IsMember({"quantum", "classical", "both"}))
      ->capture_default_str();
  add_output_options(posterior, post_out);

  OutputOptions worst_out;
  std::uint32_t samples = kFigure1Samples;
  std::string meta_path;
  auto* worstcase = app.add_subcommand("worstcase", "Large-N worst-case error curves");
  worstcase->add_option("--samples", samples, "Number of eta samples on [0, 1]")
      ->check(CLI::Range(2U, 10'000'000U))
      ->capture_default_str();
  worstcase->add_option("--meta", meta_path, "Write crossing-point metadata JSON here");
  add_output_options(worstcase, worst_out);

  OutputOptions mc_out;
  mc_out.format = "json";
  ExperimentConfig config;
  config.trials = 1'000'000;
  config.seed = 42;
  bool serial = false;
  auto* montecarlo = app.add_subcommand("montecarlo", "Simulate the k-run conditioning protocol");
  montecarlo->add_option("--n", config.n_domain, "Domain size N")->required()->check(CLI::PositiveNumber);
  montecarlo->add_option("--m", config.m_range, "Range size M")->required()->check(CLI::PositiveNumber);
  montecarlo->add_option("--k", config.k_target, "Constant indications to condition on")
      ->required()
      ->check(CLI::PositiveNumber);
  montecarlo->add_option("--trials", config.trials, "Number of trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  montecarlo->add_option("--seed", config.seed, "64-bit seed")->capture_default_str();
  montecarlo->add_flag("--serial", serial, "Use the single-threaded reference kernel");
  add_output_options(montecarlo, mc_out);

  std::string level = "fast";
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the invariant suites");
  selfcheck->add_option("level,--level", level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}))
      ->capture_default_str();

  OutputOptions prof_out;
  auto* profiles = app.add_subcommand("profiles", "Row profiles and their multiplicities");
  profiles->add_option("--n", n_domain, "Domain size N")->required()->check(CLI::PositiveNumber);
  profiles->add_option("--m", m_range, "Range size M")->required()->check(CLI::PositiveNumber);
  add_output_options(profiles, prof_out);

  std::uint32_t oracle_kmax = 3;
  auto* oracle = app.add_subcommand("oracle", "Profile-sum evidence versus brute-force enumeration");
  oracle->add_option("--n", n_domain, "Domain size N")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--m", m_range, "Range size M")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--kmax,--k", oracle_kmax, "Largest k")->capture_default_str();

  OutputOptions fig1_out;
  auto* fig1 = app.add_subcommand("fig1", "Preset: worstcase --samples 101");
  fig1->add_option("--meta", meta_path, "Write crossing-point metadata JSON here");
  add_output_options(fig1, fig1_out);

  std::map<std::string, OutputOptions> preset_out;
  std::map<std::string, CLI::App*> preset_cmds;
  for (const auto& [name, preset] : figure_presets()) {
    auto* sub = app.add_subcommand(
        name, std::string("Preset: posterior table, ") + preset.caption + ", both algorithms");
    add_output_options(sub, preset_out[name]);
    preset_cmds[name] = sub;
  }

  std::vector<std::string> subcommand_names;
  for (const auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    subcommand_names.push_back(sub->get_name());
  }

  try {
    args = expand_config(std::move(args), subcommand_names);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "gdeutsch: " << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "gdeutsch: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*dist) return cmd_dist(literal, m_range, dist_out, out);
    if (*posterior) {
      return cmd_posterior(n_domain, m_range, k, parse_algorithm(algorithm), post_out, out);
    }
    if (*worstcase) return cmd_worstcase(samples, meta_path, worst_out, out, err);
    if (*fig1) return cmd_worstcase(kFigure1Samples, meta_path, fig1_out, out, err);
    if (*montecarlo) return cmd_montecarlo(config, serial, mc_out, out, err);
    if (*selfcheck) {
      return run_selfcheck(level == "full" ? CheckLevel::Full : CheckLevel::Fast, cap, out)
                 ? kSuccess
                 : kCheckFailed;
    }
    if (*profiles) return cmd_profiles(n_domain, m_range, prof_out, out);
    if (*oracle) return cmd_oracle(n_domain, m_range, oracle_kmax, cap, out);
    for (const auto& [name, sub] : preset_cmds) {
      if (*sub) {
        const auto& p = figure_presets().at(name);
        return cmd_posterior(p.n_domain, p.m_range, p.k_max, Algorithm::Both, preset_out[name], out);
      }
    }
  } catch (const InvalidArgument& e) {
    err << "gdeutsch: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "gdeutsch: " << e.what() << " (raise it with --cap)\n";
    return kUsage;
  } catch (const DegenerateResult& e) {
    err << "gdeutsch: " << e.what() << '\n';
    return kDegenerate;
  }
  return kUsage;
}

}  // namespace gdeutsch::cli
