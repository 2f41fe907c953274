#include <cstdio>
#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "xxdeficit/deficit.hpp"
#include "xxdeficit/sweep.hpp"
#include "xxdeficit/xstate.hpp"
#include "xxdeficit/xxmodel.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;

constexpr double kValidationTolerance = 1e-4;

std::string fixed6(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string sci3(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3e", value);
  return buf;
}

int run_point(double lambda_value) {
  using namespace xxdeficit;
  const Lambda lambda(lambda_value);
  const Phase phase = classify_phase(lambda);
  const Correlators corr = phase == Phase::Critical
                               ? correlators(lambda)
                               : polarized_correlators();
  const DeficitResult result = deficit_for_lambda(lambda);
  std::cout << "lambda        " << fixed6(lambda_value) << '\n'
            << "phase         " << to_string(phase) << '\n'
            << "r             " << fixed6(corr.sigma_z) << '\n'
            << "c             " << fixed6(corr.xx) << '\n'
            << "c3            " << fixed6(corr.zz) << '\n'
            << "pre_entropy   " << fixed6(result.pre_entropy) << '\n'
            << "post_entropy  " << fixed6(result.post_entropy) << '\n'
            << "min_z3        " << fixed6(result.minimizing_z3) << '\n'
            << "deficit       " << fixed6(result.value) << '\n';
  return kExitOk;
}

int run_sweep_command(const xxdeficit::SweepConfig& config,
                      const std::string& plot_path) {
  const auto records = xxdeficit::run_sweep(config);
  try {
    xxdeficit::write_sweep_file(config, records);
    if (!plot_path.empty()) xxdeficit::write_plot_file(plot_path, records);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  std::cout << "wrote " << records.size() << " rows to " << config.output_path
            << '\n';
  return kExitOk;
}

int run_validate(int count, int oracle_resolution) {
  using namespace xxdeficit;
  std::cout << "closed-form z3 minimization vs measurement-sphere oracle "
            << "(resolution " << oracle_resolution << ")\n";
  const ValidationReport report = run_validation(count, oracle_resolution);
  for (std::size_t i = 0; i < report.cases.size(); ++i) {
    const ValidationCase& vc = report.cases[i];
    std::cout << "  case " << (i + 1) << '/' << report.cases.size()
              << ": r=" << fixed6(vc.params.r()) << " c=" << fixed6(vc.params.c())
              << " c3=" << fixed6(vc.params.c3())
              << "  closed=" << fixed6(vc.closed_form)
              << " oracle=" << fixed6(vc.oracle)
              << " |diff|=" << sci3(vc.abs_diff) << '\n';
  }
  std::cout << "max |closed - oracle| = " << sci3(report.max_abs_diff)
            << " over " << report.cases.size() << " cases (tolerance "
            << sci3(kValidationTolerance) << ")\n";
  if (report.max_abs_diff <= kValidationTolerance) {
    std::cout << "PASS\n";
    return kExitOk;
  }
  std::cout << "FAIL\n";
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "One-way quantum deficit of two adjacent bulk spins of the XX chain "
      "in the thermodynamic limit. All entropies are in bits."};
  app.require_subcommand(1);

  double lambda_value = 0.0;
  CLI::App* point = app.add_subcommand(
      "point", "Evaluate the deficit at a single field strength");
  point->add_option("lambda", lambda_value, "Field strength (>= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);

  xxdeficit::SweepConfig config;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Tabulate the deficit on a uniform field grid as CSV");
  sweep->add_option("--min", config.lambda_min, "Smallest field strength")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--max", config.lambda_max, "Largest field strength")
      ->capture_default_str();
  sweep->add_option("--points", config.points, "Grid size (>= 2)")
      ->capture_default_str();
  sweep->add_option("--out", config.output_path, "Output CSV path")->required();
  std::string plot_path;
  sweep->add_option("--plot-out", plot_path,
                    "Also write a bare two-column 'lambda deficit' file");
  sweep->add_flag("--oracle", config.validate_with_oracle,
                  "Re-check each row against the measurement-sphere oracle");
  sweep->add_option("--oracle-res", config.oracle_resolution,
                    "Oracle sphere resolution (>= 16)")
      ->capture_default_str();

  int count = 20;
  int oracle_resolution = 64;
  CLI::App* validate = app.add_subcommand(
      "validate",
      "Compare the closed-form minimization against the brute-force oracle");
  validate->add_option("--count", count, "Number of parameter sets (>= 1)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  validate->add_option("--oracle-res", oracle_resolution,
                       "Oracle sphere resolution (>= 16)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (point->parsed()) return run_point(lambda_value);
    if (sweep->parsed()) return run_sweep_command(config, plot_path);
    if (validate->parsed()) return run_validate(count, oracle_resolution);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
