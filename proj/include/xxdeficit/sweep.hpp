#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xxdeficit/deficit.hpp"
#include "xxdeficit/xstate.hpp"
#include "xxdeficit/xxmodel.hpp"

namespace xxdeficit {

struct SweepConfig {
  double lambda_min = 0.0;
  double lambda_max = 1.5;
  int points = 151;
  std::string output_path;
  bool validate_with_oracle = false;
  int oracle_resolution = 64;
};

struct SweepRecord {
  double lambda = 0.0;
  double deficit = 0.0;
  double pre_entropy = 0.0;
  double post_entropy = 0.0;
  double minimizing_z3 = 0.0;
  Phase phase = Phase::Critical;
  std::optional<double> oracle_abs_diff;
};

// Uniform endpoint-inclusive grid over [lambda_min, lambda_max]. Rows come
// back in lambda order; points are independent and evaluated concurrently.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

// CSV with a '#' comment line, a header, and one row per record. Output is
// deterministic and locale-independent.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

// Writes to config.output_path; throws std::runtime_error naming the path
// on I/O failure.
void write_sweep_file(const SweepConfig& config,
                      const std::vector<SweepRecord>& records);

// Bare two-column "lambda deficit" file, one row per record; the shape of
// the deficit curve with no metadata, ready for any plotting tool.
void write_plot_file(const std::string& path,
                     const std::vector<SweepRecord>& records);

// Deterministic parameter sets for closed-form vs oracle comparison:
// field values stratified over [0, 0.99] plus pure and maximally mixed
// boundary cases.
std::vector<XStateParams> validation_seeds(int count);

struct ValidationCase {
  XStateParams params;
  double closed_form;
  double oracle;
  double abs_diff;
};

struct ValidationReport {
  std::vector<ValidationCase> cases;
  double max_abs_diff = 0.0;
};

ValidationReport run_validation(int count, int oracle_resolution);

}  // namespace xxdeficit
