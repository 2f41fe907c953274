#include "xxdeficit/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace xxdeficit {

namespace {

constexpr const char* kCsvComment =
    "# xxdeficit sweep v1; entropies in bits (log base 2)";

std::string format_double(double value) {
  char buf[40];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value,
                                    std::chars_format::general, 12);
  return std::string(buf, result.ptr);
}

void check_config(const SweepConfig& config) {
  if (!(config.lambda_min >= 0.0))
    throw std::invalid_argument("sweep: lambda_min must be >= 0");
  if (!(config.lambda_min < config.lambda_max))
    throw std::invalid_argument("sweep: lambda_min must be < lambda_max");
  if (config.points < 2)
    throw std::invalid_argument("sweep: points must be >= 2");
  if (config.validate_with_oracle && config.oracle_resolution < 16)
    throw std::invalid_argument("sweep: oracle resolution must be >= 16");
}

// Strided work distribution; each slot is written by exactly one worker.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& body) {
  const std::size_t workers = std::max<std::size_t>(
      1, std::min<std::size_t>(std::thread::hardware_concurrency(), n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    futures.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    }));
  for (auto& f : futures) f.get();
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  check_config(config);
  const std::size_t n = static_cast<std::size_t>(config.points);
  const double range = config.lambda_max - config.lambda_min;
  std::vector<SweepRecord> records(n);
  parallel_for(n, [&](std::size_t i) {
    const double lambda_value =
        config.lambda_min +
        (static_cast<double>(i) * range) / static_cast<double>(n - 1);
    const Lambda lambda(lambda_value);
    const DeficitResult result = deficit_for_lambda(lambda);
    SweepRecord& row = records[i];
    row.lambda = lambda_value;
    row.deficit = result.value;
    row.pre_entropy = result.pre_entropy;
    row.post_entropy = result.post_entropy;
    row.minimizing_z3 = result.minimizing_z3;
    row.phase = classify_phase(lambda);
    if (config.validate_with_oracle) {
      const XStateParams params =
          row.phase == Phase::Critical
              ? params_from_correlators(correlators(lambda))
              : XStateParams(1.0, 0.0, 1.0);
      const DeficitResult check =
          oracle_full_measurement(params, config.oracle_resolution);
      row.oracle_abs_diff = std::abs(result.value - check.value);
    }
  });
  return records;
}

void write_sweep_csv(std::ostream& out,
                     const std::vector<SweepRecord>& records) {
  const bool with_oracle =
      std::any_of(records.begin(), records.end(),
                  [](const SweepRecord& r) { return r.oracle_abs_diff.has_value(); });
  out << kCsvComment << '\n';
  out << "lambda,deficit,pre_entropy,post_entropy,min_z3,phase";
  if (with_oracle) out << ",oracle_abs_diff";
  out << '\n';
  for (const SweepRecord& row : records) {
    out << format_double(row.lambda) << ',' << format_double(row.deficit)
        << ',' << format_double(row.pre_entropy) << ','
        << format_double(row.post_entropy) << ','
        << format_double(row.minimizing_z3) << ',' << to_string(row.phase);
    if (with_oracle)
      out << ',' << format_double(row.oracle_abs_diff.value_or(0.0));
    out << '\n';
  }
}

void write_sweep_file(const SweepConfig& config,
                      const std::vector<SweepRecord>& records) {
  std::ofstream out(config.output_path);
  if (!out)
    throw std::runtime_error("sweep: cannot open '" + config.output_path +
                             "' for writing");
  write_sweep_csv(out, records);
  out.flush();
  if (!out)
    throw std::runtime_error("sweep: write to '" + config.output_path +
                             "' failed");
}

void write_plot_file(const std::string& path,
                     const std::vector<SweepRecord>& records) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("sweep: cannot open '" + path + "' for writing");
  for (const SweepRecord& row : records)
    out << format_double(row.lambda) << ' ' << format_double(row.deficit)
        << '\n';
  out.flush();
  if (!out) throw std::runtime_error("sweep: write to '" + path + "' failed");
}

namespace {

double van_der_corput(int index) {
  double inv = 1.0;
  double value = 0.0;
  for (int n = index; n > 0; n /= 2) {
    inv /= 2.0;
    value += inv * (n % 2);
  }
  return value;
}

}  // namespace

std::vector<XStateParams> validation_seeds(int count) {
  if (count < 1)
    throw std::invalid_argument("validation_seeds: count must be >= 1");
  std::vector<XStateParams> seeds;
  seeds.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    if (i == 0) {
      seeds.push_back(params_from_correlators(correlators(Lambda(0.0))));
    } else if (i == 1) {
      seeds.emplace_back(1.0, 0.0, 1.0);  // polarized pure state
    } else if (i == 2) {
      seeds.emplace_back(0.0, 0.0, 0.0);  // maximally mixed
    } else {
      const double lambda_value = 0.99 * van_der_corput(i - 2);
      seeds.push_back(params_from_correlators(correlators(Lambda(lambda_value))));
    }
  }
  return seeds;
}

ValidationReport run_validation(int count, int oracle_resolution) {
  if (oracle_resolution < 16)
    throw std::invalid_argument("run_validation: oracle resolution must be >= 16");
  const std::vector<XStateParams> seeds = validation_seeds(count);
  std::vector<double> closed(seeds.size());
  std::vector<double> oracle(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t i) {
    closed[i] = minimize_over_z3(seeds[i]).value;
    oracle[i] = oracle_full_measurement(seeds[i], oracle_resolution).value;
  });
  ValidationReport report;
  report.cases.reserve(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const double diff = std::abs(closed[i] - oracle[i]);
    report.cases.push_back({seeds[i], closed[i], oracle[i], diff});
    report.max_abs_diff = std::max(report.max_abs_diff, diff);
  }
  return report;
}

}  // namespace xxdeficit
