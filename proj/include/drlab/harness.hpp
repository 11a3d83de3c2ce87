#pragma once

#include <string>
#include <utility>
#include <vector>

namespace drlab {

/// Configuration of a verification run. Zero-valued numeric fields mean
/// "use the shipped default" (heat_time from the h range, res_c = 2W).
struct SuiteConfig {
  std::string suite = "paper-core";
  std::string preset;    // empty: each check uses its default preset list
  int mv = 0;            // explicit group parameters when mz >= 0
  int mz = -1;
  std::string family = "heat";  // heat | resolvent-exp
  double alpha = 1.0;
  double p = 4.0;
  int beta = 3;
  int h_min = 4;
  int h_max = 20;
  double heat_time = 0.0;
  double res_c = 0.0;
  double tol = 0.0;      // optional override of the headline round-trip tolerances
  int grid_scale = 1;    // >= 2 refines every sampling grid
  unsigned seed = 12345; // for the sampled (non-grid) checks; recorded in the report
  std::string out_json;
  std::string csv_dir;
};

struct CheckRecord {
  std::string name;
  std::string anchor;  // property tag, "plumbing" for artifact-only checks
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
  double runtime_ms = 0.0;  // volatile across runs
};

struct VerificationReport {
  int schema_version = 1;
  std::string suite;
  std::string generated_at;  // volatile across runs
  SuiteConfig config;
  std::vector<CheckRecord> records;
  bool passed = true;
  double runtime_ms = 0.0;  // volatile across runs

  std::string to_json(int indent = 2) const;
  std::string to_text() const;
};

std::vector<std::string> suite_names();

/// Runs one suite ("geometry", "transforms"/"abel", "spherical",
/// "multiplier", "region", or their union "paper-core"). Configuration
/// errors throw std::invalid_argument; individual check failures are
/// recorded, never thrown.
VerificationReport run_suite(const SuiteConfig& cfg);

struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

/// Log-log least squares through (h, value); needs >= 5 points, values > 0.
DecayFit decay_fit(const std::vector<std::pair<double, double>>& pts);

struct KernelSweepResult {
  std::vector<std::pair<double, double>> norms;  // (h, weighted L1 norm)
  DecayFit fit;
  double slope_limit = 0.0;  // 1 - beta + 0.3
  bool pass = false;
};

/// Weighted L1 norms of the dyadic kernel pieces over cfg's h range for one
/// family/context; the decay-rate check behind the kernel subcommand.
KernelSweepResult kernel_sweep(const SuiteConfig& cfg);

}  // namespace drlab
