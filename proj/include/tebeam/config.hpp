#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "tebeam/initial_data.hpp"
#include "tebeam/mesh.hpp"
#include "tebeam/params.hpp"

namespace tebeam {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TimeConfig {
  double dt = 1e-3;
  double horizon = 5.0;
  int sample_every = 1;
};

struct ScanConfig {
  double lambda_min = 0.1;
  double lambda_max = 0.0;  ///< 0 = auto: omega_max / 3
  int points = 200;
  std::optional<int> ell;  ///< default: from classify_regime
};

struct RunConfig {
  PhysicalParams params;
  int n1 = 20;
  int n2 = 20;
  BcMode bc = BcMode::Clamped;
  InitialData initial;
  TimeConfig time;
  ScanConfig scan;
  std::string output_dir = ".";

  static RunConfig defaults();
};

/// Strict parse: unknown keys anywhere are rejected, missing keys take
/// defaults. Throws ConfigError with a diagnostic.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

/// Canonical serialization (sorted keys, defaults filled in). Parsing
/// the output reproduces the config exactly.
std::string to_canonical_json(const RunConfig& cfg);

/// 64-bit FNV-1a over the canonical form, rendered as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

}  // namespace tebeam
