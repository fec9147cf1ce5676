#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heatflux/stationary.hpp"

namespace heatflux {

struct QuadOverrides {
  double rel_tol = 1e-8;
  double omega_max = 0.0; // 0 = automatic upper cutoff
};

struct OutputOptions {
  std::string path;           // empty = stdout
  std::string format = "csv"; // csv | json
};

struct RunConfig {
  PairConfig pair;
  QuadOverrides quad;
  OutputOptions output;
};

// Strict flat key = value format with [section] headers (particle1,
// particle2, pair, quadrature, output). Unknown sections or keys, duplicate
// or missing required keys, and malformed numbers all raise ConfigError;
// material and pair invariants are re-checked after parsing.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

// Built-in scenarios; every preset is a silicon carbide pair of 5 nm
// spheres, near field = 100 nm and far field = 1 mm separation.
std::vector<std::string> preset_names();
RunConfig preset_config(const std::string& name);

// Canonical serialization: stable section and key order, lossless number
// formatting. Identical configurations serialize byte-identically, which
// makes the hash reproducible across runs. The hash covers the physical pair
// and quadrature settings only, so files holding the same calculation carry
// the same stamp regardless of output path or format.
std::string serialize_config(const RunConfig& cfg);
std::uint64_t config_hash(const RunConfig& cfg);

} // namespace heatflux
