#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "intrans/experiments.hpp"
#include "intrans/game.hpp"
#include "intrans/substrate.hpp"

namespace intrans {

/// Every knob a run can carry, across all subcommands. Settings parse from a
/// flat `key = value` config file (one key per line, `#` comments) and
/// serialize back to the identical format, so a run manifest's config echo
/// replays the run exactly.
struct RunSettings {
  GameConfig game;

  // scatter grid (instances/discard/seed are shared with game)
  std::vector<int> n_values{8, 16, 24, 32};
  std::vector<double> p_values{0.01, 0.10, 0.25, 0.50, 0.75};
  int reps = 100;
  int threads = 1;

  // substrate evaluation
  std::string landscape = "identity";
  std::size_t mu = 3;
  std::size_t pop_size = 10;
  int samples = 100;
  bool include_self = false;
  double domain_lo = 0.0;
  double domain_hi = 1.0;
  std::vector<double> population;  // explicit members; overrides pop_size when nonempty

  ScatterProtocol scatter_protocol() const;

  bool operator==(const RunSettings&) const = default;
};

/// Parses a flat config file. Unknown keys, type mismatches and out-of-range
/// values raise std::invalid_argument naming the key. Starts from `base`
/// (defaults, usually) and overwrites only the keys present in the file.
RunSettings parse_config_file(const std::filesystem::path& path, const RunSettings& base = {});

/// Applies one `key = value` assignment. Shared by the file parser and tests.
void apply_setting(RunSettings& settings, const std::string& key, const std::string& value);

/// The settings as config-file text, every key in a fixed order.
std::string serialize_settings(const RunSettings& settings);

/// A run manifest: the config echo (parseable by parse_config_file) plus
/// commented metadata lines naming the tool version, the subcommand, every
/// emitted artifact, and the wall-clock duration.
struct RunManifest {
  std::string subcommand;
  RunSettings settings;
  std::vector<std::string> artifacts;  // paths of every data file the run wrote
  long long duration_ms = 0;
};

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

}  // namespace intrans
