#include "intrans/settings.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "intrans/text.hpp"
#include "intrans/version.hpp"

namespace intrans {

ScatterProtocol RunSettings::scatter_protocol() const {
  ScatterProtocol protocol;
  protocol.n_values = n_values;
  protocol.p_values = p_values;
  protocol.reps = reps;
  protocol.instances = game.n_instances;
  protocol.discard = game.discard_transient;
  protocol.k_factor = game.k_factor;
  protocol.initial_rating = game.initial_rating;
  protocol.initial_spread = game.initial_spread;
  protocol.base_seed = game.rng_seed;
  protocol.threads = threads;
  return protocol;
}

namespace {

std::vector<int> parse_int_list(const std::string& value, std::string_view key) {
  std::vector<int> out;
  for (const std::string& piece : split_list(value)) {
    out.push_back(static_cast<int>(parse_int(piece, key)));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& value, std::string_view key) {
  std::vector<double> out;
  for (const std::string& piece : split_list(value)) {
    out.push_back(parse_double(piece, key));
  }
  return out;
}

}  // namespace

void apply_setting(RunSettings& s, const std::string& key, const std::string& value) {
  if (key == "n_players") {
    s.game.n_players = static_cast<int>(parse_int(value, key));
  } else if (key == "p_rand") {
    s.game.p_rand = parse_double(value, key);
  } else if (key == "k_factor") {
    s.game.k_factor = parse_double(value, key);
  } else if (key == "initial_rating") {
    s.game.initial_rating = parse_double(value, key);
  } else if (key == "initial_spread") {
    s.game.initial_spread = parse_double(value, key);
  } else if (key == "n_instances") {
    s.game.n_instances = static_cast<int>(parse_int(value, key));
  } else if (key == "discard_transient") {
    s.game.discard_transient = static_cast<int>(parse_int(value, key));
  } else if (key == "rng_seed") {
    s.game.rng_seed = parse_uint(value, key);
  } else if (key == "n_values") {
    s.n_values = parse_int_list(value, key);
  } else if (key == "p_values") {
    s.p_values = parse_double_list(value, key);
  } else if (key == "reps") {
    s.reps = static_cast<int>(parse_int(value, key));
  } else if (key == "threads") {
    s.threads = static_cast<int>(parse_int(value, key));
  } else if (key == "landscape") {
    parse_landscape(value);  // reject unknown names early
    s.landscape = value;
  } else if (key == "mu") {
    s.mu = static_cast<std::size_t>(parse_uint(value, key));
  } else if (key == "pop_size") {
    s.pop_size = static_cast<std::size_t>(parse_uint(value, key));
  } else if (key == "samples") {
    s.samples = static_cast<int>(parse_int(value, key));
  } else if (key == "include_self") {
    s.include_self = parse_bool(value, key);
  } else if (key == "domain_lo") {
    s.domain_lo = parse_double(value, key);
  } else if (key == "domain_hi") {
    s.domain_hi = parse_double(value, key);
  } else if (key == "population") {
    s.population = parse_double_list(value, key);
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

RunSettings parse_config_file(const std::filesystem::path& path, const RunSettings& base) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file '" + path.string() + "'");
  }
  RunSettings settings = base;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                  ": expected 'key = value'");
    }
    const std::string key(trim(stripped.substr(0, eq)));
    const std::string value(trim(stripped.substr(eq + 1)));
    apply_setting(settings, key, value);
  }
  settings.game.validate();
  return settings;
}

std::string serialize_settings(const RunSettings& s) {
  std::ostringstream out;
  out << "n_players = " << s.game.n_players << "\n";
  out << "p_rand = " << format_double(s.game.p_rand) << "\n";
  out << "k_factor = " << format_double(s.game.k_factor) << "\n";
  out << "initial_rating = " << format_double(s.game.initial_rating) << "\n";
  out << "initial_spread = " << format_double(s.game.initial_spread) << "\n";
  out << "n_instances = " << s.game.n_instances << "\n";
  out << "discard_transient = " << s.game.discard_transient << "\n";
  out << "rng_seed = " << s.game.rng_seed << "\n";
  out << "n_values = " << join_ints(s.n_values) << "\n";
  out << "p_values = " << join_doubles(s.p_values) << "\n";
  out << "reps = " << s.reps << "\n";
  out << "threads = " << s.threads << "\n";
  out << "landscape = " << s.landscape << "\n";
  out << "mu = " << s.mu << "\n";
  out << "pop_size = " << s.pop_size << "\n";
  out << "samples = " << s.samples << "\n";
  out << "include_self = " << (s.include_self ? "true" : "false") << "\n";
  out << "domain_lo = " << format_double(s.domain_lo) << "\n";
  out << "domain_hi = " << format_double(s.domain_hi) << "\n";
  out << "population = " << join_doubles(s.population) << "\n";
  return out.str();
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write manifest '" + path.string() + "'");
  }
  out << "# intrans run manifest\n";
  out << "# tool_version: " << kToolVersion << "\n";
  out << "# subcommand: " << manifest.subcommand << "\n";
  out << "# duration_ms: " << manifest.duration_ms << "\n";
  for (const std::string& artifact : manifest.artifacts) {
    out << "# artifact: " << artifact << "\n";
  }
  out << "\n" << serialize_settings(manifest.settings);
  if (!out) throw std::runtime_error("failed writing manifest '" + path.string() + "'");
}

}  // namespace intrans
