#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "intrans/csv.hpp"
#include "intrans/settings.hpp"
#include "intrans/svg.hpp"
#include "intrans/text.hpp"

using namespace intrans;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "intrans_io_tests";
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("number formatting is shortest round-trip") {
  CHECK(format_double(3.0) == "3");
  CHECK(format_double(3.5) == "3.5");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1641.7795276789234) == "1641.7795276789234");
  CHECK(parse_double(format_double(0.30000000000000004), "x") == 0.30000000000000004);
}

TEST_CASE("config files parse, unknown keys and bad values are rejected by name") {
  const fs::path path = temp_dir() / "config.txt";
  write_file(path,
             "# a comment\n"
             "n_players = 16\n"
             "\n"
             "p_rand = 0.25\n"
             "rng_seed = 42\n"
             "n_values = 8, 16\n"
             "include_self = true\n");
  const RunSettings s = parse_config_file(path);
  CHECK(s.game.n_players == 16);
  CHECK(s.game.p_rand == 0.25);
  CHECK(s.game.rng_seed == 42);
  CHECK(s.n_values == std::vector<int>{8, 16});
  CHECK(s.include_self == true);
  CHECK(s.game.k_factor == 15.0);  // untouched default

  write_file(path, "n_player = 16\n");
  CHECK_THROWS_WITH_AS(parse_config_file(path), doctest::Contains("n_player"),
                       std::invalid_argument);

  write_file(path, "p_rand = fast\n");
  CHECK_THROWS_WITH_AS(parse_config_file(path), doctest::Contains("p_rand"),
                       std::invalid_argument);

  write_file(path, "p_rand = 1.5\n");
  CHECK_THROWS_WITH_AS(parse_config_file(path), doctest::Contains("p_rand"),
                       std::invalid_argument);

  write_file(path, "just some text\n");
  CHECK_THROWS_AS(parse_config_file(path), std::invalid_argument);

  CHECK_THROWS_WITH_AS(parse_config_file(temp_dir() / "missing.txt"),
                       doctest::Contains("missing.txt"), std::invalid_argument);
}

TEST_CASE("settings serialize and parse back unchanged") {
  RunSettings s;
  s.game.n_players = 24;
  s.game.p_rand = 0.75;
  s.game.rng_seed = 1234567890123ull;
  s.p_values = {0.05, 0.5};
  s.landscape = "gaussian";
  s.population = {0.25, 0.5, 0.75};
  s.include_self = true;

  const fs::path path = temp_dir() / "roundtrip.txt";
  write_file(path, serialize_settings(s));
  CHECK(parse_config_file(path) == s);
}

TEST_CASE("a manifest echoes a config that replays the run") {
  RunManifest manifest;
  manifest.subcommand = "timeseries";
  manifest.settings.game.n_players = 6;
  manifest.settings.game.p_rand = 0.01;
  manifest.settings.game.rng_seed = 7;
  manifest.artifacts = {"out/timeseries.csv"};
  manifest.duration_ms = 12;

  const fs::path path = temp_dir() / "manifest.txt";
  write_manifest(manifest, path);
  const std::string text = read_file(path);
  CHECK(text.find("# subcommand: timeseries") != std::string::npos);
  CHECK(text.find("# artifact: out/timeseries.csv") != std::string::npos);
  CHECK(text.find("# tool_version:") != std::string::npos);

  CHECK(parse_config_file(path) == manifest.settings);
}

TEST_CASE("the timeseries csv carries the worked example") {
  const WorkedExample ex = five_player_example();
  const TournamentHistory h = replay_matches(ex.config, ex.matches);
  const fs::path path = temp_dir() / "table1.csv";
  write_timeseries_csv(h, path);

  const CsvTable table = read_csv(path);
  CHECK(table.columns == std::vector<std::string>{"k", "player", "sc", "rt", "gp", "rank_sc",
                                                  "rank_rt", "rank_gp"});
  CHECK(table.rows.size() == 10);  // 2 instances x 5 players

  // the row (k=1, player=1): sc=3, rt rounds to 1642, gp=3.5, rank_gp=1
  const std::vector<double>& row = table.rows[5];
  CHECK(row[0] == 1.0);
  CHECK(row[1] == 1.0);
  CHECK(row[2] == 3.0);
  CHECK(std::llround(row[3]) == 1642);
  CHECK(std::abs(row[3] - 1642.0) <= 0.5);
  CHECK(row[4] == 3.5);
  CHECK(row[7] == 1.0);

  // deterministic bytes on rerun
  const std::string first = read_file(path);
  write_timeseries_csv(h, path);
  CHECK(read_file(path) == first);
  CHECK(first.find('\r') == std::string::npos);  // LF only
}

TEST_CASE("an empty history writes a header-only csv") {
  TournamentHistory h;
  h.config.n_players = 5;
  const fs::path path = temp_dir() / "empty.csv";
  write_timeseries_csv(h, path);
  CHECK(read_file(path) == "k,player,sc,rt,gp,rank_sc,rank_rt,rank_gp\n");
}

TEST_CASE("scatter csv pair carries rows and summary") {
  ScatterProtocol protocol;
  protocol.n_values = {4, 5};
  protocol.p_values = {0.1, 0.9};
  protocol.reps = 3;
  protocol.instances = 10;
  protocol.discard = 2;
  const ScatterReport report = run_scatter(protocol);

  const fs::path path = temp_dir() / "scatter.csv";
  const fs::path summary_path = write_scatter_csv(report, path);
  CHECK(summary_path.filename() == "scatter_summary.csv");

  const CsvTable rows = read_csv(path);
  CHECK(rows.columns[0] == "N");
  CHECK(rows.columns[3] == "itx_avg");
  CHECK(rows.rows.size() == 12);  // 2 N x 2 p x 3 reps

  const std::size_t itx_avg = rows.column_index("itx_avg");
  const std::size_t itx_norm = rows.column_index("itx_norm");
  for (const auto& row : rows.rows) {
    CHECK(row[itx_norm] == row[itx_avg] / itx_max(static_cast<int>(row[0])));
  }

  const CsvTable summary = read_csv(summary_path);
  CHECK(summary.rows.size() == 4);
  const std::size_t lo = summary.column_index("kld_avg_ci_lo");
  const std::size_t hi = summary.column_index("kld_avg_ci_hi");
  for (const auto& row : summary.rows) CHECK(row[hi] >= row[lo]);

  // full-precision cells survive the round trip
  const std::size_t kld_col = rows.column_index("kld_avg");
  CHECK(rows.rows[0][kld_col] == report.rows[0].metrics[2]);
}

TEST_CASE("csv reader rejects malformed tables") {
  const fs::path path = temp_dir() / "bad.csv";
  write_file(path, "a,b\n1,2\n3\n");
  CHECK_THROWS_AS(read_csv(path), std::invalid_argument);
  write_file(path, "");
  CHECK_THROWS_AS(read_csv(path), std::invalid_argument);
  write_file(path, "a,b\n1,x\n");
  CHECK_THROWS_AS(read_csv(path), std::invalid_argument);

  CsvTable table;
  table.columns = {"a", "b"};
  CHECK_THROWS_WITH_AS(table.column_index("c"), doctest::Contains("available: a, b"),
                       std::invalid_argument);
}

TEST_CASE("svg scatter renders points, axes and legend deterministically") {
  CsvTable data;
  data.columns = {"x", "y", "p_rand"};
  data.rows = {{0.1, 0.5, 0.01}, {0.4, 0.9, 0.25}, {0.2, 0.3, 0.01}};

  const fs::path path = temp_dir() / "plot.svg";
  emit_svg_scatter(data, "x", "y", "p_rand", path);
  const std::string svg = read_file(path);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.rfind("<?xml", 0) == 0);
  std::size_t circles = 0;
  for (std::size_t pos = svg.find("<circle"); pos != std::string::npos;
       pos = svg.find("<circle", pos + 1)) {
    ++circles;
  }
  CHECK(circles == 3);
  CHECK(svg.find("p_rand = 0.01") != std::string::npos);
  CHECK(svg.find("p_rand = 0.25") != std::string::npos);

  emit_svg_scatter(data, "x", "y", "p_rand", path);
  CHECK(read_file(path) == svg);
}

TEST_CASE("svg edge cases: single point, empty data, unknown column") {
  CsvTable one;
  one.columns = {"x", "y"};
  one.rows = {{2.0, 3.0}};
  const fs::path path = temp_dir() / "one.svg";
  emit_svg_scatter(one, "x", "y", "", path);
  const std::string svg = read_file(path);
  CHECK(svg.find("<circle") != std::string::npos);

  CsvTable empty;
  empty.columns = {"x", "y"};
  emit_svg_scatter(empty, "x", "y", "", path);
  const std::string axes_only = read_file(path);
  CHECK(axes_only.find("<svg") != std::string::npos);
  CHECK(axes_only.find("<circle") == std::string::npos);

  CHECK_THROWS_WITH_AS(emit_svg_scatter(empty, "nope", "y", "", path),
                       doctest::Contains("nope"), std::invalid_argument);
}
