#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "intrans/settings.hpp"

using namespace intrans;
namespace fs = std::filesystem;

namespace {

struct CaptureStreams {
  std::ostringstream out, err;
  std::streambuf* old_out;
  std::streambuf* old_err;
  CaptureStreams() : old_out(std::cout.rdbuf(out.rdbuf())), old_err(std::cerr.rdbuf(err.rdbuf())) {}
  ~CaptureStreams() {
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
  }
};

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "intrans_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("missing or unknown subcommands fail with usage output") {
  CaptureStreams capture;
  CHECK(run_cli({}) != 0);
  CHECK(run_cli({"frobnicate"}) != 0);
  CHECK(run_cli({"--help"}) == 0);
  const std::string help = capture.out.str();
  CHECK(help.find("table1") != std::string::npos);
  CHECK(help.find("scatter") != std::string::npos);
}

TEST_CASE("table1 prints the rounded worked example and writes artifacts") {
  const fs::path dir = fresh_dir("table1");
  CaptureStreams capture;
  CHECK(run_cli({"table1", "--out-dir", dir.string()}) == 0);
  const std::string out = capture.out.str();
  CHECK(out.find("1642") != std::string::npos);
  CHECK(out.find("1570") != std::string::npos);
  CHECK(out.find("4.5") != std::string::npos);
  CHECK(fs::exists(dir / "table1.csv"));
  CHECK(fs::exists(dir / "manifest.txt"));
}

TEST_CASE("timeseries maps flags onto the config") {
  const fs::path dir = fresh_dir("timeseries");
  CaptureStreams capture;
  CHECK(run_cli({"timeseries", "--n-players", "16", "--p-rand", "0.25", "--seed", "42",
                 "--instances", "8", "--out-dir", dir.string()}) == 0);
  const RunSettings echoed = parse_config_file(dir / "manifest.txt");
  CHECK(echoed.game.n_players == 16);
  CHECK(echoed.game.p_rand == 0.25);
  CHECK(echoed.game.rng_seed == 42);
  CHECK(echoed.game.n_instances == 8);
  CHECK(echoed.game.k_factor == 15.0);  // default survives
  CHECK(fs::exists(dir / "timeseries.csv"));
}

TEST_CASE("out-of-range flag values name the key and fail") {
  const fs::path dir = fresh_dir("badflag");
  CaptureStreams capture;
  CHECK(run_cli({"timeseries", "--p-rand", "1.5", "--out-dir", dir.string()}) == 1);
  CHECK(capture.err.str().find("p_rand") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "timeseries.csv"));
}

TEST_CASE("flags override config file values") {
  const fs::path dir = fresh_dir("precedence");
  const fs::path config = dir / "config.txt";
  {
    std::ofstream out(config);
    out << "k_factor = 15\nn_players = 8\nrng_seed = 5\nn_instances = 6\n";
  }
  CaptureStreams capture;
  CHECK(run_cli({"timeseries", "--config", config.string(), "--k-factor", "10", "--out-dir",
                 dir.string()}) == 0);
  const RunSettings echoed = parse_config_file(dir / "manifest.txt");
  CHECK(echoed.game.k_factor == 10.0);  // flag wins
  CHECK(echoed.game.n_players == 8);    // file value survives
  CHECK(echoed.game.rng_seed == 5);
}

TEST_CASE("INTRANS_SEED is a fallback below file and flags") {
  const fs::path dir = fresh_dir("envseed");
  setenv("INTRANS_SEED", "777", 1);
  CaptureStreams capture;

  CHECK(run_cli({"timeseries", "--instances", "4", "--out-dir", dir.string()}) == 0);
  CHECK(parse_config_file(dir / "manifest.txt").game.rng_seed == 777);

  CHECK(run_cli({"timeseries", "--instances", "4", "--seed", "9", "--out-dir", dir.string()}) ==
        0);
  CHECK(parse_config_file(dir / "manifest.txt").game.rng_seed == 9);

  const fs::path config = dir / "config.txt";
  {
    std::ofstream out(config);
    out << "rng_seed = 314\n";
  }
  CHECK(run_cli({"timeseries", "--instances", "4", "--config", config.string(), "--out-dir",
                 dir.string()}) == 0);
  CHECK(parse_config_file(dir / "manifest.txt").game.rng_seed == 314);

  unsetenv("INTRANS_SEED");
}

TEST_CASE("scatter presets scale the protocol down for pipelines") {
  const fs::path dir = fresh_dir("preset");
  CaptureStreams capture;
  CHECK(run_cli({"scatter", "--preset", "fast", "--n-values", "4", "--p-values", "0.5",
                 "--reps", "2", "--out-dir", dir.string()}) == 0);
  const RunSettings echoed = parse_config_file(dir / "manifest.txt");
  CHECK(echoed.game.n_instances == 200);
  CHECK(echoed.game.discard_transient == 40);
  CHECK(echoed.reps == 2);  // explicit flag beats the preset
  CHECK(fs::exists(dir / "scatter.csv"));
  CHECK(fs::exists(dir / "scatter_summary.csv"));

  CHECK(run_cli({"scatter", "--preset", "warp", "--out-dir", dir.string()}) == 1);
  CHECK(capture.err.str().find("preset") != std::string::npos);
}

TEST_CASE("substrate writes one row per member") {
  const fs::path dir = fresh_dir("substrate");
  CaptureStreams capture;
  CHECK(run_cli({"substrate", "--landscape", "sphere", "--population", "0.1,0.5,0.9", "--mu",
                 "2", "--samples", "10", "--seed", "3", "--out-dir", dir.string()}) == 0);
  const std::string csv = read_file(dir / "substrate.csv");
  CHECK(csv.rfind("i,s,f_obj,f_sub_mean,samples", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 members

  CHECK(run_cli({"substrate", "--landscape", "escher", "--out-dir", dir.string()}) == 1);
}

TEST_CASE("plot renders an existing csv and rejects unknown columns") {
  const fs::path dir = fresh_dir("plot");
  const fs::path csv = dir / "data.csv";
  {
    std::ofstream out(csv);
    out << "x,y,p_rand\n1,2,0.1\n2,3,0.5\n";
  }
  CaptureStreams capture;
  CHECK(run_cli({"plot", "--in", csv.string(), "--x", "x", "--y", "y", "--out-dir",
                 dir.string()}) == 0);
  CHECK(fs::exists(dir / "scatter_x_y.svg"));
  const std::string svg = read_file(dir / "scatter_x_y.svg");
  CHECK(svg.find("p_rand = 0.1") != std::string::npos);  // auto-grouping

  CHECK(run_cli({"plot", "--in", csv.string(), "--x", "bogus", "--y", "y", "--out-dir",
                 dir.string()}) == 1);
  CHECK(capture.err.str().find("bogus") != std::string::npos);
}

TEST_CASE("reruns with identical config and seed emit identical bytes") {
  const fs::path dir_a = fresh_dir("repro_a");
  const fs::path dir_b = fresh_dir("repro_b");
  CaptureStreams capture;
  const std::vector<std::string> base{"timeseries", "--n-players", "6",     "--p-rand", "0.75",
                                      "--instances", "20",          "--seed", "2024"};
  auto with_dir = [&](const fs::path& dir) {
    std::vector<std::string> args = base;
    args.push_back("--out-dir");
    args.push_back(dir.string());
    return args;
  };
  CHECK(run_cli(with_dir(dir_a)) == 0);
  CHECK(run_cli(with_dir(dir_b)) == 0);
  CHECK(read_file(dir_a / "timeseries.csv") == read_file(dir_b / "timeseries.csv"));
}
