#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "intrans/csv.hpp"
#include "intrans/experiments.hpp"
#include "intrans/settings.hpp"
#include "intrans/substrate.hpp"
#include "intrans/svg.hpp"
#include "intrans/text.hpp"
#include "intrans/version.hpp"

namespace intrans {

namespace fs = std::filesystem;

namespace {

// Staging area for one subcommand's flags. Values only land in the settings
// when the flag was actually given, so precedence stays
// defaults < INTRANS_SEED < config file < flags.
struct Flags {
  std::string config_path;
  std::string out_dir = "out";

  int n_players = 0;
  double p_rand = 0.0;
  double k_factor = 0.0;
  double initial_rating = 0.0;
  double initial_spread = 0.0;
  int instances = 0;
  int discard = 0;
  std::uint64_t seed = 0;
  std::string n_values, p_values;
  int reps = 0;
  int threads = 0;
  std::string preset;
  std::string landscape;
  std::uint64_t mu = 0;
  std::uint64_t pop_size = 0;
  int samples = 0;
  bool include_self = false;
  double domain_lo = 0.0, domain_hi = 0.0;
  std::string population;

  CLI::Option* o_n_players = nullptr;
  CLI::Option* o_p_rand = nullptr;
  CLI::Option* o_k_factor = nullptr;
  CLI::Option* o_initial_rating = nullptr;
  CLI::Option* o_initial_spread = nullptr;
  CLI::Option* o_instances = nullptr;
  CLI::Option* o_discard = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_n_values = nullptr;
  CLI::Option* o_p_values = nullptr;
  CLI::Option* o_reps = nullptr;
  CLI::Option* o_threads = nullptr;
  CLI::Option* o_preset = nullptr;
  CLI::Option* o_landscape = nullptr;
  CLI::Option* o_mu = nullptr;
  CLI::Option* o_pop_size = nullptr;
  CLI::Option* o_samples = nullptr;
  CLI::Option* o_include_self = nullptr;
  CLI::Option* o_domain_lo = nullptr;
  CLI::Option* o_domain_hi = nullptr;
  CLI::Option* o_population = nullptr;
};

void add_common_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "flat key = value config file");
  cmd->add_option("--out-dir", f.out_dir, "directory for artifacts and the run manifest");
  f.o_seed = cmd->add_option("--seed", f.seed, "RNG seed (fallback: INTRANS_SEED, then 1)");
}

void add_game_flags(CLI::App* cmd, Flags& f) {
  f.o_n_players = cmd->add_option("--n-players", f.n_players, "players per round robin");
  f.o_p_rand = cmd->add_option("--p-rand", f.p_rand, "fraction of games decided by chance");
  f.o_k_factor = cmd->add_option("--k-factor", f.k_factor, "rating update sensitivity");
  f.o_initial_rating = cmd->add_option("--initial-rating", f.initial_rating, "rating baseline");
  f.o_initial_spread =
      cmd->add_option("--initial-spread", f.initial_spread, "half-width of the rt(0) perturbation");
  f.o_instances = cmd->add_option("--instances", f.instances, "round robins per series");
  f.o_discard = cmd->add_option("--discard", f.discard, "leading instances excluded from aggregates");
}

// Resolves the effective settings for one subcommand invocation.
RunSettings resolve_settings(const Flags& f) {
  RunSettings s;
  if (const char* env = std::getenv("INTRANS_SEED")) {
    s.game.rng_seed = parse_uint(env, "INTRANS_SEED");
  }
  if (!f.config_path.empty()) s = parse_config_file(f.config_path, s);

  if (f.o_n_players && f.o_n_players->count()) s.game.n_players = f.n_players;
  if (f.o_p_rand && f.o_p_rand->count()) s.game.p_rand = f.p_rand;
  if (f.o_k_factor && f.o_k_factor->count()) s.game.k_factor = f.k_factor;
  if (f.o_initial_rating && f.o_initial_rating->count()) s.game.initial_rating = f.initial_rating;
  if (f.o_initial_spread && f.o_initial_spread->count()) s.game.initial_spread = f.initial_spread;
  if (f.o_instances && f.o_instances->count()) s.game.n_instances = f.instances;
  if (f.o_discard && f.o_discard->count()) s.game.discard_transient = f.discard;
  if (f.o_seed && f.o_seed->count()) s.game.rng_seed = f.seed;
  if (f.o_n_values && f.o_n_values->count()) apply_setting(s, "n_values", f.n_values);
  if (f.o_p_values && f.o_p_values->count()) apply_setting(s, "p_values", f.p_values);
  if (f.o_reps && f.o_reps->count()) s.reps = f.reps;
  if (f.o_threads && f.o_threads->count()) s.threads = f.threads;
  if (f.o_landscape && f.o_landscape->count()) apply_setting(s, "landscape", f.landscape);
  if (f.o_mu && f.o_mu->count()) s.mu = static_cast<std::size_t>(f.mu);
  if (f.o_pop_size && f.o_pop_size->count()) s.pop_size = static_cast<std::size_t>(f.pop_size);
  if (f.o_samples && f.o_samples->count()) s.samples = f.samples;
  if (f.o_include_self && f.o_include_self->count()) s.include_self = f.include_self;
  if (f.o_domain_lo && f.o_domain_lo->count()) s.domain_lo = f.domain_lo;
  if (f.o_domain_hi && f.o_domain_hi->count()) s.domain_hi = f.domain_hi;
  if (f.o_population && f.o_population->count()) apply_setting(s, "population", f.population);
  return s;
}

// "fast" shrinks the scatter protocol for CI pipelines; "full" restores the
// full-scale study defaults.
void apply_preset(RunSettings& s, const std::string& preset) {
  if (preset == "full") {
    s.reps = 100;
    s.game.n_instances = 1000;
    s.game.discard_transient = 200;
  } else if (preset == "fast") {
    s.reps = 20;
    s.game.n_instances = 200;
    s.game.discard_transient = 40;
  } else if (!preset.empty()) {
    throw std::invalid_argument("unknown preset '" + preset + "' (expected fast or full)");
  }
}

struct RunContext {
  fs::path out_dir;
  std::vector<std::string> artifacts;

  fs::path artifact(const std::string& name) {
    artifacts.push_back((out_dir / name).string());
    return out_dir / name;
  }
};

using CommandFn = std::function<void(const RunSettings&, RunContext&)>;

// Shared run wrapper: make the output directory, run, then drop the manifest.
void execute(const std::string& name, const Flags& flags, const RunSettings& settings,
             const CommandFn& body) {
  const auto start = std::chrono::steady_clock::now();
  RunContext ctx;
  ctx.out_dir = flags.out_dir;
  fs::create_directories(ctx.out_dir);

  body(settings, ctx);

  RunManifest manifest;
  manifest.subcommand = name;
  manifest.settings = settings;
  manifest.artifacts = ctx.artifacts;
  manifest.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  write_manifest(manifest, ctx.out_dir / "manifest.txt");
}

void run_table1(const RunSettings&, RunContext& ctx) {
  const WorkedExample example = five_player_example();
  const TournamentHistory h = replay_matches(example.config, example.matches);

  const RankVector rank = rank_with_ties(h.gp);
  std::cout << "  #  rt(1)  rt(2)     gp   rank\n";
  for (int i = 0; i < h.config.n_players; ++i) {
    std::cout << std::setw(3) << (i + 1) << "  " << std::setw(5)
              << std::llround(h.ratings[1][i]) << "  " << std::setw(5)
              << std::llround(h.ratings[2][i]) << "  " << std::setw(5)
              << format_double(h.gp[i]) << "  " << std::setw(5) << format_double(rank[i])
              << "\n";
  }
  write_timeseries_csv(h, ctx.artifact("table1.csv"));
}

void run_timeseries(const RunSettings& s, RunContext& ctx) {
  const TournamentHistory h = run_time_series(s.game);
  write_timeseries_csv(h, ctx.artifact("timeseries.csv"));
  std::cout << "timeseries: " << s.game.n_instances << " instances, " << s.game.n_players
            << " players -> " << ctx.artifacts.back() << "\n";
}

void run_scatter_cmd(const RunSettings& s, RunContext& ctx) {
  const ScatterReport report = run_scatter(s.scatter_protocol());
  const fs::path rows_path = ctx.artifact("scatter.csv");
  const fs::path summary = write_scatter_csv(report, rows_path);
  ctx.artifacts.push_back(summary.string());
  std::cout << "scatter: " << report.rows.size() << " repetitions over "
            << report.summary.size() << " cells -> " << rows_path.string() << "\n";
}

void run_substrate(const RunSettings& s, RunContext& ctx) {
  ObjectiveLandscape landscape;
  landscape.kind = parse_landscape(s.landscape);
  landscape.domain_lo = s.domain_lo;
  landscape.domain_hi = s.domain_hi;
  if (s.samples < 1) throw std::invalid_argument("samples must be >= 1");

  Rng rng(s.game.rng_seed);
  Population population;
  if (!s.population.empty()) {
    population.members = s.population;
  } else {
    if (s.pop_size < 2) throw std::invalid_argument("pop_size must be >= 2");
    population.members.resize(s.pop_size);
    for (double& m : population.members) m = rng.uniform(s.domain_lo, s.domain_hi);
  }

  CsvTable table;
  table.columns = {"i", "s", "f_obj", "f_sub_mean", "samples"};
  for (std::size_t i = 0; i < population.members.size(); ++i) {
    const std::vector<SearchPoint> pool = evaluator_pool(population, i, s.include_self);
    double total = 0.0;
    for (int draw = 0; draw < s.samples; ++draw) {
      const EvaluatorSample sample = sample_evaluators(pool, s.mu, rng);
      total += subjective_fitness(landscape, population.members[i], sample);
    }
    table.rows.push_back({static_cast<double>(i + 1), population.members[i],
                          objective_fitness(landscape, population.members[i]),
                          total / s.samples, static_cast<double>(s.samples)});
  }
  write_csv(table, ctx.artifact("substrate.csv"));
  std::cout << "substrate: " << population.members.size() << " members, mu = " << s.mu
            << ", " << s.samples << " samples each -> " << ctx.artifacts.back() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("intrans");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Simple-random-game simulator with rating, ranking and intransitivity analytics"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  Flags table1_flags;
  CLI::App* table1 = app.add_subcommand(
      "table1", "Replay the built-in five-player worked example (two fixed round robins)");
  table1->add_option("--out-dir", table1_flags.out_dir, "directory for artifacts");

  Flags ts_flags;
  CLI::App* timeseries =
      app.add_subcommand("timeseries", "Run one seeded series of round robins");
  add_common_flags(timeseries, ts_flags);
  add_game_flags(timeseries, ts_flags);

  Flags sc_flags;
  CLI::App* scatter =
      app.add_subcommand("scatter", "Run the (N, p_rand) grid study with repetitions");
  add_common_flags(scatter, sc_flags);
  add_game_flags(scatter, sc_flags);
  sc_flags.o_n_values = scatter->add_option("--n-values", sc_flags.n_values,
                                            "comma-separated player counts");
  sc_flags.o_p_values = scatter->add_option("--p-values", sc_flags.p_values,
                                            "comma-separated randomness levels");
  sc_flags.o_reps = scatter->add_option("--reps", sc_flags.reps, "repetitions per cell");
  sc_flags.o_threads = scatter->add_option("--threads", sc_flags.threads, "worker threads");
  sc_flags.o_preset =
      scatter->add_option("--preset", sc_flags.preset, "protocol preset: fast or full");

  Flags sub_flags;
  CLI::App* substrate =
      app.add_subcommand("substrate", "Evaluate sampled subjective fitness over a landscape");
  add_common_flags(substrate, sub_flags);
  sub_flags.o_landscape = substrate->add_option("--landscape", sub_flags.landscape,
                                                "identity, sphere or gaussian");
  sub_flags.o_mu = substrate->add_option("--mu", sub_flags.mu, "evaluator sample size");
  sub_flags.o_pop_size = substrate->add_option("--pop-size", sub_flags.pop_size,
                                               "generated population size");
  sub_flags.o_samples = substrate->add_option("--samples", sub_flags.samples,
                                              "independent samples per member");
  sub_flags.o_include_self = substrate->add_flag("--include-self", sub_flags.include_self,
                                                 "let a member appear among its own evaluators");
  sub_flags.o_domain_lo = substrate->add_option("--domain-lo", sub_flags.domain_lo,
                                                "lower end of the search domain");
  sub_flags.o_domain_hi = substrate->add_option("--domain-hi", sub_flags.domain_hi,
                                                "upper end of the search domain");
  sub_flags.o_population = substrate->add_option("--population", sub_flags.population,
                                                 "explicit comma-separated members");

  Flags plot_flags;
  std::string plot_in, plot_x, plot_y, plot_group = "auto", plot_name;
  CLI::App* plot = app.add_subcommand("plot", "Render a CSV scatter view as a standalone SVG");
  plot->add_option("--in", plot_in, "input CSV")->required();
  plot->add_option("--x", plot_x, "x column")->required();
  plot->add_option("--y", plot_y, "y column")->required();
  plot->add_option("--group", plot_group,
                   "styling column; 'auto' = p_rand when present, 'none' = single series");
  plot->add_option("--name", plot_name, "output file name (default scatter_<x>_<y>.svg)");
  plot->add_option("--out-dir", plot_flags.out_dir, "directory for artifacts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*table1) {
      RunSettings s;
      s.game = five_player_example().config;
      execute("table1", table1_flags, s, run_table1);
    } else if (*timeseries) {
      const RunSettings s = resolve_settings(ts_flags);
      s.game.validate();
      execute("timeseries", ts_flags, s, run_timeseries);
    } else if (*scatter) {
      RunSettings s = resolve_settings(sc_flags);
      if (sc_flags.o_preset->count()) {
        apply_preset(s, sc_flags.preset);
        // explicit flags still win over the preset
        if (sc_flags.o_reps->count()) s.reps = sc_flags.reps;
        if (sc_flags.o_instances->count()) s.game.n_instances = sc_flags.instances;
        if (sc_flags.o_discard->count()) s.game.discard_transient = sc_flags.discard;
      }
      execute("scatter", sc_flags, s, run_scatter_cmd);
    } else if (*substrate) {
      const RunSettings s = resolve_settings(sub_flags);
      execute("substrate", sub_flags, s, run_substrate);
    } else if (*plot) {
      const CsvTable data = read_csv(plot_in);
      std::string group = plot_group;
      if (group == "auto") {
        group = "";
        for (const std::string& c : data.columns) {
          if (c == "p_rand") group = "p_rand";
        }
      } else if (group == "none") {
        group = "";
      }
      if (plot_name.empty()) plot_name = "scatter_" + plot_x + "_" + plot_y + ".svg";
      execute("plot", plot_flags, RunSettings{}, [&](const RunSettings&, RunContext& ctx) {
        emit_svg_scatter(data, plot_x, plot_y, group, ctx.artifact(plot_name));
        std::cout << "plot: " << data.rows.size() << " points -> " << ctx.artifacts.back()
                  << "\n";
      });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace intrans
