#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "intrans/experiments.hpp"

namespace intrans {

/// A plain numeric table, the shape every CSV this tool reads or writes has:
/// one header row, then double-valued cells. LF newlines, '.' decimal point.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; throws std::invalid_argument listing the
  /// available columns when absent.
  std::size_t column_index(const std::string& name) const;
};

/// Writes `header k,player,sc,rt,gp,rank_sc,rank_rt,rank_gp`, one row per
/// (instance, player), instance-major and player-minor, players 1-based.
/// `rt` is the post-round rating at full precision; `gp` the running mean
/// score. A history with no instances produces a header-only file.
void write_timeseries_csv(const TournamentHistory& history, const std::filesystem::path& path);

/// Writes the per-repetition rows
/// (`N,p_rand,rep,itx_avg,itx_norm,kld_avg,crd_sc_rt,crd_sc_gp,ptm_sc_rt,
/// ptm_sc_gp,max_sc,max_gp`) to `path` and the per-cell means with 99%
/// confidence bounds to the companion `<stem>_summary.csv` next to it.
/// Returns the summary path.
std::filesystem::path write_scatter_csv(const ScatterReport& report,
                                        const std::filesystem::path& path);

void write_csv(const CsvTable& table, const std::filesystem::path& path);

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace intrans
