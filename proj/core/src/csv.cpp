#include "intrans/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "intrans/text.hpp"

namespace intrans {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary: LF newlines everywhere
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace

std::size_t CsvTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  std::string available;
  for (const std::string& c : columns) {
    if (!available.empty()) available += ", ";
    available += c;
  }
  throw std::invalid_argument("unknown column '" + name + "' (available: " + available + ")");
}

void write_timeseries_csv(const TournamentHistory& h, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << "k,player,sc,rt,gp,rank_sc,rank_rt,rank_gp\n";
  for (int k = 0; k < h.n_instances(); ++k) {
    for (int i = 0; i < h.config.n_players; ++i) {
      out << k << ',' << (i + 1) << ',' << format_double(h.scores[k][i]) << ','
          << format_double(h.ratings[k + 1][i]) << ',' << format_double(h.running_gp[k][i]) << ','
          << format_double(h.rank_sc[k][i]) << ',' << format_double(h.rank_rt[k][i]) << ','
          << format_double(h.rank_gp[k][i]) << '\n';
    }
  }
  finish(out, path);
}

std::filesystem::path write_scatter_csv(const ScatterReport& report,
                                        const std::filesystem::path& path) {
  {
    std::ofstream out = open_out(path);
    out << "N,p_rand,rep";
    for (const char* name : kScatterMetricNames) out << ',' << name;
    out << '\n';
    for (const ScatterRow& row : report.rows) {
      out << row.n_players << ',' << format_double(row.p_rand) << ',' << row.rep;
      for (double m : row.metrics) out << ',' << format_double(m);
      out << '\n';
    }
    finish(out, path);
  }

  std::filesystem::path summary_path = path;
  summary_path.replace_filename(path.stem().string() + "_summary" + path.extension().string());
  std::ofstream out = open_out(summary_path);
  out << "N,p_rand";
  for (const char* name : kScatterMetricNames) {
    out << ',' << name << "_mean," << name << "_ci_lo," << name << "_ci_hi";
  }
  out << '\n';
  for (const ScatterSummaryRow& row : report.summary) {
    out << row.n_players << ',' << format_double(row.p_rand);
    for (std::size_t m = 0; m < kScatterMetricNames.size(); ++m) {
      out << ',' << format_double(row.mean[m]) << ',' << format_double(row.ci_lo[m]) << ','
          << format_double(row.ci_hi[m]);
    }
    out << '\n';
  }
  finish(out, summary_path);
  return summary_path;
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << table.columns[i];
  }
  out << '\n';
  for (const std::vector<double>& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw std::invalid_argument("write_csv: row width does not match header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
  finish(out, path);
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("'" + path.string() + "' is empty (no header)");
  }
  for (const std::string& name : split_list(line, ',')) table.columns.push_back(name);

  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = split_list(line, ',');
    if (cells.size() != table.columns.size()) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                  ": expected " + std::to_string(table.columns.size()) +
                                  " cells, got " + std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      row.push_back(parse_double(cells[i], table.columns[i]));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace intrans
