#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwiht/config.hpp"
#include "qwiht/spectral.hpp"

namespace qwiht {

// One coin section of a decomposition table: rows (m_k, k, |V_k|) with the
// totals |H| and |V|.
struct TableArtifact {
  std::string graph;
  std::string coin;
  std::vector<TableRow> rows;
  std::size_t space_dimension = 0;
  std::size_t iht_total = 0;

  bool infinite_hitting_time() const { return iht_total > 0; }
  std::string verdict() const;
  // sum m_k * k = |H| and sum m_k * |V_k| = |V|; throws InvariantError.
  void check_accounting() const;
};

TableArtifact make_table(std::string graph, std::string coin, const IhtReport& report);

// %.12g: twelve significant digits.
std::string format_number(double value);

std::string render_table_text(const std::string& title, const std::vector<TableArtifact>& sections);
std::string render_table_csv(const std::vector<TableArtifact>& sections);

struct OutputFile {
  std::string name;
  std::string content;
};

struct RunOutput {
  std::string text;  // human-readable report
  std::string csv;   // primary CSV artifact
  std::string json;  // full JSON report
  std::vector<OutputFile> files;
};

enum class OutputFormat { Text, Csv, Json };

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> cluster_tol;
  std::optional<double> rank_tol;
};

void apply_overrides(ExperimentConfig& config, const RunOverrides& overrides);

// Executes the configured analyses in dependency order. Throws the library's
// error types; an invariant violation is an InvariantError.
RunOutput run(const ExperimentConfig& config);

struct ReproduceOptions {
  std::string target = "all";  // "1".."7", "summary", "sweeps", "all"
  std::uint64_t seed = 1;
  double cluster_tol = kDefaultClusterTol;
  double rank_tol = kDefaultRankTol;
  std::size_t sweep_random_trials = 200;
};

// Regenerates the decomposition tables (graphs cube3..s4-4), the summary grid
// and the final-set sweep data.
RunOutput reproduce(const ReproduceOptions& options);

// Table number (1..7) -> preset key.
const std::string& table_preset(int table);

// Writes every file of the output into dir (created if missing). Each file is
// written to a temporary name and renamed into place.
void write_outputs(const RunOutput& output, const std::string& dir);

}  // namespace qwiht
