// qwiht: command-line front end over the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qwiht/qwiht.h"

namespace {

struct Globals {
  std::string config;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol_cluster;
  std::optional<double> tol_rank;
  std::string format = "text";
};

struct Inline {
  std::string graph;
  std::string coin;
  std::string final_set;
  std::string strategy;
  std::string sizes;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> steps;
  std::string initial;
  bool measure_initial = false;
  bool bases = false;
};

int exit_code(qw_status status) {
  switch (status) {
    case QW_OK: return 0;
    case QW_ERR_CONFIG:
    case QW_ERR_ARGUMENT: return 2;
    case QW_ERR_DEADBAND: return 3;
    case QW_ERR_INVARIANT: return 4;
    default: return 1;
  }
}

int report_failure(qw_status status) {
  std::cerr << "qwiht: " << qw_status_name(status) << ": " << qw_last_error() << "\n";
  return exit_code(status);
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Removes any [analysis] section so the subcommand can choose the analysis.
std::string strip_analysis(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  bool skipping = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '[') {
      auto name = line.substr(first + 1);
      name = name.substr(0, name.find(']'));
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      skipping = name == "analysis";
    }
    if (!skipping) out += line + "\n";
  }
  return out;
}

std::string graph_section(const std::string& spec) {
  if (spec.rfind("hypercube:", 0) == 0) return "[graph]\nkind = hypercube\nd = " + spec.substr(10) + "\n";
  if (spec.rfind("symmetric:", 0) == 0) {
    const auto rest = spec.substr(10);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw UsageError("--graph symmetric:N:GENERATORS expected");
    return "[graph]\nkind = symmetric\nn = " + rest.substr(0, colon) + "\ngenerators = " + rest.substr(colon + 1) + "\n";
  }
  return "[graph]\npreset = " + spec + "\n";
}

std::string coin_section(const std::string& spec) {
  if (spec.empty()) return "";
  const auto colon = spec.find(':');
  std::string s = "[coin]\nkind = " + spec.substr(0, colon) + "\n";
  if (colon != std::string::npos) s += "seed = " + spec.substr(colon + 1) + "\n";
  return s;
}

std::string inline_config(const Inline& in, const std::string& analysis) {
  if (in.graph.empty()) throw UsageError("either --config or --graph is required");
  std::string text = graph_section(in.graph) + coin_section(in.coin);
  if (!in.final_set.empty()) text += "[final]\nvertices = " + in.final_set + "\n";
  if (!in.strategy.empty() || !in.sizes.empty() || in.trials) {
    text += "[sweep]\n";
    if (!in.strategy.empty()) text += "strategy = " + in.strategy + "\n";
    if (!in.sizes.empty()) text += "sizes = " + in.sizes + "\n";
    if (in.trials) text += "trials = " + std::to_string(*in.trials) + "\n";
  }
  if (in.steps || !in.initial.empty() || in.measure_initial) {
    text += "[simulate]\n";
    if (in.steps) text += "steps = " + std::to_string(*in.steps) + "\n";
    if (!in.initial.empty()) text += "initial = " + in.initial + "\n";
    if (in.measure_initial) text += "measure_initial = true\n";
  }
  if (in.bases) text += "[output]\nbases = true\n";
  if (!analysis.empty()) text += "[analysis]\nrun = " + analysis + "\n";
  return text;
}

bool has_inline(const Inline& in) {
  return !in.graph.empty() || !in.coin.empty() || !in.final_set.empty() || !in.strategy.empty() || !in.sizes.empty() ||
         in.trials || in.steps || !in.initial.empty() || in.measure_initial || in.bases;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

int emit(qw_output* output, const Globals& g) {
  if (!g.out_dir.empty()) {
    const auto status = qw_output_write(output, g.out_dir.c_str());
    if (status != QW_OK) return report_failure(status);
  }
  if (g.format == "json") std::fputs(qw_output_json(output), stdout);
  else if (g.format == "csv") std::fputs(qw_output_csv(output), stdout);
  else std::fputs(qw_output_text(output), stdout);
  return 0;
}

int run_analysis(const Globals& g, const Inline& in, const std::string& analysis) {
  std::string text;
  if (!g.config.empty()) {
    if (has_inline(in)) throw UsageError("inline experiment flags cannot be combined with --config");
    text = read_file(g.config);
    if (!analysis.empty()) text = strip_analysis(text) + "[analysis]\nrun = " + analysis + "\n";
  } else {
    text = inline_config(in, analysis);
  }
  qw_overrides o{};
  if (g.seed) o.has_seed = 1, o.seed = *g.seed;
  if (g.tol_cluster) o.has_cluster_tol = 1, o.cluster_tol = *g.tol_cluster;
  if (g.tol_rank) o.has_rank_tol = 1, o.rank_tol = *g.tol_rank;
  qw_output* output = nullptr;
  const auto status = qw_run_config(text.c_str(), &o, &output);
  if (status != QW_OK) return report_failure(status);
  const int rc = emit(output, g);
  qw_output_free(output);
  return rc;
}

void add_experiment_flags(CLI::App* cmd, Inline& in) {
  cmd->add_option("--graph", in.graph, "hypercube:D, symmetric:N:GENERATORS or a preset name");
  cmd->add_option("--coin", in.coin, "grover, dft, hadamard, identity, random or random:SEED");
  cmd->add_option("--final", in.final_set, "final vertex labels, comma separated");
  cmd->add_flag("--bases", in.bases, "include IHT basis vectors in JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-walk infinite hitting time analysis"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  Globals g;
  Inline in;
  app.add_option("--config", g.config, "experiment configuration file");
  app.add_option("--out-dir", g.out_dir, "directory for output files");
  app.add_option("--seed", g.seed, "override the experiment seed");
  app.add_option("--tol-cluster", g.tol_cluster, "eigenphase clustering tolerance");
  app.add_option("--tol-rank", g.tol_rank, "relative numerical-rank tolerance");
  auto* format_opt =
      app.add_option("--format", g.format, "stdout format (sweep defaults to csv)")->check(CLI::IsMember({"text", "csv", "json"}));

  std::string analysis;
  for (const char* name : {"decompose", "iht", "cps", "symmetries", "sweep", "simulate"}) {
    auto* cmd = app.add_subcommand(name, std::string("run the ") + name + " analysis");
    add_experiment_flags(cmd, in);
    cmd->callback([&analysis, name] { analysis = name; });
    if (std::string(name) == "sweep") {
      cmd->add_option("--strategy", in.strategy, "nested or random");
      cmd->add_option("--sizes", in.sizes, "final-set sizes, e.g. all or 1-8,10");
      cmd->add_option("--trials", in.trials, "random subsets per size");
    }
    if (std::string(name) == "simulate") {
      cmd->add_option("--steps", in.steps, "number of walk steps");
      cmd->add_option("--initial", in.initial, "uniform, random, vertex:L, basis:L:j or iht:i");
      cmd->add_flag("--measure-initial", in.measure_initial, "measure once before the first step");
    }
  }

  auto* repro = app.add_subcommand("reproduce", "regenerate the decomposition tables, summary and sweep data");
  std::optional<int> table;
  bool summary = false, sweeps = false;
  std::size_t trials = 200;
  auto* table_opt = repro->add_option("--table", table, "table number 1..7")->check(CLI::Range(1, 7));
  auto* summary_opt = repro->add_flag("--summary", summary, "summary grid of |V|");
  auto* sweeps_opt = repro->add_flag("--sweeps", sweeps, "final-set sweep data");
  table_opt->excludes(summary_opt)->excludes(sweeps_opt);
  summary_opt->excludes(sweeps_opt);
  repro->add_option("--trials", trials, "random trials for the 25-vertex search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (repro->parsed()) {
      std::string target = table ? std::to_string(*table) : summary ? "summary" : sweeps ? "sweeps" : "all";
      qw_output* output = nullptr;
      const auto status = qw_reproduce(target.c_str(), g.seed.value_or(1), g.tol_cluster.value_or(0.0),
                                       g.tol_rank.value_or(0.0), trials, &output);
      if (status != QW_OK) return report_failure(status);
      const int rc = emit(output, g);
      qw_output_free(output);
      return rc;
    }
    if (analysis.empty() && g.config.empty()) {
      std::cerr << app.help();
      return 2;
    }
    if (analysis == "sweep" && format_opt->count() == 0) g.format = "csv";
    return run_analysis(g, in, analysis);
  } catch (const UsageError& e) {
    std::cerr << "qwiht: " << e.what() << "\n";
    return 2;
  }
}
