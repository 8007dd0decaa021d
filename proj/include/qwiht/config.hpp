#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwiht/cayley.hpp"
#include "qwiht/coin.hpp"
#include "qwiht/spectral.hpp"

namespace qwiht {

// Experiment configuration documents are INI-style:
//
//   name = cube3            # top-level keys: name, seed
//   [graph]   preset | kind (hypercube|symmetric|table), d, n, generators, table
//   [coin]    kind (grover|dft|hadamard|identity|random|custom), dim, seed, matrix
//   [final]   vertices
//   [tolerances] cluster, rank, cps
//   [analysis] run = decompose, iht, cps, symmetries, sweep, simulate
//   [sweep]   strategy (nested|random), sizes, trials, seed
//   [simulate] steps, initial, seed, measure_initial
//   [output]  bases
//
// The full grammar is documented in docs/config.md.

enum class GraphKind { Hypercube, Symmetric, Table };

struct GraphSpec {
  GraphKind kind = GraphKind::Hypercube;
  std::string name;                         // short identifier used in outputs
  int d = 3;                                // hypercube
  int n = 3;                                // symmetric
  std::vector<std::vector<int>> generators; // symmetric, one-line form
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> table_generators;
};

struct CoinSpec {
  CoinKind kind = CoinKind::Grover;
  std::optional<std::size_t> dim;
  std::optional<std::uint64_t> seed;
  Matrix matrix;  // custom only
};

struct Tolerances {
  double cluster = kDefaultClusterTol;
  double rank = kDefaultRankTol;
  double cps = kDefaultCpsTol;
};

enum class Analysis { Decompose, Iht, Cps, Symmetries, Sweep, Simulate };

std::string to_string(Analysis analysis);

struct SweepSpec {
  SweepStrategy strategy = SweepStrategy::NestedDescending;
  std::vector<std::size_t> sizes;  // empty: 1..|G|
  std::size_t trials = 200;
  std::optional<std::uint64_t> seed;
};

struct SimulateSpec {
  std::size_t steps = 5000;
  std::string initial = "uniform";
  std::optional<std::uint64_t> seed;
  bool measure_initial = false;
};

struct ExperimentConfig {
  std::string name;
  std::uint64_t seed = 1;
  GraphSpec graph;
  CoinSpec coin;
  std::vector<std::size_t> final_set;  // resolved vertex indices
  Tolerances tolerances;
  std::vector<Analysis> analyses;
  SweepSpec sweep;
  SimulateSpec simulate;
  bool include_bases = false;
  // Human-readable notes on how the input was interpreted, e.g. the one-line
  // expansion of cycle-notation generators.
  std::vector<std::string> audit;
};

// Parses and validates a configuration document, filling defaults. Every
// failure is a ConfigError whose message starts with the offending field
// path, e.g. "coin.dim: ...".
ExperimentConfig parse_config(std::string_view text);

// Parses "(2,1,3,4)" (one-line, exactly n entries) or cycle notation
// "(1,2)", "(1,2)(3,4)", "()" into a 1-based one-line permutation of size n.
struct ParsedPermutation {
  std::vector<int> one_line;
  bool from_cycles = false;
};
ParsedPermutation parse_permutation(std::string_view text, int n);

// Named graphs from the reproduction set.
struct GraphPreset {
  std::string key;
  std::string title;
  GraphSpec spec;
};
const std::vector<GraphPreset>& graph_presets();
const GraphPreset& find_preset(std::string_view key);

CayleyGraph build_graph(const GraphSpec& spec);
CoinOperator build_coin(const CoinSpec& spec, std::size_t degree, std::uint64_t default_seed);

// Vertex label: decimal index, "0b" bitstring (hypercube) or one-line tuple
// (symmetric).
std::size_t resolve_vertex(const CayleyGraph& graph, std::string_view label);

}  // namespace qwiht
