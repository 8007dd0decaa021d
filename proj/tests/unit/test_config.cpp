#include <doctest.h>

#include "qwiht/config.hpp"
#include "qwiht/error.hpp"

using namespace qwiht;

namespace {

std::string config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("hypercube with grover coin gets the far corner as final vertex") {
  const auto cfg = parse_config("[graph]\nkind = hypercube\nd = 3\n[coin]\nkind = grover\n");
  CHECK(cfg.final_set == std::vector<std::size_t>{7});
  CHECK(cfg.graph.name == "cube3");
  CHECK(cfg.coin.kind == CoinKind::Grover);
  CHECK(cfg.analyses == std::vector<Analysis>{Analysis::Decompose, Analysis::Iht});
  CHECK(cfg.name == "cube3_grover");
}

TEST_CASE("cycle-notation generators expand to one-line form") {
  const auto cfg = parse_config("[graph]\nkind = symmetric\nn = 4\ngenerators = (1,2),(1,3),(2,4)\n");
  const std::vector<std::vector<int>> expected{{2, 1, 3, 4}, {3, 2, 1, 4}, {1, 4, 3, 2}};
  CHECK(cfg.graph.generators == expected);
  REQUIRE(cfg.audit.size() == 3);
  CHECK(cfg.audit[1].find("(3,2,1,4)") != std::string::npos);
  CHECK(cfg.final_set == std::vector<std::size_t>{0});
}

TEST_CASE("permutation parsing") {
  const auto cycles = parse_permutation("(1,3)", 3);
  CHECK(cycles.from_cycles);
  CHECK(cycles.one_line == std::vector<int>{3, 2, 1});
  const auto line = parse_permutation("(2,1,3)", 3);
  CHECK_FALSE(line.from_cycles);
  CHECK(line.one_line == std::vector<int>{2, 1, 3});
  CHECK(parse_permutation("(1,2)(3,4)", 4).one_line == std::vector<int>{2, 1, 4, 3});
  CHECK(parse_permutation("(1,2,3)", 4).one_line == std::vector<int>{2, 3, 1, 4});
  CHECK(parse_permutation("()", 3).one_line == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(parse_permutation("(1,5)", 4), ArgumentError);
  CHECK_THROWS_AS(parse_permutation("(1,1)", 4), ArgumentError);
}

TEST_CASE("coin dimension mismatch names both fields") {
  const auto msg = config_error("[graph]\nkind = hypercube\nd = 3\n[coin]\nkind = dft\ndim = 4\n");
  CHECK(msg.find("coin.dim") != std::string::npos);
  CHECK(msg.find("graph") != std::string::npos);
}

TEST_CASE("schema violations carry field paths") {
  CHECK(config_error("[graph]\nkind = hypercube\nd = 3\n[coin]\nkind = fancy\n").rfind("coin.kind", 0) == 0);
  CHECK(config_error("[graph]\nkind = hypercube\nd = 3\ncolour = red\n").rfind("graph.colour", 0) == 0);
  CHECK(config_error("[graph]\npreset = cube3\n[extras]\n").rfind("extras", 0) == 0);
  CHECK(config_error("[coin]\nkind = grover\n").rfind("graph", 0) == 0);
  CHECK(config_error("[graph]\npreset = cube3\n[final]\nvertices = 9\n").rfind("final.vertices", 0) == 0);
  CHECK(config_error("[graph]\npreset = cube3\n[tolerances]\nrank = -1\n").rfind("tolerances.rank", 0) == 0);
  CHECK(config_error("[graph]\npreset = cube3\n[analysis]\nrun = plot\n").rfind("analysis.run", 0) == 0);
  CHECK(config_error("[graph]\npreset = nowhere\n").rfind("graph.preset", 0) == 0);
  CHECK(config_error("[graph]\npreset = cube3\npreset = cube4\n").rfind("graph.preset", 0) == 0);
}

TEST_CASE("full document") {
  const auto cfg = parse_config(R"(# experiment
name = s3run
seed = 9
[graph]
kind = symmetric
n = 3
generators = (2,1,3), (1,3)
[coin]
kind = random
seed = 4
[final]
vertices = (1,2,3), 5
[tolerances]
cluster = 1e-6
[analysis]
run = simulate, iht, cps
[sweep]
sizes = 1-3,6
[simulate]
steps = 50
initial = basis:(2,1,3):1
[output]
bases = yes
)");
  CHECK(cfg.name == "s3run");
  CHECK(cfg.seed == 9);
  CHECK(cfg.coin.seed == 4u);
  CHECK(cfg.final_set == std::vector<std::size_t>{0, 5});
  CHECK(cfg.tolerances.cluster == 1e-6);
  CHECK(cfg.analyses == std::vector<Analysis>{Analysis::Iht, Analysis::Cps, Analysis::Simulate});
  CHECK(cfg.sweep.sizes == std::vector<std::size_t>{1, 2, 3, 6});
  CHECK(cfg.simulate.steps == 50);
  CHECK(cfg.include_bases);
}

TEST_CASE("custom coin matrices") {
  const auto cfg = parse_config("[graph]\nkind = hypercube\nd = 2\n[coin]\nkind = custom\nmatrix = 0 i; i 0\n");
  const auto coin = build_coin(cfg.coin, 2, cfg.seed);
  CHECK(coin.matrix()(0, 1) == Complex(0, 1));
  CHECK(config_error("[graph]\nkind = hypercube\nd = 2\n[coin]\nkind = custom\nmatrix = 1 1; 1 1\n").rfind("coin", 0) == 0);
}

TEST_CASE("vertex labels") {
  const auto cube = build_graph(find_preset("cube3").spec);
  CHECK(resolve_vertex(cube, "0b101") == 5);
  CHECK(resolve_vertex(cube, "6") == 6);
  const auto s4 = build_graph(find_preset("s4-h1").spec);
  CHECK(resolve_vertex(s4, "(1,2,4,3)") == 1);
  CHECK(resolve_vertex(s4, "(4,3,2,1)") == 23);
}

TEST_CASE("presets") {
  CHECK(graph_presets().size() == 8);
  const auto& h1 = find_preset("s4-h1");
  const std::vector<std::vector<int>> expected{{2, 1, 3, 4}, {3, 2, 1, 4}, {1, 4, 3, 2}};
  CHECK(h1.spec.generators == expected);
  CHECK_THROWS_AS(find_preset("cube9"), ArgumentError);
}
