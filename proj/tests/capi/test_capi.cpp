#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "qwiht/qwiht.h"

TEST_CASE("3-cube pipeline through the C interface") {
  qw_graph* graph = nullptr;
  qw_coin* coin = nullptr;
  qw_walk* walk = nullptr;
  qw_decomposition* dec = nullptr;
  qw_iht* iht = nullptr;
  REQUIRE(qw_graph_hypercube(3, &graph) == QW_OK);
  REQUIRE(qw_coin_grover(3, &coin) == QW_OK);
  REQUIRE(qw_walk_build(graph, coin, &walk) == QW_OK);
  CHECK(qw_walk_size(walk) == 24);
  REQUIRE(qw_decompose(walk, 0.0, &dec) == QW_OK);
  CHECK(qw_decomposition_cluster_count(dec) == 6);
  const size_t final_vertex = qw_graph_default_final_vertex(graph);
  CHECK(final_vertex == 7);
  REQUIRE(qw_iht_compute(dec, graph, &final_vertex, 1, 0.0, &iht) == QW_OK);
  CHECK(qw_iht_total(iht) == 6);
  REQUIRE(qw_iht_row_count(iht) == 2);
  size_t m = 0, k = 0, v = 0;
  REQUIRE(qw_iht_row(iht, 0, &m, &k, &v) == QW_OK);
  CHECK(m == 2);
  CHECK(k == 6);
  CHECK(v == 3);

  const double* basis = nullptr;
  size_t len = 0;
  REQUIRE(qw_iht_basis(iht, &basis, &len) == QW_OK);
  CHECK(len == 24 * 6 * 2);
  double ov = 0.0;
  REQUIRE(qw_iht_overlap(iht, basis, 24, &ov) == QW_OK);
  CHECK(ov == doctest::Approx(1.0));

  std::vector<double> psi(48, 0.0), out(48, 0.0);
  psi[0] = 1.0;
  REQUIRE(qw_walk_apply(walk, psi.data(), out.data(), 24) == QW_OK);
  double norm = 0.0;
  for (double x : out) norm += x * x;
  CHECK(norm == doctest::Approx(1.0));
  double survival = 0.0, ht = 0.0;
  REQUIRE(qw_simulate(walk, &final_vertex, 1, psi.data(), 24, 5000, &survival, &ht) == QW_OK);
  CHECK(survival == doctest::Approx(0.4));
  CHECK(ht == doctest::Approx(2.48));

  qw_iht_free(iht);
  qw_decomposition_free(dec);
  qw_walk_free(walk);
  qw_coin_free(coin);
  qw_graph_free(graph);
}

TEST_CASE("coins through the C interface") {
  qw_coin* coin = nullptr;
  REQUIRE(qw_coin_dft(4, &coin) == QW_OK);
  size_t count = 0;
  REQUIRE(qw_coin_cps_count(coin, 0.0, &count) == QW_OK);
  CHECK(count == 2);
  std::vector<double> m(32);
  REQUIRE(qw_coin_matrix(coin, m.data(), m.size()) == QW_OK);
  CHECK(m[0] == doctest::Approx(0.5));
  CHECK(qw_coin_matrix(coin, m.data(), 4) == QW_ERR_ARGUMENT);
  qw_coin_free(coin);

  const double swap[] = {0, 0, 1, 0, 1, 0, 0, 0};
  REQUIRE(qw_coin_custom(2, swap, &coin) == QW_OK);
  qw_coin_free(coin);
  const double bad[] = {2, 0, 0, 0, 0, 0, 1, 0};
  CHECK(qw_coin_custom(2, bad, &coin) == QW_ERR_ARGUMENT);
  CHECK(std::string(qw_last_error()).find("unitary") != std::string::npos);
}

TEST_CASE("symmetric graphs through the C interface") {
  const int gens[] = {2, 1, 3, 4, 3, 2, 1, 4, 1, 4, 3, 2};
  qw_graph* graph = nullptr;
  REQUIRE(qw_graph_symmetric(4, gens, 3, &graph) == QW_OK);
  CHECK(qw_graph_vertex_count(graph) == 24);
  CHECK(qw_graph_degree(graph) == 3);
  size_t nb = 0;
  REQUIRE(qw_graph_neighbor(graph, 0, 0, &nb) == QW_OK);
  CHECK(nb == 6);
  CHECK(qw_graph_neighbor(graph, 24, 0, &nb) == QW_ERR_ARGUMENT);
  qw_graph_free(graph);
  const int disconnected[] = {2, 1, 3, 4};
  CHECK(qw_graph_symmetric(4, disconnected, 1, &graph) != QW_OK);
  CHECK(qw_graph_preset("nope", &graph) == QW_ERR_ARGUMENT);
}

TEST_CASE("configured runs through the C interface") {
  qw_output* out = nullptr;
  REQUIRE(qw_run_config("[graph]\npreset = cube3\n", nullptr, &out) == QW_OK);
  CHECK(std::string(qw_output_csv(out)).find("cube3,grover,6,2,3") != std::string::npos);
  CHECK(qw_output_file_count(out) == 4);
  CHECK(std::string(qw_output_file_name(out, 0)) == "cube3_grover.txt");
  CHECK(qw_output_file_name(out, 99) == nullptr);
  qw_output_free(out);

  qw_overrides o{};
  o.has_cluster_tol = 1;
  o.cluster_tol = -1.0;
  CHECK(qw_run_config("[graph]\npreset = cube3\n", &o, &out) == QW_ERR_CONFIG);
  CHECK(qw_run_config("[graph]\nkind = hypercube\nd = 3\n[coin]\ndim = 4\n", nullptr, &out) == QW_ERR_CONFIG);
  CHECK(std::string(qw_last_error()).rfind("coin.dim", 0) == 0);
  CHECK(qw_run_config("[graph]\nkind = hypercube\nd = 2\n[coin]\nkind = custom\nmatrix = 1 0; 0 0.999999999999875+5e-7i\n",
                      nullptr, &out) == QW_ERR_DEADBAND);

  REQUIRE(qw_reproduce("3", 1, 0.0, 0.0, 0, &out) == QW_OK);
  CHECK(std::string(qw_output_text(out)).find("|V| = 110") != std::string::npos);
  qw_output_free(out);
  CHECK(qw_reproduce("12", 1, 0.0, 0.0, 0, &out) == QW_ERR_ARGUMENT);
  CHECK(std::string(qw_status_name(QW_ERR_DEADBAND)) == "dead-band");
}
