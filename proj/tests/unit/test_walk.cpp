#include <doctest.h>

#include "helpers.hpp"
#include "qwiht/error.hpp"
#include "qwiht/rng.hpp"

using namespace qwiht;

namespace {

WalkState random_state(std::size_t n, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  WalkState psi(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const double re = rng.normal();
    psi[i] = Complex(re, rng.normal());
  }
  return psi.normalized();
}

}  // namespace

TEST_CASE("walk unitary matches the dense oracle and is unitary") {
  for (const auto& key : testing::preset_keys()) {
    const auto graph = testing::preset_graph(key);
    for (const auto& name : testing::coin_names()) {
      CAPTURE(key);
      CAPTURE(name);
      const auto coin = testing::named_coin(name, graph.degree());
      const auto walk = WalkUnitary::build(graph, coin);
      const Matrix oracle = testing::dense_oracle(graph, coin);
      const Matrix dense = walk.dense();
      CHECK((dense - oracle).norm() < 1e-12);
      const auto n = static_cast<Eigen::Index>(walk.size());
      CHECK((dense.adjoint() * dense - Matrix::Identity(n, n)).norm() < 1e-10);
      const auto psi = random_state(walk.size(), 3);
      CHECK((walk.apply(psi) - oracle * psi).norm() < 1e-12);
      CHECK((walk.apply_inverse(walk.apply(psi)) - psi).norm() < 1e-12);
      CHECK(std::abs(walk.apply(psi).norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("walk rejects a coin of the wrong size") {
  CHECK_THROWS_AS(WalkUnitary::build(CayleyGraph::hypercube(3), CoinOperator::grover(4)), ArgumentError);
}

TEST_CASE("final projector") {
  const auto graph = CayleyGraph::hypercube(3);
  const auto p = FinalProjector::build(graph, {7, 2});
  CHECK(p.final_set() == std::vector<std::size_t>{2, 7});
  CHECK(p.rows() == std::vector<std::size_t>{6, 7, 8, 21, 22, 23});
  CHECK(p.rank() == 6);
  WalkState psi = WalkState::Constant(24, Complex(1.0 / std::sqrt(24.0), 0));
  CHECK(p.weight(psi) == doctest::Approx(0.25));
  p.remove(psi);
  CHECK(p.weight(psi) == doctest::Approx(0.0));
  CHECK((p.dense() * p.dense() - p.dense()).norm() < 1e-15);
  CHECK_THROWS_AS(FinalProjector::build(graph, {}), ArgumentError);
  CHECK_THROWS_AS(FinalProjector::build(graph, {1, 1}), ArgumentError);
  CHECK_THROWS_AS(FinalProjector::build(graph, {8}), ArgumentError);
}

TEST_CASE("default final vertex") {
  CHECK(default_final_vertex(CayleyGraph::hypercube(3)) == 7);
  CHECK(default_final_vertex(CayleyGraph::hypercube(5)) == 31);
  CHECK(default_final_vertex(testing::preset_graph("s4-h1")) == 0);
}
