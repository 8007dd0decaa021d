#pragma once

#include <string>
#include <vector>

#include "qwiht/cayley.hpp"
#include "qwiht/coin.hpp"
#include "qwiht/config.hpp"
#include "qwiht/spectral.hpp"
#include "qwiht/walk.hpp"

namespace testing {

using namespace qwiht;

inline CayleyGraph preset_graph(const std::string& key) { return build_graph(find_preset(key).spec); }

inline CoinOperator named_coin(const std::string& name, std::size_t d, std::uint64_t seed = 1) {
  if (name == "grover") return CoinOperator::grover(d);
  if (name == "dft") return CoinOperator::dft(d);
  return CoinOperator::random_unitary(d, seed);
}

// Dense S (I (x) C) assembled directly from the neighbour table.
inline Matrix dense_oracle(const CayleyGraph& graph, const CoinOperator& coin) {
  const auto nv = graph.vertex_count();
  const auto d = graph.degree();
  const auto n = static_cast<Eigen::Index>(nv * d);
  Matrix shift = Matrix::Zero(n, n);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t j = 0; j < d; ++j) shift(graph.neighbor(v, j) * d + j, v * d + j) = 1.0;
  }
  Matrix block = Matrix::Zero(n, n);
  for (std::size_t v = 0; v < nv; ++v) block.block(v * d, v * d, d, d) = coin.matrix();
  return shift * block;
}

inline const std::vector<std::string>& preset_keys() {
  static const std::vector<std::string> keys{"cube3", "cube4", "cube5", "s3-2", "s3-3", "s4-h1", "s4-h2", "s4-4"};
  return keys;
}

inline const std::vector<std::string>& coin_names() {
  static const std::vector<std::string> names{"grover", "dft", "random"};
  return names;
}

inline IhtReport analyse(const CayleyGraph& graph, const CoinOperator& coin) {
  const auto walk = WalkUnitary::build(graph, coin);
  const auto dec = decompose(walk);
  return iht_subspace(dec, FinalProjector::build(graph, {default_final_vertex(graph)}));
}

}  // namespace testing
