#include <doctest.h>

#include "helpers.hpp"
#include "qwiht/symmetry.hpp"

using namespace qwiht;

namespace {

Matrix joint_matrix(const JointPermutation& p, std::size_t d) {
  const auto nv = p.vertex_perm.size();
  const auto n = static_cast<Eigen::Index>(nv * d);
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t j = 0; j < d; ++j) m(p.vertex_perm[v] * d + p.coin_perm[j], v * d + j) = 1.0;
  }
  return m;
}

}  // namespace

TEST_CASE("3-cube symmetry counts") {
  const auto graph = CayleyGraph::hypercube(3);
  const auto grover = classify(graph, CoinOperator::grover(3));
  CHECK(grover.a1_count() == 8);
  CHECK(grover.a2_count() == 48);
  CHECK(grover.w2_count() == 48);
  CHECK(grover.coin_perms_w2.size() == 6);
  const auto dft = classify(graph, CoinOperator::dft(3));
  CHECK(dft.a2_count() == 48);
  CHECK(dft.w2_count() == 16);
  CHECK(dft.coin_perms_w2.size() == 2);
  const auto random = classify(graph, CoinOperator::random_unitary(3, 4));
  CHECK(random.w2_count() == 8);
  CHECK(random.coin_perms_w2.size() == 1);
}

TEST_CASE("right translations commute with every walk") {
  for (const auto& key : testing::preset_keys()) {
    const auto graph = testing::preset_graph(key);
    const auto coin = CoinOperator::random_unitary(graph.degree(), 11);
    const auto report = classify(graph, coin);
    CHECK(report.a1_count() == graph.vertex_count());
    for (const auto& p : report.a1) CHECK(is_walk_symmetry(p, graph, coin));
  }
}

TEST_CASE("non-automorphisms are rejected") {
  const auto graph = CayleyGraph::hypercube(3);
  JointPermutation p{{1, 0, 2, 3, 4, 5, 6, 7}, identity_permutation(3)};
  CHECK_FALSE(is_shift_automorphism(p, graph));
  JointPermutation q{identity_permutation(8), {1, 0, 2}};
  CHECK_FALSE(is_shift_automorphism(q, graph));
}

TEST_CASE("walk symmetries commute with U and preserve eigenspaces") {
  for (const auto& key : {"cube3", "s3-3", "s4-h1"}) {
    const auto graph = testing::preset_graph(key);
    for (const auto& name : {"grover", "dft"}) {
      CAPTURE(key);
      CAPTURE(name);
      const auto coin = testing::named_coin(name, graph.degree());
      const auto walk = WalkUnitary::build(graph, coin);
      const Matrix u = walk.dense();
      const auto dec = decompose(walk);
      const auto report = classify(graph, coin);
      std::size_t checked = 0;
      for (const auto& p : report.w2) {
        if (checked++ % 7 != 0) continue;
        const Matrix pm = joint_matrix(p, graph.degree());
        CHECK((pm * u * pm.adjoint() - u).norm() < 1e-10);
        for (const auto& c : dec.clusters) {
          const Matrix moved = pm * c.basis;
          CHECK((moved - c.basis * (c.basis.adjoint() * moved)).norm() < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("composition applies the right factor first") {
  JointPermutation a{{1, 2, 0}, {1, 0}};
  JointPermutation b{{0, 2, 1}, {0, 1}};
  const auto ab = compose(a, b);
  CHECK(ab.vertex_perm == Permutation{1, 0, 2});
  CHECK(ab.coin_perm == Permutation{1, 0});
}
