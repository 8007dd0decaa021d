#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "qwiht/error.hpp"

using namespace qwiht;

TEST_CASE("hypercube neighbours flip one bit") {
  const auto g = CayleyGraph::hypercube(3);
  CHECK(g.vertex_count() == 8);
  CHECK(g.degree() == 3);
  for (std::size_t v = 0; v < 8; ++v) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(g.neighbor(v, j) == (v ^ (std::size_t{1} << j)));
  }
  CHECK(diameter(g) == 3);
  CHECK(diameter(CayleyGraph::hypercube(5)) == 5);
  CHECK(g.inverse_closed());
}

TEST_CASE("symmetric Cayley graph uses left multiplication") {
  const auto s3 = FiniteGroup::symmetric(3);
  const std::vector<int> swap12{2, 1, 3}, swap13{3, 2, 1};
  const auto g = CayleyGraph::build(s3, {s3.from_one_line(swap12), s3.from_one_line(swap13)});
  CHECK(g.vertex_count() == 6);
  for (std::size_t v = 0; v < 6; ++v) {
    const auto expected = s3.compose(s3.from_one_line(swap12), s3.element(v));
    CHECK(g.neighbor(v, 0) == expected.index);
  }
  CHECK(diameter(g) == 3);
}

TEST_CASE("invalid generating sets are rejected") {
  const auto s3 = FiniteGroup::symmetric(3);
  const std::vector<int> swap12{2, 1, 3};
  CHECK_THROWS_AS(CayleyGraph::build(s3, {s3.identity(), s3.from_one_line(swap12)}), ArgumentError);
  CHECK_THROWS_AS(CayleyGraph::build(s3, {s3.from_one_line(swap12), s3.from_one_line(swap12)}), ArgumentError);
  try {
    CayleyGraph::build(s3, {s3.from_one_line(swap12)});
    FAIL("disconnected generating set accepted");
  } catch (const ArgumentError& e) {
    CHECK(std::string(e.what()).find("(1,3,2)") != std::string::npos);
  }
}

TEST_CASE("shift map is a permutation preserving labels") {
  for (const auto& key : testing::preset_keys()) {
    const auto g = testing::preset_graph(key);
    const auto s = shift_map(g);
    std::set<std::size_t> image(s.image().begin(), s.image().end());
    CHECK(image.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] % g.degree() == i % g.degree());
  }
}

TEST_CASE("preset graphs have the expected sizes") {
  const std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> expected{
      {"cube3", {8, 3}}, {"cube4", {16, 4}}, {"cube5", {32, 5}}, {"s3-2", {6, 2}},
      {"s3-3", {6, 3}},  {"s4-h1", {24, 3}}, {"s4-h2", {24, 3}}, {"s4-4", {24, 4}}};
  for (const auto& [key, size] : expected) {
    const auto g = testing::preset_graph(key);
    CHECK(g.vertex_count() == size.first);
    CHECK(g.degree() == size.second);
  }
}
