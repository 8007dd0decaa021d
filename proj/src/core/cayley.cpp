#include "qwiht/cayley.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "qwiht/error.hpp"

namespace qwiht {

CayleyGraph CayleyGraph::build(FiniteGroup group, std::vector<GroupElement> generators) {
  if (generators.empty()) throw ArgumentError("generating set is empty");
  const auto identity = group.identity();
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (!group.contains(generators[j])) {
      throw ArgumentError("generator " + std::to_string(j) + " is not an element of the group");
    }
    if (generators[j] == identity) {
      throw ArgumentError("generator " + std::to_string(j) + " is the identity");
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (generators[i] == generators[j]) {
        throw ArgumentError("generators " + std::to_string(i) + " and " + std::to_string(j) +
                            " are equal: " + group.label(generators[j]));
      }
    }
  }

  CayleyGraph graph(std::move(group), std::move(generators));
  const auto& g = graph.group_;
  const std::size_t n = g.order();
  const std::size_t d = graph.generators_.size();
  graph.neighbors_.resize(n * d);
  for (std::size_t v = 0; v < n; ++v) {
    const auto gv = g.element(v);
    for (std::size_t j = 0; j < d; ++j) {
      graph.neighbors_[composite_index(v, j, d)] = g.compose(graph.generators_[j], gv).index;
    }
  }

  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{identity.index};
  seen[identity.index] = true;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < d; ++j) {
      const auto w = graph.neighbor(v, j);
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  const auto unreachable = std::find(seen.begin(), seen.end(), false);
  if (unreachable != seen.end()) {
    const auto v = static_cast<std::size_t>(unreachable - seen.begin());
    throw ArgumentError("generating set does not produce a connected Cayley graph: vertex " +
                        g.label(g.element(v)) + " is unreachable from the identity");
  }

  for (const auto& h : graph.generators_) {
    const auto inv = g.inverse(h);
    if (std::find(graph.generators_.begin(), graph.generators_.end(), inv) ==
        graph.generators_.end()) {
      graph.inverse_closed_ = false;
      graph.warnings_.push_back("generating set is not inverse-closed (" + g.label(h) +
                                " has no inverse in it); the Cayley graph is directed");
      break;
    }
  }
  return graph;
}

CayleyGraph CayleyGraph::hypercube(int d) {
  if (d < 1 || d > 12) throw ArgumentError("hypercube requires 1 <= d <= 12, got d=" + std::to_string(d));
  auto group = FiniteGroup::z2_power(d);
  std::vector<GroupElement> gens;
  for (int j = 0; j < d; ++j) gens.push_back(group.from_bits(std::uint64_t{1} << j));
  return build(std::move(group), std::move(gens));
}

std::size_t diameter(const CayleyGraph& graph) {
  const std::size_t n = graph.vertex_count();
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = 0;
  std::vector<std::size_t> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < graph.degree(); ++j) {
        const auto w = graph.neighbor(v, j);
        if (dist[w] == kUnseen) {
          dist[w] = dist[v] + 1;
          best = std::max(best, dist[w]);
          queue.push_back(w);
        }
      }
    }
  }
  return best;
}

ShiftMap::ShiftMap(const CayleyGraph& graph) : degree_(graph.degree()) {
  const std::size_t d = graph.degree();
  image_.resize(graph.vertex_count() * d);
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    for (std::size_t j = 0; j < d; ++j) {
      image_[composite_index(v, j, d)] = composite_index(graph.neighbor(v, j), j, d);
    }
  }
}

}  // namespace qwiht
