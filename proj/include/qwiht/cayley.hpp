#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qwiht/group.hpp"

namespace qwiht {

// Composite basis index of |v, j> in H_v (x) H_c (vertex-major).
constexpr std::size_t composite_index(std::size_t vertex, std::size_t label, std::size_t degree) {
  return vertex * degree + label;
}

// Cayley graph of (group, generating set). Vertex v is the group element of
// index v; the edge labelled j leads from g_v to h_j . g_v (left
// multiplication by the generator).
class CayleyGraph {
 public:
  // Rejects the identity, repeated generators and generating sets whose graph
  // is not connected (the error names an unreachable vertex).
  static CayleyGraph build(FiniteGroup group, std::vector<GroupElement> generators);
  // Z2^d with generators e_0..e_{d-1} in ascending bit order, 1 <= d <= 12.
  static CayleyGraph hypercube(int d);

  const FiniteGroup& group() const { return group_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  std::size_t vertex_count() const { return group_.order(); }
  std::size_t degree() const { return generators_.size(); }
  std::size_t neighbor(std::size_t vertex, std::size_t label) const {
    return neighbors_[composite_index(vertex, label, degree())];
  }
  bool inverse_closed() const { return inverse_closed_; }
  // Non-fatal remarks gathered during construction (e.g. a directed graph).
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  CayleyGraph(FiniteGroup group, std::vector<GroupElement> generators)
      : group_(std::move(group)), generators_(std::move(generators)) {}

  FiniteGroup group_;
  std::vector<GroupElement> generators_;
  std::vector<std::size_t> neighbors_;
  bool inverse_closed_ = true;
  std::vector<std::string> warnings_;
};

// Largest BFS eccentricity over all vertices, following labelled out-edges.
std::size_t diameter(const CayleyGraph& graph);

// The shift operator as a permutation of composite indices:
// (v, j) -> (neighbor(v, j), j).
class ShiftMap {
 public:
  explicit ShiftMap(const CayleyGraph& graph);

  std::size_t size() const { return image_.size(); }
  std::size_t degree() const { return degree_; }
  std::size_t operator[](std::size_t index) const { return image_[index]; }
  const std::vector<std::size_t>& image() const { return image_; }

 private:
  std::size_t degree_;
  std::vector<std::size_t> image_;
};

inline ShiftMap shift_map(const CayleyGraph& graph) { return ShiftMap(graph); }

}  // namespace qwiht
