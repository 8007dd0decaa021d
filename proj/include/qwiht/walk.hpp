#pragma once

#include <cstddef>
#include <vector>

#include "qwiht/cayley.hpp"
#include "qwiht/coin.hpp"

namespace qwiht {

// Amplitudes over composite indices (v, j), vertex-major. Residual states of
// the measured walk are sub-normalised, so no norm is enforced here.
using WalkState = Vector;

// Coined-walk evolution U = S (I_v (x) C), stored as the shift permutation and
// the d x d coin block.
class WalkUnitary {
 public:
  static WalkUnitary build(const CayleyGraph& graph, const CoinOperator& coin);

  std::size_t size() const { return shift_.size(); }
  std::size_t degree() const { return shift_.degree(); }
  std::size_t vertex_count() const { return size() / degree(); }
  const ShiftMap& shift() const { return shift_; }
  const CoinOperator& coin() const { return coin_; }

  WalkState apply(const WalkState& psi) const;
  WalkState apply_inverse(const WalkState& psi) const;
  // out = U psi; out must not alias psi.
  void apply_into(const WalkState& psi, WalkState& out) const;

  Matrix dense() const;

 private:
  WalkUnitary(ShiftMap shift, CoinOperator coin) : shift_(std::move(shift)), coin_(std::move(coin)) {}

  void check_size(const WalkState& psi) const;

  ShiftMap shift_;
  CoinOperator coin_;
};

// Projector onto every coin state of the vertices in the final set.
class FinalProjector {
 public:
  static FinalProjector build(std::size_t vertex_count, std::size_t degree,
                              std::vector<std::size_t> final_set);
  static FinalProjector build(const CayleyGraph& graph, std::vector<std::size_t> final_set) {
    return build(graph.vertex_count(), graph.degree(), std::move(final_set));
  }

  const std::vector<std::size_t>& final_set() const { return final_set_; }
  // Composite indices spanned, ascending; size d * |F|.
  const std::vector<std::size_t>& rows() const { return rows_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t size() const { return mask_.size(); }
  bool covers(std::size_t composite) const { return mask_[composite]; }

  // || Pi psi ||^2
  double weight(const WalkState& psi) const;
  // psi <- (I - Pi) psi
  void remove(WalkState& psi) const;
  Matrix dense() const;

 private:
  std::vector<std::size_t> final_set_;
  std::vector<std::size_t> rows_;
  std::vector<bool> mask_;
};

// Hypercube: vertex 2^d - 1. Other groups: the identity element.
std::size_t default_final_vertex(const CayleyGraph& graph);

}  // namespace qwiht
