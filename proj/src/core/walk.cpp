#include "qwiht/walk.hpp"

#include <algorithm>

#include "qwiht/error.hpp"

namespace qwiht {

WalkUnitary WalkUnitary::build(const CayleyGraph& graph, const CoinOperator& coin) {
  if (coin.dim() != graph.degree()) {
    throw ArgumentError("coin dimension " + std::to_string(coin.dim()) +
                        " does not match graph degree " + std::to_string(graph.degree()));
  }
  return WalkUnitary(ShiftMap(graph), coin);
}

void WalkUnitary::check_size(const WalkState& psi) const {
  if (static_cast<std::size_t>(psi.size()) != size()) {
    throw ArgumentError("state has dimension " + std::to_string(psi.size()) + ", walk has " +
                        std::to_string(size()));
  }
}

void WalkUnitary::apply_into(const WalkState& psi, WalkState& out) const {
  check_size(psi);
  const std::size_t d = degree();
  const Matrix& c = coin_.matrix();
  out.resize(psi.size());
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    const std::size_t base = v * d;
    for (std::size_t j = 0; j < d; ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < d; ++k) acc += c(j, k) * psi[base + k];
      out[shift_[base + j]] = acc;
    }
  }
}

WalkState WalkUnitary::apply(const WalkState& psi) const {
  WalkState out;
  apply_into(psi, out);
  return out;
}

WalkState WalkUnitary::apply_inverse(const WalkState& psi) const {
  check_size(psi);
  const std::size_t d = degree();
  WalkState pulled(psi.size());
  for (std::size_t i = 0; i < size(); ++i) pulled[i] = psi[shift_[i]];
  const Matrix& c = coin_.matrix();
  WalkState out(psi.size());
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    const std::size_t base = v * d;
    for (std::size_t j = 0; j < d; ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < d; ++k) acc += std::conj(c(k, j)) * pulled[base + k];
      out[base + j] = acc;
    }
  }
  return out;
}

Matrix WalkUnitary::dense() const {
  const std::size_t n = size();
  const std::size_t d = degree();
  const Matrix& c = coin_.matrix();
  Matrix u = Matrix::Zero(n, n);
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t row = shift_[v * d + j];
      for (std::size_t k = 0; k < d; ++k) u(row, v * d + k) = c(j, k);
    }
  }
  return u;
}

FinalProjector FinalProjector::build(std::size_t vertex_count, std::size_t degree,
                                     std::vector<std::size_t> final_set) {
  if (final_set.empty()) throw ArgumentError("final vertex set is empty");
  std::sort(final_set.begin(), final_set.end());
  if (std::adjacent_find(final_set.begin(), final_set.end()) != final_set.end()) {
    throw ArgumentError("final vertex set contains a repeated vertex");
  }
  if (final_set.back() >= vertex_count) {
    throw ArgumentError("final vertex " + std::to_string(final_set.back()) +
                        " out of range for " + std::to_string(vertex_count) + " vertices");
  }
  FinalProjector proj;
  proj.mask_.assign(vertex_count * degree, false);
  for (auto v : final_set) {
    for (std::size_t j = 0; j < degree; ++j) {
      proj.rows_.push_back(composite_index(v, j, degree));
      proj.mask_[composite_index(v, j, degree)] = true;
    }
  }
  proj.final_set_ = std::move(final_set);
  return proj;
}

double FinalProjector::weight(const WalkState& psi) const {
  double w = 0.0;
  for (auto r : rows_) w += std::norm(psi[r]);
  return w;
}

void FinalProjector::remove(WalkState& psi) const {
  for (auto r : rows_) psi[r] = Complex(0.0, 0.0);
}

Matrix FinalProjector::dense() const {
  Matrix p = Matrix::Zero(size(), size());
  for (auto r : rows_) p(r, r) = 1.0;
  return p;
}

std::size_t default_final_vertex(const CayleyGraph& graph) {
  if (graph.group().kind() == GroupKind::Z2Power) return graph.vertex_count() - 1;
  return graph.group().identity().index;
}

}  // namespace qwiht
