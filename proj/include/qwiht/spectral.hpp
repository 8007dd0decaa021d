#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qwiht/walk.hpp"

namespace qwiht {

inline constexpr double kDefaultClusterTol = 1e-7;
inline constexpr double kDefaultRankTol = 1e-8;
inline constexpr std::size_t kDefaultSpectralCap = 4096;

// One degenerate eigenspace: eigenvalue exp(i * phase) with an orthonormal
// N x k basis.
struct EigenCluster {
  double phase = 0.0;  // in [0, 2 pi)
  Matrix basis;

  std::size_t multiplicity() const { return static_cast<std::size_t>(basis.cols()); }
};

struct EigenspaceDecomposition {
  std::size_t dimension = 0;
  std::vector<EigenCluster> clusters;  // ascending phase
};

// Full Schur-based eigendecomposition of the dense walk unitary, with
// eigenphases grouped into clusters wherever adjacent sorted phases (including
// the pair across 2 pi) are closer than cluster_tol.
//
// Throws DeadBandError when any phase gap lies in [cluster_tol/10,
// cluster_tol*10], since cluster membership is then ambiguous, and
// InvariantError when an eigen-residual exceeds 1e-8.
EigenspaceDecomposition decompose(const WalkUnitary& walk, double cluster_tol = kDefaultClusterTol,
                                  std::size_t cap = kDefaultSpectralCap);

struct ClusterIht {
  double phase = 0.0;
  std::size_t dimension = 0;      // k
  std::size_t iht_dimension = 0;  // |V_k|
};

// (m_k, k, |V_k|): m_k eigenspaces of dimension k, each contributing |V_k|.
struct TableRow {
  std::size_t count = 0;
  std::size_t dimension = 0;
  std::size_t iht_dimension = 0;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct IhtReport {
  std::size_t space_dimension = 0;  // N
  std::vector<std::size_t> final_set;
  std::vector<ClusterIht> per_cluster;
  std::size_t total = 0;            // |V|
  Matrix basis;                     // N x |V|, orthonormal
  std::vector<TableRow> table_rows; // k descending, then |V_k| descending
};

// Per eigenspace with basis B, restricts B to the final-set rows and counts
// the kernel of that restriction; the IHT basis is B times the kernel basis.
// Numerical rank uses the threshold rank_tol * max(sigma_max, 1); a singular
// value within a factor 100 of it raises DeadBandError.
IhtReport iht_subspace(const EigenspaceDecomposition& decomposition, const FinalProjector& projector,
                       double rank_tol = kDefaultRankTol);

std::vector<TableRow> aggregate_rows(const std::vector<ClusterIht>& clusters);

// Probability that a walk started in psi never reaches the final set:
// sum over IHT basis vectors of |<psi|V_i>|^2. psi must be normalised (1e-9).
double overlap(const WalkState& psi, const IhtReport& report);

// Largest U-invariant subspace inside ker(Pi), by the refinement
// D_{t+1} = D_t intersect U^{-1} D_t starting from D_0 = ker(Pi). Uses only
// matrix products and SVDs, so it is independent of the eigen route above.
Matrix dark_subspace_oracle(const WalkUnitary& walk, const FinalProjector& projector,
                            double tol = kDefaultRankTol, std::size_t cap = kDefaultSpectralCap);

// Sine of the largest principal angle between two subspaces given by
// orthonormal bases of equal dimension (1 if the dimensions differ).
double max_principal_angle_sine(const Matrix& a, const Matrix& b);

enum class SweepStrategy { NestedDescending, Random };

struct SweepOptions {
  SweepStrategy strategy = SweepStrategy::NestedDescending;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::size_t start_vertex = 0;  // first vertex of the nested sequence
  double rank_tol = kDefaultRankTol;
};

struct SweepPoint {
  std::size_t final_count = 0;
  std::size_t iht_dimension = 0;
  std::vector<std::size_t> witness;  // the final set achieving iht_dimension
};

// Nested-descending: F_s = {start, start-1, ...} (mod |G|), first s vertices.
// Random: for each size, the best |V| over `trials` subsets, trial t drawn
// from a generator seeded with seed + t.
std::vector<SweepPoint> sweep_final_sets(const EigenspaceDecomposition& decomposition,
                                         std::size_t vertex_count, std::size_t degree,
                                         const SweepOptions& options,
                                         std::span<const std::size_t> sizes);
std::vector<SweepPoint> sweep_final_sets(const WalkUnitary& walk, const SweepOptions& options,
                                         std::span<const std::size_t> sizes,
                                         double cluster_tol = kDefaultClusterTol);

}  // namespace qwiht
