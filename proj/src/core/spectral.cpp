#include "qwiht/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qwiht/error.hpp"
#include "qwiht/rng.hpp"

namespace qwiht {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEigenResidualTol = 1e-8;
constexpr double kClusterGramTol = 1e-10;
constexpr double kIhtFinalAmplitudeTol = 1e-9;

double wrap_phase(double phase) {
  double p = std::fmod(phase, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  if (p >= kTwoPi) p = 0.0;
  return p;
}

Matrix orthonormalize(const Matrix& columns) {
  Eigen::HouseholderQR<Matrix> qr(columns);
  return qr.householderQ() * Matrix::Identity(columns.rows(), columns.cols());
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// Columns of V spanning the numerical kernel of m.
struct Kernel {
  std::size_t rank = 0;
  Matrix basis;
};

Kernel numerical_kernel(const Matrix& m, double rank_tol, const char* context) {
  const auto cols = m.cols();
  Kernel out;
  if (m.rows() == 0) {
    out.basis = Matrix::Identity(cols, cols);
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double largest = sigma.size() > 0 ? sigma(0) : 0.0;
  const double threshold = rank_tol * std::max(largest, 1.0);
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold / 100.0 && sigma(i) < threshold * 100.0) {
      throw DeadBandError(std::string(context) + ": singular value " + fmt(sigma(i)) +
                          " is within a factor 100 of the rank threshold " + fmt(threshold) +
                          "; choose an explicit rank tolerance");
    }
    if (sigma(i) > threshold) ++out.rank;
  }
  const auto nullity = cols - static_cast<Eigen::Index>(out.rank);
  out.basis = svd.matrixV().rightCols(nullity);
  return out;
}

}  // namespace

EigenspaceDecomposition decompose(const WalkUnitary& walk, double cluster_tol, std::size_t cap) {
  const std::size_t n = walk.size();
  if (n > cap) {
    throw ArgumentError("walk dimension " + std::to_string(n) + " exceeds spectral cap " +
                        std::to_string(cap));
  }
  if (!(cluster_tol > 0.0)) throw ArgumentError("cluster tolerance must be positive");

  const Matrix u = walk.dense();
  Eigen::ComplexSchur<Matrix> schur(u);
  if (schur.info() != Eigen::Success) throw InvariantError("Schur decomposition did not converge");
  const Matrix& t = schur.matrixT();
  const Matrix& z = schur.matrixU();

  std::vector<double> phase(n);
  for (std::size_t i = 0; i < n; ++i) phase[i] = wrap_phase(std::arg(t(i, i)));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return phase[a] < phase[b]; });

  const auto ambiguous = [&](double gap) { return gap >= cluster_tol / 10.0 && gap <= cluster_tol * 10.0; };

  // Split sorted phases into runs wherever the gap reaches the tolerance.
  std::vector<std::vector<std::size_t>> runs{{order[0]}};
  for (std::size_t i = 1; i < n; ++i) {
    const double gap = phase[order[i]] - phase[order[i - 1]];
    if (ambiguous(gap)) {
      throw DeadBandError("eigenphase gap " + fmt(gap) + " near phase " + fmt(phase[order[i]]) +
                          " is ambiguous for cluster tolerance " + fmt(cluster_tol));
    }
    if (gap < cluster_tol) {
      runs.back().push_back(order[i]);
    } else {
      runs.push_back({order[i]});
    }
  }
  if (n > 1) {
    const double wrap_gap = phase[order[0]] + kTwoPi - phase[order[n - 1]];
    if (ambiguous(wrap_gap)) {
      throw DeadBandError("eigenphase gap across 2 pi (" + fmt(wrap_gap) +
                          ") is ambiguous for cluster tolerance " + fmt(cluster_tol));
    }
    if (wrap_gap < cluster_tol && runs.size() > 1) {
      auto& first = runs.front();
      first.insert(first.begin(), runs.back().begin(), runs.back().end());
      runs.pop_back();
    }
  }

  EigenspaceDecomposition out;
  out.dimension = n;
  for (const auto& run : runs) {
    Matrix raw(n, static_cast<Eigen::Index>(run.size()));
    Complex mean(0.0, 0.0);
    for (std::size_t c = 0; c < run.size(); ++c) {
      raw.col(static_cast<Eigen::Index>(c)) = z.col(static_cast<Eigen::Index>(run[c]));
      mean += t(run[c], run[c]);
    }
    EigenCluster cluster;
    cluster.phase = wrap_phase(std::arg(mean));
    cluster.basis = orthonormalize(raw);

    const auto k = cluster.basis.cols();
    const double gram = (cluster.basis.adjoint() * cluster.basis - Matrix::Identity(k, k)).cwiseAbs().maxCoeff();
    if (gram > kClusterGramTol) {
      throw InvariantError("cluster basis at phase " + fmt(cluster.phase) + " is not orthonormal (" + fmt(gram) + ")");
    }
    const Complex lambda = std::polar(1.0, cluster.phase);
    const Matrix residual = u * cluster.basis - lambda * cluster.basis;
    for (Eigen::Index c = 0; c < k; ++c) {
      if (const double r = residual.col(c).norm(); r > kEigenResidualTol) {
        throw InvariantError("eigenvector residual " + fmt(r) + " at phase " + fmt(cluster.phase) +
                             " exceeds " + fmt(kEigenResidualTol));
      }
    }
    out.clusters.push_back(std::move(cluster));
  }
  std::stable_sort(out.clusters.begin(), out.clusters.end(),
                   [](const EigenCluster& a, const EigenCluster& b) { return a.phase < b.phase; });
  return out;
}

std::vector<TableRow> aggregate_rows(const std::vector<ClusterIht>& clusters) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t, std::greater<>> counts;
  for (const auto& c : clusters) ++counts[{c.dimension, c.iht_dimension}];
  std::vector<TableRow> rows;
  for (const auto& [key, count] : counts) rows.push_back({count, key.first, key.second});
  return rows;
}

IhtReport iht_subspace(const EigenspaceDecomposition& decomposition, const FinalProjector& projector,
                       double rank_tol) {
  if (projector.size() != decomposition.dimension) {
    throw ArgumentError("final projector dimension " + std::to_string(projector.size()) +
                        " does not match decomposition dimension " + std::to_string(decomposition.dimension));
  }
  if (!(rank_tol > 0.0)) throw ArgumentError("rank tolerance must be positive");

  const auto& rows = projector.rows();
  const auto n = static_cast<Eigen::Index>(decomposition.dimension);
  IhtReport report;
  report.space_dimension = decomposition.dimension;
  report.final_set = projector.final_set();

  std::vector<Matrix> pieces;
  for (const auto& cluster : decomposition.clusters) {
    const auto k = cluster.basis.cols();
    Matrix restricted(static_cast<Eigen::Index>(rows.size()), k);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      restricted.row(static_cast<Eigen::Index>(r)) = cluster.basis.row(static_cast<Eigen::Index>(rows[r]));
    }
    const auto kernel = numerical_kernel(restricted, rank_tol, "IHT rank");
    const auto nullity = static_cast<std::size_t>(kernel.basis.cols());
    if (static_cast<std::size_t>(k) > rows.size() && nullity < static_cast<std::size_t>(k) - rows.size()) {
      throw InvariantError("eigenspace of dimension " + std::to_string(k) + " has IHT dimension " +
                           std::to_string(nullity) + " below k - d|F|");
    }
    report.per_cluster.push_back({cluster.phase, static_cast<std::size_t>(k), nullity});
    report.total += nullity;
    if (nullity > 0) pieces.push_back(cluster.basis * kernel.basis);
  }

  report.basis.resize(n, static_cast<Eigen::Index>(report.total));
  Eigen::Index col = 0;
  for (const auto& piece : pieces) {
    report.basis.middleCols(col, piece.cols()) = piece;
    col += piece.cols();
  }
  for (auto r : rows) {
    for (Eigen::Index c = 0; c < report.basis.cols(); ++c) {
      if (std::abs(report.basis(static_cast<Eigen::Index>(r), c)) > kIhtFinalAmplitudeTol) {
        throw InvariantError("IHT basis vector has amplitude on the final set");
      }
    }
  }
  report.table_rows = aggregate_rows(report.per_cluster);
  return report;
}

double overlap(const WalkState& psi, const IhtReport& report) {
  if (static_cast<std::size_t>(psi.size()) != report.space_dimension) {
    throw ArgumentError("state dimension does not match the IHT report");
  }
  const double norm2 = psi.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-9) {
    throw ArgumentError("overlap requires a normalised state (|psi|^2 = " + fmt(norm2) + ")");
  }
  if (report.total == 0) return 0.0;
  const double value = (report.basis.adjoint() * psi).squaredNorm();
  return std::clamp(value, 0.0, 1.0);
}

Matrix dark_subspace_oracle(const WalkUnitary& walk, const FinalProjector& projector, double tol,
                            std::size_t cap) {
  const std::size_t n = walk.size();
  if (n > cap) throw ArgumentError("walk dimension exceeds oracle cap");
  if (projector.size() != n) throw ArgumentError("final projector does not match the walk");

  Matrix q = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n - projector.rank()));
  Eigen::Index col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!projector.covers(i)) q(static_cast<Eigen::Index>(i), col++) = 1.0;
  }
  const Matrix u = walk.dense();
  for (std::size_t iteration = 0; iteration <= n; ++iteration) {
    if (q.cols() == 0) return q;
    const Matrix uq = u * q;
    // Component of U q leaving span(q); x = q a stays invariant iff this
    // vanishes on a.
    const Matrix leak = uq - q * (q.adjoint() * uq);
    const auto kernel = numerical_kernel(leak, tol, "dark subspace");
    if (kernel.rank == 0) return q;
    q = orthonormalize(q * kernel.basis);
  }
  throw InvariantError("dark subspace refinement did not stabilise within N iterations");
}

double max_principal_angle_sine(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.rows() != b.rows()) return 1.0;
  if (a.cols() == 0) return 0.0;
  const Matrix residual = b - a * (a.adjoint() * b);
  Eigen::JacobiSVD<Matrix> svd(residual);
  return std::min(1.0, svd.singularValues()(0));
}

std::vector<SweepPoint> sweep_final_sets(const EigenspaceDecomposition& decomposition,
                                         std::size_t vertex_count, std::size_t degree,
                                         const SweepOptions& options,
                                         std::span<const std::size_t> sizes) {
  if (vertex_count * degree != decomposition.dimension) {
    throw ArgumentError("sweep graph shape does not match the decomposition");
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1 || sizes[i] > vertex_count || (i > 0 && sizes[i] <= sizes[i - 1])) {
      throw ArgumentError("sweep sizes must be strictly ascending within [1, |G|]");
    }
  }
  if (options.start_vertex >= vertex_count) throw ArgumentError("sweep start vertex out of range");

  const auto evaluate = [&](std::vector<std::size_t> set) {
    const auto proj = FinalProjector::build(vertex_count, degree, std::move(set));
    return iht_subspace(decomposition, proj, options.rank_tol).total;
  };

  std::vector<SweepPoint> out;
  if (options.strategy == SweepStrategy::NestedDescending) {
    std::vector<std::size_t> sequence(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) {
      sequence[i] = (options.start_vertex + vertex_count - i) % vertex_count;
    }
    for (auto s : sizes) {
      std::vector<std::size_t> set(sequence.begin(), sequence.begin() + static_cast<std::ptrdiff_t>(s));
      SweepPoint point{s, evaluate(set), set};
      std::sort(point.witness.begin(), point.witness.end());
      out.push_back(std::move(point));
    }
    return out;
  }

  if (options.trials == 0) throw ArgumentError("random sweep needs at least one trial");
  for (auto s : sizes) {
    SweepPoint best{s, 0, {}};
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
      Xoshiro256 rng(options.seed + trial);
      std::vector<std::size_t> pool(vertex_count);
      std::iota(pool.begin(), pool.end(), std::size_t{0});
      for (std::size_t i = 0; i < s; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(vertex_count - i));
        std::swap(pool[i], pool[j]);
      }
      std::vector<std::size_t> set(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(s));
      std::sort(set.begin(), set.end());
      const auto v = evaluate(set);
      if (best.witness.empty() || v > best.iht_dimension) {
        best.iht_dimension = v;
        best.witness = std::move(set);
      }
    }
    out.push_back(std::move(best));
  }
  return out;
}

std::vector<SweepPoint> sweep_final_sets(const WalkUnitary& walk, const SweepOptions& options,
                                         std::span<const std::size_t> sizes, double cluster_tol) {
  const auto decomposition = decompose(walk, cluster_tol);
  return sweep_final_sets(decomposition, walk.vertex_count(), walk.degree(), options, sizes);
}

}  // namespace qwiht
