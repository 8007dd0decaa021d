#include "qwiht/coin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qwiht/error.hpp"
#include "qwiht/rng.hpp"

namespace qwiht {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

bool is_permutation(const Permutation& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = i;
  return out;
}

std::string to_string(CoinKind kind) {
  switch (kind) {
    case CoinKind::Grover: return "grover";
    case CoinKind::DFT: return "dft";
    case CoinKind::Hadamard: return "hadamard";
    case CoinKind::Identity: return "identity";
    case CoinKind::Random: return "random";
    case CoinKind::Custom: return "custom";
  }
  return "unknown";
}

double unitarity_residual(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  const Matrix gram = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  return gram.cwiseAbs().maxCoeff();
}

CoinOperator::CoinOperator(CoinKind kind, Matrix matrix, std::optional<std::uint64_t> seed)
    : kind_(kind), matrix_(std::move(matrix)), seed_(seed) {
  if (const double r = unitarity_residual(matrix_); !(r < kUnitarityTol)) {
    const auto message = to_string(kind_) + " coin is not unitary (residual " + std::to_string(r) + ")";
    if (kind_ == CoinKind::Custom) throw ArgumentError(message);
    throw InvariantError(message);
  }
}

CoinOperator CoinOperator::grover(std::size_t d) {
  if (d < 2) throw ArgumentError("grover coin requires d >= 2");
  const double b = 2.0 / static_cast<double>(d);
  Matrix m = Matrix::Constant(d, d, Complex(b, 0.0));
  m.diagonal().array() = Complex(b - 1.0, 0.0);
  return CoinOperator(CoinKind::Grover, std::move(m));
}

CoinOperator CoinOperator::dft(std::size_t d) {
  if (d < 2) throw ArgumentError("dft coin requires d >= 2");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  Matrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      // Reduce the exponent mod d so large powers do not lose phase accuracy.
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((r * c) % d) / static_cast<double>(d);
      m(r, c) = std::polar(scale, angle);
    }
  }
  return CoinOperator(CoinKind::DFT, std::move(m));
}

CoinOperator CoinOperator::hadamard() {
  auto coin = dft(2);
  coin.kind_ = CoinKind::Hadamard;
  return coin;
}

CoinOperator CoinOperator::identity(std::size_t d) {
  if (d < 1) throw ArgumentError("identity coin requires d >= 1");
  return CoinOperator(CoinKind::Identity, Matrix::Identity(d, d));
}

CoinOperator CoinOperator::random_unitary(std::size_t d, std::uint64_t seed) {
  if (d < 2) throw ArgumentError("random coin requires d >= 2");
  Xoshiro256 rng(seed);
  Matrix z(d, d);
  // Row-major fill, real part then imaginary part of each entry.
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(r, c) = Complex(re, im) * (1.0 / std::numbers::sqrt2);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix& r = qr.matrixQR();
  for (std::size_t j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    q.col(j) *= mag > 0.0 ? diag / mag : Complex(1.0, 0.0);
  }
  return CoinOperator(CoinKind::Random, std::move(q), seed);
}

CoinOperator CoinOperator::custom(Matrix matrix) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
    throw ArgumentError("custom coin must be a non-empty square matrix");
  }
  return CoinOperator(CoinKind::Custom, std::move(matrix));
}

std::string CoinOperator::name() const {
  if (kind_ == CoinKind::Random && seed_) return "random(seed=" + std::to_string(*seed_) + ")";
  return to_string(kind_);
}

double coin_permutation_residual(const CoinOperator& coin, const Permutation& perm) {
  const auto d = coin.dim();
  if (!is_permutation(perm, d)) throw ArgumentError("coin permutation is not a bijection on [0, d)");
  const Matrix& c = coin.matrix();
  double worst = 0.0;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      worst = std::max(worst, std::abs(c(perm[r], perm[k]) - c(r, k)));
    }
  }
  return worst;
}

bool CoinPermutationSet::contains(const Permutation& p) const {
  return std::find(perms.begin(), perms.end(), p) != perms.end();
}

CoinPermutationSet cps_enumerate(const CoinOperator& coin, double tol) {
  const auto d = coin.dim();
  if (d > kMaxCpsDimension) {
    throw ArgumentError("exhaustive coin-permutation search supports d <= " +
                        std::to_string(kMaxCpsDimension) + ", got d=" + std::to_string(d));
  }
  if (!(tol > 0.0)) throw ArgumentError("cps tolerance must be positive");
  CoinPermutationSet out;
  auto perm = identity_permutation(d);
  do {
    if (coin_permutation_residual(coin, perm) < tol) out.perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace qwiht
