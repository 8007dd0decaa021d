#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qwiht {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// A bijection on [0, n) stored as its image list.
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t n);
bool is_permutation(const Permutation& p, std::size_t n);
// (a o b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

enum class CoinKind { Grover, DFT, Hadamard, Identity, Random, Custom };

std::string to_string(CoinKind kind);

inline constexpr double kUnitarityTol = 1e-12;
inline constexpr double kDefaultCpsTol = 1e-10;
inline constexpr std::size_t kMaxCpsDimension = 8;

// d x d unitary acting on the coin space.
class CoinOperator {
 public:
  // Diagonal 2/d - 1, off-diagonal 2/d. d >= 2.
  static CoinOperator grover(std::size_t d);
  // Entry (r, c) = w^{rc} / sqrt(d), w = exp(2 pi i / d), 0-based. d >= 2.
  static CoinOperator dft(std::size_t d);
  static CoinOperator hadamard();
  static CoinOperator identity(std::size_t d);
  // Haar-distributed: complex Gaussian matrix, QR, columns rephased by the
  // phases of diag(R). Deterministic for a fixed seed.
  static CoinOperator random_unitary(std::size_t d, std::uint64_t seed);
  // Any square matrix that is unitary within kUnitarityTol.
  static CoinOperator custom(Matrix matrix);

  CoinKind kind() const { return kind_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  // "grover", "dft", "random(seed=7)", ...
  std::string name() const;

 private:
  CoinOperator(CoinKind kind, Matrix matrix, std::optional<std::uint64_t> seed = std::nullopt);

  CoinKind kind_;
  Matrix matrix_;
  std::optional<std::uint64_t> seed_;
};

double unitarity_residual(const Matrix& m);

// max |(P C P^dag)_{rc} - C_{rc}| for the coin permutation P.
double coin_permutation_residual(const CoinOperator& coin, const Permutation& perm);

struct CoinPermutationSet {
  std::vector<Permutation> perms;  // lexicographic order, identity first

  std::size_t size() const { return perms.size(); }
  bool contains(const Permutation& p) const;
};

// Every permutation pi of [0, d) with P_pi C P_pi^dag = C (max-norm < tol).
// Exhaustive over d! permutations; d <= kMaxCpsDimension.
CoinPermutationSet cps_enumerate(const CoinOperator& coin, double tol = kDefaultCpsTol);

}  // namespace qwiht
