#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qwiht/coin.hpp"
#include "qwiht/error.hpp"
#include "qwiht/rng.hpp"

using namespace qwiht;

TEST_CASE("xoshiro256** stream is pinned") {
  Xoshiro256 rng(1);
  CHECK(rng() == 12966619160104079557ULL);
  CHECK(rng() == 9600361134598540522ULL);
  CHECK(rng() == 10590380919521690900ULL);
  Xoshiro256 bounded(9);
  for (int i = 0; i < 1000; ++i) CHECK(bounded.below(7) < 7);
}

TEST_CASE("grover coin entries") {
  for (std::size_t d = 2; d <= 8; ++d) {
    const auto c = CoinOperator::grover(d);
    CHECK(unitarity_residual(c.matrix()) < 1e-12);
    CHECK(c.matrix()(0, 0).real() == doctest::Approx(2.0 / d - 1.0));
    CHECK(c.matrix()(0, 1).real() == doctest::Approx(2.0 / d));
  }
  CHECK_THROWS_AS(CoinOperator::grover(1), ArgumentError);
}

TEST_CASE("dft coin entries") {
  const auto c = CoinOperator::dft(3);
  const auto w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 3; ++col) CHECK(std::abs(c.matrix()(r, col) - std::pow(w, r * col) / std::sqrt(3.0)) < 1e-14);
  }
  const auto h = CoinOperator::hadamard();
  CHECK(std::abs(h.matrix()(1, 1) + 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK((h.matrix() - CoinOperator::dft(2).matrix()).norm() < 1e-15);
}

TEST_CASE("random coins are unitary and seed-reproducible") {
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto a = CoinOperator::random_unitary(d, 42);
    const auto b = CoinOperator::random_unitary(d, 42);
    const auto c = CoinOperator::random_unitary(d, 43);
    CHECK(unitarity_residual(a.matrix()) < 1e-12);
    CHECK(a.matrix() == b.matrix());
    CHECK((a.matrix() - c.matrix()).norm() > 1e-3);
  }
  CHECK(CoinOperator::random_unitary(3, 7).name() == "random(seed=7)");
}

TEST_CASE("custom coins must be unitary") {
  Matrix m(2, 2);
  m << 1, 0, 0, 1.001;
  CHECK_THROWS_AS(CoinOperator::custom(m), ArgumentError);
  m << 0, 1, 1, 0;
  CHECK(CoinOperator::custom(m).kind() == CoinKind::Custom);
}

TEST_CASE("grover coin is fixed by every permutation") {
  std::size_t factorial = 1;
  for (std::size_t d = 2; d <= 5; ++d) {
    factorial *= d;
    CHECK(cps_enumerate(CoinOperator::grover(d)).size() == factorial);
  }
}

TEST_CASE("dft coin is fixed by identity and reversal only") {
  for (std::size_t d = 3; d <= 5; ++d) {
    const auto set = cps_enumerate(CoinOperator::dft(d));
    REQUIRE(set.size() == 2);
    Permutation reversal(d);
    for (std::size_t j = 0; j < d; ++j) reversal[j] = (d - j) % d;
    CHECK(set.contains(reversal));
    CHECK(set.perms.front() == identity_permutation(d));
  }
}

TEST_CASE("random coins have trivial permutation symmetry") {
  for (std::size_t d = 3; d <= 5; ++d) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      CHECK(cps_enumerate(CoinOperator::random_unitary(d, seed)).size() == 1);
    }
  }
}

TEST_CASE("permutation helpers") {
  const Permutation a{1, 2, 0}, b{0, 2, 1};
  CHECK(compose(a, b) == Permutation{1, 0, 2});
  CHECK(compose(a, inverse(a)) == identity_permutation(3));
  CHECK_FALSE(is_permutation({0, 0, 1}, 3));
  CHECK(coin_permutation_residual(CoinOperator::dft(3), b) < 1e-12);
}
