#include <doctest.h>

#include "helpers.hpp"
#include "qwiht/measured_walk.hpp"

using namespace qwiht;

namespace {

struct Cube3 {
  CayleyGraph graph = CayleyGraph::hypercube(3);
  WalkUnitary walk = WalkUnitary::build(graph, CoinOperator::grover(3));
  FinalProjector projector = FinalProjector::build(graph, {7});
};

WalkState basis_state(std::size_t index) {
  WalkState psi = WalkState::Zero(24);
  psi[static_cast<Eigen::Index>(index)] = 1.0;
  return psi;
}

}  // namespace

TEST_CASE("measured walk reference values") {
  Cube3 c;
  // Frozen from tests/oracle/reference_values.py.
  const auto basis = simulate(c.walk, c.projector, basis_state(0));
  CHECK(basis.survival == doctest::Approx(0.4).epsilon(1e-9));
  CHECK(hitting_time(basis) == doctest::Approx(2.48).epsilon(1e-9));
  const auto other = simulate(c.walk, c.projector, basis_state(5));
  CHECK(other.survival == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(hitting_time(other) == doctest::Approx(2.91).epsilon(1e-9));
  const WalkState uniform = WalkState::Constant(24, Complex(1.0 / std::sqrt(24.0), 0));
  const auto u = simulate(c.walk, c.projector, uniform);
  CHECK(u.survival < 1e-20);
  CHECK(hitting_time(u) == doctest::Approx(3.75).epsilon(1e-9));
  WalkState origin = WalkState::Zero(24);
  for (int j = 0; j < 3; ++j) origin[j] = 1.0 / std::sqrt(3.0);
  const auto o = simulate(c.walk, c.projector, origin);
  CHECK(hitting_time(o) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(summarize_hitting_time(o, 0.0).verdict == HittingVerdict::Finite);
}

TEST_CASE("probability is conserved and survival never increases") {
  Cube3 c;
  for (std::size_t i = 0; i < 24; i += 3) {
    MeasuredWalkOptions opt;
    opt.steps = 400;
    const auto r = simulate(c.walk, c.projector, basis_state(i), opt);
    double total = r.survival;
    for (double q : r.arrival) total += q;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t t = 1; t < r.survival_trace.size(); ++t) CHECK(r.survival_trace[t] <= r.survival_trace[t - 1] + 1e-15);
    CHECK(r.survival_trace.size() == 400);
  }
}

TEST_CASE("IHT basis vectors never arrive") {
  Cube3 c;
  const auto report = iht_subspace(decompose(c.walk), c.projector);
  for (Eigen::Index i = 0; i < report.basis.cols(); ++i) {
    const auto r = simulate(c.walk, c.projector, report.basis.col(i));
    CHECK(r.survival == doctest::Approx(1.0).epsilon(1e-10));
    for (double q : r.arrival) CHECK(q < 1e-18);
    CHECK(summarize_hitting_time(r, 1.0).verdict == HittingVerdict::InfiniteCertified);
  }
}

TEST_CASE("initial measurement catches amplitude already on the final set") {
  Cube3 c;
  MeasuredWalkOptions opt;
  opt.steps = 10;
  opt.measure_initial = true;
  const auto r = simulate(c.walk, c.projector, basis_state(21), opt);
  CHECK(r.initial_arrival == doctest::Approx(1.0));
  CHECK(r.survival < 1e-30);
  opt.measure_initial = false;
  CHECK(simulate(c.walk, c.projector, basis_state(21), opt).initial_arrival == 0.0);
}

TEST_CASE("hitting-time verdicts") {
  MeasuredWalkResult r;
  r.steps = 10;
  r.survival = 0.2;
  CHECK(summarize_hitting_time(r).verdict == HittingVerdict::Unresolved);
  CHECK(summarize_hitting_time(r, 0.2).verdict == HittingVerdict::InfiniteCertified);
  CHECK(summarize_hitting_time(r, 0.0).verdict == HittingVerdict::Unresolved);
  r.survival = 1e-12;
  CHECK(summarize_hitting_time(r).verdict == HittingVerdict::Finite);
}
