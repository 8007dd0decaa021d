#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qwiht/walk.hpp"

namespace qwiht {

struct MeasuredWalkOptions {
  std::size_t steps = 5000;
  // Measure the initial state once at t = 0 before the first step. Off by
  // default: the walk steps first and is measured after every step.
  bool measure_initial = false;
};

// Absorbing-wall walk. arrival[t-1] is the probability of first arrival at
// step t; survival_trace[t-1] the residual norm^2 after step t.
struct MeasuredWalkResult {
  std::size_t steps = 0;
  double initial_arrival = 0.0;  // only non-zero with measure_initial
  std::vector<double> arrival;
  std::vector<double> survival_trace;
  double survival = 1.0;
};

// Iterates psi <- U psi; q_t = |Pi psi|^2; psi <- (I - Pi) psi, leaving psi
// unnormalised so q_t is an absolute probability. psi0 must be normalised.
MeasuredWalkResult simulate(const WalkUnitary& walk, const FinalProjector& projector, const WalkState& initial,
                            const MeasuredWalkOptions& options = {});

// Truncated estimate sum_t t * q_t over the simulated horizon.
double hitting_time(const MeasuredWalkResult& result);

enum class HittingVerdict { Finite, Unresolved, InfiniteCertified };

struct HittingTimeSummary {
  double truncated = 0.0;
  double survival = 0.0;
  HittingVerdict verdict = HittingVerdict::Unresolved;
};

// Finite when survival has vanished (< 1e-9); infinite-certified when the
// survival is pinned by a positive IHT overlap (survival >= overlap - 1e-9,
// overlap > 1e-9); otherwise unresolved at this horizon.
HittingTimeSummary summarize_hitting_time(const MeasuredWalkResult& result, std::optional<double> overlap = {});

const char* to_string(HittingVerdict verdict);

}  // namespace qwiht
