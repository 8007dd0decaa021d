#include "qwiht/measured_walk.hpp"

#include <cmath>

#include "qwiht/error.hpp"

namespace qwiht {

MeasuredWalkResult simulate(const WalkUnitary& walk, const FinalProjector& projector, const WalkState& initial,
                            const MeasuredWalkOptions& options) {
  if (options.steps < 1) throw ArgumentError("measured walk needs at least one step");
  if (projector.size() != walk.size()) throw ArgumentError("final projector does not match the walk");
  if (static_cast<std::size_t>(initial.size()) != walk.size()) {
    throw ArgumentError("initial state dimension does not match the walk");
  }
  if (std::abs(initial.squaredNorm() - 1.0) > 1e-9) throw ArgumentError("initial state is not normalised");

  MeasuredWalkResult result;
  result.steps = options.steps;
  result.arrival.reserve(options.steps);
  result.survival_trace.reserve(options.steps);

  WalkState psi = initial;
  WalkState next(psi.size());
  if (options.measure_initial) {
    result.initial_arrival = projector.weight(psi);
    projector.remove(psi);
  }
  for (std::size_t t = 1; t <= options.steps; ++t) {
    walk.apply_into(psi, next);
    psi.swap(next);
    result.arrival.push_back(projector.weight(psi));
    projector.remove(psi);
    result.survival_trace.push_back(psi.squaredNorm());
  }
  result.survival = result.survival_trace.back();
  return result;
}

double hitting_time(const MeasuredWalkResult& result) {
  double sum = 0.0;
  for (std::size_t t = 0; t < result.arrival.size(); ++t) sum += static_cast<double>(t + 1) * result.arrival[t];
  return sum;
}

HittingTimeSummary summarize_hitting_time(const MeasuredWalkResult& result, std::optional<double> overlap) {
  HittingTimeSummary s{hitting_time(result), result.survival, HittingVerdict::Unresolved};
  if (result.survival < 1e-9) {
    s.verdict = HittingVerdict::Finite;
  } else if (overlap && *overlap > 1e-9 && result.survival >= *overlap - 1e-9) {
    s.verdict = HittingVerdict::InfiniteCertified;
  }
  return s;
}

const char* to_string(HittingVerdict verdict) {
  switch (verdict) {
    case HittingVerdict::Finite: return "finite";
    case HittingVerdict::Unresolved: return "unresolved at horizon";
    case HittingVerdict::InfiniteCertified: return "infinite (certified by IHT overlap)";
  }
  return "?";
}

}  // namespace qwiht
