#pragma once

#include <utility>
#include <vector>

#include "hjlab/grid_field.hpp"

namespace hjlab {

/// Location attaining an extremal second-difference quotient.
struct QuotientWitness {
  int i = 0;
  int j = 0;
  Direction dir{};
  double value = 0.0;
};

/// Extremal midpoint second-difference quotients of a sampled field:
/// c_upper is the smallest c for which the samples pass c-semi-concavity at
/// grid scale, c_lower the semi-convexity counterpart.
struct SemiConcavityReport {
  double c_upper = 0.0;
  double c_lower = 0.0;
  QuotientWitness witness_max;
  QuotientWitness witness_min;
};

SemiConcavityReport estimate_constants(const Field& f);

/// Checks max |grad f|^2 <= 4 c sup|f| (1 + slack) with the discretization
/// slack 5 h Lip(f) / max(sup|f|, 1e-12). Requires the field to be
/// c-semi-concave or c-semi-convex at grid scale (up to quotient roundoff);
/// throws HypothesisUnmet otherwise. Returns {passed, attained ratio}.
std::pair<bool, double> check_gradient_bound(const Field& f, double c);

struct TraceReport {
  std::vector<SemiConcavityReport> slices;
  std::vector<double> running_max;
  double max_c_upper = 0.0;
};

/// Per-slice constants plus the running max of c_upper.
TraceReport trace_constants(const SpaceTimeField& f);

}  // namespace hjlab
