#ifndef HILBERT_NEWTON_TRACE_HPP
#define HILBERT_NEWTON_TRACE_HPP

#include <cstddef>
#include <vector>

namespace hilbert {

/// Log of a damped Newton run.
struct NewtonTrace {
  std::size_t iterations = 0;
  /// Gradient norm at the returned iterate; for inversion this is
  /// ||Phi(x) - y||_2.
  double final_residual = 0.0;
  /// Accepted damping factor per step, each in (0, 1].
  std::vector<double> step_sizes;
  /// Objective value at the start point and after every accepted step.
  std::vector<double> objective_values;
};

}  // namespace hilbert

#endif  // HILBERT_NEWTON_TRACE_HPP
