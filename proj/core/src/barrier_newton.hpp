#ifndef HILBERT_SRC_BARRIER_NEWTON_HPP
#define HILBERT_SRC_BARRIER_NEWTON_HPP

#include <span>

#include "hilbert/newton_trace.hpp"
#include "hilbert/numerics.hpp"
#include "hilbert/polytope.hpp"

namespace hilbert::detail {

/// phi applied to each slack; first and second derivatives must be
/// positive-curvature so the summed objective is strictly convex.
struct SeparableBarrier {
  double (*value)(double);
  double (*first)(double);
  double (*second)(double);
};

struct BarrierResult {
  Vector coords;
  NewtonTrace trace;
  bool converged = false;
};

/// Minimizes sum_i phi(f_i(x)) - <linear, x> over int P by Newton steps,
/// damped with a 0.99 fraction-to-boundary rule plus halving backtracking
/// on the objective. Stops when the gradient norm drops to tol.
BarrierResult minimize_barrier(const Polytope& p, const SeparableBarrier& barrier,
                               std::span<const double> linear, Vector start,
                               double tol, std::size_t max_iter);

}  // namespace hilbert::detail

#endif  // HILBERT_SRC_BARRIER_NEWTON_HPP
