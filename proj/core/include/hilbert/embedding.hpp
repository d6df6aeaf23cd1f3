#ifndef HILBERT_EMBEDDING_HPP
#define HILBERT_EMBEDDING_HPP

#include <cstddef>
#include <span>

#include "hilbert/error.hpp"
#include "hilbert/newton_trace.hpp"
#include "hilbert/polytope.hpp"

namespace hilbert {

/// Image point in the dual space, identified with R^n through the
/// Euclidean inner product.
struct EmbeddedPoint {
  Vector coords;
};

/// Phi(x) = sum_i log f_i(x) g_i.
EmbeddedPoint embed(const Polytope& p, const InteriorPoint& x);

/// dPhi_x(w) = sum_i (<g_i, w> / f_i(x)) g_i.
Vector jacobian_apply(const Polytope& p, const InteriorPoint& x, std::span<const double> w);

/// sum_i <g_i, w>^2 / f_i(x), which equals <dPhi_x(w), w>.
double jacobian_quadratic_form(const Polytope& p, const InteriorPoint& x,
                               std::span<const double> w);

/// F(x) = sum_i (f_i log f_i - f_i). Its gradient is Phi, and it is
/// strictly convex on the interior, so Phi(x) = y is the minimizer of
/// F(x) - <y, x>.
double potential(const Polytope& p, const InteriorPoint& x);

/// Per-facet terms (log f_i(x) - log f_i(y)) (f_i(x) - f_i(y)); each is
/// nonnegative.
Vector monotonicity_terms(const Polytope& p, const InteriorPoint& x, const InteriorPoint& y);

/// <Phi(x) - Phi(y), x - y>, summed from monotonicity_terms.
double monotonicity_gap(const Polytope& p, const InteriorPoint& x, const InteriorPoint& y);

struct InversionOptions {
  double tol = 1e-10;
  std::size_t max_iter = 100;
};

struct Inversion {
  InteriorPoint point;
  NewtonTrace trace;
};

/// Raised by invert after max_iter without reaching the residual tolerance.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& detail, NewtonTrace trace)
      : Error(ErrorCode::NoConvergence, detail), trace_(std::move(trace)) {}

  const NewtonTrace& trace() const noexcept { return trace_; }

 private:
  NewtonTrace trace_;
};

/// Solves Phi(x) = y by damped Newton on F(x) - <y, x>, starting at the
/// Chebyshev center. The returned point satisfies |Phi(x) - y|_2 <= tol.
Inversion invert(const Polytope& p, const EmbeddedPoint& y, const InversionOptions& options = {});

}  // namespace hilbert

#endif  // HILBERT_EMBEDDING_HPP
