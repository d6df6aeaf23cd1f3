#include "hilbert/embedding.hpp"

#include <cmath>
#include <string>

#include "barrier_newton.hpp"

namespace hilbert {

namespace {

void require_match(const Polytope& p, const InteriorPoint& x) {
  if (x.dim() != p.dim() || x.slacks().size() != p.num_facets()) {
    throw Error(ErrorCode::DimensionMismatch, "point does not belong to this polytope");
  }
}

double entropy_term(double s) { return s * std::log(s) - s; }
double log_term(double s) { return std::log(s); }
double inverse_term(double s) { return 1.0 / s; }

}  // namespace

EmbeddedPoint embed(const Polytope& p, const InteriorPoint& x) {
  require_match(p, x);
  Vector out(p.dim(), 0.0);
  for (std::size_t i = 0; i < p.num_facets(); ++i) {
    const double w = std::log(x.slacks()[i]);
    const auto& g = p.facet(i).gradient;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += w * g[j];
  }
  return EmbeddedPoint{std::move(out)};
}

Vector jacobian_apply(const Polytope& p, const InteriorPoint& x, std::span<const double> w) {
  require_match(p, x);
  if (w.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "tangent vector length");
  Vector out(p.dim(), 0.0);
  for (std::size_t i = 0; i < p.num_facets(); ++i) {
    const auto& g = p.facet(i).gradient;
    const double coef = dot(g, w) / x.slacks()[i];
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coef * g[j];
  }
  return out;
}

double jacobian_quadratic_form(const Polytope& p, const InteriorPoint& x,
                               std::span<const double> w) {
  require_match(p, x);
  if (w.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "tangent vector length");
  double q = 0.0;
  for (std::size_t i = 0; i < p.num_facets(); ++i) {
    const double r = dot(p.facet(i).gradient, w);
    q += r * r / x.slacks()[i];
  }
  return q;
}

double potential(const Polytope& p, const InteriorPoint& x) {
  require_match(p, x);
  double f = 0.0;
  for (double s : x.slacks()) f += entropy_term(s);
  return f;
}

Vector monotonicity_terms(const Polytope& p, const InteriorPoint& x, const InteriorPoint& y) {
  require_match(p, x);
  require_match(p, y);
  Vector terms(p.num_facets());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double sx = x.slacks()[i];
    const double sy = y.slacks()[i];
    terms[i] = (std::log(sx) - std::log(sy)) * (sx - sy);
  }
  return terms;
}

double monotonicity_gap(const Polytope& p, const InteriorPoint& x, const InteriorPoint& y) {
  double gap = 0.0;
  for (double t : monotonicity_terms(p, x, y)) gap += t;
  return gap;
}

Inversion invert(const Polytope& p, const EmbeddedPoint& y, const InversionOptions& options) {
  if (y.coords.size() != p.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "target has wrong dimension");
  }
  if (!(options.tol > 0.0) || options.max_iter < 1) {
    throw Error(ErrorCode::InvalidArgument, "invert needs tol > 0 and max_iter >= 1");
  }
  for (double v : y.coords) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "target is not finite");
  }

  const detail::SeparableBarrier entropy{entropy_term, log_term, inverse_term};
  auto result = detail::minimize_barrier(p, entropy, y.coords, p.chebyshev_center(),
                                         options.tol, options.max_iter);
  if (result.converged && is_interior(p, p.slacks(result.coords))) {
    return Inversion{InteriorPoint(p, std::move(result.coords)), std::move(result.trace)};
  }
  const std::string detail = "residual " + std::to_string(result.trace.final_residual) +
                             " after " + std::to_string(result.trace.iterations) +
                             " Newton steps";
  throw NoConvergenceError(detail, std::move(result.trace));
}

}  // namespace hilbert
