#include "hilbert/polytope.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "barrier_newton.hpp"
#include "hilbert/error.hpp"

namespace hilbert {

namespace {

constexpr double kParallelTol = 1e-14;
constexpr double kInteriorTol = 1e-12;

LpProblem polytope_lp(const std::vector<AffineFunctional>& facets, Vector objective) {
  LpProblem lp;
  lp.objective = std::move(objective);
  lp.constraints.reserve(facets.size());
  for (const auto& f : facets) lp.constraints.push_back({f.gradient, f.offset});
  return lp;
}

double lp_max(const LpProblem& lp, const char* what) {
  const LpOutcome out = lp_solve(lp);
  if (out.status != LpStatus::Optimal) {
    throw Error(ErrorCode::Unbounded, std::string(what) + " LP is not bounded");
  }
  return *out.value;
}

Vector unit(std::size_t n, std::size_t j, double sign) {
  Vector e(n, 0.0);
  e[j] = sign;
  return e;
}

}  // namespace

Polytope Polytope::validate(std::vector<AffineFunctional> facets, std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const auto& f = facets[i];
    if (f.gradient.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "facet " + std::to_string(i) + " has " +
                      std::to_string(f.gradient.size()) + " gradient entries, expected " +
                      std::to_string(dim));
    }
    bool finite = std::isfinite(f.offset);
    for (double v : f.gradient) finite = finite && std::isfinite(v);
    if (!finite) {
      throw Error(ErrorCode::InvalidArgument,
                  "facet " + std::to_string(i) + " has a non-finite entry");
    }
    if (norm2(f.gradient) == 0.0) {
      throw Error(ErrorCode::ZeroGradient, "facet has a zero gradient", i);
    }
  }

  // Recession cone {w : <g_i, w> >= 0} intersected with the unit box.
  {
    LpProblem cone;
    for (const auto& f : facets) cone.constraints.push_back({f.gradient, 0.0});
    for (std::size_t j = 0; j < dim; ++j) {
      cone.constraints.push_back({unit(dim, j, 1.0), 1.0});
      cone.constraints.push_back({unit(dim, j, -1.0), 1.0});
    }
    for (std::size_t j = 0; j < dim; ++j) {
      for (double sign : {1.0, -1.0}) {
        cone.objective = unit(dim, j, sign);
        const LpOutcome out = lp_solve(cone);
        if (out.status != LpStatus::Optimal || *out.value > kFeasibilityTol) {
          throw Error(ErrorCode::Unbounded,
                      "recession cone contains a nonzero direction along axis " +
                          std::to_string(j));
        }
      }
    }
  }

  Polytope p;
  p.dim_ = dim;
  p.facets_ = std::move(facets);

  // Chebyshev center: maximize r subject to f_i(x) - r ||g_i|| >= 0.
  {
    LpProblem cheb;
    cheb.objective = unit(dim + 1, dim, 1.0);
    for (const auto& f : p.facets_) {
      Vector row = f.gradient;
      row.push_back(-norm2(f.gradient));
      cheb.constraints.push_back({std::move(row), f.offset});
    }
    const LpOutcome out = lp_solve(cheb);
    if (out.status == LpStatus::Unbounded) {
      throw Error(ErrorCode::Unbounded, "Chebyshev LP is unbounded");
    }
    if (out.status == LpStatus::Infeasible || *out.value <= kFeasibilityTol) {
      throw Error(ErrorCode::EmptyInterior,
                  "largest inscribed ball has radius " +
                      std::to_string(out.value.value_or(0.0)));
    }
    p.cheb_center_.assign(out.optimizer->begin(), out.optimizer->begin() + dim);
    p.cheb_radius_ = *out.value;
  }

  p.box_lower_.resize(dim);
  p.box_upper_.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    p.box_upper_[j] = lp_max(polytope_lp(p.facets_, unit(dim, j, 1.0)), "bounding box");
    p.box_lower_[j] = -lp_max(polytope_lp(p.facets_, unit(dim, j, -1.0)), "bounding box");
  }

  for (std::size_t i = 0; i < p.facets_.size(); ++i) {
    const auto& f = p.facets_[i];
    const double min_value =
        f.offset - lp_max(polytope_lp(p.facets_, scaled(f.gradient, -1.0)), "facet minimum");
    if (min_value > kFeasibilityTol) p.redundant_.push_back(i);
  }
  return p;
}

Vector Polytope::slacks(std::span<const double> x) const {
  if (x.size() != dim_) {
    throw Error(ErrorCode::DimensionMismatch,
                "point has " + std::to_string(x.size()) + " coordinates, expected " +
                    std::to_string(dim_));
  }
  Vector s(facets_.size());
  for (std::size_t i = 0; i < facets_.size(); ++i) s[i] = facets_[i](x);
  return s;
}

bool is_interior(const Polytope& p, std::span<const double> slacks) {
  for (std::size_t i = 0; i < p.num_facets(); ++i) {
    if (!(slacks[i] > kInteriorTol * (1.0 + std::abs(p.facet(i).offset)))) return false;
  }
  return true;
}

InteriorPoint::InteriorPoint(const Polytope& p, Vector coords)
    : coords_(std::move(coords)), slacks_(p.slacks(coords_)) {
  for (double v : coords_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NotInterior, "non-finite coordinate");
  }
  if (!is_interior(p, slacks_)) {
    throw Error(ErrorCode::NotInterior, "point is not strictly inside the polytope");
  }
}

bool contains(const Polytope& p, std::span<const double> x, bool strict) {
  const Vector s = p.slacks(x);
  for (double v : s) {
    if (strict ? !(v > kInteriorTol) : !(v >= 0.0)) return false;
  }
  return true;
}

Chord chord(const Polytope& p, const InteriorPoint& x, std::span<const double> w) {
  if (w.size() != p.dim() || x.dim() != p.dim() || x.slacks().size() != p.num_facets()) {
    throw Error(ErrorCode::DimensionMismatch, "chord arguments do not match the polytope");
  }
  const double w_norm = norm2(w);
  if (w_norm == 0.0) throw Error(ErrorCode::ZeroDirection, "chord direction is zero");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  Chord c{kInf, kInf, 0, 0};
  for (std::size_t i = 0; i < p.num_facets(); ++i) {
    const auto& g = p.facet(i).gradient;
    const double rate = dot(g, w);
    if (std::abs(rate) < kParallelTol * norm2(g) * w_norm) continue;
    const double s = x.slacks()[i];
    if (rate < 0.0) {
      const double t = -s / rate;
      if (t < c.t_forward) {
        c.t_forward = t;
        c.facet_forward = i;
      }
    } else {
      const double t = s / rate;
      if (t < c.t_backward) {
        c.t_backward = t;
        c.facet_backward = i;
      }
    }
  }
  if (!std::isfinite(c.t_forward) || !std::isfinite(c.t_backward)) {
    throw Error(ErrorCode::Unbounded, "line does not leave the polytope");
  }
  return c;
}

InteriorPoint chebyshev_center(const Polytope& p) {
  return InteriorPoint(p, p.chebyshev_center());
}

namespace {

double neg_log(double s) { return -std::log(s); }
double neg_inv(double s) { return -1.0 / s; }
double inv_sq(double s) { return 1.0 / (s * s); }

}  // namespace

InteriorPoint analytic_center(const Polytope& p, std::size_t max_iter) {
  constexpr double kTol = 1e-8;
  const detail::SeparableBarrier log_barrier{neg_log, neg_inv, inv_sq};
  const Vector zero(p.dim(), 0.0);
  auto result =
      detail::minimize_barrier(p, log_barrier, zero, p.chebyshev_center(), kTol, max_iter);
  if (!result.converged) {
    throw Error(ErrorCode::NoConvergence,
                "analytic center: gradient norm " +
                    std::to_string(result.trace.final_residual) + " after " +
                    std::to_string(result.trace.iterations) + " iterations");
  }
  return InteriorPoint(p, std::move(result.coords));
}

PolytopeBounds bounds(const Polytope& p) {
  PolytopeBounds b;
  for (const auto& f : p.facets()) {
    b.max_gradient_norm = std::max(b.max_gradient_norm, norm2(f.gradient));
    const double fmax = f.offset + lp_max(polytope_lp(p.facets(), f.gradient), "facet maximum");
    b.max_facet_value = std::max(b.max_facet_value, fmax);
  }
  b.diameter_upper = norm2(subtract(p.box_upper(), p.box_lower()));
  return b;
}

}  // namespace hilbert
