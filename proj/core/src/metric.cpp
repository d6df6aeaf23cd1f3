#include "hilbert/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "hilbert/error.hpp"

namespace hilbert {

namespace {

Vector unit_direction(std::span<const double> w) {
  const double len = norm2(w);
  if (len == 0.0) throw Error(ErrorCode::ZeroDirection, "direction is zero");
  return scaled(w, 1.0 / len);
}

bool same_point(const InteriorPoint& x, const InteriorPoint& y) {
  return x.coords() == y.coords();
}

}  // namespace

Vector ChordParametrization::backward_endpoint() const {
  return axpy(base.coords(), -chord.t_backward, direction);
}

Vector ChordParametrization::forward_endpoint() const {
  return axpy(base.coords(), chord.t_forward, direction);
}

ChordParametrization parametrize(const Polytope& p, const InteriorPoint& base,
                                 std::span<const double> direction) {
  Vector u = unit_direction(direction);
  Chord c = chord(p, base, u);
  return ChordParametrization{base, std::move(u), c};
}

double distance(const Polytope& p, const InteriorPoint& x, const InteriorPoint& y) {
  if (same_point(x, y)) return 0.0;
  const Vector diff = subtract(y.coords(), x.coords());
  const double s = norm2(diff);
  const Vector u = scaled(diff, 1.0 / s);
  const double a = s / chord(p, x, u).t_backward;
  const double b = s / chord(p, y, u).t_forward;
  // log((1 + a)(1 + b)); every term is nonnegative, so no cancellation.
  const double q = a + b + a * b;
  return 0.5 * (q < 1.0 ? std::log1p(q) : std::log(1.0 + q));
}

double finsler_norm(const Polytope& p, const InteriorPoint& x, std::span<const double> w) {
  if (w.size() != p.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "tangent vector length");
  }
  if (norm2(w) == 0.0) return 0.0;
  const Chord c = chord(p, x, w);
  return 0.5 * (1.0 / c.t_forward + 1.0 / c.t_backward);
}

InteriorPoint point_at_distance(const Polytope& p, const InteriorPoint& x,
                                std::span<const double> direction, double r) {
  if (!(r >= 0.0)) {
    throw Error(ErrorCode::NegativeRadius, "radius " + std::to_string(r));
  }
  const ChordParametrization line = parametrize(p, x, direction);
  if (r == 0.0) return x;
  const double t1 = line.chord.t_forward;
  const double t2 = line.chord.t_backward;
  // t = t1 t2 (E - 1) / (t1 + E t2) with E = e^{2r}, divided through by E.
  const double inv_e = std::exp(-2.0 * r);
  const double t = t1 * t2 * -std::expm1(-2.0 * r) / (t1 * inv_e + t2);
  return InteriorPoint(p, axpy(x.coords(), t, line.direction));
}

std::vector<InteriorPoint> geodesic_points(const Polytope& p, const InteriorPoint& x,
                                           const InteriorPoint& y, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "geodesic needs k >= 1");
  const Vector diff = subtract(y.coords(), x.coords());
  if (norm2(diff) < 1e-14) {
    throw Error(ErrorCode::DegenerateSegment, "endpoints coincide");
  }
  const double total = distance(p, x, y);
  std::vector<InteriorPoint> points;
  points.reserve(k + 1);
  points.push_back(x);
  for (std::size_t j = 1; j < k; ++j) {
    points.push_back(point_at_distance(p, x, diff, total * static_cast<double>(j) /
                                                       static_cast<double>(k)));
  }
  points.push_back(y);
  return points;
}

std::vector<InteriorPoint> metric_sphere(const Polytope& p, const InteriorPoint& center,
                                         double r, std::size_t count) {
  if (p.dim() != 2) {
    throw Error(ErrorCode::UnsupportedDimension,
                "metric spheres need dimension 2, got " + std::to_string(p.dim()));
  }
  if (r < 0.0) throw Error(ErrorCode::NegativeRadius, "radius " + std::to_string(r));
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  if (count < 3) throw Error(ErrorCode::InvalidArgument, "sphere needs at least 3 points");

  std::vector<InteriorPoint> points;
  points.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count);
    const Vector u{std::cos(angle), std::sin(angle)};
    points.push_back(point_at_distance(p, center, u, r));
  }
  return points;
}

namespace {

using Gauss16 = boost::math::quadrature::gauss<double, 16>;

// Finsler norm of the velocity b - a at a + tau (b - a). Slacks are affine
// along the segment, so they are interpolated from the endpoint slacks; the
// convex combination keeps full relative precision near the boundary where
// recomputing <g, z> + offset would cancel.
class SegmentIntegrand {
 public:
  SegmentIntegrand(const Polytope& p, const InteriorPoint& a, const InteriorPoint& b)
      : sa_(a.slacks()), sb_(b.slacks()), rate_(p.num_facets()) {
    const Vector velocity = subtract(b.coords(), a.coords());
    for (std::size_t i = 0; i < rate_.size(); ++i) rate_[i] = dot(p.facet(i).gradient, velocity);
  }

  double operator()(double tau) const {
    double inv_forward = 0.0, inv_backward = 0.0;
    for (std::size_t i = 0; i < rate_.size(); ++i) {
      const double s = (1.0 - tau) * sa_[i] + tau * sb_[i];
      const double q = rate_[i] / s;
      if (q < 0.0) inv_forward = std::max(inv_forward, -q);
      else inv_backward = std::max(inv_backward, q);
    }
    return 0.5 * (inv_forward + inv_backward);
  }

 private:
  const Vector& sa_;
  const Vector& sb_;
  Vector rate_;
};

double adaptive_panel(const SegmentIntegrand& f, double lo, double hi, double whole,
                      double tol, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double left = Gauss16::integrate(f, lo, mid);
  const double right = Gauss16::integrate(f, mid, hi);
  const double refined = left + right;
  const double diff = std::abs(refined - whole);
  if (diff <= tol || diff <= 1e-15 * std::abs(refined) || depth >= 48) return refined;
  return adaptive_panel(f, lo, mid, left, 0.5 * tol, depth + 1) +
         adaptive_panel(f, mid, hi, right, 0.5 * tol, depth + 1);
}

}  // namespace

double path_length(const Polytope& p, std::span<const InteriorPoint> polyline) {
  if (polyline.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "polyline needs at least two points");
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    const InteriorPoint& a = polyline[i];
    const InteriorPoint& b = polyline[i + 1];
    if (same_point(a, b)) continue;
    if (a.slacks().size() != p.num_facets() || b.slacks().size() != p.num_facets()) {
      throw Error(ErrorCode::DimensionMismatch, "point does not belong to this polytope");
    }
    const SegmentIntegrand f(p, a, b);
    const double coarse = Gauss16::integrate(f, 0.0, 1.0);
    total += adaptive_panel(f, 0.0, 1.0, coarse, 1e-12 * (1.0 + coarse), 0);
  }
  return total;
}

}  // namespace hilbert
