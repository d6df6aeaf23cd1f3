#ifndef HILBERT_METRIC_HPP
#define HILBERT_METRIC_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hilbert/polytope.hpp"

namespace hilbert {

/// The line through `base` with unit `direction`; the boundary points are
/// a1 = base - chord.t_backward * direction and
/// a2 = base + chord.t_forward * direction.
struct ChordParametrization {
  InteriorPoint base;
  Vector direction;
  Chord chord;

  Vector backward_endpoint() const;
  Vector forward_endpoint() const;
};

/// Normalizes `direction` and intersects the resulting line with the boundary.
ChordParametrization parametrize(const Polytope& p, const InteriorPoint& base,
                                 std::span<const double> direction);

/// Hilbert distance, from chord parameters only: with s = |y - x|, t_b the
/// backward hit from x and t_f the forward hit from x,
///   d = 1/2 log((t_b + s) t_f / (t_b (t_f - s))).
/// The factor t_f - s is taken as the forward hit from y directly.
double distance(const Polytope& p, const InteriorPoint& x, const InteriorPoint& y);

/// Finsler norm 1/2 (1/t_1 + 1/t_2) of a tangent vector at x.
double finsler_norm(const Polytope& p, const InteriorPoint& x, std::span<const double> w);

/// The point x + t u at Hilbert distance r from x along unit direction u.
InteriorPoint point_at_distance(const Polytope& p, const InteriorPoint& x,
                                std::span<const double> direction, double r);

/// k + 1 points on [x, y], evenly spaced in Hilbert distance.
std::vector<InteriorPoint> geodesic_points(const Polytope& p, const InteriorPoint& x,
                                           const InteriorPoint& y, std::size_t k);

/// Planar metric sphere sampled along `count` evenly spaced directions,
/// starting with direction (1, 0).
std::vector<InteriorPoint> metric_sphere(const Polytope& p, const InteriorPoint& center,
                                         double r, std::size_t count);

/// Finsler length of a polyline, integrated segment by segment with
/// adaptively refined 16-node Gauss-Legendre panels.
double path_length(const Polytope& p, std::span<const InteriorPoint> polyline);

}  // namespace hilbert

#endif  // HILBERT_METRIC_HPP
