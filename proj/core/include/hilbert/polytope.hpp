#ifndef HILBERT_POLYTOPE_HPP
#define HILBERT_POLYTOPE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hilbert/numerics.hpp"

namespace hilbert {

/// f(x) = <gradient, x> + offset; the halfspace is f(x) >= 0.
struct AffineFunctional {
  Vector gradient;
  double offset = 0.0;

  double operator()(std::span<const double> x) const {
    return dot(gradient, x) + offset;
  }
};

/// Compact convex polytope {x : f_i(x) >= 0 for all i}. Instances only
/// come out of Polytope::validate, so every Polytope is bounded with
/// nonempty interior. The facet list is kept exactly as given, redundant
/// rows included.
class Polytope {
 public:
  static Polytope validate(std::vector<AffineFunctional> facets, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_facets() const noexcept { return facets_.size(); }
  const std::vector<AffineFunctional>& facets() const noexcept { return facets_; }
  const AffineFunctional& facet(std::size_t i) const { return facets_.at(i); }

  /// Indices of facets whose minimum over the polytope is strictly positive.
  const std::vector<std::size_t>& redundant_facets() const noexcept {
    return redundant_;
  }

  /// Axis-aligned bounding box, one LP per coordinate and sign.
  const Vector& box_lower() const noexcept { return box_lower_; }
  const Vector& box_upper() const noexcept { return box_upper_; }

  const Vector& chebyshev_center() const noexcept { return cheb_center_; }
  double chebyshev_radius() const noexcept { return cheb_radius_; }

  /// f_i(x) for every facet.
  Vector slacks(std::span<const double> x) const;

 private:
  Polytope() = default;

  std::size_t dim_ = 0;
  std::vector<AffineFunctional> facets_;
  std::vector<std::size_t> redundant_;
  Vector box_lower_;
  Vector box_upper_;
  Vector cheb_center_;
  double cheb_radius_ = 0.0;
};

/// A point strictly inside a polytope together with its facet slacks.
class InteriorPoint {
 public:
  /// Throws NotInterior unless every slack exceeds 1e-12 * (1 + |offset|).
  InteriorPoint(const Polytope& p, Vector coords);

  const Vector& coords() const noexcept { return coords_; }
  const Vector& slacks() const noexcept { return slacks_; }
  std::size_t dim() const noexcept { return coords_.size(); }

 private:
  Vector coords_;
  Vector slacks_;
};

/// True iff a point's slacks are all above the interiority threshold.
bool is_interior(const Polytope& p, std::span<const double> slacks);

/// Boundary hits of the line x + t w: x + t_forward w and x - t_backward w.
struct Chord {
  double t_forward = 0.0;
  double t_backward = 0.0;
  std::size_t facet_forward = 0;
  std::size_t facet_backward = 0;
};

/// f_i(x) >= 0 for all i; strict asks for f_i(x) > 1e-12.
bool contains(const Polytope& p, std::span<const double> x, bool strict);

Chord chord(const Polytope& p, const InteriorPoint& x, std::span<const double> w);

InteriorPoint chebyshev_center(const Polytope& p);

/// Maximizer of sum_i log f_i(x), by damped Newton from the Chebyshev center.
InteriorPoint analytic_center(const Polytope& p, std::size_t max_iter = 100);

struct PolytopeBounds {
  double max_gradient_norm = 0.0;  // R
  double max_facet_value = 0.0;    // M
  double diameter_upper = 0.0;     // bounding-box diagonal, >= diameter
};

PolytopeBounds bounds(const Polytope& p);

}  // namespace hilbert

#endif  // HILBERT_POLYTOPE_HPP
