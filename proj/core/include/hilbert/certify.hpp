#ifndef HILBERT_CERTIFY_HPP
#define HILBERT_CERTIFY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hilbert/polytope.hpp"

namespace hilbert {

/// Constants that hold for every pair of interior points:
///   |Phi x - Phi y|_2 <= lip_upper * d(x, y)          (lip_upper = 2 m R)
///   d(x, y) >= eucl_lower * |x - y|_2                 (eucl_lower = log 2 / D_upper)
///   <dPhi(w), w> >= C1 |w|_2^2                        (C1 = c1 / M)
/// where c1 is the least eigenvalue of sum_i g_i g_i^T.
struct CertifiedConstants {
  double R = 0.0;
  double D_upper = 0.0;
  double M = 0.0;
  double c1 = 0.0;
  double C1 = 0.0;
  double lip_upper = 0.0;
  double eucl_lower = 0.0;
};

CertifiedConstants certified_constants(const Polytope& p);

/// Sampling loops split their work over `threads` workers. Every sample
/// draws from its own stream derived from (seed, index), so the output does
/// not depend on the thread count.
struct SamplingOptions {
  std::size_t threads = 1;
};

/// Rejection sampling from the bounding box; a sample whose stream is
/// rejected 10^4 times falls back to a uniform point on a random chord
/// through the Chebyshev center. The first k samples for a seed do not
/// depend on n_samples.
std::vector<InteriorPoint> sample_interior(const Polytope& p, std::size_t n_samples,
                                           std::uint64_t seed,
                                           const SamplingOptions& options = {});

struct DirectionalEstimate {
  /// min over samples of |dPhi(w)|_2 / |w| with |w| the Finsler norm.
  double constant = 0.0;
  std::size_t samples = 0;
  /// Samples breaking |dPhi(w)|_2 >= C1 |w|_2.
  std::size_t violations = 0;
};

DirectionalEstimate empirical_directional_constant(const Polytope& p, std::size_t n_samples,
                                                   std::uint64_t seed,
                                                   const SamplingOptions& options = {});

struct DistortionReport {
  std::size_t samples = 0;
  std::size_t pairs = 0;
  std::uint64_t seed = 0;
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  double directional_min = 0.0;
  std::size_t lipschitz_violations = 0;
  std::size_t euclidean_violations = 0;
  std::size_t log_ratio_violations = 0;
  std::size_t directional_violations = 0;
  std::size_t violations = 0;
};

/// Draws n_samples points and compares consecutive ones (n_samples - 1
/// pairs, identical pairs skipped) for the ratio |Phi x - Phi y|_2 / d(x, y).
/// Every pair is also checked against the certified bounds and against
/// d(x, y) >= 1/2 max_i |log f_i(x) / f_i(y)|.
DistortionReport empirical_distortion(const Polytope& p, std::size_t n_samples,
                                      std::uint64_t seed, const SamplingOptions& options = {});

/// Lower bound C_P with |sum_{i in I} l_i g_i|_2 >= C_P max_i |l_i| for every
/// linearly independent subset I of the gradients. Each subset contributes
/// 1 / (largest row norm of its pseudoinverse).
double simple_cp_constant(const Polytope& p);

}  // namespace hilbert

#endif  // HILBERT_CERTIFY_HPP
