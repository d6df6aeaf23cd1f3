#include "hilbert/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <thread>

#include "hilbert/embedding.hpp"
#include "hilbert/error.hpp"
#include "hilbert/metric.hpp"
#include "hilbert/rng.hpp"

namespace hilbert {

namespace {

enum StreamPurpose : std::uint64_t { kPointStream = 1, kDirectionStream = 2 };

constexpr std::size_t kRejectionBudget = 10000;
constexpr double kRoundoffSlack = 1e-12;

/// Runs body(i) for i in [0, n); indices are split into contiguous blocks.
template <class Body>
void parallel_for(std::size_t n, std::size_t threads, Body&& body) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::size_t block = (n + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t lo = t * block;
    const std::size_t hi = std::min(n, lo + block);
    workers.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& w : workers) w.join();
}

Vector random_unit(SplitMix64& rng, std::size_t n) {
  for (;;) {
    Vector w(n);
    for (double& v : w) v = rng.normal();
    const double len = norm2(w);
    if (len > 1e-12) return scaled(w, 1.0 / len);
  }
}

InteriorPoint sample_one(const Polytope& p, std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng = derive_stream(seed, kPointStream, index);
  const Vector& lo = p.box_lower();
  const Vector& hi = p.box_upper();
  Vector x(p.dim());
  for (std::size_t attempt = 0; attempt < kRejectionBudget; ++attempt) {
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = lo[j] + rng.uniform() * (hi[j] - lo[j]);
    if (is_interior(p, p.slacks(x))) return InteriorPoint(p, x);
  }
  const InteriorPoint center = chebyshev_center(p);
  for (;;) {
    const Vector w = random_unit(rng, p.dim());
    const Chord c = chord(p, center, w);
    const double t = -c.t_backward + rng.uniform() * (c.t_backward + c.t_forward);
    x = axpy(center.coords(), t, w);
    if (is_interior(p, p.slacks(x))) return InteriorPoint(p, x);
  }
}

}  // namespace

CertifiedConstants certified_constants(const Polytope& p) {
  const PolytopeBounds b = bounds(p);
  Matrix gram(p.dim(), p.dim());
  for (const auto& f : p.facets()) gram.add_outer(f.gradient, 1.0);
  const double c1 = min_eigenvalue_symmetric(gram);
  if (!(c1 > 1e-12)) {
    throw Error(ErrorCode::DegenerateGradients,
                "facet gradients do not span the space (least eigenvalue " +
                    std::to_string(c1) + ")");
  }
  CertifiedConstants k;
  k.R = b.max_gradient_norm;
  k.D_upper = b.diameter_upper;
  k.M = b.max_facet_value;
  k.c1 = c1;
  k.C1 = c1 / b.max_facet_value;
  k.lip_upper = 2.0 * static_cast<double>(p.num_facets()) * b.max_gradient_norm;
  k.eucl_lower = std::numbers::ln2 / b.diameter_upper;
  return k;
}

std::vector<InteriorPoint> sample_interior(const Polytope& p, std::size_t n_samples,
                                           std::uint64_t seed, const SamplingOptions& options) {
  if (n_samples < 1) throw Error(ErrorCode::InvalidArgument, "need at least one sample");
  std::vector<std::optional<InteriorPoint>> slots(n_samples);
  parallel_for(n_samples, options.threads,
               [&](std::size_t i) { slots[i].emplace(sample_one(p, seed, i)); });
  std::vector<InteriorPoint> out;
  out.reserve(n_samples);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

namespace {

DirectionalEstimate directional_estimate(const Polytope& p,
                                         const std::vector<InteriorPoint>& points,
                                         std::uint64_t seed, double C1, std::size_t threads) {
  const std::size_t n = points.size();
  Vector ratio(n);
  std::vector<char> violated(n, 0);
  parallel_for(n, threads, [&](std::size_t i) {
    SplitMix64 rng = derive_stream(seed, kDirectionStream, i);
    const Vector w = random_unit(rng, p.dim());
    const double image = norm2(jacobian_apply(p, points[i], w));
    ratio[i] = image / finsler_norm(p, points[i], w);
    violated[i] = image < C1 * norm2(w) * (1.0 - kRoundoffSlack);
  });
  DirectionalEstimate est;
  est.samples = n;
  est.constant = *std::min_element(ratio.begin(), ratio.end());
  est.violations = static_cast<std::size_t>(std::count(violated.begin(), violated.end(), 1));
  return est;
}

}  // namespace

DirectionalEstimate empirical_directional_constant(const Polytope& p, std::size_t n_samples,
                                                   std::uint64_t seed,
                                                   const SamplingOptions& options) {
  const CertifiedConstants k = certified_constants(p);
  const auto points = sample_interior(p, n_samples, seed, options);
  return directional_estimate(p, points, seed, k.C1, options.threads);
}

DistortionReport empirical_distortion(const Polytope& p, std::size_t n_samples,
                                      std::uint64_t seed, const SamplingOptions& options) {
  if (n_samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least two samples");
  const CertifiedConstants k = certified_constants(p);
  const auto points = sample_interior(p, n_samples, seed, options);

  std::vector<EmbeddedPoint> images(n_samples);
  parallel_for(n_samples, options.threads,
               [&](std::size_t i) { images[i] = embed(p, points[i]); });

  struct PairResult {
    bool valid = false;
    double ratio = 0.0;
    bool lipschitz = false;
    bool euclidean = false;
    bool log_ratio = false;
  };
  std::vector<PairResult> pairs(n_samples - 1);
  parallel_for(n_samples - 1, options.threads, [&](std::size_t i) {
    const InteriorPoint& x = points[i];
    const InteriorPoint& y = points[i + 1];
    if (x.coords() == y.coords()) return;
    const double d = distance(p, x, y);
    PairResult& r = pairs[i];
    r.valid = true;
    r.ratio = norm2(subtract(images[i].coords, images[i + 1].coords)) / d;
    r.lipschitz = r.ratio > k.lip_upper * (1.0 + 1e-9);
    r.euclidean =
        d < k.eucl_lower * norm2(subtract(x.coords(), y.coords())) * (1.0 - kRoundoffSlack);
    double max_log = 0.0;
    for (std::size_t f = 0; f < p.num_facets(); ++f) {
      max_log = std::max(max_log, std::abs(std::log(x.slacks()[f] / y.slacks()[f])));
    }
    r.log_ratio = d < 0.5 * max_log - 1e-9;
  });

  DistortionReport report;
  report.samples = n_samples;
  report.seed = seed;
  report.ratio_min = std::numeric_limits<double>::infinity();
  report.ratio_max = 0.0;
  for (const auto& r : pairs) {
    if (!r.valid) continue;
    ++report.pairs;
    report.ratio_min = std::min(report.ratio_min, r.ratio);
    report.ratio_max = std::max(report.ratio_max, r.ratio);
    report.lipschitz_violations += r.lipschitz;
    report.euclidean_violations += r.euclidean;
    report.log_ratio_violations += r.log_ratio;
  }
  if (report.pairs == 0) report.ratio_min = 0.0;

  const DirectionalEstimate dir = directional_estimate(p, points, seed, k.C1, options.threads);
  report.directional_min = dir.constant;
  report.directional_violations = dir.violations;
  report.violations = report.lipschitz_violations + report.euclidean_violations +
                      report.log_ratio_violations + report.directional_violations;
  return report;
}

// ---------------------------------------------------------------------------
// C_P

namespace {

constexpr std::size_t kMaxCpFacets = 24;
constexpr double kRankTol = 1e-10;

class SubsetSearch {
 public:
  explicit SubsetSearch(const Polytope& p) : p_(p) {}

  double run() {
    std::vector<std::size_t> subset;
    descend(subset, 0);
    return best_;
  }

 private:
  void descend(std::vector<std::size_t>& subset, std::size_t start) {
    for (std::size_t i = start; i < p_.num_facets(); ++i) {
      subset.push_back(i);
      if (const auto bound = subset_bound(subset)) {
        best_ = std::min(best_, *bound);
        if (subset.size() < p_.dim()) descend(subset, i + 1);
      }
      subset.pop_back();
    }
  }

  /// Modified Gram-Schmidt QR of the gradient columns. Empty when a column
  /// is dependent on the previous ones; otherwise 1 / max_i |row_i(R^-1)|.
  std::optional<double> subset_bound(const std::vector<std::size_t>& subset) const {
    const std::size_t k = subset.size();
    const std::size_t n = p_.dim();
    std::vector<Vector> q;
    Matrix r(k, k);
    for (std::size_t c = 0; c < k; ++c) {
      Vector v = p_.facet(subset[c]).gradient;
      const double original = norm2(v);
      for (std::size_t j = 0; j < c; ++j) {
        const double proj = dot(q[j], v);
        r(j, c) = proj;
        for (std::size_t t = 0; t < n; ++t) v[t] -= proj * q[j][t];
      }
      const double residual = norm2(v);
      if (residual <= kRankTol * original) return std::nullopt;
      r(c, c) = residual;
      q.push_back(scaled(v, 1.0 / residual));
    }
    // Invert the upper-triangular R column by column.
    Matrix inv(k, k);
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t row = c + 1; row-- > 0;) {
        double s = row == c ? 1.0 : 0.0;
        for (std::size_t j = row + 1; j <= c; ++j) s -= r(row, j) * inv(j, c);
        inv(row, c) = s / r(row, row);
      }
    }
    double worst = 0.0;
    for (std::size_t row = 0; row < k; ++row) worst = std::max(worst, norm2(inv.row(row)));
    return 1.0 / worst;
  }

  const Polytope& p_;
  double best_ = std::numeric_limits<double>::infinity();
};

}  // namespace

double simple_cp_constant(const Polytope& p) {
  if (p.num_facets() > kMaxCpFacets) {
    throw Error(ErrorCode::TooManyFacets,
                std::to_string(p.num_facets()) + " facets, limit is " +
                    std::to_string(kMaxCpFacets));
  }
  return SubsetSearch(p).run();
}

}  // namespace hilbert
