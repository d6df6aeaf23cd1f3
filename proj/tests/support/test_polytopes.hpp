#ifndef HILBERT_TESTS_TEST_POLYTOPES_HPP
#define HILBERT_TESTS_TEST_POLYTOPES_HPP

// Fixtures and generators shared by the unit and acceptance suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hilbert/hilbert.hpp"

namespace hilbert::testing {

inline Polytope interval() {
  return Polytope::validate({{{1.0}, 0.0}, {{-1.0}, 1.0}}, 1);
}

/// [0, side]^2 as {x >= 0, side - x >= 0, y >= 0, side - y >= 0}.
inline Polytope square(double side = 1.0) {
  return Polytope::validate({{{1.0, 0.0}, 0.0},
                             {{-1.0, 0.0}, side},
                             {{0.0, 1.0}, 0.0},
                             {{0.0, -1.0}, side}},
                            2);
}

/// {x >= 0, y >= 0, 1 - x - y >= 0}.
inline Polytope triangle() {
  return Polytope::validate({{{1.0, 0.0}, 0.0}, {{0.0, 1.0}, 0.0}, {{-1.0, -1.0}, 1.0}}, 2);
}

/// Standard simplex {x_j >= 0, 1 - sum x_j >= 0}.
inline Polytope simplex(std::size_t n) {
  std::vector<AffineFunctional> facets;
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n, 0.0);
    e[j] = 1.0;
    facets.push_back({e, 0.0});
  }
  facets.push_back({Vector(n, -1.0), 1.0});
  return Polytope::validate(std::move(facets), n);
}

/// [-1, 1]^n.
inline Polytope cube(std::size_t n) {
  std::vector<AffineFunctional> facets;
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n, 0.0);
    e[j] = 1.0;
    facets.push_back({e, 1.0});
    e[j] = -1.0;
    facets.push_back({e, 1.0});
  }
  return Polytope::validate(std::move(facets), n);
}

/// Random polytope around the origin: m random normals with norms in
/// [0.5, 2] and offsets in [0.5, 1.5]. Redrawn until bounded.
inline Polytope random_polytope(std::uint64_t seed, std::size_t n, std::size_t m) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    SplitMix64 rng = derive_stream(seed, 99, attempt);
    std::vector<AffineFunctional> facets;
    for (std::size_t i = 0; i < m; ++i) {
      Vector g(n);
      for (double& v : g) v = rng.normal();
      const double len = norm2(g);
      const double scale = 0.5 + 1.5 * rng.uniform();
      for (double& v : g) v *= scale / len;
      facets.push_back({g, 0.5 + rng.uniform()});
    }
    try {
      return Polytope::validate(std::move(facets), n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Unbounded) throw;
    }
  }
}

/// The 20 random polytopes (n <= 4, m <= 12) used by the property suites.
inline std::vector<Polytope> random_polytope_family(std::uint64_t seed = 2024) {
  std::vector<Polytope> out;
  for (std::uint64_t k = 0; k < 20; ++k) {
    SplitMix64 rng = derive_stream(seed, 7, k);
    const std::size_t n = 1 + static_cast<std::size_t>(rng.next() % 4);
    const std::size_t m_min = n + 1 + (n >= 3 ? 2 : 0);
    const std::size_t m = m_min + static_cast<std::size_t>(rng.next() % (13 - m_min));
    out.push_back(random_polytope(seed * 1000 + k, n, m));
  }
  return out;
}

struct NamedPolytope {
  std::string name;
  Polytope polytope;
};

/// Square, interval, triangle, 3-cube, simplices in dims 2-4, plus the random family.
inline std::vector<NamedPolytope> standard_family() {
  std::vector<NamedPolytope> out;
  out.push_back({"interval", interval()});
  out.push_back({"square", square()});
  out.push_back({"triangle", triangle()});
  out.push_back({"cube3", cube(3)});
  for (std::size_t n = 2; n <= 4; ++n) out.push_back({"simplex" + std::to_string(n), simplex(n)});
  auto randoms = random_polytope_family();
  for (std::size_t k = 0; k < randoms.size(); ++k) {
    out.push_back({"random" + std::to_string(k), std::move(randoms[k])});
  }
  return out;
}

/// Dense inverse by Gauss-Jordan elimination with partial pivoting.
inline std::vector<Vector> invert_matrix(std::vector<Vector> a) {
  const std::size_t n = a.size();
  std::vector<Vector> inv(n, Vector(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    const double d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

/// Image of P under z = A x + t: facets g' = A^-T g, b' = b - <g', t>.
inline Polytope transform(const Polytope& p, const std::vector<Vector>& a, const Vector& t) {
  const auto inv = invert_matrix(a);
  const std::size_t n = p.dim();
  std::vector<AffineFunctional> facets;
  for (const auto& f : p.facets()) {
    Vector g(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) g[i] += inv[k][i] * f.gradient[k];
    facets.push_back({g, f.offset - dot(g, t)});
  }
  return Polytope::validate(std::move(facets), n);
}

inline Vector apply_affine(const std::vector<Vector>& a, const Vector& t, const Vector& x) {
  Vector z = t;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += dot(a[i], x);
  return z;
}

/// Gradient index sets of size <= n that are linearly independent, decided
/// by elimination on the Gram matrix with a relative pivot threshold.
inline std::vector<std::vector<std::size_t>> independent_subsets(const Polytope& p) {
  const std::size_t m = p.num_facets();
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) idx.push_back(i);
    if (idx.size() > p.dim()) continue;
    const std::size_t k = idx.size();
    std::vector<Vector> gram(k, Vector(k));
    double scale = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b)
        gram[a][b] = dot(p.facet(idx[a]).gradient, p.facet(idx[b]).gradient);
      scale = std::max(scale, gram[a][a]);
    }
    bool independent = true;
    for (std::size_t c = 0; c < k && independent; ++c) {
      if (gram[c][c] <= 1e-12 * scale) {
        independent = false;
        break;
      }
      for (std::size_t r = c + 1; r < k; ++r) {
        const double f = gram[r][c] / gram[c][c];
        for (std::size_t j = c; j < k; ++j) gram[r][j] -= f * gram[c][j];
      }
    }
    if (independent) out.push_back(std::move(idx));
  }
  return out;
}

}  // namespace hilbert::testing

#endif  // HILBERT_TESTS_TEST_POLYTOPES_HPP
