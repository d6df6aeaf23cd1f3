#include "hilbert/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hilbert/error.hpp"

namespace hilbert {

namespace {

void require_same_size(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_size(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) {
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double v : a) s += (v / scale) * (v / scale);
  return scale * std::sqrt(s);
}

Vector add(std::span<const double> a, std::span<const double> b) {
  require_same_size(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector subtract(std::span<const double> a, std::span<const double> b) {
  require_same_size(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scaled(std::span<const double> a, double s) {
  Vector out(a.begin(), a.end());
  for (double& v : out) v *= s;
  return out;
}

Vector axpy(std::span<const double> a, double s, std::span<const double> b) {
  require_same_size(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
  return out;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    }
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.cols());
  }
  return m;
}

Vector Matrix::apply(std::span<const double> x) const {
  if (x.size() != cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  }
  Vector out(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * x[c];
    out[r] = s;
  }
  return out;
}

double Matrix::frobenius_norm() const { return norm2(data_); }

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

void Matrix::add_outer(std::span<const double> v, double scale) {
  if (!square() || v.size() != rows_) {
    throw Error(ErrorCode::DimensionMismatch, "outer product update");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    const double vr = scale * v[r];
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) += vr * v[c];
  }
}

// ---------------------------------------------------------------------------
// Dense kernels

namespace {

void require_symmetric(const Matrix& a) {
  if (!a.square()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  }
  double scale = 0.0;
  for (double v : a.entries()) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * std::max(1.0, scale);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = r + 1; c < a.cols(); ++c) {
      if (std::abs(a(r, c) - a(c, r)) > tol) {
        throw Error(ErrorCode::InvalidArgument, "matrix is not symmetric");
      }
    }
  }
}

}  // namespace

Vector solve_spd(const Matrix& a, std::span<const double> rhs) {
  require_symmetric(a);
  const std::size_t n = a.rows();
  if (rhs.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  }
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) {
      throw Error(ErrorCode::NotPositiveDefinite,
                  "pivot " + std::to_string(j) + " is not positive");
    }
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  Vector y(rhs.begin(), rhs.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) y[i] -= l(i, k) * y[k];
    y[i] /= l(i, i);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) y[ii] -= l(k, ii) * y[k];
    y[ii] /= l(ii, ii);
  }
  return y;
}

Vector symmetric_eigenvalues(const Matrix& input) {
  require_symmetric(input);
  const std::size_t n = input.rows();
  Matrix a = input;
  const double threshold = 1e-12 * std::max(1.0, input.frobenius_norm());

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c) s += a(r, c) * a(r, c);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  Vector eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double min_eigenvalue_symmetric(const Matrix& a) {
  if (a.rows() == 0) {
    throw Error(ErrorCode::InvalidArgument, "empty matrix");
  }
  return symmetric_eigenvalues(a).front();
}

// ---------------------------------------------------------------------------
// Simplex

namespace {

constexpr double kPivotTol = 1e-12;
constexpr double kReducedCostTol = 1e-11;

/// Tableau for: maximize c^T z, T z = rhs, z >= 0, with an explicit basis.
/// The objective row stores reduced costs c_j - c_B B^-1 A_j and, in the
/// last slot, the negated objective value.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1), 0.0), basis_(rows) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double& cost(std::size_t c) { return at(rows_, c); }
  double& neg_value() { return at(rows_, cols_); }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set_objective(std::span<const double> c) {
    for (std::size_t j = 0; j <= cols_; ++j) at(rows_, j) = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) cost(j) = c[j];
    for (std::size_t r = 0; r < rows_; ++r) {
      const double cb = c[basis_[r]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(rows_, j) -= cb * at(r, j);
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const double inv = 1.0 / at(pr, pc);
    for (std::size_t j = 0; j <= cols_; ++j) at(pr, j) *= inv;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(r, j) -= f * at(pr, j);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

enum class PhaseResult { Optimal, Unbounded };

/// Runs Bland-rule simplex iterations on columns [0, allowed_cols).
PhaseResult run_phase(Tableau& tab, std::size_t allowed_cols, std::size_t& pivots,
                      std::size_t max_pivots) {
  for (;;) {
    std::size_t entering = allowed_cols;
    for (std::size_t j = 0; j < allowed_cols; ++j) {
      if (tab.cost(j) > kReducedCostTol) {
        entering = j;
        break;
      }
    }
    if (entering == allowed_cols) return PhaseResult::Optimal;

    std::size_t leaving = tab.rows();
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < tab.rows(); ++r) {
      const double coef = tab.at(r, entering);
      if (coef <= kPivotTol) continue;
      const double ratio = std::max(0.0, tab.rhs(r)) / coef;
      if (leaving == tab.rows()) {
        leaving = r;
        best_ratio = ratio;
        continue;
      }
      const double tie = 1e-12 * (1.0 + std::abs(best_ratio));
      if (ratio < best_ratio - tie ||
          (ratio <= best_ratio + tie && tab.basis(r) < tab.basis(leaving))) {
        leaving = r;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    if (leaving == tab.rows()) return PhaseResult::Unbounded;

    if (++pivots > max_pivots) {
      throw Error(ErrorCode::CycleLimit,
                  "simplex exceeded " + std::to_string(max_pivots) + " pivots");
    }
    tab.pivot(leaving, entering);
  }
}

}  // namespace

LpOutcome lp_solve(const LpProblem& problem, const LpOptions& options) {
  const std::size_t n = problem.objective.size();
  const std::size_t m = problem.constraints.size();
  for (const auto& row : problem.constraints) {
    if (row.coefficients.size() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "constraint width differs from objective length");
    }
  }

  // Columns: x+ (n), x- (n), slacks (m), artificials (one per negative offset).
  std::size_t n_art = 0;
  for (const auto& row : problem.constraints) n_art += row.offset < 0.0 ? 1 : 0;
  const std::size_t art_begin = 2 * n + m;
  Tableau tab(m, art_begin + n_art);

  double rhs_scale = 1.0;
  std::size_t next_art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = problem.constraints[i];
    // <a,x> + b >= 0  <=>  -<a,x> + s = b,  s >= 0
    const double sign = row.offset < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      tab.at(i, j) = -sign * row.coefficients[j];
      tab.at(i, n + j) = sign * row.coefficients[j];
    }
    tab.at(i, 2 * n + i) = sign;
    tab.rhs(i) = sign * row.offset;
    rhs_scale = std::max(rhs_scale, std::abs(row.offset));
    if (sign < 0.0) {
      tab.at(i, next_art) = 1.0;
      tab.basis(i) = next_art++;
    } else {
      tab.basis(i) = 2 * n + i;
    }
  }

  std::size_t pivots = 0;
  if (n_art > 0) {
    Vector phase1(tab.cols(), 0.0);
    for (std::size_t j = art_begin; j < tab.cols(); ++j) phase1[j] = -1.0;
    tab.set_objective(phase1);
    run_phase(tab, tab.cols(), pivots, options.max_pivots);
    // neg_value holds -(-sum art) = sum of artificials
    if (tab.neg_value() > kFeasibilityTol * rhs_scale) {
      return LpOutcome{LpStatus::Infeasible, std::nullopt, std::nullopt};
    }
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
      if (tab.basis(r) < art_begin) continue;
      for (std::size_t j = 0; j < art_begin; ++j) {
        if (std::abs(tab.at(r, j)) > 1e-9) {
          tab.pivot(r, j);
          break;
        }
      }
    }
  }

  Vector phase2(tab.cols(), 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = problem.objective[j];
    phase2[n + j] = -problem.objective[j];
  }
  tab.set_objective(phase2);
  if (run_phase(tab, art_begin, pivots, options.max_pivots) ==
      PhaseResult::Unbounded) {
    return LpOutcome{LpStatus::Unbounded, std::nullopt, std::nullopt};
  }

  Vector z(tab.cols(), 0.0);
  for (std::size_t r = 0; r < m; ++r) z[tab.basis(r)] = tab.rhs(r);
  Vector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = z[j] - z[n + j];
  const double value = dot(problem.objective, x);
  return LpOutcome{LpStatus::Optimal, std::move(x), value};
}

}  // namespace hilbert
