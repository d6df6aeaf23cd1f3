#ifndef HILBERT_NUMERICS_HPP
#define HILBERT_NUMERICS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hilbert {

using Vector = std::vector<double>;

/// Tolerance shared by every feasibility test in the library.
inline constexpr double kFeasibilityTol = 1e-9;

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
Vector add(std::span<const double> a, std::span<const double> b);
Vector subtract(std::span<const double> a, std::span<const double> b);
Vector scaled(std::span<const double> a, double s);
/// a + s * b
Vector axpy(std::span<const double> a, double s, std::span<const double> b);

/// Dense row-major matrix sized for the small problems handled here
/// (dimension up to about ten, a few dozen constraints).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> diag);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> entries() const noexcept { return data_; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_).subspan(r * cols_, cols_);
  }

  Vector apply(std::span<const double> x) const;
  double frobenius_norm() const;
  bool all_finite() const;

  /// this += scale * v v^T
  void add_outer(std::span<const double> v, double scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Solves A x = rhs for symmetric positive-definite A by Cholesky
/// factorization. Throws NotPositiveDefinite on a nonpositive pivot.
Vector solve_spd(const Matrix& a, std::span<const double> rhs);

/// All eigenvalues of a symmetric matrix in ascending order, by cyclic
/// Jacobi rotations.
Vector symmetric_eigenvalues(const Matrix& a);

double min_eigenvalue_symmetric(const Matrix& a);

// ---------------------------------------------------------------------------
// Dense linear programming
// ---------------------------------------------------------------------------

/// One constraint row <coefficients, x> + offset >= 0.
struct LpConstraint {
  Vector coefficients;
  double offset = 0.0;
};

/// Maximize <objective, x> over free variables x subject to every
/// constraint row.
struct LpProblem {
  Vector objective;
  std::vector<LpConstraint> constraints;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Vector> optimizer;
  std::optional<double> value;
};

struct LpOptions {
  std::size_t max_pivots = 50000;
};

/// Two-phase dense simplex with Bland's rule. Throws CycleLimit when the
/// pivot count exceeds options.max_pivots.
LpOutcome lp_solve(const LpProblem& problem, const LpOptions& options = {});

}  // namespace hilbert

#endif  // HILBERT_NUMERICS_HPP
