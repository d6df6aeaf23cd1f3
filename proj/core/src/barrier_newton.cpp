#include "barrier_newton.hpp"

#include <cmath>
#include <limits>

#include "hilbert/error.hpp"

namespace hilbert::detail {

namespace {

struct Evaluation {
  Vector slacks;
  double objective = 0.0;
  double magnitude = 0.0;  // sum of |terms|, scales the roundoff allowance
};

bool evaluate(const Polytope& p, const SeparableBarrier& barrier,
              std::span<const double> linear, std::span<const double> x,
              Evaluation& out) {
  out.slacks = p.slacks(x);
  out.objective = 0.0;
  out.magnitude = 0.0;
  for (double s : out.slacks) {
    if (!(s > 0.0)) return false;
    const double term = barrier.value(s);
    out.objective += term;
    out.magnitude += std::abs(term);
  }
  const double lin = dot(linear, x);
  out.objective -= lin;
  out.magnitude += std::abs(lin);
  return std::isfinite(out.objective);
}

Vector gradient(const Polytope& p, const SeparableBarrier& barrier,
                std::span<const double> linear, std::span<const double> slacks) {
  Vector g = scaled(linear, -1.0);
  for (std::size_t i = 0; i < p.num_facets(); ++i) {
    const double w = barrier.first(slacks[i]);
    const auto& grad_i = p.facet(i).gradient;
    for (std::size_t j = 0; j < g.size(); ++j) g[j] += w * grad_i[j];
  }
  return g;
}

}  // namespace

BarrierResult minimize_barrier(const Polytope& p, const SeparableBarrier& barrier,
                               std::span<const double> linear, Vector start,
                               double tol, std::size_t max_iter) {
  constexpr double kBoundaryFraction = 0.99;
  constexpr int kMaxHalvings = 60;
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  BarrierResult result;
  result.coords = std::move(start);
  Evaluation current;
  if (!evaluate(p, barrier, linear, result.coords, current)) {
    throw Error(ErrorCode::NotInterior, "Newton start point is not interior");
  }
  result.trace.objective_values.push_back(current.objective);

  Vector grad = gradient(p, barrier, linear, current.slacks);
  double grad_norm = norm2(grad);

  for (;;) {
    result.trace.final_residual = grad_norm;
    if (grad_norm <= tol) {
      result.converged = true;
      return result;
    }
    if (result.trace.iterations >= max_iter) return result;

    Matrix hessian(p.dim(), p.dim());
    for (std::size_t i = 0; i < p.num_facets(); ++i) {
      hessian.add_outer(p.facet(i).gradient, barrier.second(current.slacks[i]));
    }
    Vector step;
    try {
      step = solve_spd(hessian, scaled(grad, -1.0));
    } catch (const Error&) {
      return result;
    }

    double alpha_max = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.num_facets(); ++i) {
      const double rate = dot(p.facet(i).gradient, step);
      if (rate < 0.0) alpha_max = std::min(alpha_max, -current.slacks[i] / rate);
    }
    double alpha = std::min(1.0, kBoundaryFraction * alpha_max);

    bool accepted = false;
    Evaluation trial;
    Vector trial_x;
    Vector trial_grad;
    double trial_grad_norm = 0.0;
    for (int h = 0; h < kMaxHalvings; ++h, alpha *= 0.5) {
      trial_x = axpy(result.coords, alpha, step);
      if (!evaluate(p, barrier, linear, trial_x, trial)) continue;
      trial_grad = gradient(p, barrier, linear, trial.slacks);
      trial_grad_norm = norm2(trial_grad);
      if (trial.objective < current.objective) {
        accepted = true;
        break;
      }
      // Close to the minimizer the objective is flat to within roundoff;
      // accept a step that is level up to that noise and shrinks the gradient.
      const double noise = 16.0 * kEps * (current.magnitude + trial.magnitude);
      if (trial.objective <= current.objective + noise && trial_grad_norm < grad_norm) {
        accepted = true;
        break;
      }
    }
    if (!accepted) return result;

    result.coords = std::move(trial_x);
    current = std::move(trial);
    grad = std::move(trial_grad);
    grad_norm = trial_grad_norm;
    ++result.trace.iterations;
    result.trace.step_sizes.push_back(alpha);
    result.trace.objective_values.push_back(current.objective);
  }
}

}  // namespace hilbert::detail
