#pragma once

#include "hcl/fields.hpp"
#include "hcl/rng.hpp"

#include <span>
#include <vector>

namespace hcl {

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  int samples = 0;
};

// Monte Carlo mean of the field over the real 2n-ball of radius eps centered
// at z. Points are drawn uniformly: direction from a normalized 2n-Gaussian,
// radius eps * U^{1/(2n)}.
McEstimate ball_average(const ScalarField& field, std::span<const cplx> z, double eps,
                        int sample_count, std::uint64_t seed);

// (n+1)/eps^2 * (ball average - center value). Samples are used in
// antithetic +/- pairs, which keeps the estimator unbiased for the ball
// average and removes the gradient noise; for a fixed seed the unit-ball
// draws are shared across eps values.
McEstimate t_eps(const ScalarField& field, std::span<const cplx> z, double eps, int sample_count,
                 std::uint64_t seed);

struct PositivityReport {
  double worst_value = 0.0;
  double std_error_at_worst = 0.0;
  std::vector<cplx> worst_point;
};

// min of t_eps over the grid; for a subharmonic field this should not fall
// below about -3 standard errors.
PositivityReport positivity_probe(const ScalarField& field,
                                  std::span<const std::vector<cplx>> grid, double eps,
                                  int sample_count, std::uint64_t seed);

struct ConvergenceReport {
  std::vector<double> eps;
  std::vector<double> values;
  std::vector<double> biases;      // |value - reference|
  std::vector<double> std_errors;
  double reference = 0.0;          // Trace of the FD complex Hessian at z
  double fitted_order = 0.0;       // slope of log bias against log eps
  bool exact_within_noise = false; // set when no bias rises above 3 sigma
};

// Compares t_eps against the complex Laplacian for a decreasing eps list
// and fits the convergence order on the biases resolved by the Monte Carlo
// error.
ConvergenceReport convergence_probe(const ScalarField& field, std::span<const cplx> z,
                                    std::span<const double> eps_list, int sample_count,
                                    std::uint64_t seed);

}  // namespace hcl
