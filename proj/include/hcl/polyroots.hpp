#pragma once

#include "hcl/linalg.hpp"

#include <functional>
#include <span>

namespace hcl {

// Eigenvalues of an upper Hessenberg matrix by single-shift complex QR with
// Wilkinson shifts. Throws numerical_error if deflation stalls.
std::vector<cplx> hessenberg_eigenvalues(ComplexMatrix h);

// Roots of sum_i coeffs[i] t^i (real coefficients, ascending order) via the
// companion matrix. Leading coefficients below 1e-14 of the largest are
// dropped before forming the companion.
std::vector<cplx> polynomial_roots(std::span<const double> coeffs);

// Monomial coefficients (ascending) of the degree-`degree` polynomial
// interpolating f at Chebyshev nodes on [-half_width, half_width], by Newton
// divided differences. Exact (up to rounding) when f is a polynomial of the
// given degree.
std::vector<double> interpolate_polynomial(const std::function<double(double)>& f, int degree,
                                           double half_width);

// Chebyshev coefficients a_0..a_degree of the interpolant of f at the
// Chebyshev nodes of [-1, 1].
std::vector<double> chebyshev_coefficients(const std::function<double(double)>& f, int degree);

// Roots of sum_k coeffs[k] T_k(x) via the Chebyshev companion (colleague)
// matrix; much better conditioned than the monomial route when the roots
// cluster. Negligible leading coefficients are stripped.
std::vector<cplx> colleague_roots(std::span<const double> coeffs);

}  // namespace hcl
