#pragma once

#include "hcl/fields.hpp"
#include "hcl/linalg.hpp"

#include <span>
#include <vector>

namespace hcl {

// Parameters of the family u(z', z'') = (1 + |z'|^2) |z''|^{2 beta} on
// C^m x C^{n-m}.
struct PogorelovParams {
  int m = 1;
  int n = 2;
  double beta = 1.0;

  PogorelovParams(int m_, int n_, double beta_);
};

// A point of C^n split into its first m and last n-m coordinates. The
// degenerate set N = {z'' = 0} is guarded per operation, not here.
struct SplitPoint {
  std::vector<cplx> zprime;
  std::vector<cplx> zsecond;

  static SplitPoint from_flat(std::span<const cplx> z, int m);
  std::vector<cplx> flat() const;
};

double u_value(const PogorelovParams& params, const SplitPoint& z);

// Exact complex Hessian off the degenerate set (|z''| >= 1e-14 required,
// std::domain_error otherwise).
HermitianMatrix analytic_hessian(const PogorelovParams& params, const SplitPoint& z);

// Closed-form eigenvalues off the degenerate set, ascending:
//   |z''|^{2b}                        with multiplicity m-1,
//   b (1+|z'|^2) |z''|^{2b-2}         with multiplicity n-m-1,
//   phi(z) |z''|^{2b-2}  and  (b^2 / phi(z)) |z''|^{2b}.
Spectrum closed_form_spectrum(const PogorelovParams& params, const SplitPoint& z);

// det D_C^2 u = b^{n-m+1} (1+|z'|^2)^{n-m-1} |z''|^{2 b n - 2(n-m)}.
double det_closed_form(const PogorelovParams& params, const SplitPoint& z);

// Trace of the analytic Hessian in closed form.
double trace_closed_form(const PogorelovParams& params, const SplitPoint& z);

// Power of |z''| in MA_k of the Hessian spectrum:
// C_m^k (2 beta) + (C_n^k - C_m^k)(2 beta - 2), with C_m^k = 0 for m < k.
double mak_closed_form_exponent(int m, int n, int k, double beta);

// The unique beta that makes the exponent vanish: 1 - C_m^k / C_n^k.
double critical_beta(int m, int n, int k);

struct SmoothnessReport {
  std::vector<double> radii;
  std::vector<double> values;      // MA_k of the Hessian spectrum at |z''| = r
  double fitted_exponent = 0.0;    // log-log least squares slope
  double min_value = 0.0;
  double max_value = 0.0;
};

// Evaluates MA_k along z'' = r * direction for the given radii (direction is
// normalized internally) and fits the growth exponent. At the critical beta
// the values stay in a positive bracket; off it the fitted slope recovers
// mak_closed_form_exponent.
SmoothnessReport mak_smoothness_probe(const PogorelovParams& params, int k,
                                      std::span<const double> radii,
                                      std::span<const cplx> zprime,
                                      std::span<const cplx> direction);
SmoothnessReport mak_smoothness_probe(const PogorelovParams& params, int k,
                                      std::span<const double> radii);

// W^{2,p}_loc membership: beta >= 1, or beta < 1 and p < (n-m)/(1-beta).
bool w2p_admissible(double p, int m, int n, double beta);

// Power of r in the radial integrability reduction:
// 2(n-m) - 1 + 2p + (2 beta - 4) p. Admissibility is equivalent to this
// exceeding -1 (or beta >= 1).
double radial_exponent(double p, int m, int n, double beta);

// (n-k) C_n^k, the exponent below which the example rules out regularity.
double p_star(int n, int k);

// Holder regularity of the family: u is C^{1,alpha} iff alpha <= 2 beta - 1.
bool c1alpha_admissible(double alpha, double beta);

// The family as a ScalarField over flat coordinates.
ScalarField field_pogorelov(const PogorelovParams& params);

}  // namespace hcl
