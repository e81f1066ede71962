#pragma once

#include "hcl/linalg.hpp"
#include "hcl/polyroots.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hcl {

// Slack applied to every defining inequality of an operator cone test;
// keeps sampled certifications away from boundary flakiness.
inline constexpr double kConeSlack = 1e-12;

using SymmetricFunction = std::function<double(std::span<const double>)>;
using ConePredicate = std::function<bool(std::span<const double>)>;
using GradientFunction = std::function<std::vector<double>(std::span<const double>)>;

// A Hessian operator F = Fhat ∘ λ with its cone and degree. evaluate must be
// permutation symmetric, positively homogeneous of degree `degree`, and
// positive on the cone (spot checks live in certify). gradient may be null,
// in which case central finite differences stand in.
struct HessianOperatorSpec {
  std::string name;
  int dimension = 0;   // n
  double degree = 0.0; // d
  SymmetricFunction evaluate;
  ConePredicate in_cone;
  GradientFunction gradient;
  // C such that Fhat^{1/d} >= C (prod lambda)^{1/n} on the positive orthant.
  double garding_constant = 1.0;
};

// Built-in catalog.
HessianOperatorSpec make_determinant_operator(int n);
HessianOperatorSpec make_sigma_k_operator(int n, int k);
HessianOperatorSpec make_ma_k_operator(int n, int k);
// n = 2 family (lambda_1 + s lambda_2)(s lambda_1 + lambda_2) on the cone
// interpolating Gamma_2 and Gamma_1; s in [0, 1).
HessianOperatorSpec make_interpolated2d_operator(double s);

enum class ConeCheck { strict, warn, off };

// F(A) = Fhat(lambda(A)). strict cone checking throws std::domain_error,
// warn prints to stderr and proceeds.
double eval_F(const HessianOperatorSpec& spec, const HermitianMatrix& A,
              ConeCheck check = ConeCheck::strict);

// G = F^{1/d}; requires lambda(A) strictly inside the cone.
double eval_G(const HessianOperatorSpec& spec, const HermitianMatrix& A);

// Gradient of Ghat = Fhat^{1/d} in the eigenvalue variables.
std::vector<double> ghat_gradient(const HessianOperatorSpec& spec, std::span<const double> lambda);

// Gradient of G at A as the Hermitian matrix U diag(dGhat/dlambda) U*. At
// nearly degenerate spectra (gap < 1e-8 relative) A is first conjugated by
// a deterministic near-identity unitary; the finite-difference oracle in the
// tests arbitrates that branch.
HermitianMatrix grad_G(const HessianOperatorSpec& spec, const HermitianMatrix& A);

// F(P)^{1/d} - C (det P)^{1/n} for positive definite P. The one-argument
// form uses the catalog constant of the spec.
double garding_comparison_margin(const HessianOperatorSpec& spec, const HermitianMatrix& P,
                                 double C);
double garding_comparison_margin(const HessianOperatorSpec& spec, const HermitianMatrix& P);

// G(tA + (1-t)B) - t G(A) - (1-t) G(B); also certifies that the convex
// combination stays in the cone (throws numerical_error otherwise).
double concavity_probe(const HessianOperatorSpec& spec, const HermitianMatrix& A,
                       const HermitianMatrix& B, double t);

// mu majorizes lambda: ascending prefix sums of mu never exceed those of
// lambda and the totals agree.
bool majorizes(std::span<const double> mu, std::span<const double> lambda, double tol = 1e-9);

// Ghat(lambda) - Ghat(mu) for mu majorizing lambda; nonnegative for the
// built-ins on their (closed) cones. Throws std::invalid_argument when the
// majorization precondition fails.
double schur_concavity_probe(const HessianOperatorSpec& spec, std::span<const double> lambda,
                             std::span<const double> mu);

struct HyperbolicityResult {
  bool hyperbolic = false;
  std::vector<cplx> roots;           // of t -> Fhat(lambda - t e)
  double max_imag_ratio = 0.0;       // max |Im t| / (1 + |Re t|)
  bool conditioning_warning = false; // set for degree > 30
};

// Interpolates the univariate polynomial t -> Fhat(lambda - t e) from
// degree+1 evaluations and checks all companion-matrix roots for real-ness.
// Requires Fhat(e) != 0.
HyperbolicityResult hyperbolicity_check(const SymmetricFunction& fhat, int degree,
                                        std::span<const double> direction,
                                        std::span<const double> lambda, double tol);

// Membership in C_R: lambda(A) in the cone, Trace(A) < R, F(A) > 1/R.
bool in_C_R(const HessianOperatorSpec& spec, const HermitianMatrix& A, double R);

struct UniformEllipticityEstimate {
  double m = 0.0, M = 0.0;  // empirical min/max of all dFhat/dlambda_i
  int accepted = 0;
  int budget = 0;
  double coverage = 0.0;            // accepted / budget
  double caract_worst_margin = 0.0; // Fhat(mu)-Fhat(lambda) - m sum(mu-lambda)
  std::vector<double> witness_lambda;
};

// Samples Gamma_R by rejection from the box (-R, R)^n. For sigma_1-type
// operators (cone C_1) the set C_R is unbounded and only its box clip is
// covered; the coverage field reports the acceptance rate either way.
// Throws numerical_error when no sample lands in C_R.
UniformEllipticityEstimate uniform_ellipticity_estimate(const HessianOperatorSpec& spec, double R,
                                                        int budget, std::uint64_t seed);

// G(mean of the batch) - mean of G over the batch; also asserts the mean
// stays in the cone. Every member must lie in the cone.
double jensen_gap(const HessianOperatorSpec& spec, std::span<const HermitianMatrix> batch);

// n max(d-1, 1); equals n (C_n^k - 1) for the k-Monge-Ampere operator.
double p_threshold(double degree, int n);
double p_threshold(const HessianOperatorSpec& spec);

}  // namespace hcl
