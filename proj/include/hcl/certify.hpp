#pragma once

#include "hcl/operators.hpp"
#include "hcl/rng.hpp"

#include <json.hpp>

namespace hcl {

// Outcome of a sampled certification. A probe passes when its worst margin
// stays above -tolerance; the witness records the sample that attained it.
struct ProbeReport {
  std::string property;
  std::string op;
  int samples = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  double tolerance = 1e-10;
  nlohmann::json witness;

  bool passed() const { return worst_margin >= -tolerance; }
  nlohmann::json to_json() const;
};

// Sampling helpers. All draws are deterministic in the Rng state.
ComplexMatrix random_unitary(int n, Rng& rng);
HermitianMatrix random_hermitian(int n, Rng& rng);
HermitianMatrix hermitian_with_spectrum(std::span<const double> lambda, Rng& rng);
// Rejection sampling of the cone from the box [-1, 3]^n.
std::vector<double> sample_lambda(const ConePredicate& member, int n, Rng& rng,
                                  int max_tries = 200000);
HermitianMatrix random_in_cone(const HessianOperatorSpec& spec, Rng& rng);
HermitianMatrix random_positive_definite(int n, Rng& rng, double lo = 0.05, double hi = 3.0);
HermitianMatrix random_positive_semidefinite(int n, Rng& rng, double hi = 1.0);

// Operator axioms of the spec type: permutation symmetry, positive
// homogeneity of the declared degree, positivity on the cone.
ProbeReport certify_operator_axioms(const HessianOperatorSpec& spec, int samples,
                                    std::uint64_t seed);

// F(P)^{1/d} >= C (det P)^{1/n} on random positive definite P.
ProbeReport certify_garding(const HessianOperatorSpec& spec, int samples, std::uint64_t seed);

// Concavity of G along random in-cone segments.
ProbeReport certify_concavity(const HessianOperatorSpec& spec, int samples, std::uint64_t seed);

// Schur concavity of Ghat on random T-transform pairs.
ProbeReport certify_schur_concavity(const HessianOperatorSpec& spec, int samples,
                                    std::uint64_t seed);

// Jensen inequality for G over random in-cone batches.
ProbeReport certify_jensen(const HessianOperatorSpec& spec, int samples, std::uint64_t seed,
                           int batch_size = 4);

// grad_G against central finite differences in matrix entries
// (tolerance 1e-5, relative Frobenius).
ProbeReport certify_gradient_fd(const HessianOperatorSpec& spec, int samples, std::uint64_t seed);

// Degree-zero homogeneity of grad_G (tolerance 1e-9).
ProbeReport certify_dg_homogeneity(const HessianOperatorSpec& spec, int samples,
                                   std::uint64_t seed);

// Degenerate ellipticity: F(A + Q) >= F(A) for positive semidefinite Q.
ProbeReport certify_monotonicity(const HessianOperatorSpec& spec, int samples, std::uint64_t seed);

// G(A + P) >= G(A) + C (det P)^{1/n} for in-cone A and positive definite P.
ProbeReport certify_sharpened_comparison(const HessianOperatorSpec& spec, int samples,
                                         std::uint64_t seed);

// Midpoints of C_R pairs stay in C_R.
ProbeReport certify_cr_convexity(const HessianOperatorSpec& spec, double R, int samples,
                                 std::uint64_t seed);

// Maclaurin gap >= 0 on rejection-sampled Gamma_{k-1}.
ProbeReport certify_maclaurin(int n, int k, int samples, std::uint64_t seed);

// MA_k / MA_{k-1} comparison gap >= 0 on rejection-sampled Gamma'_{k-1}.
ProbeReport certify_mak_comparison(int n, int k, int samples, std::uint64_t seed);

// Cone chains Gamma_k ⊂ Gamma_{k-1} and Gamma'_{k-1} ⊂ Gamma'_k plus
// positivity of the sigma_k partials on Gamma_k.
ProbeReport certify_cone_chain(int n, int k, int samples, std::uint64_t seed);

// Real-rootedness of t -> Fhat(lambda - t(1,...,1)) on random lambda.
ProbeReport certify_hyperbolicity(const HessianOperatorSpec& spec, int samples,
                                  std::uint64_t seed, double tol = 1e-8);

}  // namespace hcl
