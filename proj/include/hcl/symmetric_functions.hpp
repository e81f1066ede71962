#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hcl {

// Strictly increasing k-tuple of indices into {0, ..., n-1}.
struct IndexSet {
  std::vector<int> indices;
  int size() const { return static_cast<int>(indices.size()); }
  bool operator==(const IndexSet&) const = default;
};

std::uint64_t binomial(int n, int k);

// All k-element index sets of {0, ..., n-1} in lexicographic order.
// Exactly binomial(n, k) of them.
std::vector<IndexSet> enumerate_index_sets(int n, int k);

// k-th elementary symmetric polynomial, computed by the stable prefix
// recurrence (identical to full enumeration, which unit tests retain as an
// oracle for small n).
double sigma(std::span<const double> lambda, int k);

// d(sigma_k)/d(lambda_i) = sigma_{k-1} of lambda with entry i removed.
std::vector<double> sigma_gradient(std::span<const double> lambda, int k);

// Garding cone: sigma_1, ..., sigma_k all strictly positive.
bool in_gamma_k(std::span<const double> lambda, int k);
// min over l in {1..k} of sigma_l; positive iff lambda lies in Gamma_k.
double gamma_margin(std::span<const double> lambda, int k);

// All k-term sums lambda_{i_1} + ... + lambda_{i_k}, in the lexicographic
// order of enumerate_index_sets.
std::vector<double> ksum_multiset(std::span<const double> lambda, int k);

// k-Monge-Ampere polynomial: product of the k-sum multiset. Degree
// binomial(n, k); evaluated in log space when every factor is positive and
// the direct product would leave double range.
double ma_k(std::span<const double> lambda, int k);

// d(MA_k)/d(lambda_i), assembled from products that exclude one factor
// (no division, so zero k-sums are harmless).
std::vector<double> ma_k_gradient(std::span<const double> lambda, int k);

// Cone of the k-Monge-Ampere operator: every k-term sum positive.
bool in_gamma_k_prime(std::span<const double> lambda, int k);
// min k-sum; positive iff lambda lies in Gamma'_k.
double gamma_prime_margin(std::span<const double> lambda, int k);

// (sigma_{k-1}/C_n^{k-1})^{1/(k-1)} - (sigma_k/C_n^k)^{1/k} for
// lambda in Gamma_{k-1}, k >= 2; nonnegative there by Maclaurin's
// inequality. A nonpositive sigma_k contributes zero to the second term.
// Throws std::domain_error outside Gamma_{k-1}.
double maclaurin_gap(std::span<const double> lambda, int k);

// | sum over (k-1)-subsets J of I of s_J  -  (k-1) s_I |, where s is the
// index sum. Identically zero; returned as a residual.
double distribution_identity_residual(std::span<const double> lambda, const IndexSet& I);

// (1/k) MA_k^{1/C_n^k} - (1/(k-1)) MA_{k-1}^{1/C_n^{k-1}} for lambda in
// Gamma'_{k-1}, 2 <= k <= n; nonnegative there. Throws std::domain_error
// outside Gamma'_{k-1}.
double mak_comparison_gap(std::span<const double> lambda, int k);

// sign(x) |x|^e
double signed_pow(double x, double e);

}  // namespace hcl
