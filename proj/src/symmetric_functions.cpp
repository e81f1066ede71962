#include "hcl/symmetric_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hcl {

namespace {

void check_k(int n, int k) {
  if (k < 1 || k > n)
    throw std::invalid_argument("order k=" + std::to_string(k) + " out of range for n=" +
                                std::to_string(n));
}

// Elementary symmetric polynomials e_0..e_k of the given values.
std::vector<double> esp_prefix(std::span<const double> lambda, int k) {
  std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  int used = 0;
  for (double x : lambda) {
    ++used;
    for (int j = std::min(k, used); j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

std::vector<IndexSet> enumerate_index_sets(int n, int k) {
  check_k(n, k);
  std::vector<IndexSet> out;
  out.reserve(binomial(n, k));
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(IndexSet{cur});
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int j = pos + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

double sigma(std::span<const double> lambda, int k) {
  check_k(static_cast<int>(lambda.size()), k);
  return esp_prefix(lambda, k)[k];
}

std::vector<double> sigma_gradient(std::span<const double> lambda, int k) {
  const int n = static_cast<int>(lambda.size());
  check_k(n, k);
  std::vector<double> g(n);
  std::vector<double> rest(n - 1);
  for (int i = 0; i < n; ++i) {
    int w = 0;
    for (int j = 0; j < n; ++j)
      if (j != i) rest[w++] = lambda[j];
    g[i] = (k == 1) ? 1.0 : esp_prefix(rest, k - 1)[k - 1];
  }
  return g;
}

double gamma_margin(std::span<const double> lambda, int k) {
  check_k(static_cast<int>(lambda.size()), k);
  const auto e = esp_prefix(lambda, k);
  double m = std::numeric_limits<double>::infinity();
  for (int l = 1; l <= k; ++l) m = std::min(m, e[l]);
  return m;
}

bool in_gamma_k(std::span<const double> lambda, int k) { return gamma_margin(lambda, k) > 0.0; }

std::vector<double> ksum_multiset(std::span<const double> lambda, int k) {
  const int n = static_cast<int>(lambda.size());
  const auto sets = enumerate_index_sets(n, k);
  std::vector<double> sums;
  sums.reserve(sets.size());
  for (const IndexSet& I : sets) {
    double s = 0.0;
    for (int i : I.indices) s += lambda[i];
    sums.push_back(s);
  }
  return sums;
}

double ma_k(std::span<const double> lambda, int k) {
  const auto sums = ksum_multiset(lambda, k);
  bool all_positive = true;
  for (double s : sums)
    if (!(s > 0.0)) {
      all_positive = false;
      break;
    }
  if (all_positive) {
    double log_sum = 0.0;
    for (double s : sums) log_sum += std::log(s);
    if (std::abs(log_sum) > 700.0) return std::exp(log_sum);
  }
  double prod = 1.0;
  for (double s : sums) prod *= s;
  return prod;
}

std::vector<double> ma_k_gradient(std::span<const double> lambda, int k) {
  const int n = static_cast<int>(lambda.size());
  const auto sets = enumerate_index_sets(n, k);
  const auto sums = ksum_multiset(lambda, k);
  const std::size_t count = sums.size();
  std::vector<double> prefix(count + 1, 1.0), suffix(count + 1, 1.0);
  for (std::size_t i = 0; i < count; ++i) prefix[i + 1] = prefix[i] * sums[i];
  for (std::size_t i = count; i-- > 0;) suffix[i] = suffix[i + 1] * sums[i];
  std::vector<double> g(n, 0.0);
  for (std::size_t s = 0; s < count; ++s) {
    const double excl = prefix[s] * suffix[s + 1];
    for (int i : sets[s].indices) g[i] += excl;
  }
  return g;
}

double gamma_prime_margin(std::span<const double> lambda, int k) {
  const auto sums = ksum_multiset(lambda, k);
  return *std::min_element(sums.begin(), sums.end());
}

bool in_gamma_k_prime(std::span<const double> lambda, int k) {
  return gamma_prime_margin(lambda, k) > 0.0;
}

double maclaurin_gap(std::span<const double> lambda, int k) {
  const int n = static_cast<int>(lambda.size());
  check_k(n, k);
  if (k < 2) throw std::invalid_argument("maclaurin_gap: k >= 2 required");
  if (!in_gamma_k(lambda, k - 1))
    throw std::domain_error("maclaurin_gap: lambda is not in Gamma_{k-1}");
  const auto e = esp_prefix(lambda, k);
  const double lhs = std::pow(e[k - 1] / static_cast<double>(binomial(n, k - 1)),
                              1.0 / static_cast<double>(k - 1));
  const double sk = e[k];
  if (sk <= 0.0) return lhs;
  return lhs - std::pow(sk / static_cast<double>(binomial(n, k)), 1.0 / static_cast<double>(k));
}

double distribution_identity_residual(std::span<const double> lambda, const IndexSet& I) {
  const int n = static_cast<int>(lambda.size());
  const int k = I.size();
  if (k < 2) throw std::invalid_argument("distribution_identity_residual: |I| >= 2 required");
  for (int i : I.indices)
    if (i < 0 || i >= n) throw std::invalid_argument("distribution_identity_residual: bad index");
  double s_full = 0.0;
  for (int i : I.indices) s_full += lambda[i];
  // sum over the (k-1)-subsets of I: each member of I is dropped exactly once
  double lhs = 0.0;
  for (int drop = 0; drop < k; ++drop) lhs += s_full - lambda[I.indices[drop]];
  return std::abs(lhs - static_cast<double>(k - 1) * s_full);
}

double mak_comparison_gap(std::span<const double> lambda, int k) {
  const int n = static_cast<int>(lambda.size());
  check_k(n, k);
  if (k < 2) throw std::invalid_argument("mak_comparison_gap: k >= 2 required");
  if (!in_gamma_k_prime(lambda, k - 1))
    throw std::domain_error("mak_comparison_gap: lambda is not in Gamma'_{k-1}");
  const double lhs = signed_pow(ma_k(lambda, k), 1.0 / static_cast<double>(binomial(n, k))) /
                     static_cast<double>(k);
  const double rhs =
      signed_pow(ma_k(lambda, k - 1), 1.0 / static_cast<double>(binomial(n, k - 1))) /
      static_cast<double>(k - 1);
  return lhs - rhs;
}

double signed_pow(double x, double e) {
  if (x == 0.0) return 0.0;
  return x > 0.0 ? std::pow(x, e) : -std::pow(-x, e);
}

}  // namespace hcl
