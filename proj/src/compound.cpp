#include "hcl/compound.hpp"

#include <algorithm>
#include <cmath>

namespace hcl {

namespace {

// Position of x inside the sorted tuple, or -1.
int position_of(const IndexSet& s, int x) {
  for (int p = 0; p < s.size(); ++p)
    if (s.indices[p] == x) return p;
  return -1;
}

double hausdorff_distance(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  auto one_sided = [](const std::vector<double>& from, const std::vector<double>& to) {
    double worst = 0.0;
    for (double x : from) {
      auto it = std::lower_bound(to.begin(), to.end(), x);
      double best = std::numeric_limits<double>::infinity();
      if (it != to.end()) best = std::min(best, std::abs(*it - x));
      if (it != to.begin()) best = std::min(best, std::abs(*(it - 1) - x));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

}  // namespace

CompoundMatrix build_compound(const HermitianMatrix& A, int k) {
  const int n = A.dim();
  CompoundMatrix out;
  out.base_dim = n;
  out.order = k;
  out.basis = enumerate_index_sets(n, k);  // validates k
  const int dim = static_cast<int>(out.basis.size());
  out.body = HermitianMatrix(dim);

  for (int r = 0; r < dim; ++r) {
    const IndexSet& I = out.basis[r];
    double diag = 0.0;
    for (int i : I.indices) diag += A(i, i).real();
    out.body.set(r, r, diag);

    for (int c = r + 1; c < dim; ++c) {
      const IndexSet& J = out.basis[c];
      // I and J must differ by exactly one index each way
      int i_only = -1, j_only = -1, extra = 0;
      for (int i : I.indices)
        if (position_of(J, i) < 0) {
          if (i_only >= 0) {
            extra = 1;
            break;
          }
          i_only = i;
        }
      if (extra || i_only < 0) continue;
      for (int j : J.indices)
        if (position_of(I, j) < 0) {
          j_only = j;
          break;
        }
      const int sign = ((position_of(I, i_only) + position_of(J, j_only)) % 2 == 0) ? 1 : -1;
      out.body.set(r, c, static_cast<double>(sign) * A(i_only, j_only));
    }
  }
  return out;
}

double compound_spectrum_residual(const HermitianMatrix& A, int k) {
  const CompoundMatrix d = build_compound(A, k);
  const Spectrum compound_spec = eigenvalues(d.body);
  const Spectrum base_spec = eigenvalues(A);
  const auto sums = ksum_multiset(base_spec.values, k);
  return hausdorff_distance(compound_spec.values, sums);
}

double mak_via_determinant(const HermitianMatrix& A, int k) {
  return determinant(build_compound(A, k).body);
}

bool in_C_k_prime(const HermitianMatrix& A, int k) {
  return eigenvalues(build_compound(A, k).body).min() > 0.0;
}

}  // namespace hcl
