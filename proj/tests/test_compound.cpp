#include "hcl/compound.hpp"
#include "hcl/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

using namespace hcl;

namespace {

HermitianMatrix random_hermitian(int n, Rng& rng) {
  HermitianMatrix a(n);
  for (int i = 0; i < n; ++i) {
    a.set(i, i, rng.normal());
    for (int j = i + 1; j < n; ++j) a.set(i, j, cplx(rng.normal(), rng.normal()));
  }
  return a;
}

// Published 3x3 matrix for n = 3, k = 2 in the lexicographic basis
// (12), (13), (23).
ComplexMatrix reference_n3k2(const HermitianMatrix& u) {
  ComplexMatrix m(3, 3);
  m(0, 0) = u(0, 0) + u(1, 1);
  m(0, 1) = u(1, 2);
  m(0, 2) = -u(0, 2);
  m(1, 0) = u(2, 1);
  m(1, 1) = u(0, 0) + u(2, 2);
  m(1, 2) = u(0, 1);
  m(2, 0) = -u(2, 0);
  m(2, 1) = u(1, 0);
  m(2, 2) = u(1, 1) + u(2, 2);
  return m;
}

// Published 6x6 matrix for n = 4, k = 2 in the lexicographic basis
// (12), (13), (14), (23), (24), (34).
ComplexMatrix reference_n4k2(const HermitianMatrix& u) {
  ComplexMatrix m(6, 6);
  m(0, 0) = u(0, 0) + u(1, 1);
  m(0, 1) = u(1, 2);
  m(0, 2) = u(1, 3);
  m(0, 3) = -u(0, 2);
  m(0, 4) = -u(0, 3);
  m(0, 5) = 0.0;
  m(1, 0) = u(2, 1);
  m(1, 1) = u(0, 0) + u(2, 2);
  m(1, 2) = u(2, 3);
  m(1, 3) = u(0, 1);
  m(1, 4) = 0.0;
  m(1, 5) = -u(0, 3);
  m(2, 0) = u(3, 1);
  m(2, 1) = u(3, 2);
  m(2, 2) = u(0, 0) + u(3, 3);
  m(2, 3) = 0.0;
  m(2, 4) = u(0, 1);
  m(2, 5) = u(0, 2);
  m(3, 0) = -u(2, 0);
  m(3, 1) = u(1, 0);
  m(3, 2) = 0.0;
  m(3, 3) = u(1, 1) + u(2, 2);
  m(3, 4) = u(2, 3);
  m(3, 5) = -u(1, 3);
  m(4, 0) = -u(3, 0);
  m(4, 1) = 0.0;
  m(4, 2) = u(1, 0);
  m(4, 3) = u(3, 2);
  m(4, 4) = u(1, 1) + u(3, 3);
  m(4, 5) = u(1, 2);
  m(5, 0) = 0.0;
  m(5, 1) = -u(3, 0);
  m(5, 2) = u(2, 0);
  m(5, 3) = -u(3, 1);
  m(5, 4) = u(2, 1);
  m(5, 5) = u(2, 2) + u(3, 3);
  return m;
}

// Published 4x4 matrix for n = 4, k = 3; its diagonal reads off the basis
// order (123), (124), (234), (134).
ComplexMatrix reference_n4k3(const HermitianMatrix& u) {
  ComplexMatrix m(4, 4);
  m(0, 0) = u(0, 0) + u(1, 1) + u(2, 2);
  m(0, 1) = u(2, 3);
  m(0, 2) = u(0, 3);
  m(0, 3) = -u(1, 3);
  m(1, 0) = u(3, 2);
  m(1, 1) = u(0, 0) + u(1, 1) + u(3, 3);
  m(1, 2) = -u(0, 2);
  m(1, 3) = u(1, 2);
  m(2, 0) = u(3, 0);
  m(2, 1) = -u(2, 0);
  m(2, 2) = u(1, 1) + u(2, 2) + u(3, 3);
  m(2, 3) = u(1, 0);
  m(3, 0) = -u(3, 1);
  m(3, 1) = u(2, 1);
  m(3, 2) = u(0, 1);
  m(3, 3) = u(2, 2) + u(3, 3) + u(0, 0);
  return m;
}

double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

}  // namespace

TEST_CASE("compound reproduces the published 3x3 matrix entrywise") {
  Rng rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const HermitianMatrix u = random_hermitian(3, rng);
    const CompoundMatrix d = build_compound(u, 2);
    CHECK(max_entry_diff(d.body.to_complex(), reference_n3k2(u)) <= 1e-12);
  }
}

TEST_CASE("compound reproduces the published 6x6 matrix entrywise") {
  Rng rng(32);
  for (int rep = 0; rep < 20; ++rep) {
    const HermitianMatrix u = random_hermitian(4, rng);
    const CompoundMatrix d = build_compound(u, 2);
    CHECK(max_entry_diff(d.body.to_complex(), reference_n4k2(u)) <= 1e-12);
  }
}

TEST_CASE("compound matches the published 4x4 matrix up to a basis permutation") {
  Rng rng(33);
  std::vector<int> perm{0, 1, 2, 3};
  for (int rep = 0; rep < 20; ++rep) {
    const HermitianMatrix u = random_hermitian(4, rng);
    const ComplexMatrix mine = build_compound(u, 3).body.to_complex();
    const ComplexMatrix ref = reference_n4k3(u);
    bool found = false;
    std::sort(perm.begin(), perm.end());
    do {
      double worst = 0.0;
      for (int i = 0; i < 4 && worst <= 1e-12; ++i)
        for (int j = 0; j < 4; ++j)
          worst = std::max(worst, std::abs(mine(perm[i], perm[j]) - ref(i, j)));
      if (worst <= 1e-12) {
        found = true;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(found);
  }
}

TEST_CASE("compound of identity and diagonal matrices") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      const CompoundMatrix d = build_compound(HermitianMatrix::identity(n), k);
      const int dim = static_cast<int>(binomial(n, k));
      REQUIRE(d.body.dim() == dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          CHECK(std::abs(d.body(i, j) - (i == j ? cplx(k, 0.0) : cplx{})) <= 1e-14);
    }

  const std::vector<double> lambda{0.5, -1.0, 2.0, 3.5};
  const HermitianMatrix a = HermitianMatrix::diagonal(lambda);
  for (int k = 1; k <= 4; ++k) {
    const CompoundMatrix d = build_compound(a, k);
    const auto sums = ksum_multiset(lambda, k);
    for (std::size_t i = 0; i < sums.size(); ++i)
      CHECK(d.body(static_cast<int>(i), static_cast<int>(i)).real() ==
            doctest::Approx(sums[i]));
  }
}

TEST_CASE("compound endpoints: k = 1 is A, k = n is the trace") {
  Rng rng(34);
  const HermitianMatrix a = random_hermitian(4, rng);
  const CompoundMatrix d1 = build_compound(a, 1);
  CHECK((d1.body - a).frobenius_norm() <= 1e-14);
  const CompoundMatrix dn = build_compound(a, 4);
  REQUIRE(dn.body.dim() == 1);
  CHECK(dn.body(0, 0).real() == doctest::Approx(a.trace()));
}

TEST_CASE("compound entries vanish when the index sets overlap too little") {
  Rng rng(35);
  const HermitianMatrix a = random_hermitian(6, rng);
  const CompoundMatrix d = build_compound(a, 3);
  for (std::size_t r = 0; r < d.basis.size(); ++r)
    for (std::size_t c = 0; c < d.basis.size(); ++c) {
      std::vector<int> common;
      std::set_intersection(d.basis[r].indices.begin(), d.basis[r].indices.end(),
                            d.basis[c].indices.begin(), d.basis[c].indices.end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) < 2)
        CHECK(std::abs(d.body(static_cast<int>(r), static_cast<int>(c))) == 0.0);
    }
}

TEST_CASE("compound construction is linear and preserves Hermiticity") {
  Rng rng(36);
  const HermitianMatrix a = random_hermitian(5, rng);
  const HermitianMatrix b = random_hermitian(5, rng);
  const double t = 2.75;
  for (int k = 1; k <= 5; ++k) {
    const HermitianMatrix sum = build_compound(a + b, k).body;
    const HermitianMatrix parts = build_compound(a, k).body + build_compound(b, k).body;
    CHECK((sum - parts).frobenius_norm() <= 1e-12);
    const HermitianMatrix scaled = build_compound(t * a, k).body;
    const HermitianMatrix direct = t * build_compound(a, k).body;
    CHECK((scaled - direct).frobenius_norm() <= 1e-12);
  }
}

TEST_CASE("compound spectrum matches the k-sum multiset") {
  Rng rng(37);
  const std::vector<double> d{0.3, 1.1, 2.7};
  CHECK(compound_spectrum_residual(HermitianMatrix::diagonal(d), 2) <= 1e-12);
  CHECK(compound_spectrum_residual(HermitianMatrix::identity(4), 2) <= 1e-12);
  for (int rep = 0; rep < 25; ++rep) {
    const HermitianMatrix a = random_hermitian(4, rng);
    CHECK(compound_spectrum_residual(a, 2) <= 1e-8 * (1.0 + a.frobenius_norm()));
  }
}

TEST_CASE("determinant of the compound computes MA_k") {
  const std::vector<double> l{1.0, 2.0, 3.0};
  CHECK(mak_via_determinant(HermitianMatrix::diagonal(l), 2) == doctest::Approx(60.0));

  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(mak_via_determinant(HermitianMatrix::identity(n), k) ==
            doctest::Approx(std::pow(static_cast<double>(k),
                                     static_cast<double>(binomial(n, k)))));

  Rng rng(38);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = rng.uniform_int(2, 5);
    const int k = rng.uniform_int(1, n);
    const HermitianMatrix a = random_hermitian(n, rng);
    const double via_det = mak_via_determinant(a, k);
    const double via_spec = ma_k(eigenvalues(a).values, k);
    CHECK(std::abs(via_det - via_spec) <=
          1e-8 * (std::max(std::abs(via_det), std::abs(via_spec)) + 1e-300));
  }
}

TEST_CASE("C'_k membership") {
  CHECK(in_C_k_prime(HermitianMatrix::identity(3), 2));
  const std::vector<double> d{-1.0, 2.0, 3.0};
  const HermitianMatrix a = HermitianMatrix::diagonal(d);
  CHECK(in_C_k_prime(a, 2));       // sums 1, 2, 5
  CHECK_FALSE(in_C_k_prime(a, 1)); // negative eigenvalue

  Rng rng(39);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = rng.uniform_int(2, 5);
    const int k = rng.uniform_int(1, n);
    const HermitianMatrix h = random_hermitian(n, rng);
    const auto lambda = eigenvalues(h).values;
    if (std::abs(gamma_prime_margin(lambda, k)) < 1e-6) continue;  // skip boundary draws
    CHECK(in_C_k_prime(h, k) == in_gamma_k_prime(lambda, k));
  }
}

TEST_CASE("compound rejects k out of range") {
  CHECK_THROWS_AS(build_compound(HermitianMatrix::identity(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(build_compound(HermitianMatrix::identity(3), 4), std::invalid_argument);
}
