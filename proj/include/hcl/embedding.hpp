#pragma once

#include "hcl/fields.hpp"
#include "hcl/linalg.hpp"

#include <span>
#include <vector>

namespace hcl {

// Dense real symmetric matrix; symmetrized on construction under the same
// tolerance policy as HermitianMatrix.
class SymmetricRealMatrix {
 public:
  explicit SymmetricRealMatrix(int dim);
  static SymmetricRealMatrix identity(int dim);
  static SymmetricRealMatrix from_entries(int dim, std::span<const double> row_major);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
  void set(int i, int j, double v);

  double frobenius_norm() const;
  HermitianMatrix as_hermitian() const;  // real symmetric is Hermitian
  ComplexMatrix to_complex() const;

 private:
  int dim_ = 0;
  std::vector<double> data_;
};

SymmetricRealMatrix operator+(const SymmetricRealMatrix&, const SymmetricRealMatrix&);
SymmetricRealMatrix operator-(const SymmetricRealMatrix&, const SymmetricRealMatrix&);
SymmetricRealMatrix operator*(double, const SymmetricRealMatrix&);

// The canonical complex structure J = [[0, -Id], [Id, 0]] on R^{2n},
// returned with real entries. Antisymmetric, J^2 = -Id.
ComplexMatrix complex_structure(int two_n);

// iota(A + iB) = [[A, -B], [B, A]]: the identification of H^n with the
// J-commuting part of S^{2n}. Eigenvalues double in multiplicity and
// <iota(X), iota(Y)> = 2 <X, Y>.
SymmetricRealMatrix iota(const HermitianMatrix& a);

// pi(S) = (S + J^T S J)/2: the orthogonal projection of S^{2n} onto
// iota(H^n). Requires even dimension.
SymmetricRealMatrix pi_projection(const SymmetricRealMatrix& s);

// Real Hessian in the coordinates (x_1..x_n, y_1..y_n) by central
// differences.
SymmetricRealMatrix fd_real_hessian(const ScalarField& field, std::span<const cplx> z, double h);

// || iota(2 * conj(FD complex Hessian)) - pi(FD real Hessian) ||_F at z.
// The entrywise conjugate (equivalently the transpose) is the matrix whose
// realification carries the projected real Hessian quadratic form; it has
// the same spectrum as the complex Hessian itself.
double hessian_identity_residual(const ScalarField& field, std::span<const cplx> z, double h);

}  // namespace hcl
