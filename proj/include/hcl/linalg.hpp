#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace hcl {

using cplx = std::complex<double>;

// Raised when an iterative numerical procedure fails to converge. The CLI
// maps it to exit code 3.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense row-major complex matrix without structural guarantees. Used for
// eigenvector bases, unitary factors and LU workspace.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cplx& operator()(int i, int j) { return data_[index(i, j)]; }
  cplx operator()(int i, int j) const { return data_[index(i, j)]; }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
  int rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

// Replaces the matrix columns by their Gram-Schmidt orthonormalization.
// Requires numerically independent columns.
ComplexMatrix gram_schmidt_unitary(ComplexMatrix M);

// n x n Hermitian matrix. Entries are validated once at construction: the
// asymmetry residual ||A - A*||_F must stay below 1e-9 * max(1, ||A||_F),
// after which the matrix is replaced by (A + A*)/2 exactly. NaN or Inf
// entries are rejected. Values are immutable in normal use; set() exists
// for builders and keeps the invariant by writing both mirror entries.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(int n);  // zero matrix
  static HermitianMatrix identity(int n);
  static HermitianMatrix diagonal(std::span<const double> d);
  static HermitianMatrix from_entries(int n, std::span<const cplx> row_major);

  int dim() const { return n_; }
  cplx operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, cplx v);

  double trace() const;
  double frobenius_norm() const;
  ComplexMatrix to_complex() const;

 private:
  int n_ = 0;
  std::vector<cplx> data_;
};

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator*(double t, const HermitianMatrix& a);

// Ascending eigenvalue vector.
struct Spectrum {
  std::vector<double> values;
  int size() const { return static_cast<int>(values.size()); }
  double min() const { return values.front(); }
  double max() const { return values.back(); }
};

struct EighOptions {
  double off_diag_tol = 1e-13;  // relative to ||A||_F
  int max_sweeps = 64;
};

struct EighResult {
  Spectrum spectrum;      // ascending
  ComplexMatrix vectors;  // unitary; A = U diag(spectrum) U*
};

// Cyclic Jacobi adapted to Hermitian matrices: one complex 2x2
// diagonalization per pivot. Throws numerical_error if the off-diagonal
// Frobenius mass is still above tolerance after max_sweeps sweeps.
EighResult eigh(const HermitianMatrix& A, const EighOptions& opts = {});
Spectrum eigenvalues(const HermitianMatrix& A, const EighOptions& opts = {});

// <A,B> = Trace(AB), real for Hermitian arguments.
double frobenius_inner(const HermitianMatrix& A, const HermitianMatrix& B);

// C_n (positive definite) and C_1 (positive trace).
enum class MatrixCone { positive_definite, trace_positive };
bool in_matrix_cone(const HermitianMatrix& A, MatrixCone which);

// Determinant via complex LU with partial pivoting, independent of eigh.
cplx determinant(const ComplexMatrix& M);
double determinant(const HermitianMatrix& A);

}  // namespace hcl
