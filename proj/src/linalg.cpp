#include "hcl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace hcl {

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("ComplexMatrix: negative dimension");
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("ComplexMatrix: size mismatch in product");
  ComplexMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("ComplexMatrix: size mismatch in difference");
  ComplexMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("ComplexMatrix: size mismatch in sum");
  ComplexMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
  return c;
}

ComplexMatrix gram_schmidt_unitary(ComplexMatrix M) {
  const int n = M.rows();
  if (n != M.cols()) throw std::invalid_argument("gram_schmidt_unitary: square matrix required");
  for (int j = 0; j < n; ++j) {
    // two passes of modified Gram-Schmidt for stability
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        cplx proj = 0.0;
        for (int r = 0; r < n; ++r) proj += std::conj(M(r, k)) * M(r, j);
        for (int r = 0; r < n; ++r) M(r, j) -= proj * M(r, k);
      }
    }
    double norm = 0.0;
    for (int r = 0; r < n; ++r) norm += std::norm(M(r, j));
    norm = std::sqrt(norm);
    if (norm < 1e-300) throw numerical_error("gram_schmidt_unitary: rank deficient input");
    for (int r = 0; r < n; ++r) M(r, j) /= norm;
  }
  return M;
}

HermitianMatrix::HermitianMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {
  if (n < 1) throw std::invalid_argument("HermitianMatrix: dimension must be >= 1");
}

HermitianMatrix HermitianMatrix::identity(int n) {
  HermitianMatrix a(n);
  for (int i = 0; i < n; ++i) a.data_[static_cast<std::size_t>(i) * n + i] = 1.0;
  return a;
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
  HermitianMatrix a(static_cast<int>(d.size()));
  for (int i = 0; i < a.n_; ++i) a.data_[static_cast<std::size_t>(i) * a.n_ + i] = d[i];
  return a;
}

HermitianMatrix HermitianMatrix::from_entries(int n, std::span<const cplx> row_major) {
  if (n < 1) throw std::invalid_argument("HermitianMatrix: dimension must be >= 1");
  if (row_major.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("HermitianMatrix: entry count does not match dimension");
  double norm2 = 0.0, asym2 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx v = row_major[static_cast<std::size_t>(i) * n + j];
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::invalid_argument("HermitianMatrix: non-finite entry");
      norm2 += std::norm(v);
      const cplx w = row_major[static_cast<std::size_t>(j) * n + i];
      asym2 += 0.5 * std::norm(v - std::conj(w));
    }
  const double scale = std::max(1.0, std::sqrt(norm2));
  if (std::sqrt(asym2) > 1e-9 * scale)
    throw std::invalid_argument("HermitianMatrix: asymmetry residual above tolerance");
  HermitianMatrix a(n);
  for (int i = 0; i < n; ++i) {
    a.data_[static_cast<std::size_t>(i) * n + i] =
        row_major[static_cast<std::size_t>(i) * n + i].real();
    for (int j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (row_major[static_cast<std::size_t>(i) * n + j] +
                            std::conj(row_major[static_cast<std::size_t>(j) * n + i]));
      a.data_[static_cast<std::size_t>(i) * n + j] = v;
      a.data_[static_cast<std::size_t>(j) * n + i] = std::conj(v);
    }
  }
  return a;
}

void HermitianMatrix::set(int i, int j, cplx v) {
  if (i == j) {
    data_[static_cast<std::size_t>(i) * n_ + i] = v.real();
    return;
  }
  data_[static_cast<std::size_t>(i) * n_ + j] = v;
  data_[static_cast<std::size_t>(j) * n_ + i] = std::conj(v);
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i).real();
  return t;
}

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

ComplexMatrix HermitianMatrix::to_complex() const {
  ComplexMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("HermitianMatrix: dimension mismatch");
  HermitianMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) c.set(i, j, a(i, j) + b(i, j));
  return c;
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("HermitianMatrix: dimension mismatch");
  HermitianMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) c.set(i, j, a(i, j) - b(i, j));
  return c;
}

HermitianMatrix operator*(double t, const HermitianMatrix& a) {
  HermitianMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) c.set(i, j, t * a(i, j));
  return c;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& m) {
  double s = 0.0;
  const int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += std::norm(m(i, j));
  return std::sqrt(2.0 * s);
}

}  // namespace

EighResult eigh(const HermitianMatrix& A, const EighOptions& opts) {
  const int n = A.dim();
  ComplexMatrix m = A.to_complex();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = A.frobenius_norm();
  const double tol = opts.off_diag_tol * std::max(scale, 1e-300);

  bool converged = (n == 1);
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    if (off_diagonal_norm(m) <= tol) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx b = m(p, q);
        const double ab = std::abs(b);
        if (ab <= 1e-300) continue;
        // phase making the pivot real, then a real Jacobi rotation
        const cplx phase = b / ab;
        const double alpha = m(p, p).real();
        const double gamma = m(q, q).real();
        const double tau = (gamma - alpha) / (2.0 * ab);
        double t;
        if (tau >= 0.0)
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx pc = std::conj(phase);

        // A <- U* A U with U = [[c, s], [-s*conj(phase), c*conj(phase)]]
        for (int r = 0; r < n; ++r) {
          const cplx mp = m(r, p), mq = m(r, q);
          m(r, p) = c * mp - s * pc * mq;
          m(r, q) = s * mp + c * pc * mq;
        }
        for (int r = 0; r < n; ++r) {
          const cplx mp = m(p, r), mq = m(q, r);
          m(p, r) = c * mp - s * phase * mq;
          m(q, r) = s * mp + c * phase * mq;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = m(p, p).real();
        m(q, q) = m(q, q).real();

        for (int r = 0; r < n; ++r) {
          const cplx vp = v(r, p), vq = v(r, q);
          v(r, p) = c * vp - s * pc * vq;
          v(r, q) = s * vp + c * pc * vq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(m) > tol)
    throw numerical_error("eigh: Jacobi sweeps did not converge within budget");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return m(i, i).real() < m(j, j).real(); });

  EighResult out;
  out.spectrum.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (int r = 0; r < n; ++r) {
    out.spectrum.values[r] = m(order[r], order[r]).real();
    for (int i = 0; i < n; ++i) out.vectors(i, r) = v(i, order[r]);
  }
  return out;
}

Spectrum eigenvalues(const HermitianMatrix& A, const EighOptions& opts) {
  return eigh(A, opts).spectrum;
}

double frobenius_inner(const HermitianMatrix& A, const HermitianMatrix& B) {
  if (A.dim() != B.dim()) throw std::invalid_argument("frobenius_inner: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) s += (A(i, j) * std::conj(B(i, j))).real();
  return s;
}

bool in_matrix_cone(const HermitianMatrix& A, MatrixCone which) {
  if (which == MatrixCone::trace_positive) return A.trace() > 0.0;
  return eigenvalues(A).min() > 0.0;
}

cplx determinant(const ComplexMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant: square matrix required");
  const int n = M.rows();
  ComplexMatrix lu = M;
  cplx det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(lu(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double a = std::abs(lu(r, col));
      if (a > best) {
        best = a;
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(lu(col, j), lu(pivot, j));
      det = -det;
    }
    det *= lu(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cplx f = lu(r, col) / lu(col, col);
      if (f == cplx{}) continue;
      for (int j = col; j < n; ++j) lu(r, j) -= f * lu(col, j);
    }
  }
  return det;
}

double determinant(const HermitianMatrix& A) { return determinant(A.to_complex()).real(); }

}  // namespace hcl
