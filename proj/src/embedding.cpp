#include "hcl/embedding.hpp"

#include <cmath>
#include <stdexcept>

namespace hcl {

SymmetricRealMatrix::SymmetricRealMatrix(int dim)
    : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {
  if (dim < 1) throw std::invalid_argument("SymmetricRealMatrix: dimension must be >= 1");
}

SymmetricRealMatrix SymmetricRealMatrix::identity(int dim) {
  SymmetricRealMatrix s(dim);
  for (int i = 0; i < dim; ++i) s.set(i, i, 1.0);
  return s;
}

SymmetricRealMatrix SymmetricRealMatrix::from_entries(int dim, std::span<const double> row_major) {
  if (dim < 1) throw std::invalid_argument("SymmetricRealMatrix: dimension must be >= 1");
  if (row_major.size() != static_cast<std::size_t>(dim) * dim)
    throw std::invalid_argument("SymmetricRealMatrix: entry count does not match dimension");
  double norm2 = 0.0, asym2 = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const double v = row_major[static_cast<std::size_t>(i) * dim + j];
      if (!std::isfinite(v)) throw std::invalid_argument("SymmetricRealMatrix: non-finite entry");
      norm2 += v * v;
      const double w = row_major[static_cast<std::size_t>(j) * dim + i];
      asym2 += 0.5 * (v - w) * (v - w);
    }
  if (std::sqrt(asym2) > 1e-9 * std::max(1.0, std::sqrt(norm2)))
    throw std::invalid_argument("SymmetricRealMatrix: asymmetry residual above tolerance");
  SymmetricRealMatrix s(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      s.set(i, j, 0.5 * (row_major[static_cast<std::size_t>(i) * dim + j] +
                         row_major[static_cast<std::size_t>(j) * dim + i]));
  return s;
}

void SymmetricRealMatrix::set(int i, int j, double v) {
  data_[static_cast<std::size_t>(i) * dim_ + j] = v;
  data_[static_cast<std::size_t>(j) * dim_ + i] = v;
}

double SymmetricRealMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

HermitianMatrix SymmetricRealMatrix::as_hermitian() const {
  HermitianMatrix h(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) h.set(i, j, (*this)(i, j));
  return h;
}

ComplexMatrix SymmetricRealMatrix::to_complex() const {
  ComplexMatrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

SymmetricRealMatrix operator+(const SymmetricRealMatrix& a, const SymmetricRealMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("SymmetricRealMatrix: dimension mismatch");
  SymmetricRealMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) c.set(i, j, a(i, j) + b(i, j));
  return c;
}

SymmetricRealMatrix operator-(const SymmetricRealMatrix& a, const SymmetricRealMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("SymmetricRealMatrix: dimension mismatch");
  SymmetricRealMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) c.set(i, j, a(i, j) - b(i, j));
  return c;
}

SymmetricRealMatrix operator*(double t, const SymmetricRealMatrix& a) {
  SymmetricRealMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) c.set(i, j, t * a(i, j));
  return c;
}

ComplexMatrix complex_structure(int two_n) {
  if (two_n < 2 || two_n % 2 != 0)
    throw std::invalid_argument("complex_structure: even dimension >= 2 required");
  const int n = two_n / 2;
  ComplexMatrix j(two_n, two_n);
  for (int i = 0; i < n; ++i) {
    j(i, n + i) = -1.0;
    j(n + i, i) = 1.0;
  }
  return j;
}

SymmetricRealMatrix iota(const HermitianMatrix& a) {
  const int n = a.dim();
  SymmetricRealMatrix s(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx v = a(i, j);
      s.set(i, j, v.real());
      s.set(n + i, n + j, v.real());
      // mirrored write also fills the +B block: Im a_ji = -Im a_ij
      s.set(i, n + j, -v.imag());
    }
  return s;
}

SymmetricRealMatrix pi_projection(const SymmetricRealMatrix& s) {
  const int dim = s.dim();
  if (dim % 2 != 0) throw std::invalid_argument("pi_projection: even dimension required");
  const int n = dim / 2;
  // J e_i = e_{n+i} for i < n and -e_{i-n} otherwise, so
  // (J^T S J)(i, j) = sign(i) sign(j) S(sigma(i), sigma(j)).
  auto sigma = [n](int i) { return i < n ? n + i : i - n; };
  auto sign = [n](int i) { return i < n ? 1.0 : -1.0; };
  SymmetricRealMatrix out(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      out.set(i, j, 0.5 * (s(i, j) + sign(i) * sign(j) * s(sigma(i), sigma(j))));
  return out;
}

SymmetricRealMatrix fd_real_hessian(const ScalarField& field, std::span<const cplx> z, double h) {
  if (static_cast<int>(z.size()) != field.n)
    throw std::invalid_argument("fd_real_hessian: point dimension mismatch");
  if (!(h > 0.0)) throw std::invalid_argument("fd_real_hessian: h > 0 required");
  const int n = field.n;
  std::vector<cplx> work(z.begin(), z.end());
  auto bump = [&](int c, double d) {
    if (c < n)
      work[c] += d;
    else
      work[c - n] += cplx(0.0, d);
  };
  auto second = [&](int a, int b) {
    double v;
    if (a == b) {
      const double mid = field(work);
      bump(a, h);
      const double up = field(work);
      bump(a, -2.0 * h);
      const double dn = field(work);
      bump(a, h);
      v = (up - 2.0 * mid + dn) / (h * h);
    } else {
      bump(a, h);
      bump(b, h);
      const double pp = field(work);
      bump(b, -2.0 * h);
      const double pm = field(work);
      bump(a, -2.0 * h);
      const double mm = field(work);
      bump(b, 2.0 * h);
      const double mp = field(work);
      bump(a, h);
      bump(b, -h);
      v = (pp - pm - mp + mm) / (4.0 * h * h);
    }
    return v;
  };
  SymmetricRealMatrix out(2 * n);
  for (int a = 0; a < 2 * n; ++a)
    for (int b = a; b < 2 * n; ++b) out.set(a, b, second(a, b));
  return out;
}

double hessian_identity_residual(const ScalarField& field, std::span<const cplx> z, double h) {
  const HermitianMatrix hc = fd_complex_hessian(field, z, h);
  // iota realifies the linear action w -> M w, so the matrix whose image
  // under iota reproduces the projected real Hessian quadratic form
  // 2 sum u_{z_i zbar_j} w_i conj(w_j) is the entrywise conjugate of the
  // (d/dz_i)(d/dzbar_j) matrix. Conjugation leaves the spectrum untouched.
  const int n = hc.dim();
  HermitianMatrix conjugated(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) conjugated.set(i, j, std::conj(hc(i, j)));
  const SymmetricRealMatrix lhs = iota(2.0 * conjugated);
  const SymmetricRealMatrix rhs = pi_projection(fd_real_hessian(field, z, h));
  return (lhs - rhs).frobenius_norm();
}

}  // namespace hcl
