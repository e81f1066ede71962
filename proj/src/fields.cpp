#include "hcl/fields.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hcl {

namespace {

double abs2(std::span<const cplx> z) {
  double s = 0.0;
  for (const cplx& v : z) s += std::norm(v);
  return s;
}

}  // namespace

ScalarField field_quad(int n) {
  return {"quad", n, ScalarField::Kind::subharmonic,
          [](std::span<const cplx> z) { return abs2(z); }};
}

ScalarField field_quartic(int n) {
  return {"quartic", n, ScalarField::Kind::subharmonic, [](std::span<const cplx> z) {
            const double s = abs2(z);
            return s * s;
          }};
}

ScalarField field_pluriharmonic(int n) {
  return {"pluriharmonic", n, ScalarField::Kind::pluriharmonic,
          [](std::span<const cplx> z) { return (z[0] * z[0]).real(); }};
}

ScalarField field_cubic_plus_quad(int n) {
  return {"cubic_plus_quad", n, ScalarField::Kind::smooth, [](std::span<const cplx> z) {
            return (z[0] * z[0] * z[0]).real() + abs2(z);
          }};
}

ScalarField field_log_pole(cplx a) {
  return {"log_pole", 1, ScalarField::Kind::subharmonic,
          [a](std::span<const cplx> z) { return std::log(std::abs(z[0] - a)); }};
}

ScalarField field_max_pluriharmonic() {
  return {"max_pluriharmonic", 2, ScalarField::Kind::subharmonic,
          [](std::span<const cplx> z) { return std::max({z[0].real(), z[1].real(), 0.0}); }};
}

HermitianMatrix fd_complex_hessian(const ScalarField& field, std::span<const cplx> z, double h) {
  if (static_cast<int>(z.size()) != field.n)
    throw std::invalid_argument("fd_complex_hessian: point dimension mismatch");
  if (!(h > 0.0)) throw std::invalid_argument("fd_complex_hessian: h > 0 required");
  const int n = field.n;

  std::vector<cplx> work(z.begin(), z.end());
  // real coordinate c in [0, 2n): x_i for c = i, y_i for c = n + i
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

  HermitianMatrix out(n);
  for (int i = 0; i < n; ++i) {
    out.set(i, i, 0.25 * (second(i, i) + second(n + i, n + i)));
    for (int j = i + 1; j < n; ++j) {
      const double re = 0.25 * (second(i, j) + second(n + i, n + j));
      const double im = 0.25 * (second(i, n + j) - second(n + i, j));
      out.set(i, j, cplx(re, im));
    }
  }
  return out;
}

}  // namespace hcl
