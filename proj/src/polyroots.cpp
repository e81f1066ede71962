#include "hcl/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hcl {

namespace {

// c real, |c|^2 + |s|^2 = 1, [[c, s], [-conj(s), c]] (f, g)^T = (r, 0)^T
void make_givens(cplx f, cplx g, double& c, cplx& s) {
  if (g == cplx{}) {
    c = 1.0;
    s = 0.0;
    return;
  }
  if (f == cplx{}) {
    c = 0.0;
    s = std::conj(g) / std::abs(g);
    return;
  }
  const double af = std::abs(f), ag = std::abs(g);
  const double denom = std::hypot(af, ag);
  c = af / denom;
  s = (f / af) * std::conj(g) / denom;
}

// Eigenvalues of [[a, b], [c, d]].
std::pair<cplx, cplx> eig2(cplx a, cplx b, cplx c, cplx d) {
  const cplx tr = a + d;
  const cplx disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
  return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

}  // namespace

std::vector<cplx> hessenberg_eigenvalues(ComplexMatrix h) {
  const int n = h.rows();
  if (n != h.cols()) throw std::invalid_argument("hessenberg_eigenvalues: square matrix required");
  std::vector<cplx> eig(n);
  if (n == 0) return eig;
  if (n == 1) {
    eig[0] = h(0, 0);
    return eig;
  }

  const double ulp = std::numeric_limits<double>::epsilon();
  int hi = n - 1;
  int stalled = 0;
  long total = 0;
  const long max_total = 200L * n;

  while (hi >= 0) {
    if (hi == 0) {
      eig[0] = h(0, 0);
      break;
    }
    // deflate negligible subdiagonals inside [0, hi]
    int lo = hi;
    while (lo > 0) {
      const double s = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      const double thr = ulp * std::max(s, 1e-300);
      if (std::abs(h(lo, lo - 1)) <= thr) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      stalled = 0;
      continue;
    }
    if (lo == hi - 1) {
      auto [e1, e2] = eig2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
      eig[lo] = e1;
      eig[hi] = e2;
      hi = lo - 1;
      stalled = 0;
      continue;
    }
    if (++total > max_total)
      throw numerical_error("hessenberg_eigenvalues: QR iteration did not converge");

    // Wilkinson shift from the trailing 2x2, with an exceptional shift
    // every 12 stalled iterations
    cplx mu;
    if (++stalled % 12 == 0) {
      mu = h(hi, hi) + cplx(std::abs(h(hi, hi - 1)), 0.75 * std::abs(h(hi, hi - 1)));
    } else {
      auto [e1, e2] = eig2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
      mu = (std::abs(e1 - h(hi, hi)) < std::abs(e2 - h(hi, hi))) ? e1 : e2;
    }

    for (int i = lo; i <= hi; ++i) h(i, i) -= mu;
    std::vector<double> cs(hi - lo);
    std::vector<cplx> sn(hi - lo);
    for (int k = lo; k < hi; ++k) {
      double c;
      cplx s;
      make_givens(h(k, k), h(k + 1, k), c, s);
      cs[k - lo] = c;
      sn[k - lo] = s;
      for (int j = k; j <= hi; ++j) {
        const cplx a = h(k, j), b = h(k + 1, j);
        h(k, j) = c * a + s * b;
        h(k + 1, j) = -std::conj(s) * a + c * b;
      }
    }
    for (int k = lo; k < hi; ++k) {
      const double c = cs[k - lo];
      const cplx s = sn[k - lo];
      const int top = std::min(k + 2, hi);
      for (int i = lo; i <= top; ++i) {
        const cplx a = h(i, k), b = h(i, k + 1);
        h(i, k) = c * a + std::conj(s) * b;
        h(i, k + 1) = -s * a + c * b;
      }
    }
    for (int i = lo; i <= hi; ++i) h(i, i) += mu;
  }
  return eig;
}

std::vector<cplx> polynomial_roots(std::span<const double> coeffs) {
  double top = 0.0;
  for (double c : coeffs) top = std::max(top, std::abs(c));
  if (top == 0.0) return {};
  int degree = static_cast<int>(coeffs.size()) - 1;
  while (degree > 0 && std::abs(coeffs[degree]) <= 1e-14 * top) --degree;
  if (degree == 0) return {};

  const double lead = coeffs[degree];
  ComplexMatrix companion(degree, degree);
  for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[i] / lead;
  for (int i = 0; i + 1 < degree; ++i) companion(i + 1, i) = 1.0;
  return hessenberg_eigenvalues(companion);
}

std::vector<double> chebyshev_coefficients(const std::function<double(double)>& f, int degree) {
  if (degree < 0) throw std::invalid_argument("chebyshev_coefficients: negative degree");
  const int m = degree + 1;
  std::vector<double> value(m);
  for (int j = 0; j < m; ++j)
    value[j] = f(std::cos(std::numbers::pi * (2.0 * j + 1.0) / (2.0 * m)));
  std::vector<double> coeff(m, 0.0);
  for (int k = 0; k < m; ++k) {
    double s = 0.0;
    for (int j = 0; j < m; ++j)
      s += value[j] * std::cos(std::numbers::pi * k * (2.0 * j + 1.0) / (2.0 * m));
    coeff[k] = (k == 0 ? 1.0 : 2.0) * s / m;
  }
  return coeff;
}

namespace {

// Clenshaw evaluation of sum_k c[k] T_k at a complex point.
cplx clenshaw(std::span<const double> c, cplx x) {
  cplx b1 = 0.0, b2 = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const cplx b0 = c[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c[0] + x * b1 - b2;
}

// Chebyshev coefficients of the derivative series.
std::vector<double> chebyshev_derivative(std::span<const double> c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<double> d(std::max(n, 1), 0.0);
  double next = 0.0, after = 0.0;  // d_{k+1}, d_{k+2} while descending
  for (int k = n; k >= 1; --k) {
    const double dk = (k + 2 <= n ? after : 0.0) + 2.0 * k * c[k];
    after = next;
    next = dk;
    d[k - 1] = dk;
  }
  if (!d.empty()) d[0] *= 0.5;
  return d;
}

}  // namespace

std::vector<cplx> colleague_roots(std::span<const double> coeffs) {
  double top = 0.0;
  for (double c : coeffs) top = std::max(top, std::abs(c));
  if (top == 0.0) return {};
  int degree = static_cast<int>(coeffs.size()) - 1;
  while (degree > 0 && std::abs(coeffs[degree]) <= 1e-14 * top) --degree;
  if (degree == 0) return {};
  std::vector<double> c(coeffs.begin(), coeffs.begin() + degree + 1);
  const double lead = c[degree];
  if (degree == 1) return {cplx(-c[0] / lead, 0.0)};

  // multiplication-by-x in the basis T_0..T_{degree-1} modulo the polynomial
  ComplexMatrix m(degree, degree);
  m(1, 0) = 1.0;
  for (int j = 1; j + 1 < degree; ++j) {
    m(j - 1, j) = 0.5;
    m(j + 1, j) = 0.5;
  }
  m(degree - 2, degree - 1) = 0.5;
  for (int k = 0; k < degree; ++k) m(k, degree - 1) -= c[k] / (2.0 * lead);
  std::vector<cplx> roots = hessenberg_eigenvalues(m);

  // Newton polish against the series itself; Clenshaw is well conditioned
  // where the companion eigenvalues are not
  const std::vector<double> deriv = chebyshev_derivative(c);
  for (cplx& r : roots) {
    cplx t = r;
    for (int it = 0; it < 8; ++it) {
      const cplx dp = clenshaw(deriv, t);
      if (std::abs(dp) < 1e-300) break;
      const cplx step = clenshaw(c, t) / dp;
      t -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(t))) break;
    }
    // keep the polish only if it stayed in the same basin
    if (std::abs(t - r) <= 0.1 * (1.0 + std::abs(r))) r = t;
  }
  return roots;
}

std::vector<double> interpolate_polynomial(const std::function<double(double)>& f, int degree,
                                           double half_width) {
  if (degree < 0) throw std::invalid_argument("interpolate_polynomial: negative degree");
  if (!(half_width > 0.0)) throw std::invalid_argument("interpolate_polynomial: bad interval");
  const int m = degree + 1;
  std::vector<double> node(m), dd(m);
  for (int j = 0; j < m; ++j) {
    node[j] = half_width * std::cos(std::numbers::pi * (2.0 * j + 1.0) / (2.0 * m));
    dd[j] = f(node[j]);
  }
  for (int level = 1; level < m; ++level)
    for (int j = m - 1; j >= level; --j)
      dd[j] = (dd[j] - dd[j - 1]) / (node[j] - node[j - level]);

  // expand the Newton form to monomial coefficients
  std::vector<double> poly{dd[m - 1]};
  for (int j = m - 2; j >= 0; --j) {
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= node[j] * poly[i];
    }
    next[0] += dd[j];
    poly = std::move(next);
  }
  poly.resize(static_cast<std::size_t>(m), 0.0);
  return poly;
}

}  // namespace hcl
