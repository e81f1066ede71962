#include "hcl/pogorelov.hpp"

#include "hcl/symmetric_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hcl {

namespace {

constexpr double kSingularGuard = 1e-14;

double abs2(std::span<const cplx> z) {
  double s = 0.0;
  for (const cplx& v : z) s += std::norm(v);
  return s;
}

void require_off_singular_set(double r2) {
  if (!(r2 >= kSingularGuard * kSingularGuard))
    throw std::domain_error("pogorelov: point lies on the degenerate set z'' = 0");
}

}  // namespace

PogorelovParams::PogorelovParams(int m_, int n_, double beta_) : m(m_), n(n_), beta(beta_) {
  if (m < 1 || m >= n) throw std::invalid_argument("PogorelovParams: 1 <= m < n required");
  if (!(beta > 0.0)) throw std::invalid_argument("PogorelovParams: beta > 0 required");
}

SplitPoint SplitPoint::from_flat(std::span<const cplx> z, int m) {
  if (m < 0 || m > static_cast<int>(z.size()))
    throw std::invalid_argument("SplitPoint: split index out of range");
  SplitPoint p;
  p.zprime.assign(z.begin(), z.begin() + m);
  p.zsecond.assign(z.begin() + m, z.end());
  return p;
}

std::vector<cplx> SplitPoint::flat() const {
  std::vector<cplx> z(zprime);
  z.insert(z.end(), zsecond.begin(), zsecond.end());
  return z;
}

double u_value(const PogorelovParams& params, const SplitPoint& z) {
  return (1.0 + abs2(z.zprime)) * std::pow(abs2(z.zsecond), params.beta);
}

HermitianMatrix analytic_hessian(const PogorelovParams& params, const SplitPoint& z) {
  const int m = params.m, n = params.n;
  const double b = params.beta;
  if (static_cast<int>(z.zprime.size()) != m || static_cast<int>(z.zsecond.size()) != n - m)
    throw std::invalid_argument("analytic_hessian: point does not match the split");
  const double r2 = abs2(z.zsecond);
  require_off_singular_set(r2);
  const double rho = abs2(z.zprime);
  const double r2b = std::pow(r2, b);
  const double r2bm1 = std::pow(r2, b - 1.0);
  const double r2bm2 = std::pow(r2, b - 2.0);

  HermitianMatrix h(n);
  for (int i = 0; i < m; ++i) h.set(i, i, r2b);
  for (int i = 0; i < m; ++i)
    for (int j = m; j < n; ++j)
      h.set(i, j, b * std::conj(z.zprime[i]) * z.zsecond[j - m] * r2bm1);
  for (int i = m; i < n; ++i) {
    h.set(i, i, b * (1.0 + rho) *
                    ((b - 1.0) * std::norm(z.zsecond[i - m]) * r2bm2 + r2bm1));
    for (int j = i + 1; j < n; ++j)
      h.set(i, j, b * (1.0 + rho) * (b - 1.0) * std::conj(z.zsecond[i - m]) *
                      z.zsecond[j - m] * r2bm2);
  }
  return h;
}

Spectrum closed_form_spectrum(const PogorelovParams& params, const SplitPoint& z) {
  const int m = params.m, n = params.n;
  const double b = params.beta;
  const double r2 = abs2(z.zsecond);
  require_off_singular_set(r2);
  const double rho = abs2(z.zprime);
  const double r2b = std::pow(r2, b);
  const double r2bm1 = std::pow(r2, b - 1.0);

  Spectrum out;
  out.values.reserve(n);
  for (int i = 0; i < m - 1; ++i) out.values.push_back(r2b);
  for (int i = 0; i < n - m - 1; ++i) out.values.push_back(b * (1.0 + rho) * r2bm1);
  // the remaining pair from the sum S and product P of the 2x2 reduction
  const double t = r2 + b * b * (1.0 + rho);
  const double disc = std::sqrt(std::max(t * t - 4.0 * b * b * r2, 0.0));
  const double phi = 0.5 * (t + disc);
  out.values.push_back(phi * r2bm1);
  out.values.push_back(b * b / phi * r2b);
  std::sort(out.values.begin(), out.values.end());
  return out;
}

double det_closed_form(const PogorelovParams& params, const SplitPoint& z) {
  const int m = params.m, n = params.n;
  const double b = params.beta;
  const double r2 = abs2(z.zsecond);
  require_off_singular_set(r2);
  const double rho = abs2(z.zprime);
  return std::pow(b, n - m + 1) * std::pow(1.0 + rho, n - m - 1) *
         std::pow(r2, b * n - static_cast<double>(n - m));
}

double trace_closed_form(const PogorelovParams& params, const SplitPoint& z) {
  const int m = params.m, n = params.n;
  const double b = params.beta;
  const double r2 = abs2(z.zsecond);
  require_off_singular_set(r2);
  const double rho = abs2(z.zprime);
  return m * std::pow(r2, b) +
         b * (1.0 + rho) * (static_cast<double>(n - m) + b - 1.0) * std::pow(r2, b - 1.0);
}

double mak_closed_form_exponent(int m, int n, int k, double beta) {
  if (k < 1 || k > n) throw std::invalid_argument("mak_closed_form_exponent: k out of range");
  const double cm = static_cast<double>(m < k ? 0 : binomial(m, k));
  const double cn = static_cast<double>(binomial(n, k));
  return cm * (2.0 * beta) + (cn - cm) * (2.0 * beta - 2.0);
}

double critical_beta(int m, int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("critical_beta: k out of range");
  const double cm = static_cast<double>(m < k ? 0 : binomial(m, k));
  const double cn = static_cast<double>(binomial(n, k));
  return 1.0 - cm / cn;
}

SmoothnessReport mak_smoothness_probe(const PogorelovParams& params, int k,
                                      std::span<const double> radii,
                                      std::span<const cplx> zprime,
                                      std::span<const cplx> direction) {
  if (radii.empty()) throw std::invalid_argument("mak_smoothness_probe: empty radius list");
  if (static_cast<int>(zprime.size()) != params.m ||
      static_cast<int>(direction.size()) != params.n - params.m)
    throw std::invalid_argument("mak_smoothness_probe: dimension mismatch");
  double dn = 0.0;
  for (const cplx& v : direction) dn += std::norm(v);
  dn = std::sqrt(dn);
  if (!(dn > 0.0)) throw std::invalid_argument("mak_smoothness_probe: zero direction");

  SmoothnessReport report;
  report.radii.assign(radii.begin(), radii.end());
  SplitPoint z;
  z.zprime.assign(zprime.begin(), zprime.end());
  for (double r : radii) {
    z.zsecond.clear();
    for (const cplx& v : direction) z.zsecond.push_back(v / dn * r);
    const Spectrum spec = eigenvalues(analytic_hessian(params, z));
    report.values.push_back(ma_k(spec.values, k));
  }
  report.min_value = *std::min_element(report.values.begin(), report.values.end());
  report.max_value = *std::max_element(report.values.begin(), report.values.end());

  // least squares slope of log value against log radius
  const std::size_t count = report.values.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double x = std::log(report.radii[i]);
    const double y = std::log(report.values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = count * sxx - sx * sx;
  report.fitted_exponent = denom != 0.0 ? (count * sxy - sx * sy) / denom : 0.0;
  return report;
}

SmoothnessReport mak_smoothness_probe(const PogorelovParams& params, int k,
                                      std::span<const double> radii) {
  const std::vector<cplx> zprime(params.m, cplx(0.0, 0.0));
  std::vector<cplx> dir(params.n - params.m, cplx(0.0, 0.0));
  dir[0] = 1.0;
  return mak_smoothness_probe(params, k, radii, zprime, dir);
}

bool w2p_admissible(double p, int m, int n, double beta) {
  if (!(p >= 1.0)) throw std::invalid_argument("w2p_admissible: p >= 1 required");
  if (beta >= 1.0) return true;
  return p < static_cast<double>(n - m) / (1.0 - beta);
}

double radial_exponent(double p, int m, int n, double beta) {
  return 2.0 * (n - m) - 1.0 + 2.0 * p + (2.0 * beta - 4.0) * p;
}

double p_star(int n, int k) {
  if (k < 1 || k >= n) throw std::invalid_argument("p_star: 1 <= k < n required");
  return static_cast<double>(n - k) * static_cast<double>(binomial(n, k));
}

bool c1alpha_admissible(double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("c1alpha_admissible: alpha in [0,1] required");
  return alpha <= 2.0 * beta - 1.0;
}

ScalarField field_pogorelov(const PogorelovParams& params) {
  return {"pogorelov", params.n, ScalarField::Kind::subharmonic,
          [params](std::span<const cplx> z) {
            return u_value(params, SplitPoint::from_flat(z, params.m));
          }};
}

}  // namespace hcl
