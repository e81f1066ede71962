#include "hcl/operators.hpp"

#include "hcl/rng.hpp"
#include "hcl/symmetric_functions.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>

namespace hcl {

namespace {

std::vector<double> finite_difference_gradient(const SymmetricFunction& f,
                                               std::span<const double> lambda) {
  const int n = static_cast<int>(lambda.size());
  double scale = 1.0;
  for (double x : lambda) scale = std::max(scale, std::abs(x));
  const double h = 1e-6 * scale;
  std::vector<double> g(n), work(lambda.begin(), lambda.end());
  for (int i = 0; i < n; ++i) {
    const double keep = work[i];
    work[i] = keep + h;
    const double up = f(work);
    work[i] = keep - h;
    const double dn = f(work);
    work[i] = keep;
    g[i] = (up - dn) / (2.0 * h);
  }
  return g;
}

std::vector<double> fhat_gradient(const HessianOperatorSpec& spec, std::span<const double> lambda) {
  if (spec.gradient) return spec.gradient(lambda);
  return finite_difference_gradient(spec.evaluate, lambda);
}

void require_dimension(const HessianOperatorSpec& spec, int n, const char* where) {
  if (spec.dimension != n)
    throw std::invalid_argument(std::string(where) + ": matrix dimension does not match operator");
}

HermitianMatrix assemble_from_eigen(const ComplexMatrix& u, std::span<const double> diag) {
  const int n = u.rows();
  ComplexMatrix d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = diag[i];
  const ComplexMatrix m = u * d * u.adjoint();
  std::vector<cplx> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries[static_cast<std::size_t>(i) * n + j] = m(i, j);
  return HermitianMatrix::from_entries(n, entries);
}

}  // namespace

HessianOperatorSpec make_determinant_operator(int n) {
  if (n < 1) throw std::invalid_argument("make_determinant_operator: n >= 1 required");
  HessianOperatorSpec spec;
  spec.name = "det";
  spec.dimension = n;
  spec.degree = static_cast<double>(n);
  spec.garding_constant = 1.0;
  spec.evaluate = [](std::span<const double> lambda) {
    double p = 1.0;
    for (double x : lambda) p *= x;
    return p;
  };
  spec.in_cone = [](std::span<const double> lambda) {
    for (double x : lambda)
      if (!(x > kConeSlack)) return false;
    return true;
  };
  spec.gradient = [](std::span<const double> lambda) {
    const int m = static_cast<int>(lambda.size());
    std::vector<double> pre(m + 1, 1.0), suf(m + 1, 1.0), g(m);
    for (int i = 0; i < m; ++i) pre[i + 1] = pre[i] * lambda[i];
    for (int i = m; i-- > 0;) suf[i] = suf[i + 1] * lambda[i];
    for (int i = 0; i < m; ++i) g[i] = pre[i] * suf[i + 1];
    return g;
  };
  return spec;
}

HessianOperatorSpec make_sigma_k_operator(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("make_sigma_k_operator: k out of range");
  HessianOperatorSpec spec;
  spec.name = "sigma" + std::to_string(k);
  spec.dimension = n;
  spec.degree = static_cast<double>(k);
  spec.garding_constant = std::pow(static_cast<double>(binomial(n, k)), 1.0 / k);
  spec.evaluate = [k](std::span<const double> lambda) { return sigma(lambda, k); };
  spec.in_cone = [k](std::span<const double> lambda) {
    return gamma_margin(lambda, k) > kConeSlack;
  };
  spec.gradient = [k](std::span<const double> lambda) { return sigma_gradient(lambda, k); };
  return spec;
}

HessianOperatorSpec make_ma_k_operator(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("make_ma_k_operator: k out of range");
  HessianOperatorSpec spec;
  spec.name = "ma" + std::to_string(k);
  spec.dimension = n;
  spec.degree = static_cast<double>(binomial(n, k));
  spec.garding_constant = static_cast<double>(k);
  spec.evaluate = [k](std::span<const double> lambda) { return ma_k(lambda, k); };
  spec.in_cone = [k](std::span<const double> lambda) {
    return gamma_prime_margin(lambda, k) > kConeSlack;
  };
  spec.gradient = [k](std::span<const double> lambda) { return ma_k_gradient(lambda, k); };
  return spec;
}

HessianOperatorSpec make_interpolated2d_operator(double s) {
  if (!(s >= 0.0 && s < 1.0))
    throw std::invalid_argument("make_interpolated2d_operator: s in [0,1) required");
  HessianOperatorSpec spec;
  spec.name = "interp2d";
  spec.dimension = 2;
  spec.degree = 2.0;
  // Fhat >= (1-s)^2 lambda_1 lambda_2 on the positive orthant
  spec.garding_constant = 1.0 - s;
  spec.evaluate = [s](std::span<const double> lambda) {
    return (lambda[0] + s * lambda[1]) * (s * lambda[0] + lambda[1]);
  };
  spec.in_cone = [s](std::span<const double> lambda) {
    return lambda[0] + s * lambda[1] > kConeSlack && s * lambda[0] + lambda[1] > kConeSlack;
  };
  spec.gradient = [s](std::span<const double> lambda) {
    const double a = lambda[0] + s * lambda[1];
    const double b = s * lambda[0] + lambda[1];
    return std::vector<double>{b + s * a, s * b + a};
  };
  return spec;
}

double eval_F(const HessianOperatorSpec& spec, const HermitianMatrix& A, ConeCheck check) {
  require_dimension(spec, A.dim(), "eval_F");
  const Spectrum spectrum = eigenvalues(A);
  if (check != ConeCheck::off && !spec.in_cone(spectrum.values)) {
    if (check == ConeCheck::strict)
      throw std::domain_error("eval_F: spectrum outside the cone of " + spec.name);
    std::cerr << "eval_F: warning: spectrum outside the cone of " << spec.name << "\n";
  }
  return spec.evaluate(spectrum.values);
}

double eval_G(const HessianOperatorSpec& spec, const HermitianMatrix& A) {
  const double f = eval_F(spec, A, ConeCheck::strict);
  if (!(f > 0.0)) throw std::domain_error("eval_G: F must be positive inside the cone");
  return std::pow(f, 1.0 / spec.degree);
}

std::vector<double> ghat_gradient(const HessianOperatorSpec& spec,
                                  std::span<const double> lambda) {
  const double f = spec.evaluate(lambda);
  if (!(f > 0.0)) throw std::domain_error("ghat_gradient: F must be positive inside the cone");
  const double factor = std::pow(f, 1.0 / spec.degree - 1.0) / spec.degree;
  std::vector<double> g = fhat_gradient(spec, lambda);
  for (double& x : g) x *= factor;
  return g;
}

HermitianMatrix grad_G(const HessianOperatorSpec& spec, const HermitianMatrix& A) {
  require_dimension(spec, A.dim(), "grad_G");
  const int n = A.dim();
  EighResult eg = eigh(A);

  double gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i + 1 < n; ++i)
    gap = std::min(gap, eg.spectrum.values[i + 1] - eg.spectrum.values[i]);
  const double scale = 1.0 + std::max(std::abs(eg.spectrum.values.front()),
                                      std::abs(eg.spectrum.values.back()));

  if (n > 1 && gap < 1e-8 * scale) {
    // conjugate by a deterministic near-identity unitary before
    // differentiating; the gradient is unitary equivariant
    Rng rng(kDefaultSeed);
    ComplexMatrix p(n, n);
    for (int i = 0; i < n; ++i) {
      p(i, i) = 1.0;
      for (int j = 0; j < n; ++j) p(i, j) += 1e-7 * cplx(rng.normal(), rng.normal());
    }
    const ComplexMatrix q = gram_schmidt_unitary(p);
    const ComplexMatrix ap = q.adjoint() * A.to_complex() * q;
    std::vector<cplx> entries(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) entries[static_cast<std::size_t>(i) * n + j] = ap(i, j);
    const HermitianMatrix conjugated = HermitianMatrix::from_entries(n, entries);
    EighResult inner = eigh(conjugated);
    const std::vector<double> ghat = ghat_gradient(spec, inner.spectrum.values);
    const HermitianMatrix inner_grad = assemble_from_eigen(inner.vectors, ghat);
    const ComplexMatrix back = q * inner_grad.to_complex() * q.adjoint();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) entries[static_cast<std::size_t>(i) * n + j] = back(i, j);
    return HermitianMatrix::from_entries(n, entries);
  }

  const std::vector<double> ghat = ghat_gradient(spec, eg.spectrum.values);
  return assemble_from_eigen(eg.vectors, ghat);
}

double garding_comparison_margin(const HessianOperatorSpec& spec, const HermitianMatrix& P,
                                 double C) {
  require_dimension(spec, P.dim(), "garding_comparison_margin");
  const Spectrum spectrum = eigenvalues(P);
  if (!(spectrum.min() > 0.0))
    throw std::domain_error("garding_comparison_margin: P must be positive definite");
  double det = 1.0;
  for (double x : spectrum.values) det *= x;
  const double lhs = std::pow(spec.evaluate(spectrum.values), 1.0 / spec.degree);
  return lhs - C * std::pow(det, 1.0 / P.dim());
}

double garding_comparison_margin(const HessianOperatorSpec& spec, const HermitianMatrix& P) {
  return garding_comparison_margin(spec, P, spec.garding_constant);
}

double concavity_probe(const HessianOperatorSpec& spec, const HermitianMatrix& A,
                       const HermitianMatrix& B, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("concavity_probe: t in [0,1] required");
  const double ga = eval_G(spec, A);
  const double gb = eval_G(spec, B);
  const HermitianMatrix mid = t * A + (1.0 - t) * B;
  const Spectrum spectrum = eigenvalues(mid);
  if (!spec.in_cone(spectrum.values))
    throw numerical_error("concavity_probe: convex combination escaped the cone");
  const double gm = std::pow(spec.evaluate(spectrum.values), 1.0 / spec.degree);
  return gm - t * ga - (1.0 - t) * gb;
}

bool majorizes(std::span<const double> mu, std::span<const double> lambda, double tol) {
  if (mu.size() != lambda.size()) return false;
  std::vector<double> a(mu.begin(), mu.end()), b(lambda.begin(), lambda.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double sa = 0.0, sb = 0.0, scale = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    scale = std::max({scale, std::abs(sa), std::abs(sb)});
    // ascending prefix sums of the majorizing vector lie below
    if (i + 1 < a.size() && sa > sb + tol * scale) return false;
  }
  return std::abs(sa - sb) <= tol * scale;
}

double schur_concavity_probe(const HessianOperatorSpec& spec, std::span<const double> lambda,
                             std::span<const double> mu) {
  if (static_cast<int>(lambda.size()) != spec.dimension ||
      static_cast<int>(mu.size()) != spec.dimension)
    throw std::invalid_argument("schur_concavity_probe: dimension mismatch");
  if (!majorizes(mu, lambda))
    throw std::invalid_argument("schur_concavity_probe: mu does not majorize lambda");
  const double gl = signed_pow(spec.evaluate(lambda), 1.0 / spec.degree);
  const double gm = signed_pow(spec.evaluate(mu), 1.0 / spec.degree);
  return gl - gm;
}

HyperbolicityResult hyperbolicity_check(const SymmetricFunction& fhat, int degree,
                                        std::span<const double> direction,
                                        std::span<const double> lambda, double tol) {
  if (direction.size() != lambda.size())
    throw std::invalid_argument("hyperbolicity_check: dimension mismatch");
  if (degree < 1) throw std::invalid_argument("hyperbolicity_check: degree >= 1 required");
  if (std::abs(fhat(direction)) == 0.0)
    throw std::invalid_argument("hyperbolicity_check: Fhat(e) must be nonzero");

  const int n = static_cast<int>(lambda.size());
  double lam_max = 0.0, dir_max = 0.0;
  for (double x : lambda) lam_max = std::max(lam_max, std::abs(x));
  for (double x : direction) dir_max = std::max(dir_max, std::abs(x));

  std::vector<double> shifted(n);
  auto slice = [&](double t) {
    for (int i = 0; i < n; ++i) shifted[i] = lambda[i] - t * direction[i];
    return fhat(shifted);
  };
  // Interpolation is exact for any interval, but companion-root accuracy
  // needs the roots spread across the fit interval. Start from a coarse
  // interval, then re-center and re-scale onto the root bracket.
  auto fit_roots = [&](double center, double radius) {
    const std::vector<double> coeffs = chebyshev_coefficients(
        [&](double tau) { return slice(center + radius * tau); }, degree);
    std::vector<cplx> roots = colleague_roots(coeffs);
    for (cplx& r : roots) r = center + radius * r;
    return roots;
  };

  HyperbolicityResult out;
  out.conditioning_warning = degree > 30;
  out.roots = fit_roots(0.0, (1.0 + lam_max) / std::max(dir_max, 1e-12));
  for (int refine = 0; refine < 2 && !out.roots.empty(); ++refine) {
    double lo = out.roots.front().real(), hi = lo;
    for (const cplx& r : out.roots) {
      lo = std::min(lo, r.real());
      hi = std::max(hi, r.real());
    }
    const double center = 0.5 * (lo + hi);
    const double radius =
        std::max(0.6 * (hi - lo), 1e-3 * (1.0 + std::abs(center)));
    out.roots = fit_roots(center, radius);
  }

  // High degrees cannot be resolved by one global fit: the coefficient
  // dynamic range swamps the root fine structure. Split the bracket at the
  // widest gaps and refit locally; every local fit is still exact, so each
  // window keeps the roots it resolves best.
  const int parts = degree <= 12 ? 1 : (degree + 4) / 5;
  for (int round = 0; round < 3 && parts > 1 && !out.roots.empty(); ++round) {
    std::vector<double> re;
    re.reserve(out.roots.size());
    for (const cplx& r : out.roots) re.push_back(r.real());
    std::sort(re.begin(), re.end());
    std::vector<std::pair<double, double>> gaps;  // width, midpoint
    for (std::size_t i = 0; i + 1 < re.size(); ++i)
      gaps.emplace_back(re[i + 1] - re[i], 0.5 * (re[i] + re[i + 1]));
    std::sort(gaps.rbegin(), gaps.rend());
    std::vector<double> cuts;
    for (int g = 0; g < parts - 1 && g < static_cast<int>(gaps.size()); ++g)
      if (gaps[g].first > 0.0) cuts.push_back(gaps[g].second);
    std::sort(cuts.begin(), cuts.end());

    const double pad = 0.05 * (re.back() - re.front()) + 1e-6;
    std::vector<cplx> collected;
    for (std::size_t p = 0; p <= cuts.size(); ++p) {
      const double a = (p == 0) ? re.front() - pad : cuts[p - 1];
      const double b = (p == cuts.size()) ? re.back() + pad : cuts[p];
      const double center = 0.5 * (a + b);
      const double radius = std::max(0.6 * (b - a), 1e-3 * (1.0 + std::abs(center)));
      for (const cplx& root : fit_roots(center, radius)) {
        // a local fit is only trustworthy inside its own window; roots
        // beyond it (including series-truncation artifacts) belong to the
        // window that resolves them
        if (std::abs(root - center) > 0.95 * radius) continue;
        const double x = root.real();
        if ((p == 0 || x >= cuts[p - 1]) && (p == cuts.size() || x < cuts[p]))
          collected.push_back(root);
      }
    }
    if (!collected.empty()) out.roots = std::move(collected);
  }

  // Final polish on the exact slice: real Newton from the real part of each
  // candidate. Values of Fhat are machine precision where the series
  // coefficients are not. A candidate only becomes real if the iteration
  // converges without traveling beyond its own imaginary uncertainty; at a
  // genuinely complex pair the real restriction has an extremum and Newton
  // diverges, so the control cases keep their imaginary parts.
  auto real_newton = [&](double start) -> std::pair<bool, double> {
    double t = start;
    for (int it = 0; it < 60; ++it) {
      const double h = 1e-7 * (1.0 + std::abs(t));
      const double dp = (slice(t + h) - slice(t - h)) / (2.0 * h);
      if (dp == 0.0 || !std::isfinite(dp)) return {false, start};
      const double step = slice(t) / dp;
      t -= step;
      if (!std::isfinite(t)) return {false, start};
      if (std::abs(step) <= 1e-13 * (1.0 + std::abs(t))) return {true, t};
    }
    return {false, start};
  };
  double bracket_width = 0.0;
  if (!out.roots.empty()) {
    double lo = out.roots.front().real(), hi = lo;
    for (const cplx& r : out.roots) {
      lo = std::min(lo, r.real());
      hi = std::max(hi, r.real());
    }
    bracket_width = hi - lo;
  }
  for (cplx& r : out.roots) {
    if (r.imag() == 0.0) continue;
    // Candidates are polished only when their imaginary part is within the
    // noise the companion route can produce at this degree; anything larger
    // is treated as genuinely complex. Within the ceiling, the excursion is
    // capped by the candidate's own uncertainty, widened to a spacing-sized
    // step where the high-degree path softens the real parts too.
    const double scale = 1.0 + std::abs(r.real());
    const double noise_ceiling = (degree <= 12 ? 1e-4 : 0.05) * scale;
    if (std::abs(r.imag()) > noise_ceiling) continue;
    double travel_bound = 2.0 * std::abs(r.imag()) + 1e-6 * scale;
    if (degree > 12) travel_bound = std::max(travel_bound, 2.0 * bracket_width / degree);
    for (const double start :
         {r.real(), r.real() - std::abs(r.imag()), r.real() + std::abs(r.imag())}) {
      const auto [converged, polished] = real_newton(start);
      if (converged && std::abs(polished - r.real()) <= travel_bound) {
        r = polished;
        break;
      }
    }
  }

  for (const cplx& r : out.roots)
    out.max_imag_ratio =
        std::max(out.max_imag_ratio, std::abs(r.imag()) / (1.0 + std::abs(r.real())));
  // real-rootedness needs every root of the slice accounted for: a complex
  // pair that no window could resolve shows up as a missing root
  out.hyperbolic =
      out.max_imag_ratio <= tol && static_cast<int>(out.roots.size()) == degree;
  return out;
}

bool in_C_R(const HessianOperatorSpec& spec, const HermitianMatrix& A, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("in_C_R: R > 0 required");
  require_dimension(spec, A.dim(), "in_C_R");
  const Spectrum spectrum = eigenvalues(A);
  if (!spec.in_cone(spectrum.values)) return false;
  if (!(A.trace() < R)) return false;
  return spec.evaluate(spectrum.values) > 1.0 / R;
}

UniformEllipticityEstimate uniform_ellipticity_estimate(const HessianOperatorSpec& spec, double R,
                                                        int budget, std::uint64_t seed) {
  if (!(R > 0.0)) throw std::invalid_argument("uniform_ellipticity_estimate: R > 0 required");
  if (budget < 1) throw std::invalid_argument("uniform_ellipticity_estimate: empty budget");
  const int n = spec.dimension;
  Rng rng(seed);

  UniformEllipticityEstimate est;
  est.budget = budget;
  est.m = std::numeric_limits<double>::infinity();
  est.M = -std::numeric_limits<double>::infinity();

  std::vector<std::vector<double>> accepted;
  std::vector<double> lambda(n);
  for (int trial = 0; trial < budget; ++trial) {
    double trace = 0.0;
    for (int i = 0; i < n; ++i) {
      lambda[i] = rng.uniform(-R, R);
      trace += lambda[i];
    }
    if (!(trace < R)) continue;
    if (!spec.in_cone(lambda)) continue;
    if (!(spec.evaluate(lambda) > 1.0 / R)) continue;
    const std::vector<double> g = fhat_gradient(spec, lambda);
    for (double gi : g) {
      if (gi < est.m) {
        est.m = gi;
        est.witness_lambda = lambda;
      }
      est.M = std::max(est.M, gi);
    }
    if (accepted.size() < 200) accepted.push_back(lambda);
    ++est.accepted;
  }
  est.coverage = static_cast<double>(est.accepted) / budget;
  if (est.accepted == 0)
    throw numerical_error("uniform_ellipticity_estimate: no sample landed in C_R");

  // spot-check the trace form of uniform ellipticity on ordered pairs
  est.caract_worst_margin = std::numeric_limits<double>::infinity();
  std::vector<double> mu(n);
  for (const auto& base : accepted) {
    double delta_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = rng.uniform(0.0, 1e-3 * R / n);
      mu[i] = base[i] + d;
      delta_sum += d;
    }
    double trace = std::accumulate(mu.begin(), mu.end(), 0.0);
    if (!(trace < R) || !spec.in_cone(mu) || !(spec.evaluate(mu) > 1.0 / R)) continue;
    const double margin = spec.evaluate(mu) - spec.evaluate(base) - est.m * delta_sum;
    est.caract_worst_margin = std::min(est.caract_worst_margin, margin);
  }
  return est;
}

double jensen_gap(const HessianOperatorSpec& spec, std::span<const HermitianMatrix> batch) {
  if (batch.empty()) throw std::invalid_argument("jensen_gap: empty batch");
  HermitianMatrix mean(batch[0].dim());
  double acc = 0.0;
  for (const HermitianMatrix& h : batch) {
    acc += eval_G(spec, h);  // throws if h leaves the cone
    mean = mean + h;
  }
  mean = (1.0 / static_cast<double>(batch.size())) * mean;
  const Spectrum spectrum = eigenvalues(mean);
  if (!spec.in_cone(spectrum.values))
    throw numerical_error("jensen_gap: batch mean escaped the cone");
  const double gm = std::pow(spec.evaluate(spectrum.values), 1.0 / spec.degree);
  return gm - acc / static_cast<double>(batch.size());
}

double p_threshold(double degree, int n) {
  if (!(degree > 0.0) || n < 1) throw std::invalid_argument("p_threshold: bad arguments");
  return n * std::max(degree - 1.0, 1.0);
}

double p_threshold(const HessianOperatorSpec& spec) {
  return p_threshold(spec.degree, spec.dimension);
}

}  // namespace hcl
