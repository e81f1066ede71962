#include "hcl/certify.hpp"

#include "hcl/symmetric_functions.hpp"

#include <algorithm>
#include <cmath>

namespace hcl {

namespace {

nlohmann::json lambda_json(std::span<const double> lambda) {
  return nlohmann::json(std::vector<double>(lambda.begin(), lambda.end()));
}

ProbeReport make_report(const char* property, std::string op, int samples,
                        double tolerance = 1e-10) {
  ProbeReport report;
  report.property = property;
  report.op = std::move(op);
  report.samples = samples;
  report.tolerance = tolerance;
  return report;
}

void track(ProbeReport& report, double margin, nlohmann::json witness) {
  if (margin < report.worst_margin) {
    report.worst_margin = margin;
    report.witness = std::move(witness);
  }
}

// Central finite differences of eval_G in the matrix entries, paired so
// that Trace(grad * B) reproduces directional derivatives.
HermitianMatrix fd_grad_G(const HessianOperatorSpec& spec, const HermitianMatrix& A, double h) {
  const int n = A.dim();
  HermitianMatrix g(n);
  auto directional = [&](const HermitianMatrix& dir) {
    return (eval_G(spec, A + h * dir) - eval_G(spec, A - h * dir)) / (2.0 * h);
  };
  for (int i = 0; i < n; ++i) {
    HermitianMatrix e(n);
    e.set(i, i, 1.0);
    g.set(i, i, directional(e));
    for (int j = i + 1; j < n; ++j) {
      HermitianMatrix re(n), im(n);
      re.set(i, j, 1.0);
      im.set(i, j, cplx(0.0, 1.0));
      // Trace(G (E_ij + E_ji)) = 2 Re g_ij, Trace(G (iE_ij - iE_ji)) = 2 Im g_ij
      const double re_part = 0.5 * directional(re);
      const double im_part = 0.5 * directional(im);
      g.set(i, j, cplx(re_part, im_part));
    }
  }
  return g;
}

}  // namespace

nlohmann::json ProbeReport::to_json() const {
  return nlohmann::json{{"property", property},   {"op", op},
                        {"samples", samples},     {"worst_margin", worst_margin},
                        {"tolerance", tolerance}, {"witness", witness},
                        {"pass", passed()}};
}

ComplexMatrix random_unitary(int n, Rng& rng) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(rng.normal(), rng.normal());
  return gram_schmidt_unitary(m);
}

HermitianMatrix random_hermitian(int n, Rng& rng) {
  HermitianMatrix a(n);
  for (int i = 0; i < n; ++i) {
    a.set(i, i, rng.normal());
    for (int j = i + 1; j < n; ++j) a.set(i, j, cplx(rng.normal(), rng.normal()));
  }
  return a;
}

HermitianMatrix hermitian_with_spectrum(std::span<const double> lambda, Rng& rng) {
  const int n = static_cast<int>(lambda.size());
  const ComplexMatrix q = random_unitary(n, rng);
  ComplexMatrix d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = lambda[i];
  const ComplexMatrix m = q * d * q.adjoint();
  std::vector<cplx> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries[static_cast<std::size_t>(i) * n + j] = m(i, j);
  return HermitianMatrix::from_entries(n, entries);
}

std::vector<double> sample_lambda(const ConePredicate& member, int n, Rng& rng, int max_tries) {
  std::vector<double> lambda(n);
  for (int t = 0; t < max_tries; ++t) {
    for (int i = 0; i < n; ++i) lambda[i] = rng.uniform(-1.0, 3.0);
    if (member(lambda)) return lambda;
  }
  throw numerical_error("sample_lambda: rejection sampling exhausted its budget");
}

HermitianMatrix random_in_cone(const HessianOperatorSpec& spec, Rng& rng) {
  const auto lambda = sample_lambda(spec.in_cone, spec.dimension, rng);
  return hermitian_with_spectrum(lambda, rng);
}

HermitianMatrix random_positive_definite(int n, Rng& rng, double lo, double hi) {
  std::vector<double> lambda(n);
  for (double& x : lambda) x = rng.uniform(lo, hi);
  return hermitian_with_spectrum(lambda, rng);
}

HermitianMatrix random_positive_semidefinite(int n, Rng& rng, double hi) {
  std::vector<double> lambda(n);
  for (double& x : lambda) x = rng.uniform() < 0.3 ? 0.0 : rng.uniform(0.0, hi);
  return hermitian_with_spectrum(lambda, rng);
}

ProbeReport certify_operator_axioms(const HessianOperatorSpec& spec, int samples,
                                    std::uint64_t seed) {
  ProbeReport report = make_report("axioms", spec.name, samples, 1e-9);
  Rng rng(seed);
  const int n = spec.dimension;
  for (int s = 0; s < samples; ++s) {
    auto lambda = sample_lambda(spec.in_cone, n, rng);
    const double f = spec.evaluate(lambda);
    // positivity on the cone
    track(report, f, {{"check", "positivity"}, {"lambda", lambda_json(lambda)}});
    // permutation symmetry
    auto perm = lambda;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
    const double scale = std::abs(f) + 1.0;
    track(report, -std::abs(spec.evaluate(perm) - f) / scale,
          {{"check", "symmetry"}, {"lambda", lambda_json(lambda)}});
    // homogeneity
    const double t = rng.uniform(0.5, 2.0);
    auto scaled = lambda;
    for (double& x : scaled) x *= t;
    const double expected = std::pow(t, spec.degree) * f;
    track(report, -std::abs(spec.evaluate(scaled) - expected) / (std::abs(expected) + 1.0),
          {{"check", "homogeneity"}, {"lambda", lambda_json(lambda)}, {"t", t}});
  }
  return report;
}

ProbeReport certify_garding(const HessianOperatorSpec& spec, int samples, std::uint64_t seed) {
  ProbeReport report = make_report("garding", spec.name, samples);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const HermitianMatrix p = random_positive_definite(spec.dimension, rng);
    const double margin = garding_comparison_margin(spec, p);
    track(report, margin, {{"lambda", lambda_json(eigenvalues(p).values)}});
  }
  return report;
}

ProbeReport certify_concavity(const HessianOperatorSpec& spec, int samples, std::uint64_t seed) {
  ProbeReport report = make_report("concavity", spec.name, samples);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const auto la = sample_lambda(spec.in_cone, spec.dimension, rng);
    const auto lb = sample_lambda(spec.in_cone, spec.dimension, rng);
    const HermitianMatrix a = hermitian_with_spectrum(la, rng);
    const HermitianMatrix b = hermitian_with_spectrum(lb, rng);
    const double t = rng.uniform();
    const double gap = concavity_probe(spec, a, b, t);
    track(report, gap,
          {{"lambda_a", lambda_json(la)}, {"lambda_b", lambda_json(lb)}, {"t", t}});
  }
  return report;
}

ProbeReport certify_schur_concavity(const HessianOperatorSpec& spec, int samples,
                                    std::uint64_t seed) {
  ProbeReport report = make_report("schur", spec.name, samples);
  Rng rng(seed);
  const int n = spec.dimension;
  for (int s = 0; s < samples; ++s) {
    const auto mu = sample_lambda(spec.in_cone, n, rng);
    // a few T-transforms t Id + (1-t) swap produce a majorized vector
    auto lambda = mu;
    const int moves = n < 2 ? 0 : rng.uniform_int(1, 3);
    for (int m = 0; m < moves; ++m) {
      const int i = rng.uniform_int(0, n - 1);
      int j = rng.uniform_int(0, n - 2);
      if (j >= i) ++j;
      const double t = rng.uniform();
      const double xi = lambda[i], xj = lambda[j];
      lambda[i] = t * xi + (1.0 - t) * xj;
      lambda[j] = t * xj + (1.0 - t) * xi;
    }
    const double gap = schur_concavity_probe(spec, lambda, mu);
    track(report, gap, {{"lambda", lambda_json(lambda)}, {"mu", lambda_json(mu)}});
  }
  return report;
}

ProbeReport certify_jensen(const HessianOperatorSpec& spec, int samples, std::uint64_t seed,
                           int batch_size) {
  ProbeReport report = make_report("jensen", spec.name, samples);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::vector<HermitianMatrix> batch;
    nlohmann::json spectra = nlohmann::json::array();
    for (int b = 0; b < batch_size; ++b) {
      const auto lambda = sample_lambda(spec.in_cone, spec.dimension, rng);
      spectra.push_back(lambda_json(lambda));
      batch.push_back(hermitian_with_spectrum(lambda, rng));
    }
    track(report, jensen_gap(spec, batch), {{"spectra", spectra}});
  }
  return report;
}

ProbeReport certify_gradient_fd(const HessianOperatorSpec& spec, int samples,
                                std::uint64_t seed) {
  ProbeReport report = make_report("gradient_fd", spec.name, samples, 1e-5);
  Rng rng(seed);
  // stay away from the cone boundary, where the finite-difference oracle
  // itself loses accuracy to the blowup of higher derivatives of F^{1/d}
  auto interior = [&spec](std::span<const double> lambda) {
    std::vector<double> shifted(lambda.begin(), lambda.end());
    for (double& x : shifted) x -= 0.05;
    return spec.in_cone(lambda) && spec.in_cone(shifted);
  };
  for (int s = 0; s < samples; ++s) {
    const auto lambda = sample_lambda(interior, spec.dimension, rng);
    const HermitianMatrix a = hermitian_with_spectrum(lambda, rng);
    const HermitianMatrix analytic = grad_G(spec, a);
    const HermitianMatrix numeric = fd_grad_G(spec, a, 1e-5);
    const double rel =
        (analytic - numeric).frobenius_norm() / (1.0 + analytic.frobenius_norm());
    track(report, -rel, {{"lambda", lambda_json(lambda)}});
  }
  return report;
}

ProbeReport certify_dg_homogeneity(const HessianOperatorSpec& spec, int samples,
                                   std::uint64_t seed) {
  ProbeReport report = make_report("dg_homogeneity", spec.name, samples, 1e-9);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const auto lambda = sample_lambda(spec.in_cone, spec.dimension, rng);
    const HermitianMatrix a = hermitian_with_spectrum(lambda, rng);
    const double t = rng.uniform(0.2, 5.0);
    const HermitianMatrix g1 = grad_G(spec, a);
    const HermitianMatrix gt = grad_G(spec, t * a);
    const double rel = (g1 - gt).frobenius_norm() / (1.0 + g1.frobenius_norm());
    track(report, -rel, {{"lambda", lambda_json(lambda)}, {"t", t}});
  }
  return report;
}

ProbeReport certify_monotonicity(const HessianOperatorSpec& spec, int samples,
                                 std::uint64_t seed) {
  ProbeReport report = make_report("monotonicity", spec.name, samples);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const HermitianMatrix a = random_in_cone(spec, rng);
    const HermitianMatrix q = random_positive_semidefinite(spec.dimension, rng);
    const double fa = eval_F(spec, a, ConeCheck::off);
    const double fb = eval_F(spec, a + q, ConeCheck::off);
    const double scale = std::abs(fa) + std::abs(fb) + 1.0;
    track(report, (fb - fa) / scale, {{"lambda", lambda_json(eigenvalues(a).values)}});
  }
  return report;
}

ProbeReport certify_sharpened_comparison(const HessianOperatorSpec& spec, int samples,
                                         std::uint64_t seed) {
  ProbeReport report = make_report("sharpened_comparison", spec.name, samples);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const HermitianMatrix a = random_in_cone(spec, rng);
    const HermitianMatrix p = random_positive_definite(spec.dimension, rng);
    const double detp = determinant(p);
    const double margin = eval_G(spec, a + p) - eval_G(spec, a) -
                          spec.garding_constant * std::pow(detp, 1.0 / spec.dimension);
    track(report, margin, {{"lambda_a", lambda_json(eigenvalues(a).values)},
                           {"lambda_p", lambda_json(eigenvalues(p).values)}});
  }
  return report;
}

ProbeReport certify_cr_convexity(const HessianOperatorSpec& spec, double R, int samples,
                                 std::uint64_t seed) {
  ProbeReport report = make_report("cr_convexity", spec.name, samples, 0.0);
  Rng rng(seed);
  report.worst_margin = 1.0;
  int tested = 0;
  while (tested < samples) {
    const HermitianMatrix a = random_in_cone(spec, rng);
    const HermitianMatrix b = random_in_cone(spec, rng);
    if (!in_C_R(spec, a, R) || !in_C_R(spec, b, R)) continue;
    ++tested;
    const HermitianMatrix mid = 0.5 * (a + b);
    if (!in_C_R(spec, mid, R))
      track(report, -1.0, {{"lambda_a", lambda_json(eigenvalues(a).values)},
                           {"lambda_b", lambda_json(eigenvalues(b).values)}});
  }
  return report;
}

ProbeReport certify_maclaurin(int n, int k, int samples, std::uint64_t seed) {
  ProbeReport report =
      make_report("maclaurin", "sigma" + std::to_string(k) + "/n" + std::to_string(n), samples,
                  1e-12);
  Rng rng(seed);
  auto member = [k](std::span<const double> lambda) { return in_gamma_k(lambda, k - 1); };
  for (int s = 0; s < samples; ++s) {
    const auto lambda = sample_lambda(member, n, rng);
    track(report, maclaurin_gap(lambda, k), {{"lambda", lambda_json(lambda)}});
  }
  return report;
}

ProbeReport certify_mak_comparison(int n, int k, int samples, std::uint64_t seed) {
  ProbeReport report =
      make_report("mak_comparison", "ma" + std::to_string(k) + "/n" + std::to_string(n), samples);
  Rng rng(seed);
  auto member = [k](std::span<const double> lambda) { return in_gamma_k_prime(lambda, k - 1); };
  for (int s = 0; s < samples; ++s) {
    const auto lambda = sample_lambda(member, n, rng);
    track(report, mak_comparison_gap(lambda, k), {{"lambda", lambda_json(lambda)}});
  }
  return report;
}

ProbeReport certify_cone_chain(int n, int k, int samples, std::uint64_t seed) {
  ProbeReport report = make_report(
      "cone_chain", "n" + std::to_string(n) + "k" + std::to_string(k), samples, 0.0);
  Rng rng(seed);
  report.worst_margin = 1.0;
  std::vector<double> lambda(n);
  for (int s = 0; s < samples; ++s) {
    for (double& x : lambda) x = rng.uniform(-1.0, 3.0);
    if (k >= 2) {
      if (in_gamma_k(lambda, k) && !in_gamma_k(lambda, k - 1))
        track(report, -1.0, {{"check", "gamma_chain"}, {"lambda", lambda_json(lambda)}});
      if (in_gamma_k_prime(lambda, k - 1) && !in_gamma_k_prime(lambda, k))
        track(report, -1.0, {{"check", "gamma_prime_chain"}, {"lambda", lambda_json(lambda)}});
    }
    if (in_gamma_k(lambda, k)) {
      const auto g = sigma_gradient(lambda, k);
      const double worst = *std::min_element(g.begin(), g.end());
      if (!(worst > 0.0))
        track(report, -1.0, {{"check", "sigma_grad_positive"}, {"lambda", lambda_json(lambda)}});
    }
  }
  return report;
}

ProbeReport certify_hyperbolicity(const HessianOperatorSpec& spec, int samples,
                                  std::uint64_t seed, double tol) {
  ProbeReport report = make_report("hyperbolicity", spec.name, samples, tol);
  Rng rng(seed);
  const int n = spec.dimension;
  const std::vector<double> ones(n, 1.0);
  std::vector<double> lambda(n);
  for (int s = 0; s < samples; ++s) {
    for (double& x : lambda) x = rng.uniform(-2.0, 3.0);
    const auto result = hyperbolicity_check(spec.evaluate, static_cast<int>(spec.degree), ones,
                                            lambda, tol);
    track(report, -result.max_imag_ratio, {{"lambda", lambda_json(lambda)}});
  }
  return report;
}

}  // namespace hcl
