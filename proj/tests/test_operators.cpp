#include "hcl/certify.hpp"
#include "hcl/operators.hpp"
#include "hcl/rng.hpp"
#include "hcl/symmetric_functions.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace hcl;

TEST_CASE("catalog built-ins satisfy the spec axioms") {
  const std::vector<HessianOperatorSpec> catalog{
      make_determinant_operator(3), make_sigma_k_operator(3, 2), make_sigma_k_operator(4, 3),
      make_ma_k_operator(3, 2),     make_ma_k_operator(4, 2),    make_interpolated2d_operator(0.5),
      make_interpolated2d_operator(0.0)};
  for (const auto& spec : catalog) {
    const ProbeReport report = certify_operator_axioms(spec, 300, 51);
    CHECK_MESSAGE(report.passed(), spec.name, " worst=", report.worst_margin);
  }
}

TEST_CASE("eval_F on diagonal inputs") {
  const std::vector<double> l{1.0, 2.0, 3.0};
  const HermitianMatrix a = HermitianMatrix::diagonal(l);
  CHECK(eval_F(make_determinant_operator(3), a) == doctest::Approx(6.0));
  CHECK(eval_F(make_ma_k_operator(3, 2), a) == doctest::Approx(60.0));

  const std::vector<double> ab{1.7, 0.4};
  CHECK(eval_F(make_interpolated2d_operator(0.0), HermitianMatrix::diagonal(ab)) ==
        doctest::Approx(1.7 * 0.4));
}

TEST_CASE("eval_F cone checking modes") {
  const std::vector<double> bad{-1.0, 2.0};
  const HermitianMatrix a = HermitianMatrix::diagonal(bad);
  const auto det = make_determinant_operator(2);
  CHECK_THROWS_AS(eval_F(det, a), std::domain_error);
  CHECK_THROWS_AS(eval_G(det, a), std::domain_error);
  CHECK(eval_F(det, a, ConeCheck::warn) == doctest::Approx(-2.0));
  CHECK(eval_F(det, a, ConeCheck::off) == doctest::Approx(-2.0));
}

TEST_CASE("eval_G and grad_G closed forms at the identity") {
  const int n = 3;
  const HermitianMatrix id = HermitianMatrix::identity(n);
  const auto det = make_determinant_operator(n);
  CHECK(eval_G(det, id) == doctest::Approx(1.0));
  const HermitianMatrix g = grad_G(det, id);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(std::abs(g(i, j) - (i == j ? cplx(1.0 / n, 0.0) : cplx{})) <= 1e-9);

  // MA_2 on C^3: G(Id) = 8^{1/3} = 2 and the gradient is (2/3) Id
  const auto mak = make_ma_k_operator(3, 2);
  CHECK(eval_G(mak, id) == doctest::Approx(2.0));
  const HermitianMatrix gm = grad_G(mak, id);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(std::abs(gm(i, j) - (i == j ? cplx(2.0 / 3.0, 0.0) : cplx{})) <= 1e-8);
}

TEST_CASE("grad_G matches finite differences across the catalog") {
  const std::vector<HessianOperatorSpec> catalog{
      make_determinant_operator(3), make_sigma_k_operator(4, 2), make_ma_k_operator(3, 2),
      make_interpolated2d_operator(0.3)};
  for (const auto& spec : catalog) {
    const ProbeReport report = certify_gradient_fd(spec, 40, 52);
    CHECK_MESSAGE(report.passed(), spec.name, " worst=", report.worst_margin);
  }
}

TEST_CASE("grad_G is homogeneous of degree zero") {
  const std::vector<HessianOperatorSpec> catalog{
      make_determinant_operator(4), make_sigma_k_operator(5, 3), make_ma_k_operator(4, 2),
      make_interpolated2d_operator(0.7)};
  for (const auto& spec : catalog) {
    const ProbeReport report = certify_dg_homogeneity(spec, 40, 53);
    CHECK_MESSAGE(report.passed(), spec.name, " worst=", report.worst_margin);
  }
}

TEST_CASE("finite-difference gradient of F scales with degree d-1") {
  Rng rng(54);
  const auto spec = make_sigma_k_operator(3, 2);
  const HermitianMatrix a = random_in_cone(spec, rng);
  const double t = 1.7;
  // directional derivative of F along Id at A and at tA
  auto df_along_id = [&](const HermitianMatrix& base) {
    const double h = 1e-6;
    const HermitianMatrix id = HermitianMatrix::identity(3);
    return (eval_F(spec, base + h * id, ConeCheck::off) -
            eval_F(spec, base - h * id, ConeCheck::off)) /
           (2.0 * h);
  };
  const double ratio = df_along_id(t * a) / df_along_id(a);
  CHECK(ratio == doctest::Approx(std::pow(t, spec.degree - 1.0)).epsilon(1e-4));
}

TEST_CASE("grad_G handles degenerate spectra via the FD oracle") {
  // repeated eigenvalues: identity plus a rank-one bump with a tie
  const std::vector<double> d{1.0, 1.0, 2.0};
  const HermitianMatrix a = HermitianMatrix::diagonal(d);
  const auto spec = make_sigma_k_operator(3, 2);
  const HermitianMatrix g = grad_G(spec, a);
  // finite differences in a few directions
  const double h = 1e-5;
  Rng rng(55);
  for (int rep = 0; rep < 5; ++rep) {
    HermitianMatrix dir(3);
    for (int i = 0; i < 3; ++i) {
      dir.set(i, i, rng.normal());
      for (int j = i + 1; j < 3; ++j) dir.set(i, j, cplx(rng.normal(), rng.normal()));
    }
    const double fd = (eval_G(spec, a + h * dir) - eval_G(spec, a - h * dir)) / (2.0 * h);
    CHECK(frobenius_inner(g, dir) == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("garding comparison margins") {
  // determinant with C = 1: equality
  const auto det = make_determinant_operator(3);
  Rng rng(56);
  const HermitianMatrix p = random_positive_definite(3, rng);
  CHECK(std::abs(garding_comparison_margin(det, p, 1.0)) <= 1e-10);

  // MA_2 at the identity with C = 2: equality
  const auto mak = make_ma_k_operator(3, 2);
  CHECK(std::abs(garding_comparison_margin(mak, HermitianMatrix::identity(3))) <= 1e-12);

  // sigma_2 at diag(1,2,3) with C = sqrt(3): sqrt(11) - sqrt(3) * 6^{1/3}
  const auto sig = make_sigma_k_operator(3, 2);
  const std::vector<double> l{1.0, 2.0, 3.0};
  const double expected = std::sqrt(11.0) - std::sqrt(3.0) * std::cbrt(6.0);
  CHECK(garding_comparison_margin(sig, HermitianMatrix::diagonal(l)) ==
        doctest::Approx(expected).epsilon(1e-12));

  const std::vector<double> bad{-1.0, 1.0, 1.0};
  CHECK_THROWS_AS(garding_comparison_margin(det, HermitianMatrix::diagonal(bad)),
                  std::domain_error);

  for (const auto& spec : {det, sig, mak, make_interpolated2d_operator(0.4)}) {
    const ProbeReport report = certify_garding(spec, 2000, 57);
    CHECK_MESSAGE(report.passed(), spec.name, " worst=", report.worst_margin);
  }
}

TEST_CASE("concavity probe") {
  const auto det = make_determinant_operator(2);
  const HermitianMatrix id = HermitianMatrix::identity(2);
  CHECK(concavity_probe(det, id, id, 0.37) == doctest::Approx(0.0).epsilon(1e-12));

  // Minkowski-type strict gap: G(diag(2.5, 1)) - (1 + 2)/2
  const std::vector<double> d{4.0, 1.0};
  const double gap = concavity_probe(det, id, HermitianMatrix::diagonal(d), 0.5);
  CHECK(gap == doctest::Approx(std::sqrt(2.5) - 1.5).epsilon(1e-12));
  CHECK(gap > 0.0);

  const std::vector<double> bad{-1.0, 1.0};
  CHECK_THROWS_AS(concavity_probe(det, HermitianMatrix::diagonal(bad), id, 0.5),
                  std::domain_error);

  for (const auto& spec : {make_determinant_operator(4), make_sigma_k_operator(4, 3),
                           make_ma_k_operator(4, 2), make_interpolated2d_operator(0.6)}) {
    const ProbeReport report = certify_concavity(spec, 2000, 58);
    CHECK_MESSAGE(report.passed(), spec.name, " worst=", report.worst_margin);
  }
}

TEST_CASE("schur concavity probe") {
  const auto sig = make_sigma_k_operator(2, 2);
  const std::vector<double> lambda{1.0, 1.0};
  const std::vector<double> mu{0.0, 2.0};
  CHECK(majorizes(mu, lambda));
  CHECK_FALSE(majorizes(lambda, mu));
  CHECK(schur_concavity_probe(sig, lambda, mu) == doctest::Approx(1.0));
  CHECK(schur_concavity_probe(sig, lambda, lambda) == doctest::Approx(0.0));

  const std::vector<double> not_major{0.5, 2.0};
  CHECK_THROWS_AS(schur_concavity_probe(sig, not_major, lambda), std::invalid_argument);

  for (const auto& spec : {make_determinant_operator(4), make_sigma_k_operator(4, 2),
                           make_ma_k_operator(4, 3), make_interpolated2d_operator(0.2)}) {
    const ProbeReport report = certify_schur_concavity(spec, 2000, 59);
    CHECK_MESSAGE(report.passed(), spec.name, " worst=", report.worst_margin);
  }
}

TEST_CASE("hyperbolicity certificates") {
  // MA_2 on C^3 along the all-ones direction: roots of prod(s_I - 2t) are
  // s_I / 2 = 1.5, 2, 2.5 at lambda = (1,2,3)
  const auto mak = make_ma_k_operator(3, 2);
  const std::vector<double> ones{1.0, 1.0, 1.0};
  const std::vector<double> l{1.0, 2.0, 3.0};
  const auto res = hyperbolicity_check(mak.evaluate, 3, ones, l, 1e-8);
  CHECK(res.hyperbolic);
  std::vector<double> re;
  for (const cplx& r : res.roots) re.push_back(r.real());
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(re[1] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(re[2] == doctest::Approx(2.5).epsilon(1e-9));

  // determinant: roots are the entries of lambda
  const auto det = make_determinant_operator(3);
  const std::vector<double> l2{-0.7, 0.4, 2.2};
  const auto res2 = hyperbolicity_check(det.evaluate, 3, ones, l2, 1e-8);
  CHECK(res2.hyperbolic);
  re.clear();
  for (const cplx& r : res2.roots) re.push_back(r.real());
  std::sort(re.begin(), re.end());
  for (int i = 0; i < 3; ++i) CHECK(re[i] == doctest::Approx(l2[i]).epsilon(1e-8));

  // control: lambda_1^2 + lambda_2^2 has complex roots (1 +- i)/2
  SymmetricFunction control = [](std::span<const double> x) {
    return x[0] * x[0] + x[1] * x[1];
  };
  const std::vector<double> ones2{1.0, 1.0};
  const std::vector<double> point{1.0, 0.0};
  const auto res3 = hyperbolicity_check(control, 2, ones2, point, 1e-8);
  CHECK_FALSE(res3.hyperbolic);
  CHECK(res3.max_imag_ratio > 0.1);
}

TEST_CASE("hyperbolicity rejects a zero direction") {
  SymmetricFunction f = [](std::span<const double> x) { return x[0] * x[1]; };
  const std::vector<double> zero{0.0, 0.0};
  const std::vector<double> l{1.0, 2.0};
  CHECK_THROWS_AS(hyperbolicity_check(f, 2, zero, l, 1e-8), std::invalid_argument);
}

TEST_CASE("hyperbolicity flags heavy degrees") {
  // C_7^3 = 35 > 30 trips the conditioning warning but still certifies
  const auto mak = make_ma_k_operator(7, 3);
  Rng rng(60);
  std::vector<double> lambda(7);
  for (double& x : lambda) x = rng.uniform(-1.0, 3.0);
  const std::vector<double> ones(7, 1.0);
  const auto res = hyperbolicity_check(mak.evaluate, 35, ones, lambda, 1e-8);
  CHECK(res.conditioning_warning);
  CHECK(res.hyperbolic);
  CHECK(res.roots.size() == 35);
}

TEST_CASE("C_R membership") {
  const auto det = make_determinant_operator(2);
  const HermitianMatrix id = HermitianMatrix::identity(2);
  CHECK(in_C_R(det, id, 10.0));
  CHECK_FALSE(in_C_R(det, id, 1.5));  // trace 2 >= 1.5

  // boundary scan for A = t Id: member iff 2t < R and t^2 > 1/R
  const double r = 7.0;
  for (double t : {0.1, 0.3, 0.5, 1.0, 2.0, 3.0, 3.6}) {
    const bool expected = (2.0 * t < r) && (t * t > 1.0 / r);
    CHECK(in_C_R(det, t * id, r) == expected);
  }
  CHECK_THROWS_AS(in_C_R(det, id, -1.0), std::invalid_argument);
}

TEST_CASE("uniform ellipticity estimates") {
  // sigma_1: gradient identically one
  const auto sig1 = make_sigma_k_operator(3, 1);
  const auto est1 = uniform_ellipticity_estimate(sig1, 10.0, 20000, 61);
  CHECK(est1.m == doctest::Approx(1.0));
  CHECK(est1.M == doctest::Approx(1.0));
  CHECK(est1.caract_worst_margin >= -1e-9);

  const auto det = make_determinant_operator(2);
  const auto est2 = uniform_ellipticity_estimate(det, 10.0, 20000, 62);
  CHECK(est2.m > 0.0);
  CHECK(est2.M >= est2.m);
  CHECK(est2.accepted > 100);
  CHECK(est2.caract_worst_margin >= -1e-6 * (1.0 + est2.M));

  const auto mak = make_ma_k_operator(3, 2);
  const auto est3 = uniform_ellipticity_estimate(mak, 10.0, 20000, 63);
  CHECK(est3.m > 0.0);
  CHECK(std::isfinite(est3.M));

  // R too small for the det cone: trace < R and det > 1/R cannot both hold
  CHECK_THROWS_AS(uniform_ellipticity_estimate(det, 0.1, 5000, 64), numerical_error);
}

TEST_CASE("jensen gap") {
  const auto det = make_determinant_operator(2);
  const HermitianMatrix id = HermitianMatrix::identity(2);
  const std::vector<HermitianMatrix> same{id, id, id};
  CHECK(jensen_gap(det, same) == doctest::Approx(0.0).epsilon(1e-12));

  const std::vector<double> d{4.0, 1.0};
  const std::vector<HermitianMatrix> pair{id, HermitianMatrix::diagonal(d)};
  CHECK(jensen_gap(det, pair) == doctest::Approx(std::sqrt(2.5) - 1.5).epsilon(1e-12));

  const std::vector<double> bad{-1.0, 1.0};
  const std::vector<HermitianMatrix> with_bad{id, HermitianMatrix::diagonal(bad)};
  CHECK_THROWS_AS(jensen_gap(det, with_bad), std::domain_error);

  for (const auto& spec : {make_determinant_operator(3), make_sigma_k_operator(3, 2),
                           make_ma_k_operator(3, 2), make_interpolated2d_operator(0.5)}) {
    const ProbeReport report = certify_jensen(spec, 1000, 65);
    CHECK_MESSAGE(report.passed(), spec.name, " worst=", report.worst_margin);
  }
}

TEST_CASE("monotonicity, sharpened comparison and C_R convexity") {
  for (const auto& spec : {make_determinant_operator(3), make_sigma_k_operator(4, 2),
                           make_ma_k_operator(3, 2)}) {
    CHECK(certify_monotonicity(spec, 1000, 66).passed());
    CHECK(certify_sharpened_comparison(spec, 1000, 67).passed());
    CHECK(certify_cr_convexity(spec, 10.0, 200, 68).passed());
  }
}

TEST_CASE("p threshold") {
  for (int n = 1; n <= 6; ++n)
    CHECK(p_threshold(make_determinant_operator(n)) ==
          doctest::Approx(static_cast<double>(n) * std::max(n - 1, 1)));
  for (int k = 2; k <= 4; ++k)
    CHECK(p_threshold(make_sigma_k_operator(5, k)) == doctest::Approx(5.0 * (k - 1)));
  CHECK(p_threshold(make_ma_k_operator(3, 2)) == doctest::Approx(6.0));  // 3 (C_3^2 - 1)
  CHECK_THROWS_AS(p_threshold(0.0, 3), std::invalid_argument);
}

TEST_CASE("certification runs are deterministic in the seed") {
  const auto spec = make_ma_k_operator(3, 2);
  const ProbeReport a = certify_concavity(spec, 500, 99);
  const ProbeReport b = certify_concavity(spec, 500, 99);
  CHECK(a.worst_margin == b.worst_margin);
  CHECK(a.witness == b.witness);
  const ProbeReport c = certify_concavity(spec, 500, 100);
  CHECK(a.worst_margin != c.worst_margin);
}
