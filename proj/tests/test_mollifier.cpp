#include "hcl/mollifier.hpp"
#include "hcl/pogorelov.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace hcl;

namespace {

std::vector<cplx> origin(int n) { return std::vector<cplx>(n, cplx(0.0, 0.0)); }

}  // namespace

TEST_CASE("ball average of a constant is exact") {
  const ScalarField c{"const", 2, ScalarField::Kind::smooth,
                      [](std::span<const cplx>) { return 3.25; }};
  const auto est = ball_average(c, origin(2), 0.5, 2000, 81);
  CHECK(est.value == doctest::Approx(3.25));
  CHECK(est.std_error == doctest::Approx(0.0));
}

TEST_CASE("ball average of an affine field recovers the center value") {
  const ScalarField affine{"affine", 2, ScalarField::Kind::smooth,
                           [](std::span<const cplx> z) {
                             return 1.0 + 2.0 * z[0].real() - 0.7 * z[1].imag();
                           }};
  const std::vector<cplx> z{cplx(0.4, -0.2), cplx(0.1, 0.3)};
  const auto est = ball_average(affine, z, 0.3, 200000, 82);
  CHECK(std::abs(est.value - affine(z)) <= 3.0 * est.std_error + 1e-12);
}

TEST_CASE("ball second moment: mean of |w - z|^2 is n eps^2 / (n + 1)") {
  for (int n : {1, 2, 3}) {
    const std::vector<cplx> center(n, cplx(0.2, -0.1));
    ScalarField dist{"dist2", n, ScalarField::Kind::subharmonic,
                     [center](std::span<const cplx> w) {
                       double s = 0.0;
                       for (std::size_t i = 0; i < w.size(); ++i) s += std::norm(w[i] - center[i]);
                       return s;
                     }};
    const double eps = 0.4;
    const auto est = ball_average(dist, center, eps, 200000, 83);
    const double expected = n * eps * eps / (n + 1.0);
    CHECK(std::abs(est.value - expected) <= 3.0 * est.std_error);
  }
}

TEST_CASE("t_eps of |z|^2 equals the complex Laplacian n") {
  for (int n : {1, 2, 3}) {
    const ScalarField quad = field_quad(n);
    const std::vector<cplx> z(n, cplx(0.3, 0.1));
    const auto est = t_eps(quad, z, 0.25, 100000, 84);
    CHECK(std::abs(est.value - n) <= 3.0 * est.std_error + 1e-9);
  }
}

TEST_CASE("t_eps of affine and pluriharmonic fields vanishes") {
  const ScalarField affine{"affine", 1, ScalarField::Kind::smooth,
                           [](std::span<const cplx> z) { return 2.0 * z[0].real() - 1.0; }};
  const auto est = t_eps(affine, origin(1), 0.3, 50000, 85);
  CHECK(std::abs(est.value) <= 3.0 * est.std_error + 1e-12);

  const ScalarField ph = field_pluriharmonic(2);
  const std::vector<cplx> z{cplx(0.5, 0.2), cplx(-0.3, 0.1)};
  const auto est2 = t_eps(ph, z, 0.3, 100000, 86);
  CHECK(std::abs(est2.value) <= 3.0 * est2.std_error + 1e-9);
}

TEST_CASE("t_eps is linear under shared sample points") {
  const int n = 2;
  const ScalarField f = field_quad(n);
  const ScalarField g = field_pluriharmonic(n);
  const double a = 2.5, b = -1.25;
  const ScalarField combo{"combo", n, ScalarField::Kind::smooth,
                          [&, a, b](std::span<const cplx> z) { return a * f(z) + b * g(z); }};
  const std::vector<cplx> z{cplx(0.2, 0.1), cplx(-0.4, 0.3)};
  const std::uint64_t seed = 87;
  const int samples = 20000;
  const double eps = 0.4;
  const double lhs = t_eps(combo, z, eps, samples, seed).value;
  const double rhs = a * t_eps(f, z, eps, samples, seed).value +
                     b * t_eps(g, z, eps, samples, seed).value;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("positivity on the subharmonic catalog") {
  // |z|^2 in two variables: values concentrate near n = 2
  {
    const ScalarField f = field_quad(2);
    const std::vector<std::vector<cplx>> grid{
        origin(2), {cplx(0.3, 0.0), cplx(0.0, 0.2)}, {cplx(-0.4, 0.1), cplx(0.2, -0.3)}};
    const auto rep = positivity_probe(f, grid, 0.2, 20000, 88);
    CHECK(rep.worst_value > 1.5);
  }
  // log|z - a| away from the pole: mean value equality, so ~0 but not below
  {
    const ScalarField f = field_log_pole(cplx(2.0, 0.0));
    const std::vector<std::vector<cplx>> grid{
        origin(1), {cplx(0.5, 0.3)}, {cplx(-0.6, -0.2)}, {cplx(0.0, 0.7)}};
    const auto rep = positivity_probe(f, grid, 0.3, 50000, 89);
    CHECK(rep.worst_value >= -3.0 * rep.std_error_at_worst);
  }
  // max of pluriharmonic functions
  {
    const ScalarField f = field_max_pluriharmonic();
    const std::vector<std::vector<cplx>> grid{
        origin(2), {cplx(0.1, 0.4), cplx(-0.2, 0.1)}, {cplx(-0.3, 0.0), cplx(0.3, 0.0)}};
    const auto rep = positivity_probe(f, grid, 0.25, 50000, 90);
    CHECK(rep.worst_value >= -3.0 * rep.std_error_at_worst);
  }
}

TEST_CASE("convergence order for the quartic is quadratic in eps") {
  // |z|^4 in one variable at z = 1: complex Laplacian 4, bias (2/3) eps^2
  const ScalarField f = field_quartic(1);
  const std::vector<cplx> z{cplx(1.0, 0.0)};
  const std::vector<double> eps{0.8, 0.6, 0.4};
  const auto rep = convergence_probe(f, z, eps, 4000000, 91);
  CHECK(rep.reference == doctest::Approx(4.0).epsilon(1e-6));
  CHECK_FALSE(rep.exact_within_noise);
  CHECK(rep.fitted_order >= 1.9);
  CHECK(rep.fitted_order <= 2.1);
  // the bias itself matches the Taylor value at the largest radius
  CHECK(rep.values[0] - 4.0 ==
        doctest::Approx(2.0 / 3.0 * 0.8 * 0.8).epsilon(0.05));
}

TEST_CASE("quadratics have zero bias up to Monte Carlo error") {
  const ScalarField f = field_quad(2);
  const std::vector<cplx> z{cplx(0.4, 0.0), cplx(0.0, -0.2)};
  const std::vector<double> eps{0.4, 0.2, 0.1};
  const auto rep = convergence_probe(f, z, eps, 50000, 92);
  CHECK(rep.exact_within_noise);
}

TEST_CASE("holomorphic cubic contributes nothing to the limit") {
  const ScalarField f = field_cubic_plus_quad(1);
  const std::vector<cplx> z{cplx(0.3, -0.1)};
  const auto est = t_eps(f, z, 0.2, 100000, 93);
  CHECK(std::abs(est.value - 1.0) <= 3.0 * est.std_error + 1e-9);
}

TEST_CASE("pointwise uniform bound by the Laplacian sup over the ball") {
  // Delta_C of Re(z^3) + |z|^2 is identically 1
  const ScalarField f = field_cubic_plus_quad(1);
  for (const cplx center : {cplx(0.0, 0.0), cplx(0.4, 0.2), cplx(-0.5, 0.6)}) {
    const std::vector<cplx> z{center};
    const auto est = t_eps(f, z, 0.3, 50000, 94);
    CHECK(std::abs(est.value) <= 1.0 + 3.0 * est.std_error + 1e-9);
  }
}

TEST_CASE("argument validation") {
  const ScalarField f = field_quad(2);
  CHECK_THROWS_AS(t_eps(f, origin(1), 0.1, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(t_eps(f, origin(2), -0.1, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(t_eps(f, origin(2), 0.1, 0, 1), std::invalid_argument);
}
