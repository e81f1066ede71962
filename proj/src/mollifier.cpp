#include "hcl/mollifier.hpp"

#include <cmath>
#include <stdexcept>

namespace hcl {

namespace {

void check_args(const ScalarField& field, std::span<const cplx> z, double eps, int sample_count) {
  if (static_cast<int>(z.size()) != field.n)
    throw std::invalid_argument("mollifier: point dimension mismatch");
  if (!(eps > 0.0)) throw std::invalid_argument("mollifier: eps > 0 required");
  if (sample_count < 1) throw std::invalid_argument("mollifier: sample_count >= 1 required");
}

// Uniform draw from the unit ball of R^{2n}, returned as a complex offset.
std::vector<cplx> unit_ball_point(int n, Rng& rng) {
  std::vector<cplx> w(n);
  double norm2 = 0.0;
  for (int i = 0; i < n; ++i) {
    w[i] = cplx(rng.normal(), rng.normal());
    norm2 += std::norm(w[i]);
  }
  const double norm = std::sqrt(norm2);
  const double radius = std::pow(rng.uniform(), 1.0 / (2.0 * n));
  const double f = norm > 0.0 ? radius / norm : 0.0;
  for (cplx& v : w) v *= f;
  return w;
}

}  // namespace

McEstimate ball_average(const ScalarField& field, std::span<const cplx> z, double eps,
                        int sample_count, std::uint64_t seed) {
  check_args(field, z, eps, sample_count);
  Rng rng(seed);
  const int n = field.n;
  std::vector<cplx> point(z.begin(), z.end());
  double mean = 0.0, m2 = 0.0;
  for (int s = 0; s < sample_count; ++s) {
    const auto w = unit_ball_point(n, rng);
    for (int i = 0; i < n; ++i) point[i] = z[i] + eps * w[i];
    const double v = field(point);
    const double delta = v - mean;
    mean += delta / (s + 1);
    m2 += delta * (v - mean);
  }
  const double var = sample_count > 1 ? m2 / (sample_count - 1) : 0.0;
  return {mean, std::sqrt(var / sample_count), sample_count};
}

McEstimate t_eps(const ScalarField& field, std::span<const cplx> z, double eps, int sample_count,
                 std::uint64_t seed) {
  check_args(field, z, eps, sample_count);
  Rng rng(seed);
  const int n = field.n;
  const double center = field(z);
  const int pairs = (sample_count + 1) / 2;
  std::vector<cplx> point(z.begin(), z.end());
  double mean = 0.0, m2 = 0.0;
  for (int s = 0; s < pairs; ++s) {
    const auto w = unit_ball_point(n, rng);
    for (int i = 0; i < n; ++i) point[i] = z[i] + eps * w[i];
    const double up = field(point);
    for (int i = 0; i < n; ++i) point[i] = z[i] - eps * w[i];
    const double dn = field(point);
    const double v = 0.5 * (up + dn) - center;
    const double delta = v - mean;
    mean += delta / (s + 1);
    m2 += delta * (v - mean);
  }
  const double factor = (n + 1.0) / (eps * eps);
  const double var = pairs > 1 ? m2 / (pairs - 1) : 0.0;
  return {factor * mean, factor * std::sqrt(var / pairs), 2 * pairs};
}

PositivityReport positivity_probe(const ScalarField& field,
                                  std::span<const std::vector<cplx>> grid, double eps,
                                  int sample_count, std::uint64_t seed) {
  if (grid.empty()) throw std::invalid_argument("positivity_probe: empty grid");
  Rng rng(seed);
  PositivityReport report;
  bool first = true;
  for (const auto& point : grid) {
    Rng sub = rng.spawn();
    const McEstimate est = t_eps(field, point, eps, sample_count, sub.next_u64());
    if (first || est.value < report.worst_value) {
      report.worst_value = est.value;
      report.std_error_at_worst = est.std_error;
      report.worst_point = point;
      first = false;
    }
  }
  return report;
}

ConvergenceReport convergence_probe(const ScalarField& field, std::span<const cplx> z,
                                    std::span<const double> eps_list, int sample_count,
                                    std::uint64_t seed) {
  if (eps_list.empty()) throw std::invalid_argument("convergence_probe: empty eps list");
  ConvergenceReport report;
  report.reference = fd_complex_hessian(field, z, 1e-4).trace();
  for (double eps : eps_list) {
    // same seed for every eps: common random numbers across the sweep
    const McEstimate est = t_eps(field, z, eps, sample_count, seed);
    report.eps.push_back(eps);
    report.values.push_back(est.value);
    report.biases.push_back(std::abs(est.value - report.reference));
    report.std_errors.push_back(est.std_error);
  }

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int used = 0;
  for (std::size_t i = 0; i < report.eps.size(); ++i) {
    if (report.biases[i] <= 3.0 * report.std_errors[i]) continue;
    const double x = std::log(report.eps[i]);
    const double y = std::log(report.biases[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
  }
  if (used < 2) {
    report.exact_within_noise = true;
    report.fitted_order = std::numeric_limits<double>::infinity();
  } else {
    report.fitted_order = (used * sxy - sx * sy) / (used * sxx - sx * sx);
  }
  return report;
}

}  // namespace hcl
