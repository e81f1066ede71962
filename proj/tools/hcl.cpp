// Command line front end: compound matrices, operator certifications, the
// Pogorelov family, the mollified Laplacian and the real embedding check,
// all with seeded, reproducible JSON/CSV reports.
//
// Exit codes: 0 all checks pass, 1 property violation, 2 input error,
// 3 numerical failure.

#include "hcl/certify.hpp"
#include "hcl/compound.hpp"
#include "hcl/embedding.hpp"
#include "hcl/matrix_io.hpp"
#include "hcl/mollifier.hpp"
#include "hcl/operators.hpp"
#include "hcl/pogorelov.hpp"
#include "hcl/symmetric_functions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

std::uint64_t env_seed() {
  if (const char* s = std::getenv("HCL_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
      throw std::invalid_argument("HCL_SEED is not a valid integer");
    }
  }
  return hcl::kDefaultSeed;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

json envelope(const std::string& command, json parameters, std::uint64_t seed, json results) {
  return json{{"command", command},
              {"parameters", std::move(parameters)},
              {"seed", seed},
              {"timestamp", timestamp()},
              {"results", std::move(results)}};
}

void emit(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file " + out_path);
  out << report.dump(2) << "\n";
}

hcl::HessianOperatorSpec make_operator(const std::string& op, int n, int k, double s) {
  if (op == "det") return hcl::make_determinant_operator(n);
  if (op == "sigmak") return hcl::make_sigma_k_operator(n, k);
  if (op == "mak") return hcl::make_ma_k_operator(n, k);
  if (op == "interp2d") return hcl::make_interpolated2d_operator(s);
  throw std::invalid_argument("unknown operator " + op);
}

int cmd_compound(const std::string& input, int k, const std::string& out_path) {
  const hcl::HermitianMatrix a = hcl::load_matrix(input);
  const hcl::CompoundMatrix d = hcl::build_compound(a, k);

  const double spectrum_residual = hcl::compound_spectrum_residual(a, k);
  const double via_det = hcl::mak_via_determinant(a, k);
  const double via_spec = hcl::ma_k(hcl::eigenvalues(a).values, k);
  const double det_rel =
      std::abs(via_det - via_spec) / (std::max(std::abs(via_det), std::abs(via_spec)) + 1e-300);

  json basis = json::array();
  for (const hcl::IndexSet& s : d.basis) {
    json tuple = json::array();
    for (int i : s.indices) tuple.push_back(i + 1);  // 1-based for humans
    basis.push_back(tuple);
  }

  const double spectrum_tol = 1e-8 * (1.0 + a.frobenius_norm());
  json results{{"n", d.base_dim},
               {"k", d.order},
               {"basis", basis},
               {"matrix", hcl::matrix_to_json(d.body)},
               {"spectrum_hausdorff", spectrum_residual},
               {"spectrum_tolerance", spectrum_tol},
               {"det_vs_mak_relative", det_rel},
               {"det_tolerance", 1e-8},
               {"pass", spectrum_residual <= spectrum_tol && det_rel <= 1e-8}};
  emit(envelope("compound", json{{"input", input}, {"k", k}}, 0, results), out_path);
  return results["pass"].get<bool>() ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& op, int n, int k, double s,
               const std::vector<std::string>& props, int samples, std::uint64_t seed,
               const std::string& out_path) {
  const hcl::HessianOperatorSpec spec = make_operator(op, n, k, s);
  std::vector<std::string> selected = props;
  if (selected.empty() || (selected.size() == 1 && selected[0] == "all")) {
    selected = {"axioms",     "garding",     "concavity", "schur",
                "jensen",     "gradient",    "dg0",       "monotonicity",
                "sharpened",  "hyperbolicity"};
    if (op == "sigmak" && k >= 2) selected.push_back("maclaurin");
    if (op == "mak" && k >= 2) selected.push_back("comparison");
  }

  json results = json::array();
  bool all_pass = true;
  for (const std::string& prop : selected) {
    hcl::ProbeReport report;
    if (prop == "axioms")
      report = hcl::certify_operator_axioms(spec, samples, seed);
    else if (prop == "garding")
      report = hcl::certify_garding(spec, samples, seed);
    else if (prop == "concavity")
      report = hcl::certify_concavity(spec, samples, seed);
    else if (prop == "schur")
      report = hcl::certify_schur_concavity(spec, samples, seed);
    else if (prop == "jensen")
      report = hcl::certify_jensen(spec, samples, seed);
    else if (prop == "gradient")
      report = hcl::certify_gradient_fd(spec, std::min(samples, 200), seed);
    else if (prop == "dg0")
      report = hcl::certify_dg_homogeneity(spec, std::min(samples, 200), seed);
    else if (prop == "monotonicity")
      report = hcl::certify_monotonicity(spec, samples, seed);
    else if (prop == "sharpened")
      report = hcl::certify_sharpened_comparison(spec, samples, seed);
    else if (prop == "hyperbolicity")
      report = hcl::certify_hyperbolicity(spec, std::min(samples, 500), seed);
    else if (prop == "maclaurin")
      report = hcl::certify_maclaurin(n, k, samples, seed);
    else if (prop == "comparison")
      report = hcl::certify_mak_comparison(n, k, samples, seed);
    else if (prop == "cone_chain")
      report = hcl::certify_cone_chain(n, std::max(k, 2), samples, seed);
    else if (prop == "ue") {
      const auto est = hcl::uniform_ellipticity_estimate(spec, 10.0, samples, seed);
      const bool pass = est.m > 0.0 && est.caract_worst_margin >= -1e-6 * (1.0 + est.M);
      all_pass = all_pass && pass;
      results.push_back(json{{"property", "ue"},
                             {"op", spec.name},
                             {"samples", est.accepted},
                             {"coverage", est.coverage},
                             {"m", est.m},
                             {"M", est.M},
                             {"caract_worst_margin", est.caract_worst_margin},
                             {"witness", {{"lambda", est.witness_lambda}}},
                             {"pass", pass}});
      continue;
    } else
      throw std::invalid_argument("unknown property " + prop);
    all_pass = all_pass && report.passed();
    results.push_back(report.to_json());
  }

  emit(envelope("verify",
                json{{"op", op}, {"n", n}, {"k", k}, {"s", s}, {"samples", samples}},
                seed, results),
       out_path);
  return all_pass ? kExitOk : kExitViolation;
}

int cmd_pogorelov(int n, int m, int k, std::optional<double> beta_opt, int points,
                  std::uint64_t seed, const std::string& out_path) {
  const double beta = beta_opt.value_or(hcl::critical_beta(m, n, k));
  const hcl::PogorelovParams params(m, n, beta);
  hcl::Rng rng(seed);

  double worst_det = 0.0, worst_spec = 0.0, worst_trace = 0.0;
  for (int p = 0; p < points; ++p) {
    hcl::SplitPoint z;
    for (int i = 0; i < m; ++i) z.zprime.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
    for (int i = 0; i < n - m; ++i)
      z.zsecond.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
    double r = 0.0;
    for (const hcl::cplx& v : z.zsecond) r += std::norm(v);
    if (std::sqrt(r) < 0.1) {
      --p;
      continue;
    }
    const hcl::HermitianMatrix h = hcl::analytic_hessian(params, z);
    const auto numeric = hcl::eigenvalues(h);
    const auto closed = hcl::closed_form_spectrum(params, z);
    for (int i = 0; i < n; ++i)
      worst_spec = std::max(worst_spec, std::abs(numeric.values[i] - closed.values[i]) /
                                            (std::abs(closed.values[i]) + 1e-300));
    const double d_closed = hcl::det_closed_form(params, z);
    const double d_lu = hcl::determinant(h);
    double d_spec = 1.0;
    for (double v : closed.values) d_spec *= v;
    worst_det = std::max({worst_det, std::abs(d_closed - d_lu) / std::abs(d_closed),
                          std::abs(d_closed - d_spec) / std::abs(d_closed)});
    worst_trace = std::max(worst_trace, std::abs(h.trace() - hcl::trace_closed_form(params, z)) /
                                            (std::abs(h.trace()) + 1e-300));
  }

  const std::vector<double> radii{3.16e-2, 1e-2, 3.16e-3, 1e-3};
  const auto probe = hcl::mak_smoothness_probe(params, k, radii);
  const double expected_exponent = hcl::mak_closed_form_exponent(m, n, k, beta);

  json results{{"beta", beta},
               {"critical_beta", hcl::critical_beta(m, n, k)},
               {"points", points},
               {"worst_det_relative", worst_det},
               {"worst_spectrum_relative", worst_spec},
               {"worst_trace_relative", worst_trace},
               {"mak_exponent_closed_form", expected_exponent},
               {"mak_exponent_fitted", probe.fitted_exponent},
               {"p_star", hcl::p_star(n, k)},
               {"p_threshold", hcl::p_threshold(hcl::make_ma_k_operator(n, k))},
               {"w2p_threshold",
                beta >= 1.0 ? json("unbounded") : json((n - m) / (1.0 - beta))}};
  const bool pass = worst_det <= 1e-8 && worst_spec <= 1e-8 && worst_trace <= 1e-10 &&
                    std::abs(probe.fitted_exponent - expected_exponent) <=
                        0.01 * std::max(1.0, std::abs(expected_exponent));
  results["pass"] = pass;
  emit(envelope("pogorelov",
                json{{"n", n}, {"m", m}, {"k", k}, {"beta", beta}, {"points", points}},
                seed, results),
       out_path);
  return pass ? kExitOk : kExitViolation;
}

int cmd_mollify(const std::string& field_name, int n, const std::vector<double>& eps_list,
                int samples, std::uint64_t seed, const std::string& out_path) {
  hcl::ScalarField field;
  if (field_name == "quad")
    field = hcl::field_quad(n);
  else if (field_name == "quartic")
    field = hcl::field_quartic(n);
  else if (field_name == "pluriharmonic")
    field = hcl::field_pluriharmonic(n);
  else if (field_name == "pogorelov")
    field = hcl::field_pogorelov(hcl::PogorelovParams(1, std::max(n, 2), 1.0));
  else
    throw std::invalid_argument("unknown field " + field_name);

  const std::vector<hcl::cplx> z(field.n, hcl::cplx(0.25, -0.1));
  std::string csv = "eps,value,stderr\n";
  for (double eps : eps_list) {
    const hcl::McEstimate est = hcl::t_eps(field, z, eps, samples, seed);
    csv += std::to_string(eps) + "," + std::to_string(est.value) + "," +
           std::to_string(est.std_error) + "\n";
  }
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file " + out_path);
    out << csv;
  }
  return kExitOk;
}

int cmd_embed_check(double h, const std::string& out_path) {
  struct Entry {
    hcl::ScalarField field;
    std::vector<hcl::cplx> z;
  };
  const hcl::PogorelovParams pog(1, 2, 0.75);
  const std::vector<Entry> catalog{
      {hcl::field_quad(2), {hcl::cplx(0.3, 0.2), hcl::cplx(-0.5, 0.1)}},
      {hcl::field_pluriharmonic(2), {hcl::cplx(0.4, -0.3), hcl::cplx(0.2, 0.6)}},
      {hcl::field_quartic(2), {hcl::cplx(0.5, 0.1), hcl::cplx(-0.2, 0.4)}},
      {hcl::field_cubic_plus_quad(1), {hcl::cplx(0.3, -0.2)}},
      {hcl::field_pogorelov(pog), {hcl::cplx(0.4, 0.1), hcl::cplx(0.8, -0.3)}},
  };

  json rows = json::array();
  bool pass = true;
  for (const Entry& e : catalog) {
    const double residual = hcl::hessian_identity_residual(e.field, e.z, h);
    pass = pass && residual <= 1e-4;
    rows.push_back(json{{"field", e.field.name}, {"residual", residual}});
  }

  // structural identities of the embedding
  const hcl::ComplexMatrix j = hcl::complex_structure(4);
  const double j_square =
      (j * j + hcl::ComplexMatrix::identity(4)).frobenius_norm();
  hcl::Rng rng(1);
  hcl::HermitianMatrix a(2);
  a.set(0, 0, 0.7);
  a.set(1, 1, -0.2);
  a.set(0, 1, hcl::cplx(0.3, 0.9));
  const hcl::SymmetricRealMatrix emb = hcl::iota(a);
  const double commute = (emb.to_complex() * j - j * emb.to_complex()).frobenius_norm();
  const double fixed = (hcl::pi_projection(emb) - emb).frobenius_norm();
  pass = pass && j_square <= 1e-12 && commute <= 1e-12 && fixed <= 1e-12;

  json results{{"fields", rows},
               {"j_square_residual", j_square},
               {"j_commutation_residual", commute},
               {"pi_fixes_image_residual", fixed},
               {"h", h},
               {"pass", pass}};
  emit(envelope("embed-check", json{{"h", h}}, 0, results), out_path);
  return pass ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hcl: numerics for degenerate complex Hessian operators"};
  app.require_subcommand(1);

  std::string input, out_path;
  std::string op = "det", prop_field = "quad";
  std::vector<std::string> props;
  std::vector<double> eps_list{0.4, 0.2, 0.1};
  int n = 3, k = 2, m = 1, samples = 1000, points = 200;
  double s = 0.5, h = 1e-4;
  std::optional<double> beta;
  std::uint64_t seed = 0;
  bool seed_given = false;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "random seed (default HCL_SEED or built-in)")
        ->each([&](const std::string&) { seed_given = true; });
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (default stdout)");
  };

  CLI::App* compound = app.add_subcommand("compound", "derivation operator on k-vectors");
  compound->add_option("--input", input, "Hermitian matrix JSON file")->required();
  compound->add_option("--k", k, "compound order")->required();
  add_out(compound);

  CLI::App* verify = app.add_subcommand("verify", "sampled operator certifications");
  verify->add_option("--op", op, "det|sigmak|mak|interp2d");
  verify->add_option("--n", n, "matrix dimension");
  verify->add_option("--k", k, "order for sigmak/mak");
  verify->add_option("--s", s, "interpolation parameter for interp2d");
  verify->add_option("--prop", props, "property list (default all)");
  verify->add_option("--samples", samples, "samples per property");
  add_seed(verify);
  add_out(verify);

  CLI::App* pogorelov = app.add_subcommand("pogorelov", "explicit counterexample family");
  pogorelov->add_option("--n", n, "total complex dimension");
  pogorelov->add_option("--m", m, "split index");
  pogorelov->add_option("--k", k, "operator order");
  pogorelov->add_option("--beta", beta, "exponent (default critical)");
  pogorelov->add_option("--points", points, "sample points");
  add_seed(pogorelov);
  add_out(pogorelov);

  CLI::App* mollify = app.add_subcommand("mollify", "averaged-difference Laplacian");
  mollify->add_option("--field", prop_field, "quad|quartic|pluriharmonic|pogorelov");
  mollify->add_option("--n", n, "complex dimension");
  mollify->add_option("--eps-list", eps_list, "radii");
  mollify->add_option("--samples", samples, "Monte Carlo samples");
  add_seed(mollify);
  add_out(mollify);

  CLI::App* embed = app.add_subcommand("embed-check", "real embedding identities");
  embed->add_option("--step", h, "finite difference step");
  add_out(embed);

  CLI11_PARSE(app, argc, argv);

  try {
    const std::uint64_t effective_seed = seed_given ? seed : env_seed();
    if (compound->parsed()) return cmd_compound(input, k, out_path);
    if (verify->parsed())
      return cmd_verify(op, n, k, s, props, samples, effective_seed, out_path);
    if (pogorelov->parsed())
      return cmd_pogorelov(n, m, k, beta, points, effective_seed, out_path);
    if (mollify->parsed())
      return cmd_mollify(prop_field, n, eps_list, samples, effective_seed, out_path);
    if (embed->parsed()) return cmd_embed_check(h, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const hcl::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
