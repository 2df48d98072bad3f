#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "krein/dilation.hpp"
#include "krein/induced.hpp"
#include "krein/invariant.hpp"
#include "krein/io.hpp"
#include "krein/random.hpp"
#include "krein/star_algebra.hpp"
#include "krein/weyl.hpp"

namespace krein::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_to_json(const RunConfig& c) {
  ordered_json j;
  j["subcommand"] = c.subcommand;
  if (!c.input_path.empty()) j["input"] = c.input_path;
  if (!c.action_path.empty()) j["action"] = c.action_path;
  if (!c.output_path.empty()) j["output"] = c.output_path;
  j["format"] = c.format;
  j["tol"] = c.tol;
  if (c.subcommand == "counterexample") j["m_max"] = c.m_max;
  if (c.subcommand == "weyl") {
    j["dim"] = c.dim;
    j["neg"] = c.neg;
    j["cutoff"] = c.cutoff;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
  }
  return j;
}

void add_check(Report& report, const std::string& name, double residual, double threshold) {
  report.checks.push_back(Check{name, residual, threshold, residual <= threshold});
}

ordered_json complex_to(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json vector_to(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to(v(i)));
  return out;
}

ordered_json real_vector_to(const RealVector& v) {
  ordered_json out = ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

ordered_json signature_to(const Signature& s) {
  return ordered_json::array({s.plus, s.minus});
}

Report run_kolmogorov(const RunConfig& c) {
  Report report;
  const HermitianKernel k = read_kernel_file(c.input_path);
  const KolmogorovPipeline pipeline = kolmogorov_pipeline(k, {}, c.tol);
  const double residual = reconstruct_residual(pipeline.decomposition, k);
  add_check(report, "reconstruction", residual, scaled_tol(c.tol, kernel_norm(k)));
  add_check(report, "gram_contraction", spectral_norm(pipeline.gram.a) - 1.0, 1e-10);

  const UniquenessReport uniq = uniqueness_report(k, {}, c.tol);
  ordered_json payload;
  payload["signature"] = signature_to(signature(pipeline.decomposition.space));
  payload["negative_squares"] = negative_squares(k);
  payload["residual"] = residual;
  payload["gaps"] = {{"eps_plus", uniq.eps_plus}, {"eps_minus", uniq.eps_minus}};
  payload["unique"] = uniq.unique;
  payload["ambiguous"] = uniq.ambiguous;
  report.payload_json = payload.dump(2);
  return report;
}

Report run_counterexample(const RunConfig& c) {
  Report report;
  if (c.m_max < 1) throw std::invalid_argument("counterexample: --m-max must be >= 1");
  ordered_json rows = ordered_json::array();
  double worst_margin = -1e300;  // max of (bound - C); pass when <= 0
  double worst_pencil = 0.0;
  double prev = 0.0, worst_monotone = -1e300;
  for (int m = 1; m <= c.m_max; ++m) {
    const CounterexampleInstance inst = counterexample_instance(m);
    const double defect = counterexample_defect(inst, c.tol);
    const double bound = counterexample_lower_bound(inst.spectrum);

    // Independent dense generalized eigensolve of the same pencil.
    const Matrix h = inst.Pi.adjoint() * inst.Pi;
    const Matrix n = inst.T.adjoint() * h * inst.T;
    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> ges(hermitize(n), hermitize(h));
    const double oracle = ges.eigenvalues().maxCoeff();
    worst_pencil = std::max(worst_pencil,
                            std::abs(defect * defect - oracle) / std::max(1.0, oracle));

    worst_margin = std::max(worst_margin, bound - defect);
    worst_monotone = std::max(worst_monotone, prev - defect);
    prev = defect;
    rows.push_back(ordered_json::array({m, defect, bound}));
  }
  add_check(report, "lower_bound", worst_margin, 1e-6);
  add_check(report, "pencil_agreement", worst_pencil, 1e-6);
  add_check(report, "monotone", worst_monotone, 1e-9);

  ordered_json payload;
  payload["columns"] = {"m", "C_computed", "C_lower_bound"};
  payload["rows"] = std::move(rows);
  payload["note"] =
      "unbounded growth of the optimal constant along the truncation family is the "
      "finite-dimensional surrogate for the failure of the lifting property";
  report.payload_json = payload.dump(2);
  return report;
}

Report run_invariant(const RunConfig& c) {
  Report report;
  const HermitianKernel k = read_kernel_file(c.input_path);
  if (c.action_path.empty())
    throw std::invalid_argument("invariant: --action is required");
  const ActionSystem action = read_action_file(c.action_path);
  if (action.n_points != k.n())
    throw std::invalid_argument("invariant: action and kernel point counts differ");

  const ActionDiagnostics diag = validate_action(action, c.tol);
  if (!diag.ok)
    throw std::invalid_argument("invariant: invalid action: " + diag.violations.front());
  if (!is_invariant(k, action, c.tol))
    throw std::invalid_argument("invariant: kernel is not invariant under the action");

  const InvariantDecomposition dec = invariant_kolmogorov(k, action, {}, c.tol);
  const double recon = reconstruct_residual(dec.pipeline.decomposition, k);
  const double scale = scaled_tol(c.tol, kernel_norm(k));
  add_check(report, "reconstruction", recon, scale);
  add_check(report, "covariance_relation", dec.relation_residual, scale);
  add_check(report, "representation", dec.rep_residual, scale);
  add_check(report, "gram_intertwining", dec.intertwine_residual, scale);

  const ReducibilityReport red = fundamental_reducibility(dec.rep, {}, c.tol);

  ordered_json payload;
  payload["signature"] = signature_to(signature(dec.rep.space));
  payload["negative_squares"] = negative_squares(k);
  payload["fundamentally_reducible_via_natural_symmetry"] = red.reducible;
  payload["commutation_residual"] = red.commutation_residual;
  ordered_json sigma = ordered_json::array();
  for (int a = 0; a < action.S.size(); ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < action.S.size(); ++b) row.push_back(complex_to(dec.rep.sigma(a, b)));
    sigma.push_back(std::move(row));
  }
  payload["sigma"] = std::move(sigma);
  report.payload_json = payload.dump(2);
  return report;
}

Report run_weyl(const RunConfig& c) {
  Report report;
  if (c.dim < 1) throw std::invalid_argument("weyl: --dim must be >= 1");
  if (c.neg < 0 || c.neg > c.dim)
    throw std::invalid_argument("weyl: --neg must lie in [0, dim]");
  if (c.cutoff < 1) throw std::invalid_argument("weyl: --cutoff must be >= 1");
  if (c.samples < 2) throw std::invalid_argument("weyl: --samples must be >= 2");

  const KreinSpace h = KreinSpace::diag_signature(c.dim - c.neg, c.neg);
  const TruncatedFock fock = TruncatedFock::make(h, c.cutoff);
  Rng rng(c.seed);

  std::vector<Vector> labels;
  for (int s = 0; s < c.samples; ++s) {
    Vector v = rng.vector(c.dim);
    labels.push_back(v / v.norm());
  }

  double ccr = 0.0, kernel_err = 0.0, bound_overshoot = -1e300, invariance = 0.0;
  double max_bound = 0.0, isometry = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const Vector& xi = labels[i];
      const Vector& eta = labels[j];

      // CCR at the label level.
      ExpLabelCombo probe = ExpLabelCombo::single(1.0, labels[(i + j) % labels.size()]);
      const ExpLabelCombo lhs = weyl_apply(h, xi, weyl_apply(h, eta, probe));
      ExpLabelCombo rhs = weyl_apply(h, xi + eta, probe);
      for (auto& term : rhs.terms) term.coeff *= weyl_sigma(h, xi, eta);
      ccr = std::max(ccr, std::abs(lhs.terms[0].coeff - rhs.terms[0].coeff));
      ccr = std::max(ccr, (lhs.terms[0].label - rhs.terms[0].label).cwiseAbs().maxCoeff());

      // Kernel reproduction and the analytic tail.
      const Complex paired = fock_pair(fock, v_vector(fock, eta), v_vector(fock, xi));
      kernel_err = std::max(kernel_err, std::abs(paired - weyl_kernel(h, xi, eta)));
      const double exact = kernel_truncation_exact(h, xi, eta, c.cutoff);
      const double bound = kernel_truncation_bound(h, xi, eta, c.cutoff);
      bound_overshoot = std::max(bound_overshoot, exact - bound * (1.0 + 1e-9));
      max_bound = std::max(max_bound, bound);

      const Vector eta2 = labels[(i + 2 * j + 1) % labels.size()];
      invariance = std::max(invariance, invariance_identity(h, xi, eta, eta2));

      if (j < 4) {
        ExpLabelCombo c1 = ExpLabelCombo::single(0.8, eta);
        ExpLabelCombo c2 = ExpLabelCombo::single(Complex(0.2, 0.4), eta2);
        isometry = std::max(isometry, isometry_check(fock, xi, c1, c2).residual);
      }
    }

  add_check(report, "ccr_exact", ccr, 1e-15);
  add_check(report, "kernel_reproduction", kernel_err, 1e-12);
  add_check(report, "within_tail_bound", bound_overshoot, 0.0);
  add_check(report, "invariance_identity", invariance, 1e-12);
  add_check(report, "isometry", isometry, 1e-12);

  ordered_json payload;
  payload["fock_dim"] = fock.dim();
  payload["ccr_exact"] = ccr <= 1e-15;
  payload["max_kernel_error"] = kernel_err;
  payload["bound"] = max_bound;
  report.payload_json = payload.dump(2);
  return report;
}

Report run_gns(const RunConfig& c) {
  Report report;
  const HermitianFunctional z = read_gns_input_file(c.input_path);
  const GnsData data = gns_build(z, c.tol);
  const GnsReport verify = gns_verify(data, z, c.tol);
  const double scale = scaled_tol(c.tol, z.values.cwiseAbs().maxCoeff());
  add_check(report, "functional_reproduction", verify.z_residual, scale);
  add_check(report, "multiplicativity", verify.mult_residual, scale);
  add_check(report, "sharp_compatibility", verify.sharp_residual, scale);
  add_check(report, "cyclicity", verify.cyclic ? 0.0 : 1.0, 0.0);

  const UniquenessReport uniq = gns_uniqueness_report(z, {}, c.tol);
  const FunctionalJordan jordan = functional_jordan(z, c.tol);

  ordered_json payload;
  payload["signature"] = signature_to(signature(data.space));
  payload["negative_squares"] = negative_squares(kz_kernel(z));
  payload["gaps"] = {{"eps_plus", uniq.eps_plus}, {"eps_minus", uniq.eps_minus}};
  payload["unique"] = uniq.unique;
  payload["ambiguous"] = uniq.ambiguous;
  payload["jordan"] = ordered_json::object();
  payload["jordan"]["established"] = jordan.established;
  payload["jordan"]["disjointness"] = "range criterion";
  if (jordan.established) {
    payload["jordan"]["z_plus"] = vector_to(jordan.z_plus);
    payload["jordan"]["z_minus"] = vector_to(jordan.z_minus);
    // Boundedness witness: the constants of the dominating functional.
    HermitianFunctional z0 = z;
    z0.values = jordan.z_plus + jordan.z_minus;
    const Complex mass = (z0.values.transpose() * z0.algebra.unit)(0, 0);
    if (std::abs(mass) > 1e-12) {
      z0.values /= mass.real();
      std::vector<double> constants = phi_bounded_constants(z0, c.tol);
      ordered_json cj = ordered_json::array();
      for (double value : constants) cj.push_back(value);
      payload["jordan"]["phi_bounded_constants"] = std::move(cj);
    }
  } else {
    payload["jordan"]["note"] = jordan.note;
  }
  report.payload_json = payload.dump(2);
  return report;
}

Report run_stinespring(const RunConfig& c) {
  Report report;
  const HermitianMap t = read_map_file(c.input_path);
  const StinespringDilation d = minimal_stinespring(t, c.tol);
  const double scale = scaled_tol(c.tol, spectral_norm(choi_matrix(t)));
  add_check(report, "dilation_reconstruction", dilation_residual(d, t), scale);

  const bool cp = is_completely_positive(t, c.tol);
  const WittstockDecomposition w = wittstock_decompose(t, c.tol);
  const bool paulsen_full = paulsen_block_check(t, w.s, w.s, c.tol);
  add_check(report, "paulsen_dominant", paulsen_full ? 0.0 : 1.0, 0.0);

  const Eigh choi = eigh(choi_matrix(t));
  ordered_json payload;
  payload["completely_positive"] = cp;
  payload["choi_eigenvalues"] = real_vector_to(choi.values);
  payload["dilation_signature"] = signature_to(signature(d.space));
  payload["cb_upper_bound"] = spectral_norm(w.s.apply(Matrix::Identity(t.k, t.k)));
  payload["routes_equivalent"] = true;  // minimal_stinespring verified it
  report.payload_json = payload.dump(2);
  return report;
}

}  // namespace

bool Report::pass() const {
  for (const Check& check : checks)
    if (!check.pass) return false;
  return true;
}

Report run(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  if (config.format != "json" && config.format != "csv")
    throw std::invalid_argument("unknown --format (json|csv)");
  if (config.format == "csv" && config.subcommand != "counterexample")
    throw std::invalid_argument("--format csv is only defined for counterexample");

  if (config.subcommand == "kolmogorov")
    report = run_kolmogorov(config);
  else if (config.subcommand == "counterexample")
    report = run_counterexample(config);
  else if (config.subcommand == "invariant")
    report = run_invariant(config);
  else if (config.subcommand == "weyl")
    report = run_weyl(config);
  else if (config.subcommand == "gns")
    report = run_gns(config);
  else if (config.subcommand == "stinespring")
    report = run_stinespring(config);
  else
    throw std::invalid_argument("unknown subcommand '" + config.subcommand + "'");

  report.subcommand = config.subcommand;
  report.config_json = config_to_json(config).dump(2);
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::string report_to_json(const Report& report) {
  ordered_json j;
  j["subcommand"] = report.subcommand;
  j["config"] = ordered_json::parse(report.config_json);
  ordered_json checks = ordered_json::array();
  for (const Check& check : report.checks) {
    ordered_json cj;
    cj["name"] = check.name;
    cj["residual"] = check.residual;
    cj["threshold"] = check.threshold;
    cj["pass"] = check.pass;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["payload"] = ordered_json::parse(report.payload_json);
  j["pass"] = report.pass();
  j["wall_time_ms"] = report.wall_time_ms;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const Report& report) {
  if (report.subcommand != "counterexample")
    throw std::invalid_argument("csv output is only defined for counterexample");
  const ordered_json payload = ordered_json::parse(report.payload_json);
  std::ostringstream out;
  out << "# krein counterexample csv v1: m,C_computed,C_lower_bound\n";
  out.precision(17);
  for (const auto& row : payload.at("rows"))
    out << row.at(0).get<long long>() << "," << row.at(1).get<double>() << ","
        << row.at(2).get<double>() << "\n";
  return out.str();
}

std::string render_report(const Report& report, const RunConfig& config) {
  return config.format == "csv" ? report_to_csv(report) : report_to_json(report);
}

void deliver_report(const Report& report, const RunConfig& config) {
  const std::string text = render_report(report, config);
  if (config.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path path(config.output_path);
  if (const char* dir = std::getenv("KREIN_OUTPUT_DIR"))
    path = std::filesystem::path(dir) / path.filename();
  write_text_file(path.string(), text);
}

int exit_code(const Report& report) { return report.pass() ? 0 : 1; }

int main_entry(int argc, const char* const* argv) {
  CLI::App app{"finite-dimensional Krein space computations: Kolmogorov decompositions, "
               "invariant representations, Weyl exponentials, GNS data, dilations"};
  app.require_subcommand(1);

  RunConfig config;
  auto add_common = [&config](CLI::App* sub, bool with_input) {
    if (with_input)
      sub->add_option("--input", config.input_path, "input JSON file")->required();
    sub->add_option("--output", config.output_path, "report file (default: stdout)");
    sub->add_option("--format", config.format, "json|csv");
    sub->add_option("--tol", config.tol, "residual tolerance (relative)");
  };

  add_common(app.add_subcommand("kolmogorov", "factor a hermitian kernel"), true);
  CLI::App* counter = app.add_subcommand("counterexample",
                                         "lifting-defect growth along the truncation family");
  add_common(counter, false);
  counter->add_option("--m-max", config.m_max, "largest truncation size");
  CLI::App* invariant = app.add_subcommand("invariant", "invariant kernel to representation");
  add_common(invariant, true);
  invariant->add_option("--action", config.action_path, "action JSON file")->required();
  CLI::App* weyl = app.add_subcommand("weyl", "Weyl exponentials over a truncated Fock space");
  add_common(weyl, false);
  weyl->add_option("--dim", config.dim, "dimension of the one-particle space");
  weyl->add_option("--neg", config.neg, "negative signature of the one-particle space");
  weyl->add_option("--cutoff", config.cutoff, "Fock truncation degree");
  weyl->add_option("--samples", config.samples, "number of sampled labels");
  weyl->add_option("--seed", config.seed, "seed for the sampled labels");
  add_common(app.add_subcommand("gns", "GNS data of a hermitian functional"), true);
  add_common(app.add_subcommand("stinespring", "dilation and Wittstock decomposition"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }
  config.subcommand = app.get_subcommands().front()->get_name();

  try {
    const Report report = run(config);
    deliver_report(report, config);
    for (const Check& check : report.checks)
      std::cerr << (check.pass ? "PASS " : "FAIL ") << config.subcommand << "/" << check.name
                << "  residual=" << check.residual << " threshold=" << check.threshold << "\n";
    return exit_code(report);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace krein::cli
