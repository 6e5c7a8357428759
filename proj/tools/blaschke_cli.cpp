// Command-line front end: JSON in, JSON out, for the Blaschke-product
// pipelines.  Complex numbers travel as [re, im] pairs; plain numbers are
// accepted on input as reals.  Exit codes: 0 success, 1 numerical failure
// (diagnostics emitted), 2 malformed input.

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "blaschke/blaschke.hpp"
#include "blaschke/moments.hpp"

namespace {

using json = nlohmann::ordered_json;
using blaschke::Complex;

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitMalformed = 2;

// Default acceptance thresholds for derived diagnostics; the gradient
// tolerance itself is owned by the equilibrium solver.
constexpr double kRoundtripTol = 1e-8;
constexpr double kOdeTol = 1e-9;

struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

void emit_json(const json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(path);
    if (!out) throw MalformedInput("cannot open output file: " + path);
    out << text;
  }
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex json_to_complex(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw MalformedInput("complex values must be numbers or [re, im] pairs");
}

std::vector<Complex> complex_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw MalformedInput(field + " must be an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const json& item : j) out.push_back(json_to_complex(item));
  return out;
}

std::vector<double> real_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw MalformedInput(field + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& item : j) {
    if (!item.is_number()) throw MalformedInput(field + " must be an array of numbers");
    out.push_back(item.get<double>());
  }
  return out;
}

json complex_array_json(std::span<const Complex> v) {
  json out = json::array();
  for (const Complex& z : v) out.push_back(complex_to_json(z));
  return out;
}

json real_array_json(std::span<const double> v) {
  json out = json::array();
  for (double x : v) out.push_back(x);
  return out;
}

const json& require_field(const json& doc, const std::string& field) {
  if (!doc.is_object() || !doc.contains(field))
    throw MalformedInput("missing required field: " + field);
  return doc.at(field);
}

// Input-shape and value-validation failures are the caller's fault.
bool is_input_error(const blaschke::Error& e) {
  const std::string& c = e.code();
  return c == "InvalidDiscPoint" || c == "InvalidHalfPlanePoint" ||
         c == "InvalidMomentVector" || c == "AnchorOutOfInterval";
}

// Shared option state filled by CLI11 (flags beat BLASCHKE_* environment
// variables, which beat request fields and built-in defaults).
struct CommonOptions {
  std::string input = "-";
  std::string output = "-";
  double tol = 0.0;
  std::uint64_t seed = 0;
  int max_iter = 0;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* max_iter_opt = nullptr;

  void attach(CLI::App* cmd, bool with_input = true) {
    if (with_input) cmd->add_option("--input,-i", input, "input JSON file (default: stdin)");
    cmd->add_option("--output,-o", output, "output JSON file (default: stdout)");
    tol_opt = cmd->add_option("--tol", tol, "gradient tolerance override")
                  ->envname("BLASCHKE_TOL");
    seed_opt = cmd->add_option("--seed", seed, "root-finder seed")->envname("BLASCHKE_SEED");
    max_iter_opt = cmd->add_option("--max-iter", max_iter, "iteration budget")
                       ->envname("BLASCHKE_MAX_ITER");
  }

  blaschke::SolveOptions solve_options(const json* request) const {
    blaschke::SolveOptions opts;
    if (tol_opt && tol_opt->count() > 0) {
      opts.equilibrium.gradient_tol = tol;
    } else if (request && request->contains("tolerances")) {
      const json& t = request->at("tolerances");
      if (!t.is_object()) throw MalformedInput("tolerances must be an object");
      if (t.contains("gradient")) opts.equilibrium.gradient_tol = t.at("gradient").get<double>();
      if (t.contains("roots")) opts.roots.residual_tol = t.at("roots").get<double>();
    }
    if (seed_opt && seed_opt->count() > 0) {
      opts.roots.seed = seed;
    } else if (request && request->contains("seed")) {
      opts.roots.seed = request->at("seed").get<std::uint64_t>();
    }
    if (max_iter_opt && max_iter_opt->count() > 0) opts.equilibrium.max_iterations = max_iter;
    return opts;
  }
};

json failure_document(const blaschke::Error& e) {
  json doc;
  doc["status"] = "failed";
  doc["error"] = {{"code", e.code()}, {"message", e.what()}};
  return doc;
}

// ---------------------------------------------------------------------------
// solve

int cmd_solve(const CommonOptions& common, int samples) {
  const json request = load_json(common.input);
  const std::vector<Complex> xi = complex_list(require_field(request, "critical_points"),
                                               "critical_points");
  if (xi.empty()) throw MalformedInput("critical_points must be nonempty");

  blaschke::Normalization norm = blaschke::Normalization::plus();
  json norm_echo = "plus";
  if (request.contains("normalization")) {
    const json& nj = request.at("normalization");
    if (nj.is_string() && nj.get<std::string>() == "plus") {
      norm = blaschke::Normalization::plus();
    } else if (nj.is_object() && nj.contains("minus") && nj.at("minus").is_number()) {
      norm = blaschke::Normalization::minus(nj.at("minus").get<double>());
      norm_echo = json{{"minus", norm.anchor_x}};
    } else {
      throw MalformedInput("normalization must be \"plus\" or {\"minus\": anchor}");
    }
  }

  const blaschke::SolveOptions opts = common.solve_options(&request);

  blaschke::SolveResult result;
  try {
    result = blaschke::solve_blaschke_full(xi, norm, opts);
  } catch (const blaschke::Error& e) {
    if (is_input_error(e)) throw;
    std::cerr << "error: " << e.what() << "\n";
    emit_json(failure_document(e), common.output);
    return kExitNumerical;
  }

  const bool ok = result.roundtrip_error <= kRoundtripTol && result.ode_residual <= kOdeTol;

  json report;
  report["status"] = ok ? "ok" : "failed";
  report["critical_points"] = complex_array_json(xi);
  report["normalization"] = norm_echo;
  report["blaschke_zeros"] = complex_array_json(result.product.zeros);
  report["constant"] = complex_to_json(result.product.constant);
  report["numerator"] = complex_array_json(result.product.numerator);
  report["denominator"] = complex_array_json(result.product.denominator);
  json halfplane;
  if (norm.kind == blaschke::Normalization::Kind::Plus) {
    halfplane["t"] = real_array_json(result.inner_t);
    halfplane["s"] = real_array_json(result.halfplane.residues);
    halfplane["a"] = result.halfplane.affine_a;
    halfplane["b"] = result.halfplane.affine_b;
  } else {
    halfplane["x"] = real_array_json(result.outer_x);
    halfplane["r"] = real_array_json(result.halfplane.residues);
  }
  report["halfplane"] = halfplane;
  report["van_vleck_R"] = real_array_json(result.van_vleck_R.coeffs());
  report["diagnostics"] = {{"grad_residual", result.gradient_residual},
                           {"ode_residual", result.ode_residual},
                           {"roundtrip_error", result.roundtrip_error},
                           {"iterations", result.iterations}};
  if (samples > 0) {
    json tau = json::array(), arg_b = json::array();
    for (int j = 0; j < samples; ++j) {
      const double angle = 2.0 * std::numbers::pi * j / samples;
      tau.push_back(angle);
      arg_b.push_back(std::arg(result.product(std::polar(1.0, angle))));
    }
    report["boundary_samples"] = {{"tau", tau}, {"arg_b", arg_b}};
  }

  emit_json(report, common.output);
  if (!ok) {
    std::cerr << "error: diagnostics exceed tolerances (roundtrip "
              << result.roundtrip_error << ", ode " << result.ode_residual << ")\n";
    return kExitNumerical;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// equilibrium

int cmd_equilibrium(const CommonOptions& common, const std::string& zeta_path,
                    const std::optional<double>& anchor_value,
                    const std::optional<int>& anchor_index) {
  const json doc = load_json(zeta_path);
  const json& zj = doc.is_object() ? require_field(doc, "zeta") : doc;
  const std::vector<Complex> zeta = complex_list(zj, "zeta");
  if (zeta.empty()) throw MalformedInput("zeta must be nonempty");
  const blaschke::CriticalPointSet cps = blaschke::CriticalPointSet::from_halfplane(zeta);

  blaschke::EquilibriumOptions opts;
  if (common.tol_opt->count() > 0) opts.gradient_tol = common.tol;
  if (common.max_iter_opt->count() > 0) opts.max_iterations = common.max_iter;

  json report;
  try {
    const blaschke::ChargeConfigurationInner inner =
        blaschke::solve_inner_equilibrium(cps.halfplane(), opts);
    const std::vector<double> s = blaschke::weights_s(cps.halfplane(), inner.t);
    report["status"] = "ok";
    report["t"] = real_array_json(inner.t);
    report["s"] = real_array_json(s);
    report["energy"] = blaschke::energy(cps.halfplane(), inner.t);
    report["gradient_residual"] = inner.gradient_residual;
    report["iterations"] = inner.iterations;
    if (anchor_value) {
      const blaschke::ChargeConfigurationOuter outer =
          blaschke::extend_equilibrium(cps.halfplane(), inner.t, *anchor_value);
      if (anchor_index && static_cast<std::size_t>(*anchor_index) != outer.anchor_index + 1)
        throw blaschke::AnchorOutOfInterval("anchor value does not lie in interval " +
                                            std::to_string(*anchor_index));
      const std::vector<double> r = blaschke::residues_r(cps.halfplane(), outer.x);
      report["x"] = real_array_json(outer.x);
      report["r"] = real_array_json(r);
      report["anchor_index"] = outer.anchor_index + 1;  // 1-based position in x
      report["outer_residual"] = blaschke::equilibrium_residual(cps.halfplane(), outer.x);
    }
  } catch (const blaschke::Error& e) {
    if (is_input_error(e)) throw;
    std::cerr << "error: " << e.what() << "\n";
    emit_json(failure_document(e), common.output);
    return kExitNumerical;
  }
  emit_json(report, common.output);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// moments

blaschke::MomentVector parse_moments(const json& doc) {
  const json& mj = doc.is_object() ? require_field(doc, "moments") : doc;
  try {
    return blaschke::MomentVector(real_list(mj, "moments"));
  } catch (const blaschke::Error& e) {
    throw MalformedInput(e.what());
  }
}

int cmd_moments(const CommonOptions& common, const std::string& which) {
  const json doc = load_json(common.input);
  json report;
  try {
    if (which == "nesterov") {
      const blaschke::RealPolynomial p = blaschke::nesterov(parse_moments(doc));
      report["status"] = "ok";
      report["p"] = real_array_json(p.coeffs());
    } else if (which == "inverse") {
      const std::vector<Complex> zeta =
          complex_list(require_field(doc, "zeta"), "zeta");
      const double leading = doc.contains("leading") ? doc.at("leading").get<double>() : 1.0;
      const blaschke::CriticalPointSet cps = blaschke::CriticalPointSet::from_halfplane(zeta);
      blaschke::EquilibriumOptions opts;
      if (common.tol_opt->count() > 0) opts.gradient_tol = common.tol;
      if (common.max_iter_opt->count() > 0) opts.max_iterations = common.max_iter;
      const blaschke::MomentVector c = blaschke::inverse_nesterov(cps, leading, opts);
      report["status"] = "ok";
      report["moments"] = real_array_json(c.c);
    } else if (which == "lower") {
      blaschke::RootFindOptions ropts;
      if (common.seed_opt->count() > 0) ropts.seed = common.seed;
      const blaschke::CanonicalRepresentation rep =
          blaschke::canonical_lower(parse_moments(doc), ropts);
      report["status"] = "ok";
      report["t"] = real_array_json(rep.roots);
      report["sigma"] = real_array_json(rep.weights);
      report["lambda"] = rep.mass_at_infinity;
    } else if (which == "upper") {
      const double anchor = require_field(doc, "anchor").get<double>();
      blaschke::RootFindOptions ropts;
      if (common.seed_opt->count() > 0) ropts.seed = common.seed;
      const blaschke::CanonicalRepresentation rep =
          blaschke::canonical_upper(parse_moments(doc), anchor, ropts);
      report["status"] = "ok";
      report["x"] = real_array_json(rep.roots);
      report["rho"] = real_array_json(rep.weights);
    } else {  // factorize
      const blaschke::MomentVector c = parse_moments(doc);
      blaschke::CanonicalRepresentation rep;
      rep.roots = real_list(require_field(doc, "roots"), "roots");
      rep.weights = real_list(require_field(doc, "weights"), "weights");
      double deviation = 0.0;
      try {
        deviation = blaschke::vandermonde_factorization_check(c, rep);
      } catch (const std::invalid_argument& e) {
        throw MalformedInput(e.what());
      }
      const double threshold =
          common.tol_opt->count() > 0 ? common.tol : 1e-9 * std::max(c.max_abs(), 1e-300);
      report["status"] = deviation <= threshold ? "ok" : "failed";
      report["deviation"] = deviation;
      report["threshold"] = threshold;
      emit_json(report, common.output);
      if (deviation > threshold) {
        std::cerr << "error: factorization deviation " << deviation << " exceeds " << threshold
                  << "\n";
        return kExitNumerical;
      }
      return kExitOk;
    }
  } catch (const blaschke::Error& e) {
    if (is_input_error(e)) throw;
    std::cerr << "error: " << e.what() << "\n";
    emit_json(failure_document(e), common.output);
    return kExitNumerical;
  }
  emit_json(report, common.output);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const CommonOptions& common) {
  const json doc = load_json(common.input);
  const std::vector<Complex> zeros =
      complex_list(require_field(doc, "blaschke_zeros"), "blaschke_zeros");
  const Complex constant = json_to_complex(require_field(doc, "constant"));
  const std::vector<Complex> claimed =
      complex_list(require_field(doc, "critical_points"), "critical_points");

  blaschke::RootFindOptions ropts;
  if (common.seed_opt->count() > 0) ropts.seed = common.seed;

  json report;
  try {
    const blaschke::BlaschkeProduct product = blaschke::product_from_zeros(zeros, constant);
    const std::vector<blaschke::DiscPoint> recovered =
        blaschke::critical_points_of_blaschke(product, ropts);
    std::vector<Complex> recovered_values;
    recovered_values.reserve(recovered.size());
    for (const blaschke::DiscPoint& p : recovered) recovered_values.push_back(p.value());
    const blaschke::CriticalPointSet cps = blaschke::CriticalPointSet::from_disc(claimed);
    const double roundtrip = blaschke::hausdorff_distance(recovered_values, cps.disc());

    // Re-derive the differential-equation residual from the reported
    // half-plane charge positions, whichever family the report carries.
    double grad_residual = 0.0;
    double ode_residual = 0.0;
    if (doc.contains("halfplane")) {
      const json& hp = doc.at("halfplane");
      const blaschke::RealPolynomial P = blaschke::weight_polynomial_P(cps.halfplane());
      std::vector<double> charges;
      if (hp.contains("t"))
        charges = real_list(hp.at("t"), "halfplane.t");
      else if (hp.contains("x"))
        charges = real_list(hp.at("x"), "halfplane.x");
      if (!charges.empty()) {
        grad_residual = blaschke::equilibrium_residual(cps.halfplane(), charges);
        std::vector<Complex> lifted(charges.begin(), charges.end());
        const blaschke::RealPolynomial Y = blaschke::RealPolynomial::from_roots(lifted);
        const blaschke::RealPolynomial R = blaschke::van_vleck_single(P, Y);
        ode_residual = blaschke::lame_relative_residual(P, R, Y);
      }
    }

    const double roundtrip_tol = common.tol_opt->count() > 0 ? common.tol : kRoundtripTol;
    const bool ok = roundtrip <= roundtrip_tol && ode_residual <= kOdeTol;
    report["status"] = ok ? "ok" : "failed";
    report["roundtrip_error"] = roundtrip;
    report["grad_residual"] = grad_residual;
    report["ode_residual"] = ode_residual;
    report["recovered_critical_points"] = complex_array_json(recovered_values);
    emit_json(report, common.output);
    if (!ok) {
      std::cerr << "error: verification failed (roundtrip " << roundtrip << ", ode "
                << ode_residual << ")\n";
      return kExitNumerical;
    }
  } catch (const blaschke::Error& e) {
    if (is_input_error(e)) throw;
    std::cerr << "error: " << e.what() << "\n";
    emit_json(failure_document(e), common.output);
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-n Blaschke products from n-1 prescribed critical points"};
  app.require_subcommand(1);

  CLI::App* solve = app.add_subcommand("solve", "solve for the Blaschke product");
  CommonOptions solve_opts;
  solve_opts.attach(solve);
  int samples = 0;
  solve->add_option("--samples", samples, "emit this many boundary argument samples");

  CLI::App* equi = app.add_subcommand("equilibrium", "inner/outer charge equilibrium");
  CommonOptions equi_opts;
  equi_opts.attach(equi, /*with_input=*/false);
  std::string zeta_path = "-";
  equi->add_option("--zeta", zeta_path, "JSON file with the attracting charges")->required();
  std::optional<double> anchor_value;
  std::optional<int> anchor_index;
  CLI::Option* av = equi->add_option("--anchor-value", anchor_value,
                                     "extend through this outer position");
  equi->add_option("--anchor-index", anchor_index, "1-based interval check for the anchor")
      ->needs(av);

  CLI::App* moments = app.add_subcommand("moments", "truncated moment-problem tools");
  moments->require_subcommand(1);
  std::vector<std::pair<CLI::App*, CommonOptions>> moment_cmds;
  moment_cmds.reserve(5);
  for (const char* name : {"nesterov", "inverse", "lower", "upper", "factorize"}) {
    CLI::App* sub = moments->add_subcommand(name);
    moment_cmds.emplace_back(sub, CommonOptions{});
  }
  for (auto& [sub, opts] : moment_cmds) opts.attach(sub);

  CLI::App* verify = app.add_subcommand("verify", "re-check a solve report");
  CommonOptions verify_opts;
  verify_opts.attach(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_opts, samples);
    if (equi->parsed()) return cmd_equilibrium(equi_opts, zeta_path, anchor_value, anchor_index);
    if (moments->parsed()) {
      for (auto& [sub, opts] : moment_cmds)
        if (sub->parsed()) return cmd_moments(opts, sub->get_name());
    }
    if (verify->parsed()) return cmd_verify(verify_opts);
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const blaschke::Error& e) {
    if (is_input_error(e)) {
      std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
      return kExitMalformed;
    }
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return kExitNumerical;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitOk;
}
