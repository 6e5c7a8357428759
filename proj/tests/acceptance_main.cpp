// Acceptance suite: one line per criterion, PASS/FAIL, exit code counts the
// failures.  The first argument is the path to the command-line binary.
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "blaschke/blaschke.hpp"
#include "blaschke/moments.hpp"

using namespace blaschke;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Complex> random_disc_points(std::mt19937_64& rng, int m, double rmax = 0.95) {
  std::uniform_real_distribution<double> radius(0.0, rmax), angle(0.0, 2 * std::numbers::pi);
  std::vector<Complex> xs(m);
  for (Complex& x : xs) x = std::polar(radius(rng), angle(rng));
  return xs;
}

Complex moebius_through(Complex w, const std::array<Complex, 3>& ws,
                        const std::array<Complex, 3>& vs) {
  const Complex q = ((w - ws[0]) * (ws[1] - ws[2])) / ((w - ws[2]) * (ws[1] - ws[0]));
  return (vs[0] * (vs[1] - vs[2]) - q * vs[2] * (vs[1] - vs[0])) /
         ((vs[1] - vs[2]) - q * (vs[1] - vs[0]));
}

struct Instance {
  std::vector<Complex> xs;       // prescribed critical points (disc)
  std::vector<Complex> zeta;     // their half-plane lifts
  std::vector<double> t;         // inner equilibrium
  BlaschkeProduct product;
};

// ---------------------------------------------------------------- criterion 1
bool monomial_closed_form() {
  const auto start = Clock::now();
  for (int n = 2; n <= 10; ++n) {
    const std::vector<Complex> xs(n - 1, Complex(0.0, 0.0));
    const SolveResult res = solve_blaschke_full(xs);
    if (res.product.degree() != static_cast<std::size_t>(n)) return false;
    // Coefficientwise comparison against z^n.
    for (std::size_t k = 0; k < res.product.numerator.size(); ++k) {
      const Complex want_num = (k == static_cast<std::size_t>(n)) ? 1.0 : 0.0;
      const Complex want_den = (k == 0) ? 1.0 : 0.0;
      if (std::abs(res.product.numerator[k] - want_num) > 1e-10) return false;
      if (std::abs(res.product.denominator[k] - want_den) > 1e-10) return false;
    }
    // Charge positions at the Cayley images of the n-th roots of unity.
    for (int k = 1; k < n; ++k) {
      const double want = -1.0 / std::tan(std::numbers::pi * k / n);
      if (std::abs(res.inner_t[k - 1] - want) > 1e-10) return false;
    }
  }
  return seconds_since(start) < 1.0;
}

// ---------------------------------------------------------------- criterion 2
bool anchored_pair_circle() {
  const auto start = Clock::now();
  const std::vector<Complex> zeta{Complex(0.0, 1.0)};
  const auto inner = solve_inner_equilibrium(zeta);
  for (int k = 0; k < 20; ++k) {
    const double x1 = -5.0 + (5.0 - 0.01) * k / 19.0;
    const auto outer = extend_equilibrium(zeta, inner.t, x1);
    if (outer.x.size() != 2) return false;
    const double a = outer.x[0], b = outer.x[1];
    const double lhs = (a * a + 1.0) + (b * b + 1.0);  // |x - i|^2 for real x
    const double rhs = (a - b) * (a - b);
    if (std::abs(lhs - rhs) > 1e-10 * (1.0 + std::abs(rhs))) return false;
  }
  return seconds_since(start) < 1.0;
}

// ---------------------------------------------------------------- criterion 3
bool round_trip(std::vector<Instance>& out) {
  const auto start = Clock::now();
  std::mt19937_64 rng(2026);
  out.clear();
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);  // degree between 2 and 10
    Instance inst;
    inst.xs = random_disc_points(rng, n - 1);
    if (trial < 10 && n >= 3) inst.xs[1] = inst.xs[0];  // repeated critical point
    const SolveResult res = solve_blaschke_full(inst.xs);
    inst.zeta = lift_critical_points(inst.xs);
    inst.t = res.inner_t;
    inst.product = res.product;
    const auto cps = critical_points_of_blaschke(res.product);
    std::vector<Complex> rec(cps.size());
    for (std::size_t k = 0; k < cps.size(); ++k) rec[k] = cps[k].value();
    if (hausdorff_distance(rec, inst.xs) > 1e-8) return false;
    out.push_back(std::move(inst));
  }
  return seconds_since(start) < 30.0;
}

// ---------------------------------------------------------------- criterion 4
bool node_polynomial_identities(const std::vector<Instance>& instances) {
  for (const Instance& inst : instances) {
    const auto& zeta = inst.zeta;
    const auto& t = inst.t;
    const auto outer = extend_equilibrium(zeta, t, t.front() - 1.0);
    const auto pair = stieltjes_pair(t, outer.x);
    const RealPolynomial P = weight_polynomial_P(zeta);
    const RealPolynomial R = van_vleck(pair.Q, pair.S);

    if (lame_relative_residual(P, R, pair.Q) > 1e-9) return false;
    if (lame_relative_residual(P, R, pair.S) > 1e-9) return false;
    if (rel_coeff_distance(wronskian_P(pair.Q, pair.S), P) > 1e-9) return false;

    // Pole-cancellation identity of the outer pole form.
    const auto r = residues_r(zeta, outer.x);
    double c = 0.0;
    for (double v : r) c += v;
    PartialFractionForm f;
    f.poles = outer.x;
    f.residues = r;
    if (check_identity_cS(pair.Q, pair.S, f, c) > 1e-9) return false;

    // Reconstruction of the weight from either charge family.
    const LagrangeBasis lx(outer.x);
    RealPolynomial sum_outer;
    for (std::size_t k = 0; k < outer.x.size(); ++k) {
      const RealPolynomial& lk = lx.basis_polys()[k];
      sum_outer = sum_outer + P(outer.x[k]) * (lk * lk);
    }
    if (rel_coeff_distance(sum_outer, P) > 1e-9) return false;

    const LagrangeBasis lt(t);
    RealPolynomial sum_inner = pair.S * pair.S;
    for (std::size_t k = 0; k < t.size(); ++k) {
      const RealPolynomial& lk = lt.basis_polys()[k];
      sum_inner = sum_inner + P(t[k]) * (lk * lk);
    }
    if (rel_coeff_distance(sum_inner, P) > 1e-9) return false;
  }
  return true;
}

// ---------------------------------------------------------------- criterion 5
bool gradient_oracle() {
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.1, 2.0), pos(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 7);  // up to 7 free charges
    std::vector<Complex> zeta(m);
    for (Complex& z : zeta) z = Complex(re(rng), im(rng));
    std::vector<double> t(m);
    for (double& v : t) v = pos(rng);
    std::sort(t.begin(), t.end());
    for (int k = 1; k < m; ++k) t[k] = std::max(t[k], t[k - 1] + 0.15);
    const auto g = energy_gradient(zeta, t);
    for (int k = 0; k < m; ++k) {
      const double h = 1e-6 * (1.0 + std::abs(t[k]));
      auto tp = t, tm = t;
      tp[k] += h;
      tm[k] -= h;
      const double fd = (energy(zeta, tp) - energy(zeta, tm)) / (2.0 * h);
      if (std::abs(fd - g[k]) > 1e-6 * (1.0 + std::abs(g[k]))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- criterion 6
bool multistart_uniqueness() {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> re(-1.5, 1.5), im(0.15, 1.5);
  for (int instance = 0; instance < 10; ++instance) {
    const int m = 2 + static_cast<int>(rng() % 4);
    std::vector<Complex> zeta(m);
    for (Complex& z : zeta) z = Complex(re(rng), im(rng));
    const auto reference = solve_inner_equilibrium(zeta);

    std::uniform_real_distribution<double> start(-4.0, 4.0);
    for (int ms = 0; ms < 10; ++ms) {
      EquilibriumOptions opts;
      opts.initial_guess.resize(m);
      for (double& v : opts.initial_guess) v = start(rng);
      std::sort(opts.initial_guess.begin(), opts.initial_guess.end());
      for (int k = 1; k < m; ++k)
        opts.initial_guess[k] =
            std::max(opts.initial_guess[k], opts.initial_guess[k - 1] + 0.05);
      const auto sol = solve_inner_equilibrium(zeta, opts);
      for (int k = 0; k < m; ++k)
        if (std::abs(sol.t[k] - reference.t[k]) > 1e-8) return false;
    }

    const double w0 = energy(zeta, reference.t);
    std::uniform_real_distribution<double> bump(-0.4, 0.4);
    int tried = 0;
    while (tried < 100) {
      auto cand = reference.t;
      for (double& v : cand) v += bump(rng);
      std::sort(cand.begin(), cand.end());
      bool feasible = true;
      for (int k = 1; k < m; ++k)
        if (cand[k] - cand[k - 1] < 1e-8) feasible = false;
      if (!feasible) continue;
      ++tried;
      if (energy(zeta, cand) < w0 - 1e-12) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- criterion 7
bool moment_formulation_agrees(std::vector<std::vector<Complex>>& sets_out) {
  std::mt19937_64 rng(707);
  sets_out.clear();
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);  // degree between 2 and 8
    const auto xs = random_disc_points(rng, n - 1, 0.9);
    const auto cps = CriticalPointSet::from_disc(xs);
    const double leading = (trial % 2 == 0) ? 1.0 : 0.5 + (trial % 5);

    const MomentVector c = inverse_nesterov(cps, leading);
    const RealPolynomial p = nesterov(c);
    const RealPolynomial want = leading * weight_polynomial_P(cps.halfplane());
    if (rel_coeff_distance(p, want) > 1e-8) return false;

    const auto inner = solve_inner_equilibrium(cps.halfplane());
    const auto lower = canonical_lower(c);
    if (lower.roots.size() != inner.t.size()) return false;
    for (std::size_t k = 0; k < inner.t.size(); ++k) {
      if (std::abs(lower.roots[k] - inner.t[k]) > 1e-8 * (1.0 + std::abs(inner.t[k])))
        return false;
      if (std::abs(lower.weights[k] - 1.0 / p(inner.t[k])) > 1e-8) return false;
    }
    if (std::abs(lower.mass_at_infinity - 1.0 / p.leading()) > 1e-8) return false;

    const double anchor = inner.t.front() - 1.0;
    const auto outer = extend_equilibrium(cps.halfplane(), inner.t, anchor);
    const auto upper = canonical_upper(c, anchor);
    if (upper.roots.size() != outer.x.size()) return false;
    for (std::size_t k = 0; k < outer.x.size(); ++k) {
      if (std::abs(upper.roots[k] - outer.x[k]) > 1e-8 * (1.0 + std::abs(outer.x[k])))
        return false;
      if (std::abs(upper.weights[k] - 1.0 / p(outer.x[k])) > 1e-8) return false;
    }
    sets_out.push_back(xs);
  }
  return true;
}

// ---------------------------------------------------------------- criterion 8
bool vandermonde_factorization(const std::vector<std::vector<Complex>>& sets) {
  std::mt19937_64 rng(808);
  for (const auto& xs : sets) {
    const auto cps = CriticalPointSet::from_disc(xs);
    const MomentVector c = inverse_nesterov(cps, 1.0);
    const auto inner = solve_inner_equilibrium(cps.halfplane());
    const auto upper = canonical_upper(c, inner.t.front() - 1.0);
    if (vandermonde_factorization_check(c, upper) > 1e-9 * c.max_abs()) return false;

    CanonicalRepresentation perturbed = upper;
    perturbed.weights[rng() % perturbed.weights.size()] += 0.1;
    if (vandermonde_factorization_check(c, perturbed) <= 1e-2) return false;
  }
  return true;
}

// ---------------------------------------------------------------- criterion 9
bool automorphism_uniqueness() {
  std::mt19937_64 rng(909);
  std::uniform_real_distribution<double> radius(0.0, 0.9), angle(0.0, 2 * std::numbers::pi);
  for (int instance = 0; instance < 10; ++instance) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto xs = random_disc_points(rng, n - 1, 0.8);
    const SolveResult plus = solve_blaschke_full(xs);
    const SolveResult minus =
        solve_blaschke_full(xs, Normalization::minus(plus.inner_t.front() - 1.0));

    const std::array<Complex, 3> base{Complex(0.0, 0.0), Complex(0.45, 0.1),
                                      Complex(-0.2, 0.35)};
    std::array<Complex, 3> ws, vs;
    for (int k = 0; k < 3; ++k) {
      ws[k] = plus.product(base[k]);
      vs[k] = minus.product(base[k]);
    }
    for (int k = 0; k < 50; ++k) {
      // Alternate interior and boundary samples.
      const Complex z = (k % 2 == 0) ? std::polar(radius(rng), angle(rng))
                                     : std::polar(1.0, angle(rng));
      const Complex expect = moebius_through(plus.product(z), ws, vs);
      if (std::abs(minus.product(z) - expect) > 1e-8) return false;
    }
  }
  return true;
}

// --------------------------------------------------------------- criterion 10
struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& bin, const std::string& args) {
  const std::string cmd = "\"" + bin + "\" " + args + " > acc_stdout.json 2> acc_stderr.txt";
  const int status = std::system(cmd.c_str());
  CliRun res;
  res.exit_code = WEXITSTATUS(status);
  std::ifstream f("acc_stdout.json");
  std::stringstream ss;
  ss << f.rdbuf();
  res.out = ss.str();
  return res;
}

bool cli_contract(const std::string& bin) {
  if (bin.empty()) return false;
  {
    std::ofstream("acc_ok.json") << R"({"critical_points": [[0,0],[0,0]]})";
    if (run_cli(bin, "solve --input acc_ok.json").exit_code != 0) return false;
  }
  {
    std::ofstream("acc_numfail.json") << R"({"moments": [1, 2, 3]})";
    if (run_cli(bin, "moments nesterov --input acc_numfail.json").exit_code != 1) return false;
  }
  {
    std::ofstream("acc_bad.json") << "{ this is not json";
    if (run_cli(bin, "solve --input acc_bad.json").exit_code != 2) return false;
  }
  {
    std::ofstream("acc_det.json")
        << R"({"critical_points": [[0.25,0.33],[-0.4,0.1],[0.05,-0.52]]})";
    const CliRun a = run_cli(bin, "solve --input acc_det.json --seed 7");
    const CliRun b = run_cli(bin, "solve --input acc_det.json --seed 7");
    if (a.exit_code != 0 || b.exit_code != 0) return false;
    if (a.out != b.out || a.out.empty()) return false;
  }
  return true;
}

void report(int number, bool ok, const char* description, int& failures) {
  std::printf("%s %d. %s\n", ok ? "PASS" : "FAIL", number, description);
  if (!ok) ++failures;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli_bin = argc > 1 ? argv[1] : "";
  int failures = 0;

  report(1, monomial_closed_form(),
         "origin-prescribed critical points give the monomial product and the "
         "closed-form charge positions, under one second",
         failures);
  report(2, anchored_pair_circle(),
         "anchored two-charge extensions for a single attractor satisfy the "
         "right-angle circle relation across twenty anchors, under one second",
         failures);

  std::vector<Instance> instances;
  report(3, round_trip(instances),
         "fifty random instances, repeats included, recover their prescribed "
         "critical points within 1e-8, under thirty seconds",
         failures);
  report(4, !instances.empty() && node_polynomial_identities(instances),
         "differential-equation, Wronskian, pole-cancellation and "
         "reconstruction identities hold on every round-trip instance",
         failures);
  report(5, gradient_oracle(),
         "analytic energy gradient matches central differences on one hundred "
         "random configurations",
         failures);
  report(6, multistart_uniqueness(),
         "ten random starts per instance reach one minimiser whose energy "
         "undercuts one hundred feasible perturbations",
         failures);

  std::vector<std::vector<Complex>> moment_sets;
  report(7, moment_formulation_agrees(moment_sets),
         "moment-problem representations reproduce the electrostatic "
         "positions, weights and escaping mass on twenty instances",
         failures);
  report(8, !moment_sets.empty() && vandermonde_factorization(moment_sets),
         "Hankel matrices factor through the upper representation, and "
         "perturbed weights are detected",
         failures);
  report(9, automorphism_uniqueness(),
         "the two boundary conventions differ by a fitted disc automorphism "
         "on fifty samples per instance",
         failures);
  report(10, cli_contract(cli_bin),
         "command-line output is byte-identical under a fixed seed and the "
         "exit codes distinguish success, numerical failure and bad input",
         failures);

  return failures;
}
