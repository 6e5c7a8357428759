#include "blaschke/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace blaschke {

namespace {

void validate_upper(std::span<const Complex> zeta) {
  for (const Complex& z : zeta)
    if (!(z.imag() > 0.0))
      throw InvalidHalfPlanePoint("attracting charge must lie in the open upper half-plane");
}

void validate_increasing(std::span<const double> t) {
  for (std::size_t k = 1; k < t.size(); ++k)
    if (!(t[k - 1] < t[k])) throw CoincidentCharges("free charges must be strictly increasing");
}

// The energy and its derivatives are permutation symmetric, so they accept the
// charges in any order but still need them pairwise distinct.
void validate_distinct(std::span<const double> t) {
  for (std::size_t k = 0; k < t.size(); ++k)
    for (std::size_t j = k + 1; j < t.size(); ++j)
      if (std::abs(t[j] - t[k]) < 1e-300)
        throw CoincidentCharges("two free charges coincide");
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double max_abs_v(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

bool strictly_increasing(std::span<const double> t) {
  for (std::size_t k = 1; k < t.size(); ++k)
    if (!(t[k - 1] < t[k])) return false;
  return true;
}

// Squared-weight products prod_{j != k} (t_k - t_j)^2 with a coincidence guard.
std::vector<double> squared_gap_products(std::span<const double> t) {
  const std::size_t m = t.size();
  double scale = 1.0;
  for (double v : t) scale = std::max(scale, std::abs(v));
  std::vector<double> out(m, 1.0);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      const double gap = t[k] - t[j];
      if (std::abs(gap) <= 1e-14 * scale) throw CoincidentCharges();
      out[k] *= gap * gap;
    }
  return out;
}

}  // namespace

RealPolynomial weight_polynomial_P(std::span<const Complex> zeta) {
  validate_upper(zeta);
  std::vector<Complex> roots;
  roots.reserve(2 * zeta.size());
  for (const Complex& z : zeta) {
    roots.push_back(z);
    roots.push_back(std::conj(z));
  }
  return RealPolynomial::from_roots(roots);
}

double weight_polynomial_eval(std::span<const Complex> zeta, double x) {
  double p = 1.0;
  for (const Complex& z : zeta) {
    const double du = x - z.real();
    p *= du * du + z.imag() * z.imag();
  }
  return p;
}

double energy(std::span<const Complex> zeta, std::span<const double> t) {
  validate_distinct(t);
  double w = 0.0;
  for (double tk : t)
    for (const Complex& z : zeta) {
      const double du = tk - z.real();
      w += std::log(du * du + z.imag() * z.imag());
    }
  for (std::size_t k = 0; k < t.size(); ++k)
    for (std::size_t j = k + 1; j < t.size(); ++j) w -= 2.0 * std::log(std::abs(t[j] - t[k]));
  return w;
}

std::vector<double> energy_gradient(std::span<const Complex> zeta, std::span<const double> t) {
  validate_distinct(t);
  const std::size_t m = t.size();
  std::vector<double> g(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    double acc = 0.0;
    for (const Complex& z : zeta) {
      const double du = t[k] - z.real();
      acc += 2.0 * du / (du * du + z.imag() * z.imag());
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      acc -= 2.0 / (t[k] - t[j]);
    }
    g[k] = acc;
  }
  return g;
}

Mat energy_hessian(std::span<const Complex> zeta, std::span<const double> t) {
  validate_distinct(t);
  const std::size_t m = t.size();
  Mat h(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    double diag = 0.0;
    for (const Complex& z : zeta) {
      const double du = t[k] - z.real();
      const double b2 = z.imag() * z.imag();
      const double den = du * du + b2;
      diag += 2.0 * (b2 - du * du) / (den * den);
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      const double gap = t[k] - t[j];
      const double inv2 = 2.0 / (gap * gap);
      diag += inv2;
      h(k, j) = -inv2;
    }
    h(k, k) = diag;
  }
  return h;
}

double equilibrium_residual(std::span<const Complex> zeta, std::span<const double> t) {
  const std::vector<double> g = energy_gradient(zeta, t);
  return max_abs_v(g);
}

namespace {

// One damped Newton pass on the energy, in whatever coordinates the caller
// supplies.  Returns the number of iterations used; `t` is updated in place.
int newton_minimise(std::span<const Complex> zeta, std::vector<double>& t, double tol,
                    int max_iterations, double& final_residual) {
  const std::size_t m = t.size();
  int iter = 0;
  for (; iter < max_iterations; ++iter) {
    const std::vector<double> g = energy_gradient(zeta, t);
    final_residual = max_abs_v(g);
    if (final_residual <= tol) return iter;

    Mat h = energy_hessian(zeta, t);
    std::vector<double> rhs(m);
    for (std::size_t i = 0; i < m; ++i) rhs[i] = -g[i];

    std::vector<double> step;
    bool solved = spd_solve(h, rhs, step, 1e-14);
    if (!solved) {
      // The energy need not be convex far from the minimiser; regularise
      // until the shifted Hessian admits a Cholesky factorisation.
      double ridge = 1e-8 * std::max(max_abs(h), 1.0);
      for (int attempt = 0; attempt < 20 && !solved; ++attempt, ridge *= 10.0) {
        Mat hs = h;
        for (std::size_t i = 0; i < m; ++i) hs(i, i) += ridge;
        solved = spd_solve(hs, rhs, step, 1e-14);
      }
    }
    if (!solved) {
      // Last resort: scaled steepest descent.
      const double s = 1.0 / (1.0 + max_abs_v(g));
      step.assign(m, 0.0);
      for (std::size_t i = 0; i < m; ++i) step[i] = -g[i] * s;
    }

    // Near the minimiser the energy is flat to round-off and an Armijo test
    // on it becomes meaningless noise; once the Newton step is small, accept
    // the full step whenever it reduces the gradient residual.  Quadratic
    // contraction takes over from there.
    if (max_abs_v(step) <= 1e-3 * (1.0 + max_abs_v(t))) {
      std::vector<double> cand(m);
      for (std::size_t i = 0; i < m; ++i) cand[i] = t[i] + step[i];
      if (strictly_increasing(cand) && equilibrium_residual(zeta, cand) < final_residual) {
        t = std::move(cand);
        continue;
      }
    }

    const double w0 = energy(zeta, t);
    const double slope = dot(g, step);
    double alpha = 1.0;
    std::vector<double> cand(m);
    bool accepted = false;
    double accepted_alpha = 0.0;
    std::vector<double> ordered_fallback;
    for (int bt = 0; bt < 60; ++bt, alpha *= 0.5) {
      for (std::size_t i = 0; i < m; ++i) cand[i] = t[i] + alpha * step[i];
      if (!strictly_increasing(cand)) continue;
      if (ordered_fallback.empty()) ordered_fallback = cand;
      const double w = energy(zeta, cand);
      if (std::isfinite(w) && w <= w0 + 1e-4 * alpha * slope) {
        t = cand;
        accepted = true;
        accepted_alpha = alpha;
        break;
      }
    }
    if (!accepted) {
      // The Armijo test can fail near the minimiser purely through round-off
      // in the energy; take the damped step only if it actually lowers the
      // gradient residual, otherwise the iteration has converged as far as
      // the arithmetic allows.
      if (ordered_fallback.empty()) break;  // cannot move without collisions
      if (equilibrium_residual(zeta, ordered_fallback) >= final_residual) break;
      t = ordered_fallback;
      continue;
    }
    // Stop once accepted steps are below round-off resolution.
    const double step_size = accepted_alpha * max_abs_v(step);
    if (step_size <= 1e-15 * (1.0 + max_abs_v(t))) {
      ++iter;
      break;
    }
  }
  final_residual = equilibrium_residual(zeta, t);
  return iter;
}

}  // namespace

ChargeConfigurationInner solve_inner_equilibrium(std::span<const Complex> zeta,
                                                 const EquilibriumOptions& opts) {
  validate_upper(zeta);
  const std::size_t m = zeta.size();
  ChargeConfigurationInner out;
  if (m == 0) return out;

  // Affine normalisation: centre the attractor means, scale the spread to
  // one.  This keeps the Newton iteration well conditioned regardless of
  // where the attractors sit on the line.
  double mean = 0.0;
  double re_lo = zeta[0].real(), re_hi = zeta[0].real();
  for (const Complex& z : zeta) {
    mean += z.real();
    re_lo = std::min(re_lo, z.real());
    re_hi = std::max(re_hi, z.real());
  }
  mean /= static_cast<double>(m);
  double spread = 0.0;
  for (const Complex& z : zeta)
    spread = std::max({spread, std::abs(z.real() - mean), z.imag()});

  std::vector<Complex> zn(m);
  for (std::size_t j = 0; j < m; ++j)
    zn[j] = Complex((zeta[j].real() - mean) / spread, zeta[j].imag() / spread);

  std::vector<double> t(m);
  if (!opts.initial_guess.empty()) {
    if (opts.initial_guess.size() != m)
      throw CoincidentCharges("initial guess has the wrong number of charges");
    validate_increasing(opts.initial_guess);
    for (std::size_t k = 0; k < m; ++k) t[k] = (opts.initial_guess[k] - mean) / spread;
  } else {
    // Start from the attractor abscissae; coincident groups (within 1e-8 of
    // the unit normalised span) are fanned out by increments proportional to
    // their heights so the repulsion term is finite.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&zn](std::size_t a, std::size_t b) { return zn[a].real() < zn[b].real(); });
    for (std::size_t k = 0; k < m; ++k) t[k] = zn[order[k]].real();
    std::size_t lo = 0;
    while (lo < m) {
      std::size_t hi = lo + 1;
      while (hi < m && t[hi] - t[lo] <= 1e-8) ++hi;
      if (hi - lo > 1) {
        double height = 0.0;
        for (std::size_t k = lo; k < hi; ++k) height += zn[order[k]].imag();
        height /= static_cast<double>(hi - lo);
        const double delta = 0.1 + height;
        const double centre = t[lo];
        for (std::size_t k = lo; k < hi; ++k)
          t[k] = centre + delta * (static_cast<double>(k - lo) -
                                   0.5 * static_cast<double>(hi - lo - 1));
      }
      lo = hi;
    }
    std::sort(t.begin(), t.end());
    for (std::size_t k = 1; k < m; ++k)
      if (t[k] - t[k - 1] < 1e-3) t[k] = t[k - 1] + 1e-3;
  }

  // Gradient tolerance in the caller's coordinates; the gradient scales by
  // 1/spread under the affine normalisation, so the threshold handed to the
  // inner solver is tightened by the same factor.
  const double tol = opts.gradient_tol > 0.0 ? opts.gradient_tol : 1e-11 * (1.0 + re_hi - re_lo);
  const double tol_normalised = tol * spread;
  double residual = 0.0;
  const int iters = newton_minimise(zn, t, tol_normalised, opts.max_iterations, residual);

  // Map back and polish briefly in the original coordinates; acceptance is
  // judged there, where the contract lives.
  for (double& v : t) v = mean + spread * v;
  double orig_residual = 0.0;
  newton_minimise(zeta, t, 0.0, 4, orig_residual);
  if (orig_residual > tol) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "equilibrium solve stalled at gradient residual %.3e",
                  orig_residual);
    throw NoConvergence(msg);
  }

  out.t = std::move(t);
  out.gradient_residual = orig_residual;
  out.iterations = iters;
  return out;
}

namespace {

double level_function(std::span<const double> t, std::span<const double> s, double x) {
  double g = x;
  for (std::size_t k = 0; k < t.size(); ++k) g -= s[k] / (x - t[k]);
  return g;
}

double level_function_derivative(std::span<const double> t, std::span<const double> s, double x) {
  double g = 1.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double gap = x - t[k];
    g += s[k] / (gap * gap);
  }
  return g;
}

}  // namespace

ChargeConfigurationOuter extend_equilibrium(std::span<const Complex> zeta,
                                            std::span<const double> t, double x0) {
  validate_upper(zeta);
  validate_increasing(t);
  const std::size_t m = t.size();
  ChargeConfigurationOuter out;
  out.anchor_value = x0;
  if (m == 0) {
    out.x = {x0};
    out.anchor_index = 0;
    return out;
  }
  for (double tk : t)
    if (std::abs(x0 - tk) <= 1e-12 * (1.0 + std::abs(x0)))
      throw AnchorOutOfInterval("anchor coincides with an inner charge");

  const std::vector<double> s = weights_s(zeta, t);
  auto h = [&](double x) { return level_function(t, s, x); };
  auto dh = [&](double x) { return level_function_derivative(t, s, x); };
  const double level = h(x0);

  // The level function increases from -inf to +inf across each of the m+1
  // intervals cut out by the inner charges, so the level set has exactly one
  // point per interval; the anchor's own interval contributes the anchor.
  std::size_t k0 = 0;
  while (k0 < m && t[k0] < x0) ++k0;

  out.x.resize(m + 1);
  out.anchor_index = k0;

  for (std::size_t i = 0; i <= m; ++i) {
    if (i == k0) {
      out.x[i] = x0;
      continue;
    }
    double lo, hi;
    if (i == 0) {
      // March left until the affine term dominates and the sign flips.
      double eps = 1e-10 * (m > 1 ? t[1] - t[0] : 1.0 + std::abs(t[0]));
      hi = t[0] - eps;
      for (int shrink = 0; shrink < 40 && !(h(hi) - level > 0.0); ++shrink) {
        eps /= 16.0;
        hi = t[0] - eps;
      }
      double stepsz = 1.0 + std::abs(t[0] - level);
      lo = t[0] - stepsz;
      for (int grow = 0; grow < 200 && !(h(lo) - level < 0.0); ++grow) {
        stepsz *= 2.0;
        lo = t[0] - stepsz;
      }
    } else if (i == m) {
      double eps = 1e-10 * (m > 1 ? t[m - 1] - t[m - 2] : 1.0 + std::abs(t[m - 1]));
      lo = t[m - 1] + eps;
      for (int shrink = 0; shrink < 40 && !(h(lo) - level < 0.0); ++shrink) {
        eps /= 16.0;
        lo = t[m - 1] + eps;
      }
      double stepsz = 1.0 + std::abs(t[m - 1] - level);
      hi = t[m - 1] + stepsz;
      for (int grow = 0; grow < 200 && !(h(hi) - level > 0.0); ++grow) {
        stepsz *= 2.0;
        hi = t[m - 1] + stepsz;
      }
    } else {
      const double gap = t[i] - t[i - 1];
      double eps = 1e-10 * gap;
      lo = t[i - 1] + eps;
      hi = t[i] - eps;
      for (int shrink = 0; shrink < 40 && !(h(lo) - level < 0.0 && h(hi) - level > 0.0);
           ++shrink) {
        eps /= 16.0;
        lo = t[i - 1] + eps;
        hi = t[i] - eps;
      }
    }
    out.x[i] = bracketed_real_root([&](double x) { return h(x) - level; }, lo, hi, dh);
  }

  return out;
}

std::vector<double> residues_r(std::span<const Complex> zeta, std::span<const double> x) {
  validate_upper(zeta);
  validate_increasing(x);
  const std::vector<double> den = squared_gap_products(x);
  std::vector<double> r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    r[k] = weight_polynomial_eval(zeta, x[k]) / den[k];
  return r;
}

std::vector<double> weights_s(std::span<const Complex> zeta, std::span<const double> t) {
  validate_upper(zeta);
  validate_increasing(t);
  const std::vector<double> den = squared_gap_products(t);
  std::vector<double> s(t.size());
  for (std::size_t k = 0; k < t.size(); ++k)
    s[k] = weight_polynomial_eval(zeta, t[k]) / den[k];
  return s;
}

std::vector<double> residues_r(const ChargeConfigurationOuter& outer, const RealPolynomial& P,
                               double c) {
  validate_increasing(outer.x);
  if (!(c > 0.0)) throw NonPositiveWeight("residue scale must be positive");
  const std::vector<double> den = squared_gap_products(outer.x);
  std::vector<double> r(outer.x.size());
  for (std::size_t k = 0; k < outer.x.size(); ++k) r[k] = c * P(outer.x[k]) / den[k];
  return r;
}

std::vector<double> weights_s(const ChargeConfigurationInner& inner, const RealPolynomial& P,
                              double a) {
  validate_increasing(inner.t);
  if (!(a > 0.0)) throw NonPositiveWeight("weight scale must be positive");
  const std::vector<double> den = squared_gap_products(inner.t);
  std::vector<double> s(inner.t.size());
  for (std::size_t k = 0; k < inner.t.size(); ++k) s[k] = a * P(inner.t[k]) / den[k];
  return s;
}

}  // namespace blaschke
