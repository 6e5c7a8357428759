#include "blaschke/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace blaschke {

namespace {

constexpr Complex kI{0.0, 1.0};

void sort_points(std::vector<Complex>& pts) {
  std::sort(pts.begin(), pts.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

BlaschkeProduct finish_product(std::vector<Complex> num, std::vector<Complex> den, double b1,
                               std::size_t n, const RootFindOptions& opts) {
  double scale = 0.0;
  for (const Complex& c : num) scale = std::max(scale, std::abs(c));
  for (const Complex& c : den) scale = std::max(scale, std::abs(c));
  if (scale <= 0.0) throw DegenerateLeadingCoefficient("vanishing rational representation");
  for (Complex& c : num) c /= scale;
  for (Complex& c : den) c /= scale;

  std::vector<Complex> num_t = cpoly_trim(num, 1e-13);
  if (num_t.size() != n + 1)
    throw ZeroOutsideDisc("numerator degree dropped below the product degree");

  std::vector<Complex> zeros = polynomial_roots(num_t, opts);
  for (const Complex& a : zeros)
    if (std::abs(a) >= 1.0 - 1e-12)
      throw ZeroOutsideDisc("extracted zero of modulus " + std::to_string(std::abs(a)));
  sort_points(zeros);

  Complex c(b1, 0.0);
  for (const Complex& a : zeros) c *= (1.0 - std::conj(a)) / (1.0 - a);
  c /= std::abs(c);

  return product_from_zeros(zeros, c);
}

}  // namespace

Complex BlaschkeProduct::operator()(Complex z) const {
  Complex v = constant;
  for (const Complex& a : zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

BlaschkeProduct product_from_zeros(std::span<const Complex> zeros, Complex constant) {
  if (std::abs(std::abs(constant) - 1.0) > 1e-12)
    throw DegenerateLeadingCoefficient("leading constant must be unimodular");
  BlaschkeProduct b;
  b.zeros.assign(zeros.begin(), zeros.end());
  for (const Complex& a : b.zeros)
    if (!(std::abs(a) < 1.0)) throw ZeroOutsideDisc();
  b.constant = constant;

  const std::size_t n = b.zeros.size();
  std::vector<Complex> num{constant};
  std::vector<Complex> den{Complex(1.0)};
  for (const Complex& a : b.zeros) {
    const Complex top[] = {-a, Complex(1.0)};
    const Complex bot[] = {Complex(1.0), -std::conj(a)};
    num = cpoly_mul(num, top);
    den = cpoly_mul(den, bot);
  }
  den.resize(n + 1, Complex(0.0));
  b.numerator = std::move(num);
  b.denominator = std::move(den);
  return b;
}

PartialFractionForm assemble_g(const ChargeConfigurationInner& inner, std::span<const double> s,
                               double a, double b) {
  if (!(a > 0.0)) throw NonPositiveWeight("slope of a g-form must be positive");
  PartialFractionForm g;
  g.affine_a = a;
  g.affine_b = b;
  g.poles = inner.t;
  g.residues.assign(s.begin(), s.end());
  g.validate();
  return g;
}

PartialFractionForm assemble_f(const ChargeConfigurationOuter& outer, std::span<const double> r) {
  PartialFractionForm f;
  f.affine_a = 0.0;
  f.affine_b = 0.0;
  f.poles = outer.x;
  f.residues.assign(r.begin(), r.end());
  f.validate();
  return f;
}

namespace {

// Conjugate the half-plane form by the Cayley map; when (mu, d) describes the
// affine chart w = mu w' + d the form lives in, additionally precompose with
// the disc automorphism that undoes the chart, so the result is the product
// belonging to the original coordinates.
BlaschkeProduct halfplane_to_disc_chart(const PartialFractionForm& h, double mu, double d,
                                        const RootFindOptions& opts) {
  h.validate();
  auto [numer, denom] = h.to_rational();
  const std::size_t D = std::max(numer.degree(), denom.degree());

  const std::vector<Complex> cn =
      compose_moebius_cleared(std::span<const double>(numer.coeffs()), D, kI, kI,
                              Complex(-1.0), Complex(1.0));
  const std::vector<Complex> cm =
      compose_moebius_cleared(std::span<const double>(denom.coeffs()), D, kI, kI,
                              Complex(-1.0), Complex(1.0));

  std::vector<Complex> num(D + 1), den(D + 1);
  for (std::size_t k = 0; k <= D; ++k) {
    num[k] = cn[k] - kI * cm[k];
    den[k] = cn[k] + kI * cm[k];
  }

  if (!(mu == 1.0 && d == 0.0)) {
    const Complex p(d, 1.0 + mu), q(-d, 1.0 - mu), r(d, 1.0 - mu), s(-d, 1.0 + mu);
    num = compose_moebius_cleared(std::span<const Complex>(num), D, p, q, r, s);
    den = compose_moebius_cleared(std::span<const Complex>(den), D, p, q, r, s);
  }

  return finish_product(std::move(num), std::move(den), h.affine_a > 0.0 ? 1.0 : -1.0, D, opts);
}

}  // namespace

BlaschkeProduct halfplane_to_disc(const PartialFractionForm& h, const RootFindOptions& opts) {
  return halfplane_to_disc_chart(h, 1.0, 0.0, opts);
}

std::vector<DiscPoint> critical_points_of_blaschke(const BlaschkeProduct& b,
                                                   const RootFindOptions& opts) {
  const std::size_t n = b.degree();
  if (n <= 1) return {};

  const std::vector<Complex> dn = cpoly_derivative(b.numerator);
  const std::vector<Complex> dm = cpoly_derivative(b.denominator);
  const std::vector<Complex> left = cpoly_mul(dn, b.denominator);
  const std::vector<Complex> right = cpoly_mul(b.numerator, dm);
  std::vector<Complex> w(std::max(left.size(), right.size()), Complex(0.0));
  for (std::size_t k = 0; k < left.size(); ++k) w[k] += left[k];
  for (std::size_t k = 0; k < right.size(); ++k) w[k] -= right[k];
  w = cpoly_trim(std::move(w), 1e-13);

  std::vector<Complex> roots = polynomial_roots(w, opts);
  std::vector<Complex> inside;
  for (const Complex& z : roots)
    if (std::abs(z) < 1.0) inside.push_back(z);
  if (inside.size() != n - 1)
    throw WrongCriticalCount("found " + std::to_string(inside.size()) +
                             " critical points in the disc, expected " + std::to_string(n - 1));
  sort_points(inside);

  std::vector<DiscPoint> out;
  out.reserve(inside.size());
  for (const Complex& z : inside) out.emplace_back(z);
  return out;
}

double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b) {
  auto directed = [](std::span<const Complex> from, std::span<const Complex> to) {
    double worst = 0.0;
    for (const Complex& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Complex& q : to) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  return std::max(directed(a, b), directed(b, a));
}

SolveResult solve_blaschke_full(std::span<const Complex> critical_points,
                                const Normalization& normalization, const SolveOptions& opts) {
  const CriticalPointSet cps = CriticalPointSet::from_disc(critical_points);
  const std::vector<Complex>& zeta = cps.halfplane();
  const std::size_t m = cps.count();
  const std::size_t n = m + 1;

  // Work in an affinely normalised chart w' = (w - d)/mu chosen so the
  // attractors have zero mean abscissa and unit spread; the chart is undone
  // inside the disc by a single exact Moebius precomposition.  All reported
  // quantities live in the original chart.
  double d = 0.0, mu = 1.0;
  if (m > 0) {
    for (const Complex& z : zeta) d += z.real();
    d /= static_cast<double>(m);
    mu = 0.0;
    for (const Complex& z : zeta) mu = std::max({mu, std::abs(z.real() - d), z.imag()});
  }
  std::vector<Complex> zn(m);
  for (std::size_t j = 0; j < m; ++j)
    zn[j] = Complex((zeta[j].real() - d) / mu, zeta[j].imag() / mu);

  ChargeConfigurationInner inner_n = solve_inner_equilibrium(zn, opts.equilibrium);

  SolveResult out;
  out.iterations = inner_n.iterations;
  out.inner_t.resize(m);
  for (std::size_t k = 0; k < m; ++k) out.inner_t[k] = mu * inner_n.t[k] + d;
  out.gradient_residual = m > 0 ? equilibrium_residual(zeta, out.inner_t) : 0.0;

  const RealPolynomial P = weight_polynomial_P(zeta);

  if (normalization.kind == Normalization::Kind::Plus) {
    const std::vector<double> sn = weights_s(zn, inner_n.t);
    PartialFractionForm g0;
    g0.affine_a = 1.0;
    g0.affine_b = 0.0;
    g0.poles = inner_n.t;
    g0.residues = sn;
    // Pin the product at the origin: demand g(i) = i in the original chart,
    // which reads g0(w*) = i at the chart image w* of i.
    const Complex wstar((0.0 - d) / mu, 1.0 / mu);
    const Complex gamma = g0(wstar);
    const double alpha = 1.0 / gamma.imag();
    const double beta = -alpha * gamma.real();

    PartialFractionForm ghat = g0;
    ghat.affine_a = alpha;
    ghat.affine_b = beta;
    for (double& sk : ghat.residues) sk *= alpha;
    out.product = halfplane_to_disc_chart(ghat, mu, d, opts.roots);

    ChargeConfigurationInner inner_orig;
    inner_orig.t = out.inner_t;
    std::vector<double> s_orig(m);
    for (std::size_t k = 0; k < m; ++k) s_orig[k] = alpha * mu * sn[k];
    out.halfplane = assemble_g(inner_orig, s_orig, alpha / mu, beta - alpha * d / mu);

    const RealPolynomial S = RealPolynomial::from_roots(
        std::vector<Complex>(out.inner_t.begin(), out.inner_t.end()));
    out.van_vleck_R = van_vleck_single(P, S);
    out.ode_residual = m > 0 ? lame_relative_residual(P, out.van_vleck_R, S) : 0.0;
  } else {
    const double x0 = normalization.anchor_x;
    const double x0n = (x0 - d) / mu;
    ChargeConfigurationOuter outer_n = extend_equilibrium(zn, inner_n.t, x0n);

    std::vector<double> rn = residues_r(zn, outer_n.x);
    PartialFractionForm fhat;
    fhat.poles = outer_n.x;
    fhat.residues.resize(n);
    for (std::size_t k = 0; k < n; ++k) fhat.residues[k] = rn[k] / mu;
    out.product = halfplane_to_disc_chart(fhat, mu, d, opts.roots);

    ChargeConfigurationOuter outer_orig;
    outer_orig.x.resize(n);
    for (std::size_t k = 0; k < n; ++k) outer_orig.x[k] = mu * outer_n.x[k] + d;
    outer_orig.x[outer_n.anchor_index] = x0;
    outer_orig.anchor_index = outer_n.anchor_index;
    outer_orig.anchor_value = x0;
    out.outer_x = outer_orig.x;
    out.halfplane = assemble_f(outer_orig, rn);

    const StieltjesPair pair = stieltjes_pair(out.inner_t, out.outer_x);
    out.van_vleck_R = van_vleck(pair.Q, pair.S);
    out.ode_residual = std::max(lame_relative_residual(P, out.van_vleck_R, pair.Q),
                                m > 0 ? lame_relative_residual(P, out.van_vleck_R, pair.S) : 0.0);
  }

  const std::vector<DiscPoint> recovered = critical_points_of_blaschke(out.product, opts.roots);
  std::vector<Complex> rec;
  rec.reserve(recovered.size());
  for (const DiscPoint& p : recovered) rec.push_back(p.value());
  out.roundtrip_error = hausdorff_distance(rec, cps.disc());

  return out;
}

BlaschkeProduct solve_blaschke(std::span<const Complex> critical_points,
                               const Normalization& normalization, const SolveOptions& opts) {
  return solve_blaschke_full(critical_points, normalization, opts).product;
}

}  // namespace blaschke
