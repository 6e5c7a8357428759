#include "blaschke/realpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace blaschke {

namespace {

void strip_exact_zeros(std::vector<double>& c) {
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  if (c.empty()) c.push_back(0.0);
}

}  // namespace

RealPolynomial::RealPolynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  double scale = 0.0;
  for (double v : coeffs) scale = std::max(scale, std::abs(v));
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= kTrimRelTol * scale)
    coeffs.pop_back();
  coeffs_ = std::move(coeffs);
}

RealPolynomial RealPolynomial::raw(std::vector<double> coeffs) {
  RealPolynomial p;
  strip_exact_zeros(coeffs);
  p.coeffs_ = std::move(coeffs);
  return p;
}

RealPolynomial RealPolynomial::monomial(std::size_t k, double scale) {
  std::vector<double> c(k + 1, 0.0);
  c[k] = scale;
  return raw(std::move(c));
}

RealPolynomial RealPolynomial::from_roots(std::span<const Complex> roots) {
  std::vector<double> acc{1.0};
  std::vector<bool> used(roots.size(), false);
  auto multiply = [&acc](std::span<const double> factor) {
    std::vector<double> out(acc.size() + factor.size() - 1, 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < factor.size(); ++j) out[i + j] += acc[i] * factor[j];
    acc = std::move(out);
  };
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Complex z = roots[i];
    const double pair_tol = 1e-12 * std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) <= pair_tol) {
      const double factor[] = {-z.real(), 1.0};
      multiply(factor);
      continue;
    }
    // Find the closest unused conjugate partner.
    std::size_t best = roots.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(roots[j] - std::conj(z));
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best == roots.size() || best_dist > pair_tol)
      throw NotConjugateClosed("no conjugate partner for root at (" +
                               std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
    used[best] = true;
    const Complex u = 0.5 * (z + std::conj(roots[best]));
    const double factor[] = {std::norm(u), -2.0 * u.real(), 1.0};
    multiply(factor);
  }
  return raw(std::move(acc));
}

double RealPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double v : coeffs_) m = std::max(m, std::abs(v));
  return m;
}

double RealPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Complex RealPolynomial::operator()(Complex x) const {
  Complex acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  if (coeffs_.size() == 1) return RealPolynomial();
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return raw(std::move(d));
}

RealPolynomial RealPolynomial::trimmed(double rel_tol) const {
  std::vector<double> c = coeffs_;
  const double scale = max_abs_coeff();
  while (c.size() > 1 && std::abs(c.back()) <= rel_tol * scale) c.pop_back();
  return raw(std::move(c));
}

RealPolynomial RealPolynomial::operator-() const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v = -v;
  return raw(std::move(c));
}

RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b) {
  std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return RealPolynomial::raw(std::move(c));
}

RealPolynomial operator-(const RealPolynomial& a, const RealPolynomial& b) {
  std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return RealPolynomial::raw(std::move(c));
}

RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RealPolynomial();
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RealPolynomial::raw(std::move(c));
}

RealPolynomial operator*(double s, const RealPolynomial& p) {
  std::vector<double> c = p.coeffs_;
  for (double& v : c) v *= s;
  return RealPolynomial::raw(std::move(c));
}

double rel_coeff_distance(const RealPolynomial& a, const RealPolynomial& b) {
  const double scale = std::max({a.max_abs_coeff(), b.max_abs_coeff(), 1e-300});
  double dev = 0.0;
  const std::size_t m = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t k = 0; k < m; ++k) dev = std::max(dev, std::abs(a.coeff(k) - b.coeff(k)));
  return dev / scale;
}

// ---------------------------------------------------------------------------
// Complex polynomial helpers.

Complex cpoly_eval(std::span<const Complex> coeffs, Complex z) {
  Complex acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

std::vector<Complex> cpoly_derivative(std::span<const Complex> coeffs) {
  if (coeffs.size() <= 1) return {Complex(0.0)};
  std::vector<Complex> d(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = coeffs[k] * static_cast<double>(k);
  return d;
}

std::vector<Complex> cpoly_mul(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) return {Complex(0.0)};
  std::vector<Complex> c(a.size() + b.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<Complex> cpoly_trim(std::vector<Complex> coeffs, double rel_tol) {
  double scale = 0.0;
  for (const Complex& v : coeffs) scale = std::max(scale, std::abs(v));
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= rel_tol * scale) coeffs.pop_back();
  if (coeffs.empty()) coeffs.push_back(Complex(0.0));
  return coeffs;
}

std::vector<Complex> compose_moebius_cleared(std::span<const Complex> u, std::size_t D,
                                             Complex p, Complex q, Complex r, Complex s) {
  auto coeff = [&u](std::size_t k) { return k < u.size() ? u[k] : Complex(0.0); };
  const Complex top[] = {q, p};
  const Complex bot[] = {s, r};
  std::vector<Complex> acc{coeff(D)};
  std::vector<Complex> pw{Complex(1.0)};
  for (std::size_t k = D; k-- > 0;) {
    acc = cpoly_mul(acc, top);
    pw = cpoly_mul(pw, bot);
    for (std::size_t i = 0; i < pw.size(); ++i) acc[i] += coeff(k) * pw[i];
  }
  return acc;
}

std::vector<Complex> compose_moebius_cleared(std::span<const double> u, std::size_t D,
                                             Complex p, Complex q, Complex r, Complex s) {
  std::vector<Complex> uc(u.begin(), u.end());
  return compose_moebius_cleared(std::span<const Complex>(uc), D, p, q, r, s);
}

// ---------------------------------------------------------------------------
// Root finding.

namespace {

// Value and derivative in one Horner pass.
std::pair<Complex, Complex> horner2(std::span<const Complex> a, Complex z) {
  Complex p = 0.0, dp = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
  }
  return {p, dp};
}

double residual_scale(std::span<const Complex> a, double r) {
  double s = 0.0, rk = 1.0;
  for (const Complex& c : a) {
    s += std::abs(c) * rk;
    rk *= r;
  }
  return std::max(s, 1e-300);
}

std::vector<Complex> quadratic_roots(const std::vector<Complex>& a) {
  // a[0] + a[1] z + a[2] z^2, numerically stable variant.
  const Complex b = a[1] / a[2], c = a[0] / a[2];
  const Complex disc = std::sqrt(b * b - 4.0 * c);
  const Complex q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc) : -0.5 * (b - disc);
  Complex r1, r2;
  if (std::abs(q) > 0.0) {
    r1 = q;
    r2 = c / q;
  } else {
    r1 = r2 = 0.0;
  }
  return {r1, r2};
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

double cluster_gate(std::size_t size) {
  // Admissible merge distance grows with the hypothesised multiplicity,
  // reflecting how far coefficient noise scatters an m-fold root.
  if (size <= 2) return 3e-5;
  if (size == 3) return 1e-3;
  return 5e-3;
}

// Collapse groups of nearly coincident roots onto a common refined centre.
// The centre of a noise-split m-fold root is first-order accurate, and the
// nearby simple zero of the (m-1)-th derivative recovers it fully; a strict
// residual gate rejects groups that are in fact distinct roots.
void refine_root_clusters(const std::vector<Complex>& a, std::vector<Complex>& roots) {
  const std::size_t m = roots.size();
  if (m < 2) return;

  struct Pair {
    double dist;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.push_back({std::abs(roots[i] - roots[j]), i, j});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.dist < y.dist; });

  UnionFind uf(m);
  std::vector<std::size_t> size(m, 1);
  for (const Pair& p : pairs) {
    const std::size_t ra = uf.find(p.i), rb = uf.find(p.j);
    if (ra == rb) continue;
    const std::size_t merged = size[ra] + size[rb];
    const double centre_mag = std::abs(roots[p.i]);
    if (p.dist <= cluster_gate(merged) * (1.0 + centre_mag)) {
      uf.unite(ra, rb);
      size[uf.find(ra)] = merged;
    }
  }

  std::vector<std::vector<std::size_t>> groups(m);
  for (std::size_t i = 0; i < m; ++i) groups[uf.find(i)].push_back(i);

  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    Complex centre = 0.0;
    for (std::size_t idx : g) centre += roots[idx];
    centre /= static_cast<double>(g.size());

    // Newton on the (k-1)-th derivative, whose zero near the cluster is a
    // stable estimate of the common root.
    std::vector<Complex> q(a);
    for (std::size_t d = 0; d + 1 < g.size(); ++d) q = cpoly_derivative(q);
    Complex z = centre;
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
      const auto [qv, qd] = horner2(q, z);
      // Stop once the residual reaches the rounding floor of the Horner
      // evaluation; the step criterion alone can stay above its threshold
      // forever when the derivative is small against the coefficient scale.
      if (std::abs(qv) <= 1e-15 * residual_scale(q, std::abs(z))) {
        ok = true;
        break;
      }
      if (std::abs(qd) == 0.0) break;
      const Complex step = qv / qd;
      z -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) {
        ok = true;
        break;
      }
    }
    const double gate = cluster_gate(g.size()) * (1.0 + std::abs(centre));
    if (!ok || std::abs(z - centre) > 3.0 * gate) continue;
    // Accept only if the refined point still annihilates the polynomial.
    const auto [pv, _] = horner2(a, z);
    if (std::abs(pv) > 1e-9 * residual_scale(a, std::abs(z))) continue;
    for (std::size_t idx : g) roots[idx] = z;
  }
}

}  // namespace

namespace {

// Fujiwara-type magnitude bound on the roots, ignoring exactly-zero leading
// entries; 0 for constants.
double root_bound(std::span<const Complex> a) {
  std::size_t top = a.size();
  while (top > 0 && std::abs(a[top - 1]) == 0.0) --top;
  if (top <= 1) return 0.0;
  const std::size_t d = top - 1;
  const double lead = std::abs(a[d]);
  double b = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    if (std::abs(a[k]) == 0.0) continue;
    b = std::max(b, std::pow(std::abs(a[k]) / lead, 1.0 / static_cast<double>(d - k)));
  }
  return 2.0 * b;
}

}  // namespace

std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs, const RootFindOptions& opts) {
  // Leading coefficients are stripped only when provably spurious: exact
  // zeros, or entries whose implied roots would sit many orders of magnitude
  // beyond the root bound of the rest of the polynomial.  Such entries are
  // residue of symbolic clearing, and a magnitude test against the largest
  // coefficient would instead truncate legitimate wide-dynamic-range
  // polynomials (a monic with roots of size ~10 at degree 20 spans 1e14).
  while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
  while (coeffs.size() > 2) {
    const double full = root_bound(coeffs);
    const double rest = root_bound(std::span<const Complex>(coeffs.data(), coeffs.size() - 1));
    if (full > 1e8 * std::max(1.0, rest)) {
      coeffs.pop_back();
      while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    } else {
      break;
    }
  }
  if (coeffs.size() <= 1)
    throw DegenerateLeadingCoefficient("root finding needs degree >= 1 after trimming");

  double scale = 0.0;
  for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));

  // Peel off roots at the origin: tiny low-order coefficients are exactly the
  // signature of zeros there, and peeling keeps them exact.
  std::vector<Complex> roots;
  std::size_t shift = 0;
  while (shift + 1 < coeffs.size() && std::abs(coeffs[shift]) <= 1e-14 * scale) ++shift;
  if (shift > 0) {
    roots.assign(shift, Complex(0.0));
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(shift));
  }

  const std::size_t d = coeffs.size() - 1;
  if (d == 0) return roots;

  // Monic normalisation.
  const Complex lead = coeffs.back();
  for (Complex& c : coeffs) c /= lead;

  if (d == 1) {
    roots.push_back(-coeffs[0]);
    return roots;
  }
  if (d == 2) {
    auto qr = quadratic_roots(coeffs);
    roots.insert(roots.end(), qr.begin(), qr.end());
    if (opts.refine_clusters) refine_root_clusters(coeffs, roots);
    // keep cluster handling uniform with the general branch
    std::vector<Complex> all = std::move(roots);
    return all;
  }

  // Aberth-Ehrlich from a randomly perturbed circle around the coefficient
  // centroid.
  const Complex centre = -coeffs[d - 1] / static_cast<double>(d);
  double radius = 0.0;
  for (std::size_t k = 1; k <= d; ++k)
    radius = std::max(radius, std::pow(std::abs(coeffs[d - k]), 1.0 / static_cast<double>(k)));
  radius = 2.0 * radius + 1e-6 * (1.0 + std::abs(centre));

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> z(d);
  for (std::size_t j = 0; j < d; ++j) {
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.25 * unit(rng)) /
                             static_cast<double>(d) +
                         0.37;
    const double r = radius * (0.8 + 0.4 * unit(rng));
    z[j] = centre + std::polar(r, angle);
  }

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t j = 0; j < d; ++j) {
      const auto [pv, pd] = horner2(coeffs, z[j]);
      if (std::abs(pv) <= opts.residual_tol * residual_scale(coeffs, std::abs(z[j]))) continue;
      all_done = false;
      if (std::abs(pd) == 0.0) {
        z[j] += 1e-6 * radius * Complex(unit(rng) - 0.5, unit(rng) - 0.5);
        continue;
      }
      const Complex w = pv / pd;
      Complex repulsion = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        if (k == j) continue;
        const Complex gap = z[j] - z[k];
        if (std::abs(gap) == 0.0) continue;
        repulsion += 1.0 / gap;
      }
      const Complex denom = 1.0 - w * repulsion;
      z[j] -= (std::abs(denom) > 0.0) ? w / denom : w;
    }
    if (all_done) break;
  }

  // One Newton polish per root, kept only when it improves the residual.
  for (std::size_t j = 0; j < d; ++j) {
    const auto [pv, pd] = horner2(coeffs, z[j]);
    if (std::abs(pd) == 0.0) continue;
    const Complex cand = z[j] - pv / pd;
    const auto [cv, cd] = horner2(coeffs, cand);
    (void)cd;
    if (std::abs(cv) <= std::abs(pv)) z[j] = cand;
  }

  if (opts.refine_clusters) refine_root_clusters(coeffs, z);

  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::vector<Complex> poly_complex_roots(const RealPolynomial& p, const RootFindOptions& opts) {
  // Pass the raw coefficients through; the bounded-root strip inside
  // polynomial_roots decides what the effective degree is.
  std::vector<Complex> coeffs(p.coeffs().begin(), p.coeffs().end());
  if (coeffs.empty()) throw DegenerateLeadingCoefficient("cannot take roots of the zero polynomial");
  std::vector<Complex> roots = polynomial_roots(std::move(coeffs), opts);

  // Enforce exact conjugate symmetry: flatten near-real roots, average the
  // remaining ones against their nearest conjugate partner.
  std::vector<Complex> out;
  std::vector<bool> used(roots.size(), false);
  while (true) {
    std::size_t pick = roots.size();
    double best_imag = -1.0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (used[i]) continue;
      if (std::abs(roots[i].imag()) > best_imag) {
        best_imag = std::abs(roots[i].imag());
        pick = i;
      }
    }
    if (pick == roots.size()) break;
    used[pick] = true;
    const Complex z = roots[pick];
    if (std::abs(z.imag()) <= 1e-9 * (1.0 + std::abs(z))) {
      out.emplace_back(z.real(), 0.0);
      continue;
    }
    std::size_t partner = roots.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (used[i]) continue;
      const double dist = std::abs(roots[i] - std::conj(z));
      if (dist < best) {
        best = dist;
        partner = i;
      }
    }
    if (partner == roots.size()) {
      // Odd leftover; project onto the real axis as a last resort.
      out.emplace_back(z.real(), 0.0);
      continue;
    }
    used[partner] = true;
    const Complex u = 0.5 * (z + std::conj(roots[partner]));
    out.push_back(u);
    out.push_back(std::conj(u));
  }
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

std::vector<double> poly_real_roots(const RealPolynomial& p, const RootFindOptions& opts) {
  std::vector<Complex> roots = poly_complex_roots(p, opts);
  std::vector<double> out;
  out.reserve(roots.size());
  for (const Complex& z : roots) {
    if (std::abs(z.imag()) > 1e-7 * (1.0 + std::abs(z)))
      throw Error("UnexpectedComplexRoot", "polynomial expected to have only real roots");
    out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

double bracketed_real_root(const std::function<double(double)>& fn, double lo, double hi,
                           const std::function<double(double)>& derivative, double rel_tol) {
  if (!(lo < hi)) throw NoSignChange("empty bracket");
  double flo = fn(lo), fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw NoSignChange("function has the same sign at both ends");

  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 300; ++it) {
    const double width = hi - lo;
    if (width <= rel_tol * std::max(1.0, std::max(std::abs(lo), std::abs(hi)))) break;
    double cand = std::numeric_limits<double>::quiet_NaN();
    if (derivative) {
      const double fx = fn(x);
      if (fx == 0.0) return x;
      if ((fx > 0.0) == (fhi > 0.0)) {
        hi = x;
        fhi = fx;
      } else {
        lo = x;
        flo = fx;
      }
      const double dfx = derivative(x);
      if (dfx != 0.0) cand = x - fx / dfx;
    }
    if (!(cand > lo) || !(cand < hi)) cand = 0.5 * (lo + hi);
    if (!derivative) {
      const double fc = fn(cand);
      if (fc == 0.0) return cand;
      if ((fc > 0.0) == (fhi > 0.0)) {
        hi = cand;
        fhi = fc;
      } else {
        lo = cand;
        flo = fc;
      }
      cand = 0.5 * (lo + hi);
    }
    x = cand;
  }
  return x;
}

LagrangeBasis::LagrangeBasis(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  const std::size_t n = nodes_.size();
  if (n == 0) throw NodesTooClose("need at least one node");
  for (std::size_t i = 1; i < n; ++i)
    if (!(nodes_[i - 1] < nodes_[i])) throw NodesTooClose("nodes must be strictly increasing");
  if (n > 1) {
    const double span = nodes_.back() - nodes_.front();
    for (std::size_t i = 1; i < n; ++i)
      if (nodes_[i] - nodes_[i - 1] <= 1e-10 * span)
        throw NodesTooClose("adjacent nodes closer than 1e-10 of the span");
  }

  weights_.assign(n, 1.0);
  basis_polys_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double denom = 1.0;
    std::vector<Complex> other;
    other.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      denom *= nodes_[k] - nodes_[j];
      other.emplace_back(nodes_[j], 0.0);
    }
    weights_[k] = 1.0 / denom;
    basis_polys_.push_back(weights_[k] * RealPolynomial::from_roots(other));
  }
}

double LagrangeBasis::eval(std::size_t k, double x) const {
  const std::size_t n = nodes_.size();
  for (std::size_t j = 0; j < n; ++j)
    if (x == nodes_[j]) return (j == k) ? 1.0 : 0.0;
  double num = weights_[k] / (x - nodes_[k]);
  double den = 0.0;
  for (std::size_t j = 0; j < n; ++j) den += weights_[j] / (x - nodes_[j]);
  return num / den;
}

}  // namespace blaschke
