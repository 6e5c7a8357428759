#include "blaschke/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blaschke {

MomentVector::MomentVector(std::vector<double> moments) : c(std::move(moments)) {
  if (c.empty() || c.size() % 2 == 0)
    throw Error("InvalidMomentVector",
                "a moment vector must hold an odd number (2n-1) of entries");
}

double MomentVector::max_abs() const {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

HankelMatrix hankel(const MomentVector& c) {
  const std::size_t n = c.order();
  Mat h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = c.c[i + j];
  return h;
}

std::vector<double> antidiagonal_sums(const Mat& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("anti-diagonal sums need a square matrix");
  const std::size_t n = x.rows();
  std::vector<double> y(2 * n - 1, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i + j] += x(i, j);
  return y;
}

RealPolynomial nesterov(const MomentVector& c) {
  const Mat h = hankel(c);
  Mat inv;
  if (!spd_inverse(h, inv, 1e-12)) throw HankelNotPositiveDefinite();
  return RealPolynomial::raw(antidiagonal_sums(inv));
}

BezoutianMatrix bezoutian(const RealPolynomial& Q, const RealPolynomial& S) {
  const std::size_t n = Q.degree();
  if (n == 0 || S.degree() >= n)
    throw std::invalid_argument("bezoutian needs deg S < deg Q with deg Q >= 1");
  auto cab = [&Q, &S](std::size_t a, std::size_t b) {
    return Q.coeff(a) * S.coeff(b) - S.coeff(a) * Q.coeff(b);
  };
  Mat bez(n, n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = n; i-- > 0;) {
      double v = cab(i + 1, b);
      if (b > 0 && i + 1 < n) v += bez(i + 1, b - 1);
      bez(i, b) = v;
    }
  return bez;
}

MomentVector inverse_nesterov(const CriticalPointSet& cps, double leading,
                              const EquilibriumOptions& opts) {
  if (!(leading > 0.0)) throw NonPositiveWeight("the leading coefficient must be positive");
  const std::vector<Complex>& zeta = cps.halfplane();
  const std::size_t n = cps.count() + 1;

  const ChargeConfigurationInner inner = solve_inner_equilibrium(zeta, opts);
  CanonicalRepresentation rep;
  rep.roots = inner.t;
  rep.weights.resize(inner.t.size());
  for (std::size_t k = 0; k < inner.t.size(); ++k)
    rep.weights[k] = 1.0 / (leading * weight_polynomial_eval(zeta, inner.t[k]));
  rep.mass_at_infinity = 1.0 / leading;
  return moments_of_representation(rep, n);
}

namespace {

// Determinant of the submatrix of `cols` (each a length n+1 column) with one
// row deleted.
double minor_determinant(const std::vector<std::vector<double>>& cols, std::size_t deleted_row) {
  const std::size_t n = cols.size();
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t r = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == deleted_row) continue;
      m(r++, j) = cols[j][i];
    }
  }
  return lu_determinant(m);
}

// Moment-reproduction defect of a representation, accumulated in extended
// precision; returns the max-norm and fills the per-equation residuals.
double representation_defect(const MomentVector& c, const CanonicalRepresentation& rep,
                             bool with_mass, std::vector<double>& f) {
  const std::size_t eqs = c.c.size();
  std::vector<long double> acc(eqs, 0.0L);
  for (std::size_t k = 0; k < rep.roots.size(); ++k) {
    long double pw = rep.weights[k];
    for (std::size_t j = 0; j < eqs; ++j) {
      acc[j] += pw;
      pw *= static_cast<long double>(rep.roots[k]);
    }
  }
  if (with_mass) acc[eqs - 1] += static_cast<long double>(rep.mass_at_infinity);
  f.assign(eqs, 0.0);
  double worst = 0.0;
  for (std::size_t j = 0; j < eqs; ++j) {
    f[j] = static_cast<double>(acc[j] - static_cast<long double>(c.c[j]));
    worst = std::max(worst, std::abs(f[j]));
  }
  return worst;
}

// Newton polish of a representation against the full moment system.  With the
// mass at infinity as an unknown (lower form) or one position pinned at the
// anchor (upper form), the system is square: 2n-1 equations in 2n-1 unknowns.
// The determinant-based construction is only as accurate as its Vandermonde
// and cofactor solves allow; this pass drives the reproduction defect to the
// extended-precision floor while keeping positions and weights admissible.
void refine_representation(const MomentVector& c, CanonicalRepresentation& rep, bool with_mass,
                           std::ptrdiff_t pinned) {
  const std::size_t m = rep.roots.size();
  const std::size_t eqs = c.c.size();
  const std::size_t unknowns = (m - (pinned >= 0 ? 1 : 0)) + m + (with_mass ? 1 : 0);
  if (m == 0 || unknowns != eqs) return;
  const double floor = 1e-17 * std::max(c.max_abs(), 1.0);

  std::vector<double> f;
  CanonicalRepresentation best = rep;
  double best_defect = representation_defect(c, rep, with_mass, f);
  for (int iter = 0; iter < 3 && best_defect > floor; ++iter) {
    Mat jac(eqs, eqs);
    for (std::size_t j = 0; j < eqs; ++j) {
      std::size_t col = 0;
      for (std::size_t k = 0; k < m; ++k) {
        if (static_cast<std::ptrdiff_t>(k) == pinned) continue;
        jac(j, col++) = (j == 0) ? 0.0
                                 : rep.weights[k] * static_cast<double>(j) *
                                       std::pow(rep.roots[k], static_cast<double>(j - 1));
      }
      for (std::size_t k = 0; k < m; ++k)
        jac(j, col++) = std::pow(rep.roots[k], static_cast<double>(j));
      if (with_mass) jac(j, col) = (j + 1 == eqs) ? 1.0 : 0.0;
    }
    std::vector<double> rhs(eqs);
    for (std::size_t j = 0; j < eqs; ++j) rhs[j] = -f[j];
    std::vector<double> delta;
    if (!lu_solve(std::move(jac), std::move(rhs), delta)) break;

    std::size_t col = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (static_cast<std::ptrdiff_t>(k) == pinned) continue;
      rep.roots[k] += delta[col++];
    }
    for (std::size_t k = 0; k < m; ++k) rep.weights[k] += delta[col++];
    if (with_mass) rep.mass_at_infinity += delta[col];

    bool admissible = true;
    for (std::size_t k = 1; k < m; ++k)
      if (!(rep.roots[k - 1] < rep.roots[k])) admissible = false;
    for (double w : rep.weights)
      if (!std::isfinite(w)) admissible = false;
    if (!admissible) break;

    const double defect = representation_defect(c, rep, with_mass, f);
    if (defect < best_defect) {
      best = rep;
      best_defect = defect;
    } else {
      break;
    }
  }
  rep = best;
}

}  // namespace

RealPolynomial principal_root_poly_lower(const MomentVector& c) {
  const std::size_t n = c.order();
  if (n == 1) return RealPolynomial::constant(1.0);

  // Interior pre-check on the leading (n-1) x (n-1) Hankel section.
  Mat sub(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) sub(i, j) = c.c[i + j];
  Mat lower;
  if (!cholesky_factor(sub, lower, 1e-12)) throw SubHankelNotPositiveDefinite();

  // det of the n x n matrix whose first n-1 columns are Hankel columns and
  // whose last column is (1, x, ..., x^{n-1}), expanded along that column.
  std::vector<std::vector<double>> cols(n - 1, std::vector<double>(n));
  for (std::size_t j = 0; j + 1 < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = c.c[i + j];

  std::vector<double> coeffs(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    Mat m(n - 1, n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      std::size_t r = 0;
      for (std::size_t row = 0; row < n; ++row) {
        if (row == i) continue;
        m(r++, j) = cols[j][row];
      }
    }
    const double sign = ((i + n - 1) % 2 == 0) ? 1.0 : -1.0;
    coeffs[i] = sign * lu_determinant(m);
  }
  return RealPolynomial::raw(std::move(coeffs));
}

CanonicalRepresentation canonical_lower(const MomentVector& c, const RootFindOptions& opts) {
  const std::size_t n = c.order();
  CanonicalRepresentation rep;
  if (n > 1) {
    const RealPolynomial d = principal_root_poly_lower(c);
    rep.roots = poly_real_roots(d, opts);
    if (rep.roots.size() != n - 1)
      throw NonPositiveWeight("lower principal polynomial lost degree");
    rep.weights =
        solve_vandermonde(rep.roots, std::vector<double>(c.c.begin(), c.c.begin() + (n - 1)));
  }
  double top = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k)
    top += rep.weights[k] * std::pow(rep.roots[k], static_cast<double>(2 * n - 2));
  rep.mass_at_infinity = c.c[2 * n - 2] - top;
  refine_representation(c, rep, /*with_mass=*/true, /*pinned=*/-1);

  for (double w : rep.weights)
    if (!(w > 0.0)) throw NonPositiveWeight();
  if (!(rep.mass_at_infinity > 0.0))
    throw NonPositiveWeight("mass at infinity is not positive");
  return rep;
}

RealPolynomial upper_root_poly(const MomentVector& c, double x_k0) {
  const std::size_t n = c.order();

  const RealPolynomial d = principal_root_poly_lower(c);
  double dscale = 0.0, xp = 1.0;
  for (double dk : d.coeffs()) {
    dscale += std::abs(dk) * xp;
    xp *= std::abs(x_k0);
  }
  if (std::abs(d(x_k0)) <= 1e-10 * std::max(dscale, 1e-300)) throw AnchorOnLowerRoot();

  // Columns of the (n+1) x (n+1) determinant: n-1 Hankel columns, the powers
  // of the anchor, and the powers of x; expand along the x column.
  std::vector<std::vector<double>> cols(n, std::vector<double>(n + 1));
  for (std::size_t j = 0; j + 1 < n; ++j)
    for (std::size_t i = 0; i <= n; ++i) cols[j][i] = c.c[i + j];
  double pw = 1.0;
  for (std::size_t i = 0; i <= n; ++i) {
    cols[n - 1][i] = pw;
    pw *= x_k0;
  }

  std::vector<double> coeffs(n + 1, 0.0);
  for (std::size_t i = 0; i <= n; ++i) {
    const double sign = ((i + n) % 2 == 0) ? 1.0 : -1.0;
    coeffs[i] = sign * minor_determinant(cols, i);
  }
  return RealPolynomial::raw(std::move(coeffs));
}

CanonicalRepresentation canonical_upper(const MomentVector& c, double x_k0,
                                        const RootFindOptions& opts) {
  const std::size_t n = c.order();
  const RealPolynomial e = upper_root_poly(c, x_k0);
  CanonicalRepresentation rep;
  rep.roots = poly_real_roots(e, opts);
  if (rep.roots.size() != n) throw NonPositiveWeight("upper root polynomial lost degree");

  // The anchor is a root by construction; store it exactly.
  std::size_t nearest = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (std::abs(rep.roots[k] - x_k0) < std::abs(rep.roots[nearest] - x_k0)) nearest = k;
  rep.roots[nearest] = x_k0;

  rep.weights =
      solve_vandermonde(rep.roots, std::vector<double>(c.c.begin(), c.c.begin() + n));
  rep.mass_at_infinity = 0.0;
  refine_representation(c, rep, /*with_mass=*/false, static_cast<std::ptrdiff_t>(nearest));
  for (double w : rep.weights)
    if (!(w > 0.0)) throw NonPositiveWeight();
  return rep;
}

double vandermonde_factorization_check(const MomentVector& c,
                                       const CanonicalRepresentation& rep) {
  const std::size_t n = c.order();
  if (rep.roots.size() != n || rep.weights.size() != n || rep.mass_at_infinity != 0.0)
    throw std::invalid_argument(
        "factorization check needs n roots and no mass at infinity");
  const Mat h = hankel(c);
  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double entry = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        entry += rep.weights[k] * std::pow(rep.roots[k], static_cast<double>(i + j));
      dev = std::max(dev, std::abs(h(i, j) - entry));
    }
  return dev;
}

MomentVector moments_of_representation(const CanonicalRepresentation& rep, std::size_t order) {
  if (order == 0 || rep.roots.size() != rep.weights.size())
    throw std::invalid_argument("representation is inconsistent");
  std::vector<double> c(2 * order - 1, 0.0);
  for (std::size_t k = 0; k < rep.roots.size(); ++k) {
    double pw = rep.weights[k];
    for (std::size_t j = 0; j < c.size(); ++j) {
      c[j] += pw;
      pw *= rep.roots[k];
    }
  }
  c.back() += rep.mass_at_infinity;
  return MomentVector(std::move(c));
}

}  // namespace blaschke
