#include "blaschke/lame.hpp"

#include <algorithm>
#include <cmath>

namespace blaschke {

StieltjesPair stieltjes_pair(std::span<const double> t, std::span<const double> x) {
  if (x.size() != t.size() + 1)
    throw WrongCriticalCount("outer configuration must have one more charge than the inner one");
  std::vector<Complex> tr(t.begin(), t.end());
  std::vector<Complex> xr(x.begin(), x.end());
  return {RealPolynomial::from_roots(tr), RealPolynomial::from_roots(xr)};
}

RealPolynomial van_vleck(const RealPolynomial& Q, const RealPolynomial& S) {
  const RealPolynomial Qp = Q.derivative(), Qpp = Qp.derivative();
  const RealPolynomial Sp = S.derivative(), Spp = Sp.derivative();
  return Sp * Qpp - Spp * Qp;
}

RealPolynomial wronskian_P(const RealPolynomial& Q, const RealPolynomial& S) {
  return S * Q.derivative() - S.derivative() * Q;
}

RealPolynomial van_vleck_single(const RealPolynomial& P, const RealPolynomial& Y) {
  const RealPolynomial Yp = Y.derivative();
  const RealPolynomial A = P.derivative() * Yp - P * Yp.derivative();
  const std::vector<double>& y = Y.coeffs();
  if (Y.is_zero()) throw DegenerateLeadingCoefficient("cannot divide by the zero polynomial");
  if (Y.degree() == 0) return (1.0 / y[0]) * A;
  std::vector<double> rem = A.coeffs();
  if (rem.size() < y.size()) return RealPolynomial();
  std::vector<double> quot(rem.size() - y.size() + 1, 0.0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const double factor = rem[i + y.size() - 1] / y.back();
    quot[i] = factor;
    for (std::size_t j = 0; j < y.size(); ++j) rem[i + j] -= factor * y[j];
  }
  return RealPolynomial::raw(std::move(quot));
}

RealPolynomial lame_residual(const RealPolynomial& P, const RealPolynomial& R,
                             const RealPolynomial& Y) {
  const RealPolynomial Yp = Y.derivative();
  return P * Yp.derivative() - P.derivative() * Yp + R * Y;
}

double lame_relative_residual(const RealPolynomial& P, const RealPolynomial& R,
                              const RealPolynomial& Y) {
  const RealPolynomial Yp = Y.derivative();
  const double scale = std::max({(P * Yp.derivative()).max_abs_coeff(),
                                 (P.derivative() * Yp).max_abs_coeff(),
                                 (R * Y).max_abs_coeff(), 1e-300});
  return lame_residual(P, R, Y).max_abs_coeff() / scale;
}

double check_identity_cS(const RealPolynomial& Q, const RealPolynomial& S,
                         const PartialFractionForm& f, double c) {
  f.validate();
  if (!(c > 0.0)) throw NonPositiveWeight("identity scale must be positive");
  const RealPolynomial Qp = Q.derivative();
  for (double pole : f.poles) {
    const double qv = Q(pole), qd = Qp(pole);
    if (qd == 0.0 || std::abs(qv / qd) > 1e-8 * (1.0 + std::abs(pole)))
      throw PoleMismatch("pole at " + std::to_string(pole) + " is not a root of Q");
  }

  // Q f = (a x + b) Q - sum_k r_k Q / (x - x_k).  Each quotient is rebuilt as
  // the product over the remaining poles rather than by synthetic division:
  // dividing by a far-out pole multiplies coefficient noise by |pole| at every
  // carry step, which swamps low-order coefficients, while the product form
  // stays at the coefficient scale.
  RealPolynomial lhs = RealPolynomial::raw({f.affine_b, f.affine_a}) * Q;
  for (std::size_t k = 0; k < f.poles.size(); ++k) {
    std::vector<Complex> others;
    others.reserve(f.poles.size() - 1);
    for (std::size_t j = 0; j < f.poles.size(); ++j)
      if (j != k) others.emplace_back(f.poles[j], 0.0);
    const RealPolynomial quot = Q.leading() * RealPolynomial::from_roots(others);
    lhs = lhs - f.residues[k] * quot;
  }

  return rel_coeff_distance(lhs, -1.0 * (c * S));
}

}  // namespace blaschke
