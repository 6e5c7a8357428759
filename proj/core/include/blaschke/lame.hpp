#pragma once

#include <span>
#include <vector>

#include "blaschke/errors.hpp"
#include "blaschke/partial_fraction.hpp"
#include "blaschke/realpoly.hpp"

namespace blaschke {

// Second-order view of the equilibrium: the monic node polynomials
//   S(x) = prod_k (x - t_k)   (inner charges, degree n-1)
//   Q(x) = prod_k (x - x_k)   (outer charges, degree n)
// are two independent polynomial solutions of the same differential equation
//   P(x) Y'' - P'(x) Y' + R(x) Y = 0,
// where P is the attracting weight and R the accompanying polynomial of
// degree deg(P) - 2 with leading coefficient n(n-1).

struct StieltjesPair {
  RealPolynomial S;
  RealPolynomial Q;
};

StieltjesPair stieltjes_pair(std::span<const double> t, std::span<const double> x);

// The accompanying polynomial R = S'Q'' - S''Q'.
RealPolynomial van_vleck(const RealPolynomial& Q, const RealPolynomial& S);

// The weight recovered from the pair: P = SQ' - S'Q.  Exactly monic when both
// inputs are monic with deg Q = deg S + 1.
RealPolynomial wronskian_P(const RealPolynomial& Q, const RealPolynomial& S);

// The accompanying polynomial recovered from a single polynomial solution Y,
// as the quotient (P'Y' - P Y'') / Y; exact (zero remainder) precisely when Y
// solves the equation for some R.
RealPolynomial van_vleck_single(const RealPolynomial& P, const RealPolynomial& Y);

// The defect polynomial P Y'' - P' Y' + R Y and its size relative to the
// magnitudes of the three terms.
RealPolynomial lame_residual(const RealPolynomial& P, const RealPolynomial& R,
                             const RealPolynomial& Y);
double lame_relative_residual(const RealPolynomial& P, const RealPolynomial& R,
                              const RealPolynomial& Y);

// Verify the deflation identity Q(x) f(x) = -c S(x); returns the relative
// coefficient deviation between the two sides.  Every pole of f must be a
// root of Q (PoleMismatch otherwise).
double check_identity_cS(const RealPolynomial& Q, const RealPolynomial& S,
                         const PartialFractionForm& f, double c);

}  // namespace blaschke
