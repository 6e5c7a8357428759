#pragma once

#include <span>
#include <vector>

#include "blaschke/equilibrium.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/linalg.hpp"
#include "blaschke/realpoly.hpp"
#include "blaschke/transforms.hpp"

namespace blaschke {

// A truncated power-moment sequence c_0, ..., c_{2n-2}.  The vector sits in
// the interior of the moment cone exactly when its Hankel matrix is positive
// definite, which is the gateway condition for everything below.
struct MomentVector {
  std::vector<double> c;

  explicit MomentVector(std::vector<double> moments);
  // The n with 2n-1 stored moments.
  std::size_t order() const { return (c.size() + 1) / 2; }
  double max_abs() const;
};

using HankelMatrix = Mat;
using BezoutianMatrix = Mat;

// Discrete representing measure: point masses `weights` at `roots`, plus an
// optional mass escaping to infinity that feeds only the top moment.
struct CanonicalRepresentation {
  std::vector<double> roots;
  std::vector<double> weights;
  double mass_at_infinity = 0.0;
};

// H(c)_{ij} = c_{i+j}, an n x n symmetric matrix.
HankelMatrix hankel(const MomentVector& c);

// y_k = sum_{i+j=k} X_{ij}; the adjoint of c -> H(c) under the Frobenius
// pairing, equivalently reading the bilinear form X(x, y) on the diagonal.
std::vector<double> antidiagonal_sums(const Mat& x);

// The positive polynomial of degree 2n-2 with coefficients given by the
// anti-diagonal sums of H(c)^{-1}.
RealPolynomial nesterov(const MomentVector& c);

// The symmetric matrix B with sum_{i,j} B_{ij} x^i y^j = (Q(x)S(y) - S(x)Q(y)) / (x - y).
// Requires deg S < deg Q = n.
BezoutianMatrix bezoutian(const RealPolynomial& Q, const RealPolynomial& S);

// Unique interior moment vector mapped by the Nesterov transform onto
// leading * prod_j (x - zeta_j)(x - conj zeta_j): the equilibrium positions
// carry weights 1/p(t_k) and mass 1/leading escapes to infinity.
MomentVector inverse_nesterov(const CriticalPointSet& cps, double leading,
                              const EquilibriumOptions& opts = {});

// The degree n-1 determinant polynomial whose roots are the positions of the
// lower canonical representation.
RealPolynomial principal_root_poly_lower(const MomentVector& c);

CanonicalRepresentation canonical_lower(const MomentVector& c, const RootFindOptions& opts = {});

// The degree-n determinant polynomial (up to sign) whose roots are the upper
// representation positions through the prescribed anchor x_k0.
RealPolynomial upper_root_poly(const MomentVector& c, double x_k0);

CanonicalRepresentation canonical_upper(const MomentVector& c, double x_k0,
                                        const RootFindOptions& opts = {});

// Max entry deviation |H(c) - V diag(weights) V^T| for a representation with
// n roots and no mass at infinity.
double vandermonde_factorization_check(const MomentVector& c,
                                       const CanonicalRepresentation& rep);

// Moments c_j = sum_k weights_k roots_k^j for j = 0..2*order-2, with the mass
// at infinity added to the top moment.
MomentVector moments_of_representation(const CanonicalRepresentation& rep, std::size_t order);

}  // namespace blaschke
