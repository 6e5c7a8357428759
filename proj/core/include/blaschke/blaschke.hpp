#pragma once

#include <span>
#include <vector>

#include "blaschke/equilibrium.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/lame.hpp"
#include "blaschke/partial_fraction.hpp"
#include "blaschke/realpoly.hpp"
#include "blaschke/transforms.hpp"

namespace blaschke {

// A finite Blaschke product B(z) = c prod_k (z - a_k) / (1 - conj(a_k) z),
// |a_k| < 1, |c| = 1.  The factored data is canonical; the expanded
// numerator/denominator coefficients (ascending, both padded to length
// degree+1) satisfy den_k = c * conj(num_{n-k}) and feed differentiation.
struct BlaschkeProduct {
  std::vector<Complex> zeros;
  Complex constant{1.0, 0.0};
  std::vector<Complex> numerator;
  std::vector<Complex> denominator;

  std::size_t degree() const { return zeros.size(); }
  // Factored evaluation; well conditioned up to the boundary circle.
  Complex operator()(Complex z) const;
};

// Build a product directly from its zeros and unimodular constant.
BlaschkeProduct product_from_zeros(std::span<const Complex> zeros, Complex constant);

// Which boundary normalization the solved product carries: Plus means
// B(1) = +1 (slope route, no free parameter); Minus means B(1) = -1 and
// requires the real anchor that selects one member of the pole family.
struct Normalization {
  enum class Kind { Plus, Minus };
  Kind kind = Kind::Plus;
  double anchor_x = 0.0;

  static Normalization plus() { return {}; }
  static Normalization minus(double anchor_x) { return {Kind::Minus, anchor_x}; }
};

// The half-plane forms attached to the two normalizations.
PartialFractionForm assemble_g(const ChargeConfigurationInner& inner, std::span<const double> s,
                               double a, double b);
PartialFractionForm assemble_f(const ChargeConfigurationOuter& outer, std::span<const double> r);

// Conjugate h = p/q by the Cayley map: B = (p(T(z)) - i q(T(z))) / (p(T(z)) + i q(T(z))),
// cleared of all (1 - z) powers symbolically.  The zeros are extracted from
// the cleared numerator; ZeroOutsideDisc flags upstream precision loss.
BlaschkeProduct halfplane_to_disc(const PartialFractionForm& h, const RootFindOptions& opts = {});

// Critical points of B inside the open unit disc, with multiplicity; exactly
// degree-1 of them (WrongCriticalCount otherwise).
std::vector<DiscPoint> critical_points_of_blaschke(const BlaschkeProduct& b,
                                                   const RootFindOptions& opts = {});

struct SolveOptions {
  EquilibriumOptions equilibrium;
  RootFindOptions roots;
};

struct SolveResult {
  BlaschkeProduct product;
  // The half-plane form that produced the product, in the original chart:
  // a g-form (affine_a > 0) for Plus, an f-form (affine_a = 0) for Minus.
  PartialFractionForm halfplane;
  std::vector<double> inner_t;  // inner equilibrium positions
  std::vector<double> outer_x;  // outer positions (Minus route only)
  RealPolynomial van_vleck_R;
  double gradient_residual = 0.0;
  int iterations = 0;
  double ode_residual = 0.0;
  double roundtrip_error = 0.0;
};

// Construct the degree-(m+1) Blaschke product with the m prescribed critical
// points, via the electrostatic pipeline, together with its diagnostics.
SolveResult solve_blaschke_full(std::span<const Complex> critical_points,
                                const Normalization& normalization = {},
                                const SolveOptions& opts = {});

BlaschkeProduct solve_blaschke(std::span<const Complex> critical_points,
                               const Normalization& normalization = {},
                               const SolveOptions& opts = {});

// Symmetric Hausdorff distance between two finite point sets.
double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace blaschke
