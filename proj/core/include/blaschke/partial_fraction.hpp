#pragma once

#include <span>
#include <vector>

#include "blaschke/errors.hpp"
#include "blaschke/realpoly.hpp"

namespace blaschke {

// A real rational function in the pole-residue form
//   h(x) = affine_a * x + affine_b - sum_k residues[k] / (x - poles[k]),
// with strictly increasing poles and strictly positive residues.  Such
// functions map the upper half-plane into itself, which is what makes them
// the half-plane avatars of Blaschke products.
struct PartialFractionForm {
  double affine_a = 0.0;
  double affine_b = 0.0;
  std::vector<double> poles;
  std::vector<double> residues;

  void validate() const;

  double operator()(double x) const;
  Complex operator()(Complex x) const;
  double derivative(double x) const;

  // Clear denominators: h = N / M with M(x) = prod_k (x - poles[k]).
  // Returned as {numerator, denominator}.
  std::pair<RealPolynomial, RealPolynomial> to_rational() const;
};

}  // namespace blaschke
