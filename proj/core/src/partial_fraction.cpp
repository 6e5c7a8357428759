#include "blaschke/partial_fraction.hpp"

#include <cmath>

namespace blaschke {

void PartialFractionForm::validate() const {
  if (poles.size() != residues.size())
    throw CoincidentCharges("pole and residue lists differ in length");
  for (std::size_t k = 1; k < poles.size(); ++k)
    if (!(poles[k - 1] < poles[k])) throw CoincidentCharges("poles must be strictly increasing");
  for (double r : residues)
    if (!(r > 0.0)) throw NonPositiveWeight("residues must be strictly positive");
  if (affine_a < 0.0) throw NonPositiveWeight("affine slope must be non-negative");
}

double PartialFractionForm::operator()(double x) const {
  double v = affine_a * x + affine_b;
  for (std::size_t k = 0; k < poles.size(); ++k) v -= residues[k] / (x - poles[k]);
  return v;
}

Complex PartialFractionForm::operator()(Complex x) const {
  Complex v = affine_a * x + affine_b;
  for (std::size_t k = 0; k < poles.size(); ++k) v -= residues[k] / (x - poles[k]);
  return v;
}

double PartialFractionForm::derivative(double x) const {
  double v = affine_a;
  for (std::size_t k = 0; k < poles.size(); ++k) {
    const double gap = x - poles[k];
    v += residues[k] / (gap * gap);
  }
  return v;
}

std::pair<RealPolynomial, RealPolynomial> PartialFractionForm::to_rational() const {
  std::vector<Complex> pole_roots(poles.begin(), poles.end());
  const RealPolynomial denom = RealPolynomial::from_roots(pole_roots);

  RealPolynomial numer =
      RealPolynomial::raw({affine_b, affine_a}) * denom;
  for (std::size_t k = 0; k < poles.size(); ++k) {
    // denom / (x - poles[k]) by synthetic division (exact for a monic factor).
    const std::vector<double>& d = denom.coeffs();
    std::vector<double> q(d.size() - 1, 0.0);
    double carry = 0.0;
    for (std::size_t i = d.size(); i-- > 1;) {
      carry = d[i] + carry * poles[k];
      q[i - 1] = carry;
    }
    numer = numer - residues[k] * RealPolynomial::raw(std::move(q));
  }
  return {numer, denom};
}

}  // namespace blaschke
