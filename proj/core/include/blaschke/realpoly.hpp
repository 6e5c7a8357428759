#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "blaschke/errors.hpp"

namespace blaschke {

using Complex = std::complex<double>;

// Dense real-coefficient polynomial, coefficients stored in ascending degree
// order.  The coefficient vector is never empty; the zero polynomial is {0}.
//
// Construction from a raw coefficient list drops trailing coefficients whose
// magnitude is at most 1e-13 times the largest coefficient (input noise).
// Arithmetic between polynomials keeps exact degrees and only removes exact
// zeros, so wide-dynamic-range products are never damaged; call trimmed()
// explicitly where cancellation debris is expected.
class RealPolynomial {
 public:
  static constexpr double kTrimRelTol = 1e-13;

  RealPolynomial() : coeffs_{0.0} {}
  explicit RealPolynomial(std::vector<double> coeffs);

  static RealPolynomial constant(double c) { return raw({c}); }
  static RealPolynomial monomial(std::size_t k, double scale = 1.0);
  // Monic polynomial with the given roots; the list must be closed under
  // conjugation (non-real roots are paired to 1e-12).
  static RealPolynomial from_roots(std::span<const Complex> roots);
  // No trimming at all beyond stripping exact trailing zeros.
  static RealPolynomial raw(std::vector<double> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }
  double leading() const { return coeffs_.back(); }
  double max_abs_coeff() const;

  double operator()(double x) const;
  Complex operator()(Complex x) const;

  RealPolynomial derivative() const;
  RealPolynomial trimmed(double rel_tol = kTrimRelTol) const;

  RealPolynomial operator-() const;
  friend RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b);
  friend RealPolynomial operator-(const RealPolynomial& a, const RealPolynomial& b);
  friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b);
  friend RealPolynomial operator*(double s, const RealPolynomial& p);

 private:
  std::vector<double> coeffs_;
};

// Maximum absolute difference of coefficients, relative to the larger
// coefficient scale of the two polynomials.  Convenient for identity tests.
double rel_coeff_distance(const RealPolynomial& a, const RealPolynomial& b);

struct RootFindOptions {
  double residual_tol = 1e-13;   // relative to sum_k |a_k| |z|^k
  int max_iterations = 200;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  bool refine_clusters = true;   // collapse near-multiple roots to their centre
};

// All complex roots of a complex-coefficient polynomial (ascending
// coefficients) by simultaneous Aberth-Ehrlich iteration started from a
// randomly perturbed circle, one Newton polish per root, and an optional
// cluster pass that restores full accuracy at multiple roots.
std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs,
                                      const RootFindOptions& opts = {});

// Roots of a real polynomial; the returned list is exactly closed under
// conjugation.  Throws DegenerateLeadingCoefficient when no degree is left
// after trimming.
std::vector<Complex> poly_complex_roots(const RealPolynomial& p,
                                        const RootFindOptions& opts = {});

// Roots of a real polynomial that is known to have only real roots; verifies
// the imaginary parts are negligible and returns the sorted projections.
std::vector<double> poly_real_roots(const RealPolynomial& p,
                                    const RootFindOptions& opts = {});

// Helpers for complex-coefficient polynomials kept as plain vectors.
Complex cpoly_eval(std::span<const Complex> coeffs, Complex z);
std::vector<Complex> cpoly_derivative(std::span<const Complex> coeffs);
std::vector<Complex> cpoly_mul(std::span<const Complex> a, std::span<const Complex> b);
std::vector<Complex> cpoly_trim(std::vector<Complex> coeffs, double rel_tol = 1e-13);

// Substitute the Moebius map x = (p z + q)/(r z + s) into the polynomial u
// (ascending coefficients, treated as having degree cap D >= deg u) and clear
// the denominator: returns sum_k u_k (p z + q)^k (r z + s)^{D-k}, a vector of
// exactly D+1 coefficients, computed by Horner-style synthetic substitution.
std::vector<Complex> compose_moebius_cleared(std::span<const Complex> u, std::size_t D,
                                             Complex p, Complex q, Complex r, Complex s);
std::vector<Complex> compose_moebius_cleared(std::span<const double> u, std::size_t D,
                                             Complex p, Complex q, Complex r, Complex s);

// Root of a continuous monotone function inside [lo, hi], located by
// bisection with Newton acceleration whenever `derivative` is supplied.
// The endpoints must straddle the root (NoSignChange otherwise).
double bracketed_real_root(const std::function<double(double)>& fn, double lo, double hi,
                           const std::function<double(double)>& derivative = nullptr,
                           double rel_tol = 1e-14);

// Lagrange interpolation basis over strictly increasing nodes.  The expanded
// basis polynomials are available for coefficient-level identities, while
// eval() uses the barycentric form so that values at the nodes are exact.
class LagrangeBasis {
 public:
  explicit LagrangeBasis(std::vector<double> nodes);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<RealPolynomial>& basis_polys() const { return basis_polys_; }
  double eval(std::size_t k, double x) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;  // barycentric weights
  std::vector<RealPolynomial> basis_polys_;
};

inline LagrangeBasis lagrange_basis(std::vector<double> nodes) {
  return LagrangeBasis(std::move(nodes));
}

}  // namespace blaschke
