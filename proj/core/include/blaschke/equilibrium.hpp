#pragma once

#include <complex>
#include <span>
#include <vector>

#include "blaschke/errors.hpp"
#include "blaschke/linalg.hpp"
#include "blaschke/realpoly.hpp"

namespace blaschke {

// Electrostatics on the real line: unit free charges t_1 < ... < t_m repelled
// by each other and attracted by fixed charge pairs at zeta_j and conj(zeta_j)
// (zeta_j in the open upper half-plane).  The equilibrium configuration is the
// unique minimiser of the logarithmic energy
//   W(t) = sum_{k,j} log|(t_k - zeta_j)(t_k - conj zeta_j)|
//          - 2 sum_{k<j} log|t_j - t_k|.

struct EquilibriumOptions {
  // Convergence threshold on the max-norm of the energy gradient, measured in
  // the caller's coordinates.  Non-positive selects the automatic value
  // 1e-11 * (1 + spread of Re zeta).
  double gradient_tol = -1.0;
  int max_iterations = 200;
  // Optional warm start (strictly increasing, one entry per free charge).
  std::vector<double> initial_guess;
};

struct ChargeConfigurationInner {
  std::vector<double> t;  // equilibrium positions, strictly increasing
  double gradient_residual = 0.0;
  int iterations = 0;
};

struct ChargeConfigurationOuter {
  std::vector<double> x;  // one more point than the inner configuration
  std::size_t anchor_index = 0;
  double anchor_value = 0.0;
};

// The attracting weight P(x) = prod_j (x - zeta_j)(x - conj zeta_j), a monic
// real polynomial, and its numerically preferred factored evaluation.
RealPolynomial weight_polynomial_P(std::span<const Complex> zeta);
double weight_polynomial_eval(std::span<const Complex> zeta, double x);

double energy(std::span<const Complex> zeta, std::span<const double> t);
std::vector<double> energy_gradient(std::span<const Complex> zeta, std::span<const double> t);
Mat energy_hessian(std::span<const Complex> zeta, std::span<const double> t);

// Max-norm of the energy gradient at t.
double equilibrium_residual(std::span<const Complex> zeta, std::span<const double> t);

// Solve for the m free charges given m attracting pairs.
ChargeConfigurationInner solve_inner_equilibrium(std::span<const Complex> zeta,
                                                 const EquilibriumOptions& opts = {});

// Extend an inner equilibrium to the outer one: the m+1 points x_0 < ... < x_m
// that are in equilibrium together and include the prescribed anchor x0.  One
// such point lies in each interval cut out by the inner charges.
ChargeConfigurationOuter extend_equilibrium(std::span<const Complex> zeta,
                                            std::span<const double> t, double x0);

// Residues r_k = P(x_k) / prod_{j != k} (x_k - x_j)^2 of the outer form, and
// the analogous weights s_k at the inner charges.  Factored evaluation of P.
std::vector<double> residues_r(std::span<const Complex> zeta, std::span<const double> x);
std::vector<double> weights_s(std::span<const Complex> zeta, std::span<const double> t);

// The same quantities scaled by a free positive constant, with P supplied in
// expanded form: r_k = c P(x_k) / prod_{j != k} (x_k - x_j)^2 and
// s_k = a P(t_k) / prod_{j != k} (t_k - t_j)^2.
std::vector<double> residues_r(const ChargeConfigurationOuter& outer, const RealPolynomial& P,
                               double c);
std::vector<double> weights_s(const ChargeConfigurationInner& inner, const RealPolynomial& P,
                              double a);

}  // namespace blaschke
