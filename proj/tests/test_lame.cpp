#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "blaschke/equilibrium.hpp"
#include "blaschke/lame.hpp"
#include "blaschke/partial_fraction.hpp"

using namespace blaschke;

namespace {

const RealPolynomial kS = RealPolynomial::raw({0.0, 1.0});        // x
const RealPolynomial kQ = RealPolynomial::raw({-1.0, 0.0, 1.0});  // x^2 - 1
const RealPolynomial kP = RealPolynomial::raw({1.0, 0.0, 1.0});   // x^2 + 1

}  // namespace

TEST_CASE("node polynomials from the two charge families") {
  const auto pair = stieltjes_pair(std::vector<double>{0.0}, std::vector<double>{-1.0, 1.0});
  CHECK(pair.S.coeffs() == kS.coeffs());
  CHECK(pair.Q.coeffs() == kQ.coeffs());
  CHECK_THROWS_AS(stieltjes_pair(std::vector<double>{0.0}, std::vector<double>{-1.0, 0.5, 1.0}),
                  WrongCriticalCount);
}

TEST_CASE("accompanying polynomial of the base pair") {
  const RealPolynomial R = van_vleck(kQ, kS);
  CHECK(R.coeffs() == std::vector<double>{2.0});
  // Both node polynomials solve P Y'' - P' Y' + R Y = 0 with that R.
  CHECK(lame_residual(kP, R, kQ).is_zero());
  CHECK(lame_residual(kP, R, kS).is_zero());
}

TEST_CASE("weight recovered as a Wronskian") {
  CHECK(wronskian_P(kQ, kS).coeffs() == kP.coeffs());
  // Degenerate but well-defined input: Q = x^2, S = x gives P = x^2.
  const RealPolynomial q2 = RealPolynomial::raw({0.0, 0.0, 1.0});
  CHECK(wronskian_P(q2, kS).coeffs() == std::vector<double>{0.0, 0.0, 1.0});
}

TEST_CASE("degree-3 closed-form instance") {
  // Two coincident attractors at i: inner charges +-1/sqrt(3), outer
  // charges (-sqrt(3), 0, sqrt(3)) through the anchor 0.
  const double u = 1.0 / std::sqrt(3.0);
  const double v = std::sqrt(3.0);
  const auto pair =
      stieltjes_pair(std::vector<double>{-u, u}, std::vector<double>{-v, 0.0, v});
  const RealPolynomial P = wronskian_P(pair.Q, pair.S);
  const RealPolynomial want = kP * kP;  // (x^2 + 1)^2
  CHECK(rel_coeff_distance(P, want) <= 1e-10);

  const RealPolynomial R = van_vleck(pair.Q, pair.S);
  CHECK(R.degree() == 2);
  CHECK(R.leading() == doctest::Approx(6.0).epsilon(1e-12));  // n(n-1) for n = 3
  CHECK(lame_relative_residual(want, R, pair.Q) <= 1e-12);
  CHECK(lame_relative_residual(want, R, pair.S) <= 1e-12);
}

TEST_CASE("accompanying polynomial from a single solution") {
  CHECK(van_vleck_single(kP, kQ).coeffs() == std::vector<double>{2.0});
  CHECK(van_vleck_single(kP, kS).coeffs() == std::vector<double>{2.0});
  const double u = 1.0 / std::sqrt(3.0);
  const double v = std::sqrt(3.0);
  const auto pair =
      stieltjes_pair(std::vector<double>{-u, u}, std::vector<double>{-v, 0.0, v});
  const RealPolynomial P = wronskian_P(pair.Q, pair.S);
  const RealPolynomial via_pair = van_vleck(pair.Q, pair.S);
  CHECK(rel_coeff_distance(van_vleck_single(P, pair.Q), via_pair) <= 1e-11);
  CHECK(rel_coeff_distance(van_vleck_single(P, pair.S), via_pair) <= 1e-11);
}

TEST_CASE("defect polynomial for non-solutions") {
  const RealPolynomial R = RealPolynomial::constant(2.0);
  const RealPolynomial y2 = RealPolynomial::raw({0.0, 0.0, 1.0});  // x^2
  // (x^2+1) 2 - 2x 2x + 2 x^2 = 2.
  CHECK(lame_residual(kP, R, y2).coeffs() == std::vector<double>{2.0});
  // Relative form: defect 2 against term scale max(2, 4, 2) = 4.
  CHECK(lame_relative_residual(kP, R, y2) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("solution space is closed under linear combinations") {
  const RealPolynomial R = van_vleck(kQ, kS);
  const RealPolynomial combo = 3.5 * kQ + (-1.25) * kS;
  CHECK(lame_relative_residual(kP, R, combo) <= 1e-15);
}

TEST_CASE("pole-cancellation identity against the pole form") {
  PartialFractionForm f;
  f.poles = {-1.0, 1.0};
  f.residues = {0.5, 0.5};
  CHECK(check_identity_cS(kQ, kS, f, 1.0) <= 1e-14);

  PartialFractionForm f2 = f;
  f2.residues = {1.0, 1.0};
  CHECK(check_identity_cS(kQ, kS, f2, 2.0) <= 1e-14);
  // Wrong scale shows up as an order-one deviation.
  CHECK(check_identity_cS(kQ, kS, f2, 1.0) > 0.3);

  PartialFractionForm bad = f;
  bad.poles = {-1.0, 0.5};
  CHECK_THROWS_AS(check_identity_cS(kQ, kS, bad, 1.0), PoleMismatch);
  CHECK_THROWS_AS(check_identity_cS(kQ, kS, f, -1.0), NonPositiveWeight);
}

TEST_CASE("full pipeline instance satisfies the differential equation") {
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> re(-1.5, 1.5), im(0.2, 1.8);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Complex> zeta(4);
    for (Complex& z : zeta) z = Complex(re(rng), im(rng));
    const auto inner = solve_inner_equilibrium(zeta);
    const auto outer = extend_equilibrium(zeta, inner.t, inner.t.front() - 1.0);
    const auto pair = stieltjes_pair(inner.t, outer.x);
    const RealPolynomial P = weight_polynomial_P(zeta);
    const RealPolynomial R = van_vleck(pair.Q, pair.S);

    CHECK(lame_relative_residual(P, R, pair.Q) <= 1e-9);
    CHECK(lame_relative_residual(P, R, pair.S) <= 1e-9);
    CHECK(rel_coeff_distance(wronskian_P(pair.Q, pair.S), P) <= 1e-9);
    CHECK(R.leading() ==
          doctest::Approx(double(outer.x.size() * inner.t.size())).epsilon(1e-9));

    // Deflation identity: Q f = -c S for the outer pole form.
    const auto r = residues_r(zeta, outer.x);
    double c = 0.0;
    for (double vr : r) c += vr;
    PartialFractionForm f;
    f.poles = outer.x;
    f.residues = r;
    CHECK(check_identity_cS(pair.Q, pair.S, f, c) <= 1e-9);

    // Roots interlace: x_0 < t_1 < x_1 < ... < t_m < x_m.
    for (std::size_t k = 0; k < inner.t.size(); ++k) {
      CHECK(outer.x[k] < inner.t[k]);
      CHECK(inner.t[k] < outer.x[k + 1]);
    }

    // The recovered weight is positive well beyond the charge span.
    const double span = outer.x.back() - outer.x.front();
    const double mid = 0.5 * (outer.x.back() + outer.x.front());
    for (int g = 0; g <= 1000; ++g) {
      const double x = mid + (g / 1000.0 - 0.5) * 3.0 * span;
      CHECK(P(x) > 0.0);
    }
  }
}

TEST_CASE("pole form evaluation and derivative") {
  PartialFractionForm g;
  g.affine_a = 1.0;
  g.poles = {0.0};
  g.residues = {1.0};
  g.validate();
  CHECK(g(2.0) == doctest::Approx(1.5));
  CHECK(g.derivative(1.0) == doctest::Approx(2.0));

  PartialFractionForm f;
  f.poles = {-1.0, 1.0};
  f.residues = {0.5, 0.5};
  CHECK(f(0.0) == doctest::Approx(0.0));
  CHECK(f(2.0) == doctest::Approx(-2.0 / 3.0));
  CHECK(f.derivative(0.0) == doctest::Approx(1.0));
  const Complex w = f(Complex(0.0, 1.0));
  CHECK(w.imag() > 0.0);  // upper half-plane is preserved

  const auto [num, den] = f.to_rational();
  CHECK(rel_coeff_distance(num, RealPolynomial::raw({0.0, -1.0})) <= 1e-14);
  CHECK(den.coeffs() == std::vector<double>{-1.0, 0.0, 1.0});
}

TEST_CASE("pole form validation") {
  PartialFractionForm bad;
  bad.poles = {1.0, -1.0};
  bad.residues = {0.5, 0.5};
  CHECK_THROWS_AS(bad.validate(), CoincidentCharges);

  PartialFractionForm neg;
  neg.poles = {0.0};
  neg.residues = {-1.0};
  CHECK_THROWS_AS(neg.validate(), NonPositiveWeight);

  PartialFractionForm slope;
  slope.affine_a = -0.5;
  slope.poles = {0.0};
  slope.residues = {1.0};
  CHECK_THROWS_AS(slope.validate(), NonPositiveWeight);
}
