#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "blaschke/realpoly.hpp"

using namespace blaschke;

namespace {

double root_residual_scale(const RealPolynomial& p, Complex r) {
  double s = 0.0, zk = 1.0;
  for (double c : p.coeffs()) {
    s += std::abs(c) * zk;
    zk *= std::abs(r);
  }
  return std::max(s, 1e-300);
}

// Symmetric Hausdorff distance between two root multisets.
double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (const auto& list : {std::pair{&a, &b}, std::pair{&b, &a}}) {
    for (const Complex& p : *list.first) {
      double best = 1e300;
      for (const Complex& q : *list.second) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("monic construction from conjugate-closed roots") {
  const std::vector<Complex> imag_pair{Complex(0, 1), Complex(0, -1)};
  CHECK(RealPolynomial::from_roots(imag_pair).coeffs() == std::vector<double>{1.0, 0.0, 1.0});

  const std::vector<Complex> shifted{Complex(1, 2), Complex(1, -2)};
  CHECK(RealPolynomial::from_roots(shifted).coeffs() == std::vector<double>{5.0, -2.0, 1.0});

  const std::vector<Complex> real_pair{Complex(-1, 0), Complex(1, 0)};
  CHECK(RealPolynomial::from_roots(real_pair).coeffs() == std::vector<double>{-1.0, 0.0, 1.0});

  const std::vector<Complex> unpaired{Complex(0, 1), Complex(0.5, -1)};
  CHECK_THROWS_AS(RealPolynomial::from_roots(unpaired), NotConjugateClosed);
}

TEST_CASE("evaluation by Horner") {
  const RealPolynomial p = RealPolynomial::raw({1.0, 0.0, 1.0});  // x^2 + 1
  CHECK(std::abs(p(Complex(0, 1))) == doctest::Approx(0.0));
  CHECK(p(0.0) == doctest::Approx(1.0));
  const RealPolynomial q = RealPolynomial::raw({5.0, -2.0, 1.0});  // x^2 - 2x + 5
  CHECK(q(1.0) == doctest::Approx(4.0));
}

TEST_CASE("derivative") {
  CHECK(RealPolynomial::raw({1.0, 0.0, 1.0}).derivative().coeffs() ==
        std::vector<double>{0.0, 2.0});
  CHECK(RealPolynomial::constant(5.0).derivative().is_zero());
  CHECK(RealPolynomial::raw({0.0, -1.0, 0.0, 1.0}).derivative().coeffs() ==
        std::vector<double>{-1.0, 0.0, 3.0});
}

TEST_CASE("derivative matches central differences") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0), at(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> c(6);
    for (double& v : c) v = coeff(rng);
    const RealPolynomial p = RealPolynomial::raw(std::move(c));
    const RealPolynomial dp = p.derivative();
    const double x = at(rng);
    const double h = 1e-6 * (1.0 + std::abs(x));
    const double fd = (p(x + h) - p(x - h)) / (2.0 * h);
    CHECK(std::abs(fd - dp(x)) <= 1e-6 * (1.0 + std::abs(dp(x))) * 10.0);
  }
}

TEST_CASE("complex roots of the reference polynomials") {
  {
    auto roots = poly_complex_roots(RealPolynomial::raw({1.0, 0.0, 1.0}));
    std::vector<Complex> expect{Complex(0, -1), Complex(0, 1)};
    CHECK(hausdorff(roots, expect) < 1e-12);
  }
  {
    auto roots = poly_complex_roots(RealPolynomial::raw({-1.0, 0.0, 1.0}));
    std::vector<Complex> expect{Complex(-1, 0), Complex(1, 0)};
    CHECK(hausdorff(roots, expect) < 1e-12);
  }
  {
    const RealPolynomial p =
        RealPolynomial::raw({1.0, 0.0, 1.0}) * RealPolynomial::raw({5.0, -2.0, 1.0});
    auto roots = poly_complex_roots(p);
    std::vector<Complex> expect{Complex(0, 1), Complex(0, -1), Complex(1, 2), Complex(1, -2)};
    CHECK(hausdorff(roots, expect) < 1e-9);
    for (const Complex& r : roots) CHECK(std::abs(p(r)) <= 1e-9 * root_residual_scale(p, r));
  }
}

TEST_CASE("root list of a real polynomial is conjugate symmetric") {
  const RealPolynomial p = RealPolynomial::raw({2.0, -1.0, 3.0, 0.5, 1.0});
  auto roots = poly_complex_roots(p);
  REQUIRE(roots.size() == 4);
  for (const Complex& r : roots) {
    double best = 1e300;
    for (const Complex& s : roots) best = std::min(best, std::abs(std::conj(r) - s));
    CHECK(best == 0.0);  // exact closure by construction
  }
}

TEST_CASE("degenerate leading coefficient is rejected") {
  CHECK_THROWS_AS(poly_complex_roots(RealPolynomial::constant(3.0)),
                  DegenerateLeadingCoefficient);
}

TEST_CASE("random factored polynomials round trip through the root finder") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> re(-10.0, 10.0), im(0.1, 10.0);
  std::uniform_int_distribution<int> deg_pairs(1, 10);
  for (int trial = 0; trial < 25; ++trial) {
    // Build a conjugate-closed multiset with pairwise separation >= 1e-2.
    std::vector<Complex> roots;
    const int pairs = deg_pairs(rng);
    while (static_cast<int>(roots.size()) < 2 * pairs) {
      const Complex cand(re(rng), im(rng));
      bool ok = true;
      for (const Complex& r : roots)
        if (std::abs(r - cand) < 1e-2 || std::abs(r - std::conj(cand)) < 1e-2) ok = false;
      if (!ok) continue;
      roots.push_back(cand);
      roots.push_back(std::conj(cand));
    }
    const RealPolynomial p = RealPolynomial::from_roots(roots);
    CHECK(hausdorff(poly_complex_roots(p), roots) <= 1e-8);
  }
}

TEST_CASE("repeated roots are recovered at full accuracy") {
  // (x^2+1)^3 (x-2)^2: a triple conjugate pair and a double real root.
  const RealPolynomial a = RealPolynomial::raw({1.0, 0.0, 1.0});
  const RealPolynomial b = RealPolynomial::raw({-2.0, 1.0});
  const RealPolynomial p = a * a * a * b * b;
  auto roots = poly_complex_roots(p);
  std::vector<Complex> expect{Complex(0, 1), Complex(0, 1), Complex(0, 1),
                              Complex(0, -1), Complex(0, -1), Complex(0, -1),
                              Complex(2, 0), Complex(2, 0)};
  CHECK(hausdorff(roots, expect) <= 1e-8);
}

TEST_CASE("real-root projection rejects genuinely complex roots") {
  CHECK(poly_real_roots(RealPolynomial::raw({-1.0, 0.0, 1.0})) ==
        std::vector<double>{-1.0, 1.0});
  CHECK_THROWS_AS(poly_real_roots(RealPolynomial::raw({1.0, 0.0, 1.0})), Error);
}

TEST_CASE("bracketed root location") {
  CHECK(bracketed_real_root([](double x) { return x - 0.5; }, 0.0, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(bracketed_real_root([](double x) { return x * x * x; }, -1.0, 2.0)) <= 1e-12);
  CHECK_THROWS_AS(bracketed_real_root([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                  NoSignChange);
}

TEST_CASE("bracketed root with derivative acceleration") {
  auto fn = [](double x) { return std::exp(x) - 2.0; };
  auto dfn = [](double x) { return std::exp(x); };
  CHECK(bracketed_real_root(fn, 0.0, 2.0, dfn) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("lagrange basis reference values") {
  {
    const LagrangeBasis basis({-1.0, 1.0});
    CHECK(basis.basis_polys()[0].coeffs() == std::vector<double>{0.5, -0.5});
    CHECK(basis.basis_polys()[1].coeffs() == std::vector<double>{0.5, 0.5});
  }
  {
    const LagrangeBasis basis({0.0});
    CHECK(basis.basis_polys()[0].coeffs() == std::vector<double>{1.0});
  }
  {
    const LagrangeBasis basis({0.0, 1.0, 2.0});
    CHECK(basis.eval(1, 1.0) == doctest::Approx(1.0));
    CHECK(basis.eval(1, 0.0) == doctest::Approx(0.0));
    CHECK(basis.eval(1, 2.0) == doctest::Approx(0.0));
  }
}

TEST_CASE("lagrange basis satisfies the Kronecker property") {
  const LagrangeBasis basis({-2.0, -0.3, 0.1, 1.7, 4.0});
  for (std::size_t k = 0; k < 5; ++k)
    for (std::size_t j = 0; j < 5; ++j) {
      const double want = k == j ? 1.0 : 0.0;
      CHECK(std::abs(basis.eval(k, basis.nodes()[j]) - want) <= 1e-10);
      CHECK(std::abs(basis.basis_polys()[k](basis.nodes()[j]) - want) <= 1e-10);
    }
}

TEST_CASE("lagrange basis sums to one") {
  const LagrangeBasis basis({-1.5, 0.2, 0.9, 3.1});
  RealPolynomial sum;
  for (const RealPolynomial& b : basis.basis_polys()) sum = sum + b;
  CHECK(rel_coeff_distance(sum.trimmed(1e-10), RealPolynomial::constant(1.0)) <= 1e-10);
}

TEST_CASE("lagrange basis rejects coincident nodes") {
  CHECK_THROWS_AS(LagrangeBasis({0.0, 1e-14, 1.0}), NodesTooClose);
}

TEST_CASE("trimming keeps exact degrees in arithmetic") {
  const RealPolynomial p = RealPolynomial::raw({1.0, 1.0});
  const RealPolynomial q = RealPolynomial::raw({1.0, -1.0});
  CHECK((p + q).coeffs() == std::vector<double>{2.0});  // exact zero stripped
  const RealPolynomial tiny = RealPolynomial::raw({1.0, 1e-20});
  CHECK(tiny.degree() == 1);                            // raw keeps everything
  CHECK(RealPolynomial({1.0, 1e-20}).degree() == 0);    // validating ctor trims
}

TEST_CASE("moebius substitution clears the denominator exactly") {
  // u(x) = x^2 + 1 under x = (z + 1) / (z - 1), cap D = 2:
  // (z+1)^2 + (z-1)^2 = 2 z^2 + 2.
  const std::vector<double> u{1.0, 0.0, 1.0};
  const auto composed = compose_moebius_cleared(u, 2, Complex(1), Complex(1), Complex(1),
                                                Complex(-1));
  REQUIRE(composed.size() == 3);
  CHECK(std::abs(composed[0] - Complex(2.0)) < 1e-15);
  CHECK(std::abs(composed[1]) < 1e-15);
  CHECK(std::abs(composed[2] - Complex(2.0)) < 1e-15);
}
