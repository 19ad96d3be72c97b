#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>

#include "borelsum/cheb.hpp"
#include "borelsum/gammafn.hpp"
#include "borelsum/poly.hpp"
#include "borelsum/quadrature.hpp"

using namespace borelsum;
using Catch::Approx;

TEST_CASE("gamma function on real arguments", "[gamma]") {
  CHECK(gamma_fn(0.5) == Approx(1.7724538509055160273).epsilon(1e-14));
  CHECK(gamma_fn(1.0) == Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(1.0 / 3.0) == Approx(2.6789385347077476337).epsilon(1e-13));
  CHECK(gamma_fn(7.5) == Approx(1871.2543057977872616).epsilon(1e-13));
  CHECK(gamma_fn(-0.5) == Approx(-3.5449077018110320546).epsilon(1e-13));
  // recurrence over a range of fractional arguments
  for (double x = 0.1; x < 5.0; x += 0.37) {
    CHECK(gamma_fn(x + 1.0) == Approx(x * gamma_fn(x)).epsilon(1e-13));
  }
  CHECK(rgamma_fn(0.0) == 0.0);
  CHECK(rgamma_fn(-3.0) == 0.0);
  CHECK_THROWS_AS(gamma_fn(-2.0), GammaPole);
}

TEST_CASE("gamma function on complex arguments", "[gamma]") {
  // |Gamma(i)|^2 = pi / sinh(pi)
  Complex gi = gamma_fn(Complex(0.0, 1.0));
  CHECK(std::norm(gi) == Approx(kPi / std::sinh(kPi)).epsilon(1e-13));
  // conjugate symmetry
  Complex a = gamma_fn(Complex(2.3, 1.7));
  Complex b = gamma_fn(Complex(2.3, -1.7));
  CHECK(a.real() == Approx(b.real()).epsilon(1e-13));
  CHECK(a.imag() == Approx(-b.imag()).epsilon(1e-13));
}

TEST_CASE("Gauss-Legendre integrates polynomials and smooth functions",
          "[quadrature]") {
  auto f = [](double x) { return x * x * x * x; };
  double v = integrate_legendre(f, -1.0, 1.0, 8);
  CHECK(v == Approx(2.0 / 5.0).epsilon(1e-14));
  auto g = [](double x) { return std::exp(-x); };
  double w = integrate_legendre(g, 0.0, 3.0, 24);
  CHECK(w == Approx(1.0 - std::exp(-3.0)).epsilon(1e-14));
}

TEST_CASE("Gauss-Jacobi handles endpoint singularities", "[quadrature]") {
  // int_0^1 s^{-1/2} (1-s)^{-1/2} ds = pi
  auto one = [](double) { return 1.0; };
  double v = integrate_jacobi01(one, -0.5, -0.5, 12);
  CHECK(v == Approx(kPi).epsilon(1e-13));
  // int_0^1 s^{1/3} (1-s)^{0.25} s ds  (polynomial factor)
  auto lin = [](double s) { return s; };
  double w = integrate_jacobi01(lin, 0.25, 1.0 / 3.0, 12);
  double exact = gamma_fn(1.25) * gamma_fn(1.0 / 3.0 + 2.0) /
                 gamma_fn(1.25 + 1.0 / 3.0 + 2.0);
  CHECK(w == Approx(exact).epsilon(1e-13));
  // a = 0, b = 0 reduces to Legendre on [0,1]
  auto h = [](double s) { return std::cos(s); };
  double u = integrate_jacobi01(h, 0.0, 0.0, 16);
  CHECK(u == Approx(std::sin(1.0)).epsilon(1e-14));
}

TEST_CASE("Chebyshev panel machinery", "[cheb]") {
  int n = 16;
  auto x = cheb_nodes(n);
  auto bw = cheb_bary_weights(n);
  CVector f(n);
  auto fn = [](double t) { return std::exp(t) * std::cos(2.0 * t); };
  for (int j = 0; j < n; ++j) f[j] = fn(x[j]);

  SECTION("barycentric interpolation") {
    for (double xq : {-0.95, -0.3, 0.11, 0.77}) {
      CHECK(cheb_bary_eval(x, bw, f, xq).real() ==
            Approx(fn(xq)).margin(5e-12));
    }
  }
  SECTION("coefficients reproduce values via Clenshaw") {
    CVector a = cheb_coeffs(f);
    for (double xq : {-1.0, -0.4, 0.0, 0.63, 1.0}) {
      CHECK(cheb_clenshaw(a, xq).real() == Approx(fn(xq)).margin(5e-12));
    }
  }
  SECTION("derivative and antiderivative") {
    CVector a = cheb_coeffs(f);
    CVector d = cheb_derivative_coeffs(a);
    auto dfn = [](double t) {
      return std::exp(t) * (std::cos(2 * t) - 2 * std::sin(2 * t));
    };
    CHECK(cheb_clenshaw(d, 0.3).real() == Approx(dfn(0.3)).epsilon(1e-10));
    CVector A = cheb_antiderivative_coeffs(a);
    CHECK(std::abs(cheb_clenshaw(A, -1.0)) < 1e-13);
    double numint = integrate_legendre(
        [&](double t) { return fn(t); }, -1.0, 0.5, 32);
    CHECK(cheb_clenshaw(A, 0.5).real() == Approx(numint).epsilon(1e-12));
  }
}

TEST_CASE("polynomial roots via companion matrix", "[poly]") {
  // x^2 - 1
  Poly p(CVector{{-1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
  auto r = poly_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - Complex(-1.0, 0.0)) < 1e-12);
  CHECK(std::abs(r[1] - Complex(1.0, 0.0)) < 1e-12);

  // x^4 - 1: roots are the 4th roots of unity
  Poly q(CVector{{-1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}});
  auto r4 = poly_roots(q);
  REQUIRE(r4.size() == 4);
  for (const Complex& z : r4) CHECK(std::abs(q(z)) < 1e-12);

  // random-ish cubic, check residuals
  Poly c(CVector{{1.1, -0.3}, {0.2, 0.9}, {-2.0, 0.1}, {1.0, 0.0}});
  for (const Complex& z : poly_roots(c)) CHECK(std::abs(c(z)) < 1e-10);

  // shifted polynomial: p(u + s)
  Poly s = c.shifted(Complex(0.5, -0.25));
  Complex u(0.3, 0.7);
  CHECK(std::abs(s(u) - c(u + Complex(0.5, -0.25))) < 1e-12);
}
