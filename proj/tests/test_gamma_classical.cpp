#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qsf/classical.hpp"
#include "qsf/config.hpp"
#include "qsf/errors.hpp"
#include "qsf/gamma.hpp"
#include "qsf/rng.hpp"

using namespace qsf;

namespace {

Real rel(Complex a, Complex b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

TEST_CASE("gamma matches references on and off the real axis") {
  CHECK(rel(gamma(Complex(0.5)), Complex(1.7724538509055160273)) < 1e-14);
  CHECK(rel(gamma(Complex(1.0)), Complex(1.0)) < 1e-14);
  CHECK(rel(gamma(Complex(5.0)), Complex(24.0)) < 1e-14);
  CHECK(rel(gamma(Complex(0.5, 1.5)),
            Complex(0.154430976186962843, -0.180527563373728539)) < 1e-13);
}

TEST_CASE("recurrence and reflection hold at random arguments") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Complex z(rng.uniform(0.2, 4.0), rng.uniform(-2.5, 2.5));
    CHECK(rel(gamma(z + 1.0), z * gamma(z)) < 1e-12);
    // keep away from the poles of the left factor
    Complex w(rng.uniform(0.1, 0.9), rng.uniform(0.2, 2.0));
    CHECK(rel(gamma(w) * gamma(1.0 - w), kPi / sinpi(w)) < 1e-12);
  }
}

TEST_CASE("log gamma exponentiates back on the right half plane") {
  Rng rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    Complex z(rng.uniform(0.5, 6.0), rng.uniform(-3.0, 3.0));
    CHECK(rel(std::exp(log_gamma(z)), gamma(z)) < 1e-12);
  }
  CHECK_THROWS_AS(log_gamma(Complex(0.2)), Error);
}

TEST_CASE("reciprocal gamma vanishes exactly at the poles") {
  CHECK(reciprocal_gamma(Complex(0.0)) == Complex(0.0));
  CHECK(reciprocal_gamma(Complex(-3.0)) == Complex(0.0));
  CHECK(rel(reciprocal_gamma(Complex(2.5)), 1.0 / gamma(Complex(2.5))) < 1e-13);
  try {
    gamma(Complex(-2.0));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAtNonpositiveInteger);
  }
}

TEST_CASE("signed log gamma tracks the sign pattern on the negative axis") {
  // Gamma alternates sign between consecutive negative integers
  SignedLogGamma g1 = log_gamma_signed(-0.5);
  CHECK(g1.sign == -1);
  CHECK(rel(Complex(g1.sign * std::exp(g1.log_abs)), gamma(Complex(-0.5))) < 1e-12);
  SignedLogGamma g2 = log_gamma_signed(-1.5);
  CHECK(g2.sign == +1);
  CHECK(rel(Complex(g2.sign * std::exp(g2.log_abs)), gamma(Complex(-1.5))) < 1e-12);
  SignedLogGamma g3 = log_gamma_signed(3.5);
  CHECK(g3.sign == +1);
  CHECK(rel(Complex(std::exp(g3.log_abs)), gamma(Complex(3.5))) < 1e-12);
}

TEST_CASE("sinpi keeps full accuracy at large arguments") {
  CHECK(sinpi(0.5) == 1.0);
  CHECK(std::abs(sinpi(1.0)) < 1e-15);
  CHECK(rel(Complex(sinpi(1000000.25)), Complex(0.70710678118654752)) < 1e-15);
  CHECK(rel(sinpi(Complex(0.25, 0.5)), std::sin(kPi * Complex(0.25, 0.5))) < 1e-14);
}

TEST_CASE("closed forms of the gamma-side identities") {
  CHECK(rel(dougall_rhs(2.1, 1.8, 2.4, 1.9), Complex(1.37042370588201867)) < 1e-13);
  CHECK(rel(dougall_rhs(1.5, 1.5, 1.5, 1.5), Complex(2.0)) < 1e-13);
  CHECK(rel(binomial_rhs(Complex(2.0), kPi / 2.0), Complex(0.0, 2.0)) < 1e-13);
  CHECK(rel(binomial_rhs(Complex(1.7), 0.0), Complex(std::pow(2.0, 1.7))) < 1e-13);
  // three gamma factors compound their rounding; ~2e-12 is what they deliver
  CHECK(rel(beta_integral_rhs(0.0, 0.0), Complex(kPi / 2.0)) < 1e-11);
  CHECK(rel(beta_integral_rhs(1.0, 1.0), Complex(kPi / 4.0)) < 1e-11);
  CHECK(rel(beta_integral_rhs(1.3, 2.2), Complex(0.581740771096722503)) < 1e-11);
}

TEST_CASE("beta integral quadrature meets its closed form") {
  EvalConfig cfg;
  auto [integral, closed] = beta_integral_check(1.3, 2.2, cfg);
  CHECK(rel(integral, closed) < 1e-10);
  CHECK(rel(closed, Complex(0.581740771096722503)) < 1e-11);
}

TEST_CASE("band-limited profiles evaluate their defining formulas") {
  BandLimitedTestCase snc = sinc_profile();
  CHECK(snc.g(0.0) == 1.0);
  CHECK(rel(Complex(snc.g(0.5)), Complex(2.0 / kPi)) < 1e-14);
  CHECK(std::abs(snc.g(1.0)) < 1e-15);

  Real b = 3.5, y = 0.37;
  BandLimitedTestCase cp = cos_power_profile(b);
  Complex direct = gamma(Complex(b + 1.0)) * std::pow(2.0, -b) *
                   reciprocal_gamma(Complex(1.0 + b / 2.0 + y)) *
                   reciprocal_gamma(Complex(1.0 + b / 2.0 - y));
  CHECK(rel(Complex(cp.g(y)), direct) < 1e-11);
  // decay on the tail
  CHECK(std::abs(cp.g(40.0)) < std::abs(cp.g(4.0)));
}
